"""Extended reals, boundary polylines and the directional functional.

Many of the extremal quantities handled by this package are infinite by
theorem (for instance the supremum of log|f(z)/z| over the whole disk), so
they are carried as explicitly tagged values instead of IEEE infinities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Literal

import numpy as np

from .errors import DirectionDegenerateError, DomainError

Tag = Literal["finite", "pos-infinity", "neg-infinity"]

EPS_ANGLE = 1e-12


@total_ordering
@dataclass(frozen=True, eq=True)
class ExtendedReal:
    """A real number, +inf or -inf.

    Use :meth:`finite`, :data:`POS_INF` and :data:`NEG_INF` rather than the
    constructor.
    """

    tag: Tag
    value: float | None = None

    def __post_init__(self):
        if self.tag == "finite":
            if self.value is None or not math.isfinite(self.value):
                raise ValueError(f"finite ExtendedReal needs a finite value, got {self.value!r}")
            object.__setattr__(self, "value", float(self.value))
        elif self.tag in ("pos-infinity", "neg-infinity"):
            if self.value is not None:
                raise ValueError("infinite ExtendedReal carries no value")
        else:
            raise ValueError(f"unknown tag {self.tag!r}")

    @classmethod
    def finite(cls, x: float) -> ExtendedReal:
        return cls("finite", float(x))

    @classmethod
    def coerce(cls, x) -> ExtendedReal:
        """Accept an ExtendedReal or a finite float.

        IEEE infinities are refused so an overflow cannot pose as a
        theorem-backed infinite value.
        """
        if isinstance(x, ExtendedReal):
            return x
        x = float(x)
        if not math.isfinite(x):
            raise ValueError(f"refusing to coerce non-finite float {x!r}; use POS_INF/NEG_INF")
        return cls.finite(x)

    @property
    def is_finite(self) -> bool:
        return self.tag == "finite"

    def __float__(self) -> float:
        if self.tag == "finite":
            return self.value
        return math.inf if self.tag == "pos-infinity" else -math.inf

    def __neg__(self) -> ExtendedReal:
        if self.tag == "finite":
            return ExtendedReal.finite(-self.value)
        return NEG_INF if self.tag == "pos-infinity" else POS_INF

    def scale(self, c: float) -> ExtendedReal:
        """Multiply by a finite real ``c``; ``0 * inf`` is rejected."""
        c = float(c)
        if not math.isfinite(c):
            raise ValueError("scale factor must be finite")
        if self.tag == "finite":
            return ExtendedReal.finite(c * self.value)
        if c == 0.0:
            raise DomainError("0 * infinity is undefined")
        return self if c > 0 else -self

    def __add__(self, other) -> ExtendedReal:
        other = ExtendedReal.coerce(other)
        if self.is_finite and other.is_finite:
            return ExtendedReal.finite(self.value + other.value)
        if not self.is_finite and not other.is_finite and self.tag != other.tag:
            raise DomainError("+inf + -inf is undefined")
        return other if self.is_finite else self

    __radd__ = __add__

    def __lt__(self, other) -> bool:
        return extended_compare(self, ExtendedReal.coerce(other)) < 0

    def __str__(self) -> str:
        if self.tag == "finite":
            return repr(self.value)
        return "+inf" if self.tag == "pos-infinity" else "-inf"

    @classmethod
    def parse(cls, text: str) -> ExtendedReal:
        """Inverse of ``str``: accepts ``+inf``, ``-inf`` or a float literal."""
        text = text.strip()
        if text in ("+inf", "inf"):
            return POS_INF
        if text == "-inf":
            return NEG_INF
        return cls.finite(float(text))


POS_INF = ExtendedReal("pos-infinity")
NEG_INF = ExtendedReal("neg-infinity")

_RANK = {"neg-infinity": 0, "finite": 1, "pos-infinity": 2}


def extended_compare(a: ExtendedReal, b: ExtendedReal) -> int:
    """Three-way comparison with -inf < finite < +inf; returns -1, 0 or 1."""
    ra, rb = _RANK[a.tag], _RANK[b.tag]
    if ra != rb:
        return -1 if ra < rb else 1
    if a.tag != "finite" or a.value == b.value:
        return 0
    return -1 if a.value < b.value else 1


def psi_from_phi(t: float, phi_plus, phi_minus, eps_angle: float = EPS_ANGLE) -> ExtendedReal:
    """Directional supremum sup Re[e^{it} w] from the pair Phi^{+/-}(-tan t).

    ``phi_plus`` and ``phi_minus`` must already be evaluated at ``b = -tan t``.
    For cos t > 0 the result is (cos t) * phi_plus, for cos t < 0 it is
    (cos t) * phi_minus.

    Raises:
        DirectionDegenerateError: if |cos t| < eps_angle.
    """
    c = math.cos(t)
    if abs(c) < eps_angle:
        raise DirectionDegenerateError(f"cos t = {c:.3e} is too close to zero (t = {t!r})")
    if c > 0:
        return ExtendedReal.coerce(phi_plus).scale(c)
    return ExtendedReal.coerce(phi_minus).scale(c)


def check_radius(r: float, allow_zero: bool = True) -> float:
    """Validate |z| = r in [0, 1) (or (0, 1) when ``allow_zero`` is false)."""
    r = float(r)
    lo_ok = r >= 0.0 if allow_zero else r > 0.0
    if not (lo_ok and r < 1.0):
        interval = "[0, 1)" if allow_zero else "(0, 1)"
        raise DomainError(f"radius must lie in {interval}, got {r!r}")
    return r


@dataclass(frozen=True)
class BoundaryCurve:
    """Sampled boundary of a region in the w-plane.

    Attributes:
        t: strictly increasing curve parameters.
        w: complex points, one per parameter.
        breakpoints: parameters where the defining formula changes.
        closed: whether the last point connects back to the first.
    """

    t: np.ndarray
    w: np.ndarray
    breakpoints: tuple[float, ...] = field(default=())
    closed: bool = False

    def __post_init__(self):
        t = np.asarray(self.t, dtype=float)
        w = np.asarray(self.w, dtype=complex)
        if t.ndim != 1 or t.shape != w.shape:
            raise ValueError("t and w must be 1-d arrays of equal length")
        if np.any(np.diff(t) <= 0):
            raise ValueError("curve parameters must be strictly increasing")
        t.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "w", w)

    def __len__(self) -> int:
        return len(self.t)

    def vertices(self) -> np.ndarray:
        """Polyline vertices, repeating the first one when closed."""
        if self.closed:
            return np.concatenate([self.w, self.w[:1]])
        return self.w

    def negated(self) -> BoundaryCurve:
        return BoundaryCurve(self.t, -self.w, self.breakpoints, self.closed)
