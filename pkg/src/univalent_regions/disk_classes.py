"""Regions and sharp bounds for S (Grunsky), S* (Marx) and K.

All logarithms here are principal: for |zeta| < 1 the factor 1 - zeta has
positive real part, so no branch tracking is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .core import NEG_INF, POS_INF, BoundaryCurve, ExtendedReal, check_radius
from .errors import DegenerateRegionError, DomainError

StarClass = Literal["star", "convex"]
Sign = Literal["plus", "minus"]

MEMBERSHIP_TOL = 1e-9
LOG4 = math.log(4.0)

_SCALE = {"star": 2.0, "convex": 1.0}


def _scale(cls: str) -> float:
    try:
        return _SCALE[cls]
    except KeyError:
        raise DomainError(f"class must be 'star' or 'convex', got {cls!r}") from None


def _check_sign(sign: str) -> None:
    if sign not in ("plus", "minus"):
        raise DomainError(f"sign must be 'plus' or 'minus', got {sign!r}")


@dataclass(frozen=True)
class RegionDisk:
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius >= 0.0:
            raise ValueError("radius must be non-negative")

    def contains(self, w, tol: float = MEMBERSHIP_TOL):
        return np.abs(np.asarray(w) - self.center) <= self.radius + tol

    def boundary(self, n: int) -> BoundaryCurve:
        if n < 8:
            raise DomainError("need at least 8 samples")
        if self.radius == 0.0:
            raise DegenerateRegionError("disk of radius 0 has no boundary polyline")
        theta = 2.0 * np.pi * np.arange(n) / n
        return BoundaryCurve(theta, self.center + self.radius * np.exp(1j * theta), closed=True)


@dataclass(frozen=True)
class MarxRegion:
    """Image of |zeta| <= r under w = -scale * log(1 - zeta).

    ``scale`` is 2 for starlike and 1 for convex functions.
    """

    r: float
    scale: float

    def contains(self, w, tol: float = MEMBERSHIP_TOL):
        w = np.asarray(w, dtype=complex)
        # exp(-w/scale) is periodic in Im w; the principal strip rules out aliases.
        in_strip = np.abs(w.imag) <= self.scale * (math.pi / 2.0)
        return in_strip & (np.abs(1.0 - np.exp(-w / self.scale)) <= self.r + tol)


@dataclass(frozen=True)
class CriticalAngles:
    theta1: float
    theta2: float


def grunsky_region(r: float) -> RegionDisk:
    """W_z(S) for |z| = r: the disk about -log(1-r^2) of radius log((1+r)/(1-r))."""
    r = check_radius(r)
    return RegionDisk(complex(-math.log1p(-r * r), 0.0), math.log((1.0 + r) / (1.0 - r)))


def psi_s(r: float, t: float) -> float:
    r = check_radius(r)
    c = math.cos(t)
    return (1.0 - c) * math.log1p(r) - (1.0 + c) * math.log1p(-r)


def phi_s(b: float, sign: Sign) -> ExtendedReal:
    """Full-disk extremes for S: +inf above, and -inf below unless b = 0."""
    _check_sign(sign)
    if sign == "plus":
        return POS_INF
    return ExtendedReal.finite(-LOG4) if b == 0 else NEG_INF


def phi_s_pointwise(r: float, b: float, sign: Sign) -> float:
    """Extremes of u + b v over the Grunsky disk, recovered from psi_s.

    With t = -arctan b (plus) or t = pi - arctan b (minus) the directional
    value equals (cos t) times the requested bound.
    """
    _check_sign(sign)
    k = math.sqrt(1.0 + b * b)
    if sign == "plus":
        return k * psi_s(r, -math.atan(b))
    return -k * psi_s(r, math.pi - math.atan(b))


def marx_region(r: float, cls: StarClass) -> MarxRegion:
    return MarxRegion(check_radius(r), _scale(cls))


def marx_boundary(r: float, cls: StarClass, n: int) -> BoundaryCurve:
    """Closed polyline theta -> -scale*log(1 - r e^{i theta}) on n equispaced angles."""
    scale = _scale(cls)
    r = check_radius(r)
    if r == 0.0:
        raise DegenerateRegionError("W_0 is the single point 0")
    if n < 8:
        raise DomainError("need at least 8 samples")
    theta = 2.0 * np.pi * np.arange(n) / n
    w = -scale * np.log(1.0 - r * np.exp(1j * theta))
    return BoundaryCurve(theta, w, closed=True)


def marx_contains(w, r: float, cls: StarClass, tol: float = MEMBERSHIP_TOL):
    return marx_region(r, cls).contains(w, tol)


def star_phi_curve(theta, r: float, b: float):
    """phi(theta) = -2 log|1 - r e^{i theta}| - 2b arg(1 - r e^{i theta})."""
    theta = np.asarray(theta, dtype=float)
    return -np.log(1.0 + r * r - 2.0 * r * np.cos(theta)) + 2.0 * b * np.arctan2(
        r * np.sin(theta), 1.0 - r * np.cos(theta)
    )


def star_phi_derivative(theta, r: float, b: float):
    theta = np.asarray(theta, dtype=float)
    return (
        -2.0
        * r
        * (np.sin(theta) - b * np.cos(theta) + b * r)
        / (1.0 - 2.0 * r * np.cos(theta) + r * r)
    )


def critical_angles(r: float, b: float) -> CriticalAngles:
    """The two zeros of sin(theta) - b cos(theta) + b r on [0, 2 pi)."""
    r = check_radius(r, allow_zero=False)
    sq = math.sqrt(1.0 + b * b * (1.0 - r * r))
    d = 1.0 + b * b
    t1 = math.atan2((b * sq - b * r) / d, (b * b * r + sq) / d)
    t2 = math.atan2((-b * sq - b * r) / d, (b * b * r - sq) / d)
    return CriticalAngles(t1 % (2.0 * math.pi), t2 % (2.0 * math.pi))


def star_extremes(r: float, b: float) -> tuple[float, float]:
    """(max, min) of phi over the circle, from its values at both critical angles.

    Neither angle is assumed to be the maximizer.
    """
    ang = critical_angles(r, b)
    vals = star_phi_curve([ang.theta1, ang.theta2], r, b)
    return float(vals.max()), float(vals.min())


def phi_star(r: float, b: float, sign: Sign, cls: StarClass = "star") -> float:
    """Sharp bound of log|f(z)/z| + b arg(f(z)/z) at |z| = r over S* or K."""
    _check_sign(sign)
    half = _scale(cls) / 2.0
    r = check_radius(r)
    if r == 0.0:
        return 0.0
    sq = math.sqrt(1.0 + b * b * (1.0 - r * r))
    at = 2.0 * b * math.atan(b * r / sq)
    if sign == "plus":
        val = math.log1p(b * b) - 2.0 * math.log(sq - r) + at
    else:
        val = math.log1p(b * b) - 2.0 * math.log(sq + r) - at
    return half * val


def phi_star_full_minus(b: float, cls: StarClass = "star") -> float:
    """Infimum over the whole disk: log(1+b^2) - log 4 - 2b arctan b (halved for K)."""
    half = _scale(cls) / 2.0
    return half * (math.log1p(b * b) - LOG4 - 2.0 * b * math.atan(b))


def phi_star_full_plus(b: float, cls: StarClass = "star") -> ExtendedReal:
    _scale(cls)
    return POS_INF
