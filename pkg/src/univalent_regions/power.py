"""Bounds for the power deformation f_c(z) = z (f(z)/z)^c over close-to-convex f.

With c = a + bi and w = log(f(z)/z), log|f_c(z)/z| = a Re w - b Im w.
For a > 0 the sharp infimum over f in C and z in the disk is finite (the
supremum is +inf); for a < 0 the roles swap. Both equal a * Phi^-(b/a, C).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .ctc_bounds import crossover
from .errors import DegenerateExponentError

LOG2 = math.log(2.0)


@dataclass(frozen=True)
class PowerExponent:
    a: float
    b: float

    @classmethod
    def from_complex(cls, c: complex) -> PowerExponent:
        c = complex(c)
        return cls(c.real, c.imag)


class PowerBound(NamedTuple):
    kind: Literal["infimum", "supremum"]
    value: float


def _exponent(c) -> PowerExponent:
    if isinstance(c, PowerExponent):
        return c
    return PowerExponent.from_complex(c)


def power_bound(c) -> PowerBound:
    """Sharp bound of log|f_c(z)/z| over f in C and |z| < 1.

    Raises:
        DegenerateExponentError: for Re c = 0, where no sharp value is known.
    """
    c = _exponent(c)
    a, b = float(c.a), float(c.b)
    if a == 0.0:
        raise DegenerateExponentError("Re c = 0 is not covered: no sharp bound is available")
    kind = "infimum" if a > 0 else "supremum"
    if abs(b) <= crossover() * abs(a):
        return PowerBound(kind, inner_branch(a, b))
    return PowerBound(kind, outer_branch(a, b))


def inner_branch(a: float, b: float) -> float:
    """Bound for |b/a| <= b0 (needs |b/a| <= 1/(2 sqrt 2))."""
    sa, aa = math.copysign(1.0, a), abs(a)
    root = math.sqrt(max(a * a - 8.0 * b * b, 0.0))
    return -0.5 * a * math.log(
        2.0 * (5.0 * a * a - 4.0 * b * b + 3.0 * aa * root) / (a * a + b * b)
    ) - sa * b * math.atan2(3.0 * b, root)


def outer_branch(a: float, b: float) -> float:
    """Bound for |b/a| >= b0."""
    sa = math.copysign(1.0, a)
    return (
        0.5 * a * math.log(a * a + b * b)
        - a * math.log(2.0 * abs(a))
        - sa * abs(b) * (math.atan(abs(b / a)) + math.pi)
    )


def power_eval(logw: complex, c) -> float:
    """log|f_c(z)/z| given logw = log(f(z)/z)."""
    c = _exponent(c)
    logw = complex(logw)
    return c.a * logw.real - c.b * logw.imag
