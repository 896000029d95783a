"""Sharp lower bound of log|f(z)/z| + b arg(f(z)/z) over close-to-convex f.

Phi^-(b, C) is even in b and has two analytic branches:

    p(b) = -1/2 log[2(5 - 4b^2 + 3 sqrt(1 - 8b^2)) / (1 + b^2)]
           - b arctan(3b / sqrt(1 - 8b^2))        for |b| <= b0,
    q(b) = 1/2 log(1 + b^2) - log 2 - b(arctan b + pi)   for |b| >= b0,

where b0 ~ 0.24001 is the unique zero of q - p on (0, 1/(2 sqrt 2)).
The supremum Phi^+(b, C) is +inf for every b.
"""

from __future__ import annotations

import math
import threading

from ._solvers import bisect_newton
from .core import POS_INF, ExtendedReal
from .errors import DomainError

P_DOMAIN_EDGE = 1.0 / (2.0 * math.sqrt(2.0))
LOG2 = math.log(2.0)


def p_branch(b: float) -> float:
    """Support value from the inner arc of the boundary; needs |b| <= 1/(2 sqrt 2)."""
    b = float(b)
    disc = 1.0 - 8.0 * b * b
    if disc < 0.0:
        if disc < -1e-14:
            raise DomainError(f"p(b) needs |b| <= 1/(2 sqrt 2), got {b!r}")
        disc = 0.0
    s = math.sqrt(disc)
    # atan2 gives arctan(3b/s) for s > 0 and the limit sign(b) pi/2 at s = 0
    return -0.5 * math.log(2.0 * (5.0 - 4.0 * b * b + 3.0 * s) / (1.0 + b * b)) - b * math.atan2(3.0 * b, s)


def q_branch(b: float) -> float:
    b = float(b)
    return 0.5 * math.log1p(b * b) - LOG2 - b * (math.atan(b) + math.pi)


def branch_gap(b: float) -> float:
    return q_branch(b) - p_branch(b)


def b0_root(tol: float = 1e-12) -> float:
    """Zero of q - p on (0, 1/(2 sqrt 2)).

    q - p is strictly decreasing there, positive (log 2) at 0 and negative at
    the right end, so bisection cannot miss the root.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    return bisect_newton(branch_gap, 0.0, P_DOMAIN_EDGE, xtol=1e-16, ftol=tol)


_B0: float | None = None
_B0_LOCK = threading.Lock()


def crossover() -> float:
    """b0 to full double precision, computed once per process."""
    global _B0
    if _B0 is None:
        with _B0_LOCK:
            if _B0 is None:
                _B0 = b0_root(1e-16)
    return _B0


def phi_ctc_minus(b: float) -> float:
    """Phi^-(b, C) as a float (the p branch is used at |b| = b0 exactly)."""
    ab = abs(float(b))
    return p_branch(ab) if ab <= crossover() else q_branch(ab)


def phi_ctc(b: float, sign: str) -> ExtendedReal:
    if sign == "plus":
        return POS_INF
    if sign == "minus":
        return ExtendedReal.finite(phi_ctc_minus(b))
    raise DomainError(f"sign must be 'plus' or 'minus', got {sign!r}")


def psi_minus_ctc(t: float) -> float:
    """Directional infimum inf over W(C) of Re[e^{it} w] for |t| < pi/2.

    Equal to (cos t) Phi^-(tan t, C), written directly in t.
    """
    t = float(t)
    if not abs(t) < math.pi / 2.0:
        raise DomainError("psi_minus_ctc needs |t| < pi/2")
    c, s, tn = math.cos(t), math.sin(t), math.tan(t)
    if abs(tn) <= crossover():
        root = math.sqrt(1.0 - 8.0 * tn * tn)
        return -0.5 * c * math.log(2.0 * (9.0 * c * c - 4.0 + 3.0 * c * c * root)) - s * math.atan(
            3.0 * tn / root
        )
    return -c * math.log(2.0 * c) - abs(s) * (abs(t) + math.pi)
