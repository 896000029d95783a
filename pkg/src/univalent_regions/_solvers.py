"""Scalar root finding and one-dimensional maximization."""

from __future__ import annotations

import math
from typing import Callable

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


class BracketError(ValueError):
    pass


def bisect_newton(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    xtol: float = 1e-14,
    ftol: float = 0.0,
    maxiter: int = 200,
    polish_steps: int = 4,
) -> float:
    """Root of ``f`` on [lo, hi] by bisection followed by a Newton polish.

    The polish uses a central-difference derivative and is discarded if it
    leaves the final bracket or does not reduce |f|.
    """
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if math.copysign(1.0, flo) == math.copysign(1.0, fhi):
        raise BracketError(f"no sign change on [{lo}, {hi}]: f = {flo}, {fhi}")

    for _ in range(maxiter):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0:
            return mid
        if math.copysign(1.0, fmid) == math.copysign(1.0, flo):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
        if hi - lo <= xtol * max(1.0, abs(mid)) or abs(fmid) <= ftol:
            break

    x = lo if abs(flo) < abs(fhi) else hi
    fx = f(x)
    width = hi - lo
    for _ in range(polish_steps):
        h = max(width, 1e-7 * max(1.0, abs(x)))
        d = (f(x + h) - f(x - h)) / (2.0 * h)
        if d == 0.0 or not math.isfinite(d):
            break
        x_new = x - fx / d
        if not lo - width <= x_new <= hi + width:
            break
        f_new = f(x_new)
        if abs(f_new) >= abs(fx):
            break
        x, fx = x_new, f_new
    return x


def golden_max(
    f: Callable[[float], float], a: float, b: float, xtol: float = 1e-11, maxiter: int = 200
) -> tuple[float, float]:
    """Golden-section search for a maximum of ``f`` on [a, b].

    Returns ``(x, f(x))``; ``f`` is assumed unimodal on the interval.
    """
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if abs(b - a) <= xtol:
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    best = max(((x, f(x)), (c, fc), (d, fd)), key=lambda p: p[1])
    return best
