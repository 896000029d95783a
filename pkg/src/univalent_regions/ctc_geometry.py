"""Geometry of the full variability region W(C) for close-to-convex functions.

W(C) is the unbounded Jordan domain bounded by the arc -gamma((-2pi, 2pi)),
where

    gamma(t) = log(1 + 3 e^{it})                    for |t| < pi,
    gamma(t) = log(1 - e^{it}) + sign(t) pi i       for pi <= |t| < 2 pi.

Most of this module works with Omega = -W(C), whose boundary is gamma
itself. Omega is not convex; its convex hull is obtained by replacing
gamma((u, v)) and its mirror image by the segments of a common tangent.

Branch policy: 1 + 3e^{it} has Im > 0 on (0, pi) and Im < 0 on (-pi, 0), so
the principal logarithm is continuous on |t| < pi. On the outer arcs the
closed form log(2 sin(|t|/2)) + i sign(t)(|t| + pi)/2 is used, which avoids
cancellation in 1 - e^{it} as |t| -> 2 pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from ._solvers import BracketError, bisect_newton
from .core import BoundaryCurve, check_radius
from .errors import DomainError, TangencyNotFoundError

TWO_PI = 2.0 * math.pi
STRIP_HALF_WIDTH = 1.5 * math.pi
CONCAVE_START = math.acos(-1.0 / 3.0)
LOG4 = math.log(4.0)

DEFAULT_SAMPLES = 4096
DEFAULT_CLIP_X = 50.0


def _as_param(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if not np.all(np.isfinite(t)) or np.any(np.abs(t) >= TWO_PI):
        raise DomainError("gamma is defined for -2pi < t < 2pi")
    return t


def gamma(t):
    """Boundary curve of Omega = -W(C). Accepts scalars or arrays."""
    ta = _as_param(t)
    out = np.empty(ta.shape, dtype=complex)
    inner = np.abs(ta) < math.pi
    ti = ta[inner]
    out[inner] = np.log(1.0 + 3.0 * np.exp(1j * ti))
    to = ta[~inner]
    a = np.abs(to)
    out[~inner] = np.log(2.0 * np.sin(a / 2.0)) + 1j * np.sign(to) * (a + math.pi) / 2.0
    return out[()] if out.ndim == 0 else out


# one-sided tangents at the junctions, keyed by (t, side)
_JUNCTION_TANGENTS = {
    (math.pi, "-"): 1.5j,
    (math.pi, "+"): 0.5j,
    (-math.pi, "-"): 0.5j,
    (-math.pi, "+"): 1.5j,
}


def gamma_tangent(t, side: str | None = None):
    """Derivative of gamma.

    At |t| = pi the two arcs meet; ``side='-'`` or ``'+'`` selects the
    one-sided limit from below or above. Without ``side`` the arc used by
    :func:`gamma` at that point is taken (the outer one).
    """
    if side is not None:
        if side not in ("-", "+"):
            raise DomainError("side must be '-' or '+'")
        tf = float(t)
        if abs(tf) == math.pi:
            return _JUNCTION_TANGENTS[(tf, side)]
    ta = _as_param(t)
    e = np.exp(1j * ta)
    inner = np.abs(ta) < math.pi
    with np.errstate(divide="ignore", invalid="ignore"):
        outer = np.exp(0.5j * ta) / (2.0 * np.sin(ta / 2.0))
    out = np.where(inner, 3j * e / (1.0 + 3.0 * e), outer)
    return out[()] if out.ndim == 0 else out


def gamma_turning_rate(t):
    """d/dt arg gamma'(t): Re 1/(1+3e^{it}) inside, Re 1/(1-e^{it}) = 1/2 outside."""
    ta = _as_param(t)
    if np.any(np.abs(ta) == math.pi):
        raise DomainError("turning rate is discontinuous at |t| = pi")
    c = np.cos(ta)
    inner = (1.0 + 3.0 * c) / (10.0 + 6.0 * c)
    out = np.where(np.abs(ta) < math.pi, inner, 0.5)
    return out[()] if out.ndim == 0 else out


@dataclass(frozen=True)
class TangencyPair:
    """Parameters of the common tangent to gamma and the slope parameter b0.

    ``residuals`` maps each defining relation to its absolute residual.
    """

    u: float
    v: float
    b0_geo: float
    residuals: dict = field(default_factory=dict, compare=False)

    def line(self) -> tuple[complex, complex]:
        """Point and unit direction of the tangent line."""
        p = complex(gamma(self.u))
        d = complex(gamma_tangent(self.u))
        return p, d / abs(d)


def _alpha(u: float) -> float:
    return math.atan2(3.0 * math.sin(u), 1.0 + 3.0 * math.cos(u))


def tangency_residual(u: float) -> float:
    """Residual of the single equation in u left after eliminating v."""
    cu, su = math.cos(u), math.sin(u)
    lhs = -(3.0 + cu) / su
    denom = math.log(3.0 + cu) - math.log(5.0 + 3.0 * cu)
    return lhs * denom - (u + math.pi - 2.0 * _alpha(u))


def _angle_between(a: complex, b: complex) -> float:
    return abs(math.atan2((a / b).imag, (a / b).real))


def tangency_residuals(u: float, v: float, b0: float) -> dict:
    cu, su = math.cos(u), math.sin(u)
    alpha = _alpha(u)
    gu, gv = complex(gamma(u)), complex(gamma(v))
    du, dv = complex(gamma_tangent(u)), complex(gamma_tangent(v))
    return {
        "tangent_u_vs_v": _angle_between(du, dv),
        "tangent_vs_chord": _angle_between(du, gv - gu),
        "half_angle": abs(v / 2.0 - (u + math.pi / 2.0 - alpha)),
        "tan_half_v": abs(math.tan(v / 2.0) + (3.0 + cu) / su) / max(1.0, abs(math.tan(v / 2.0))),
        "one_minus_cos_v": abs(1.0 - math.cos(v) - (3.0 + cu) ** 2 / (5.0 + 3.0 * cu)),
        "reduced_equation": abs(tangency_residual(u)),
        "b0_cot": abs(b0 + 1.0 / math.tan(v / 2.0)),
    }


def common_tangent(tol: float = 1e-10) -> TangencyPair:
    """Solve for the common tangent touching gamma at t = u and t = v.

    u is bracketed in (delta, arccos(-1/3) - delta) and found by bisection
    with a Newton polish; v = 2u + pi - 2 alpha(u) and b0 = sin u/(3 + cos u).

    Raises:
        TangencyNotFoundError: if the bracket fails or any residual of the
            tangency relations exceeds ``tol``.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    delta = 1e-6
    try:
        u = bisect_newton(tangency_residual, delta, CONCAVE_START - delta, xtol=1e-15)
    except BracketError as exc:
        raise TangencyNotFoundError(str(exc)) from exc
    v = 2.0 * u + math.pi - 2.0 * _alpha(u)
    b0 = math.sin(u) / (3.0 + math.cos(u))
    res = tangency_residuals(u, v, b0)
    if not (0 < u < CONCAVE_START and math.pi < v < TWO_PI):
        raise TangencyNotFoundError(f"solution outside expected arcs: u={u}, v={v}")
    bad = {k: x for k, x in res.items() if not x < tol}
    if bad:
        raise TangencyNotFoundError(f"tangency residuals above {tol}: {bad}")
    return TangencyPair(u, v, b0, res)


@lru_cache(maxsize=1)
def _cached_tangent() -> TangencyPair:
    return common_tangent()


def chebyshev_params(lo: float, hi: float, n: int) -> np.ndarray:
    """n Chebyshev nodes on the open interval (lo, hi), increasing, dense at the ends."""
    k = np.arange(n)
    x = -np.cos(np.pi * (k + 0.5) / n)
    return 0.5 * (lo + hi) + 0.5 * (hi - lo) * x


def gamma_curve(n: int = DEFAULT_SAMPLES) -> BoundaryCurve:
    """gamma sampled at n cosine-spaced parameters in (-2pi, 2pi)."""
    if n < 8:
        raise DomainError("need at least 8 samples")
    t = chebyshev_params(-TWO_PI, TWO_PI, n)
    return BoundaryCurve(t, gamma(t), breakpoints=(-math.pi, math.pi))


def hull_boundary(n: int = DEFAULT_SAMPLES, w_plane: bool = False) -> BoundaryCurve:
    """Boundary of the convex hull of Omega as an open polyline.

    The arcs gamma((u, v)) and gamma((-v, -u)) are dropped; consecutive
    vertices gamma(+-u), gamma(+-v) are then joined by the tangent segments.
    With ``w_plane`` the curve is negated to bound the hull of W(C) instead.
    """
    if n < 64:
        raise DomainError("hull_boundary needs n >= 64")
    tp = _cached_tangent()
    u, v = tp.u, tp.v
    outer_len = TWO_PI - v
    total = 2.0 * u + 2.0 * outer_len
    n_mid = max(8, int(round(n * 2.0 * u / total)))
    n_out = max(8, (n - n_mid) // 2)

    mid = np.linspace(-u, u, n_mid)
    # outer arc: include t = v exactly, cosine refinement toward 2pi
    k = np.arange(n_out)
    right = v + outer_len * np.sin(0.5 * np.pi * k / n_out)
    left = -right[::-1]
    t = np.concatenate([left, mid, right])
    curve = BoundaryCurve(t, gamma(t), breakpoints=(-v, -u, u, v))
    return curve.negated() if w_plane else curve


class ClosedCtcPolygon:
    """Polygon approximating W(C), closed off by a vertical cut at Re w = clip_x.

    Instances are immutable after construction and may be shared.
    """

    def __init__(self, clip_x: float = DEFAULT_CLIP_X, n: int = DEFAULT_SAMPLES):
        if not clip_x > LOG4:
            raise DomainError("clip_x must exceed log 4")
        if n < 1024:
            raise DomainError("region polygon needs n >= 1024")
        w = -gamma_curve(n).w
        if w.real.max() >= clip_x:
            raise DomainError("clip_x must exceed the largest sampled Re w")
        first, last = w[0], w[-1]
        verts = np.concatenate(
            [w, [complex(clip_x, last.imag), complex(clip_x, first.imag)]]
        )
        verts.setflags(write=False)
        self.clip_x = clip_x
        self.vertices = verts

    def _inside(self, z: np.ndarray) -> np.ndarray:
        xs, ys = self.vertices.real, self.vertices.imag
        x0, y0 = xs, ys
        x1, y1 = np.roll(xs, -1), np.roll(ys, -1)
        px = z.real[:, None]
        py = z.imag[:, None]
        straddle = (y0 <= py) != (y1 <= py)
        with np.errstate(divide="ignore", invalid="ignore"):
            x_cross = x0 + (py - y0) * (x1 - x0) / (y1 - y0)
        crossings = np.sum(straddle & (px < x_cross), axis=1)
        return crossings % 2 == 1

    def distance_to_boundary(self, z: np.ndarray) -> np.ndarray:
        a = self.vertices
        b = np.roll(a, -1)
        ab = b - a
        zz = z[:, None]
        s = np.clip(((zz - a) * np.conj(ab)).real / np.abs(ab) ** 2, 0.0, 1.0)
        return np.min(np.abs(zz - (a + s * ab)), axis=1)

    def contains(self, w, tol: float = 1e-9, chunk: int = 512):
        w = np.asarray(w, dtype=complex)
        flat = w.ravel()
        out = np.zeros(flat.shape, dtype=bool)
        in_strip = np.abs(flat.imag) < STRIP_HALF_WIDTH
        far_right = in_strip & (flat.real >= self.clip_x)
        out[far_right] = True
        todo = np.flatnonzero(in_strip & ~far_right)
        for start in range(0, len(todo), chunk):
            idx = todo[start : start + chunk]
            z = flat[idx]
            inside = self._inside(z)
            if tol > 0 and not inside.all():
                outside = ~inside
                inside[outside] = self.distance_to_boundary(z[outside]) <= tol
            out[idx] = inside
        out = out.reshape(w.shape)
        return out[()] if out.ndim == 0 else out


@lru_cache(maxsize=8)
def ctc_polygon(clip_x: float = DEFAULT_CLIP_X, n: int = DEFAULT_SAMPLES) -> ClosedCtcPolygon:
    return ClosedCtcPolygon(clip_x, n)


def region_contains(w, clip_x: float = DEFAULT_CLIP_X, n: int = DEFAULT_SAMPLES, tol: float = 1e-9):
    """Membership in W(C) via a point-in-polygon test.

    Points with |Im w| >= 3pi/2 are rejected at once. Beyond the cut
    Re w >= clip_x the true boundary is within exp(-clip_x) of the strip
    edges, so such points are accepted whenever they lie inside the strip.
    """
    return ctc_polygon(float(clip_x), int(n)).contains(w, tol)


def h_map(z):
    """h(z) = log(1 + z e^{2i phi}) - 3 log(1 + z), phi = arg(1 + z/3)."""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise DomainError("h is evaluated on the open unit disk")
    phi = np.angle(1.0 + z / 3.0)
    a = 1.0 + z * np.exp(2j * phi)
    b = 1.0 + z
    # |z| < 1 keeps both factors in the right half-plane; principal logs apply
    if np.any(a.real <= 0) or np.any(b.real <= 0):
        raise DomainError("branch assumption violated: factor left the right half-plane")
    out = np.log(a) - 3.0 * np.log(b)
    return out[()] if out.ndim == 0 else out


def pointwise_region_h(r: float, n: int = DEFAULT_SAMPLES) -> BoundaryCurve:
    """Boundary of W_z(C), |z| = r, as the image of the circle |z| = r under h."""
    r = check_radius(r, allow_zero=False)
    if n < 8:
        raise DomainError("need at least 8 samples")
    theta = 2.0 * np.pi * np.arange(n) / n
    return BoundaryCurve(theta, h_map(r * np.exp(1j * theta)), closed=True)


def biernacki_value(u, v):
    """-log[2u^2/(u+v)] evaluated as -(log 2 + 2 log u - log(u + v))."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if np.any(u.real <= 0) or np.any((u + v).real <= 0):
        raise DomainError("branch assumption violated: Re u and Re(u+v) must be positive")
    out = -(math.log(2.0) + 2.0 * np.log(u) - np.log(u + v))
    return out[()] if out.ndim == 0 else out


def biernacki_samples(r: float, m: int, seed: int = 0, boundary_fraction: float = 0.9) -> np.ndarray:
    """m points of W_z(C) for |z| = r from the two-disk description.

    A fraction of the budget goes to a grid on the torus |u-1| = |v-1| = r
    (where boundary points of the image come from); the rest are uniform
    random points of the bidisk.
    """
    r = check_radius(r, allow_zero=False)
    if m < 1:
        raise DomainError("m must be positive")
    n_torus = int(round(boundary_fraction * m))
    side = int(math.isqrt(n_torus))
    pieces = []
    if side >= 1:
        ang = 2.0 * np.pi * np.arange(side) / side
        au, av = np.meshgrid(ang, ang + np.pi / side, indexing="ij")
        pieces.append(biernacki_value(1.0 + r * np.exp(1j * au.ravel()), 1.0 + r * np.exp(1j * av.ravel())))
    rest = m - side * side
    if rest > 0:
        rng = np.random.default_rng(seed)
        rad = r * np.sqrt(rng.random((2, rest)))
        phs = 2.0 * np.pi * rng.random((2, rest))
        uv = 1.0 + rad * np.exp(1j * phs)
        pieces.append(biernacki_value(uv[0], uv[1]))
    return np.concatenate(pieces)
