"""Brute-force reference computations used to check the closed forms.

Nothing here uses the closed-form bounds. Extremes come from dense sampling
plus local refinement. Class members are built from finitely supported
probability measures on the circle:

* starlike:  f(z) = z prod (1 - z e^{-i theta_k})^{-2 lambda_k}
* close-to-convex: f' = g' p with g'(z) = prod (1 - z e^{-i theta_k})^{-2 lambda_k}
  (g convex) and p(z) = sum mu_j (1 + z e^{-i phi_j}) / (1 - z e^{-i phi_j}).

All evaluation is along the positive radius z = r, which loses nothing
because every class involved is rotationally invariant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ._solvers import golden_max
from .core import check_radius
from .ctc_geometry import TWO_PI, chebyshev_params, gamma
from .disk_classes import star_phi_curve
from .errors import DomainError, QuadratureFailure


@dataclass(frozen=True)
class AtomicMeasure:
    """Probability measure with finitely many atoms on the circle."""

    angles: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        ang = np.asarray(self.angles, dtype=float).ravel()
        wt = np.asarray(self.weights, dtype=float).ravel()
        if ang.size == 0 or ang.shape != wt.shape:
            raise ValueError("need a nonempty, matching list of angles and weights")
        if np.any(wt <= 0):
            raise ValueError("weights must be positive")
        if abs(wt.sum() - 1.0) > 1e-14:
            raise ValueError(f"weights sum to {wt.sum()!r}, not 1")
        ang = np.mod(ang, TWO_PI)
        ang.setflags(write=False)
        wt.setflags(write=False)
        object.__setattr__(self, "angles", ang)
        object.__setattr__(self, "weights", wt)

    @classmethod
    def point(cls, angle: float = 0.0) -> AtomicMeasure:
        return cls(np.array([angle]), np.array([1.0]))

    def __len__(self) -> int:
        return self.angles.size


@dataclass(frozen=True)
class CtcSample:
    """A close-to-convex function f with f' = g' p.

    ``herglotz_measure=None`` means p = 1, i.e. f = g is convex.
    """

    convex_measure: AtomicMeasure
    herglotz_measure: AtomicMeasure | None
    seed: int = 0


def random_measure(rng_seed, max_atoms: int) -> AtomicMeasure:
    """Seeded measure: 1..max_atoms atoms, uniform angles, flat Dirichlet weights."""
    if max_atoms < 1:
        raise DomainError("max_atoms must be >= 1")
    rng = np.random.default_rng(rng_seed)
    return _measure_from_rng(rng, max_atoms)


def _measure_from_rng(rng: np.random.Generator, max_atoms: int) -> AtomicMeasure:
    k = int(rng.integers(1, max_atoms + 1))
    angles = rng.uniform(0.0, TWO_PI, size=k)
    if k == 1:
        return AtomicMeasure(angles, np.array([1.0]))
    e = rng.exponential(size=k)
    w = e / e.sum()
    # push the rounding residue into the largest weight
    w[np.argmax(w)] += 1.0 - w.sum()
    return AtomicMeasure(angles, w)


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Generator for trial ``index`` of a sweep; independent of how trials are split."""
    return np.random.default_rng([int(seed), int(index)])


def random_ctc_sample(seed: int, index: int, max_atoms: int = 4) -> CtcSample:
    rng = trial_rng(seed, index)
    return CtcSample(_measure_from_rng(rng, max_atoms), _measure_from_rng(rng, max_atoms), seed)


# extremization


def grid_extremum(
    r: float, b: float, kind: Literal["max", "min"], n: int = 1024
) -> tuple[float, float]:
    """Extremum of phi(theta) = -2 log|1 - r e^{i theta}| - 2b arg(1 - r e^{i theta}).

    Coarse grid of n angles, then golden-section refinement around every
    grid-local extremum. Returns (theta, value) with theta in [0, 2pi).
    """
    r = check_radius(r, allow_zero=False)
    if n < 256:
        raise DomainError("grid_extremum needs n >= 256")
    if kind not in ("max", "min"):
        raise DomainError("kind must be 'max' or 'min'")
    sgn = 1.0 if kind == "max" else -1.0
    h = TWO_PI / n
    theta = h * np.arange(n)
    vals = sgn * star_phi_curve(theta, r, b)
    peaks = np.flatnonzero((vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1)))

    def f(x):
        return sgn * float(star_phi_curve(x, r, b))

    best = None
    for i in peaks:
        x, fx = golden_max(f, theta[i] - h, theta[i] + h, xtol=1e-12)
        if best is None or fx > best[1]:
            best = (x, fx)
    x, fx = best
    return x % TWO_PI, sgn * fx


def curve_extremum(b: float, n: int = 4096) -> tuple[float, float]:
    """Maximum of X + bY over X + iY = gamma(t), -2pi < t < 2pi.

    Returns (t, max). Phi^-(b, C) is minus the value.
    """
    if n < 4096:
        raise DomainError("curve_extremum needs n >= 4096")
    t = chebyshev_params(-TWO_PI, TWO_PI, n)
    g = gamma(t)
    vals = g.real + b * g.imag
    interior = np.flatnonzero((vals[1:-1] >= vals[:-2]) & (vals[1:-1] >= vals[2:])) + 1

    def f(x):
        w = complex(gamma(x))
        return w.real + b * w.imag

    best = (float(t[np.argmax(vals)]), float(vals.max()))
    for i in interior:
        x, fx = golden_max(f, t[i - 1], t[i + 1], xtol=1e-12)
        if fx > best[1]:
            best = (x, fx)
    return best


# samplers


def sample_starlike(measure: AtomicMeasure, r: float) -> complex:
    """log(f(r)/r) for f(z) = z prod (1 - z e^{-i theta_k})^{-2 lambda_k}."""
    r = check_radius(r, allow_zero=False)
    terms = np.log(1.0 - r * np.exp(-1j * measure.angles))
    return complex(-2.0 * np.dot(measure.weights, terms))


def sample_convex(measure: AtomicMeasure, r: float) -> complex:
    """Half of :func:`sample_starlike`; a point of the convex-class region at r."""
    return 0.5 * sample_starlike(measure, r)


_GL_CACHE: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gauss_legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    if order not in _GL_CACHE:
        _GL_CACHE[order] = np.polynomial.legendre.leggauss(order)
    return _GL_CACHE[order]


def ctc_derivative(sample: CtcSample, z) -> np.ndarray:
    """f'(z) = g'(z) p(z) for the sample, vectorized over z."""
    z = np.asarray(z, dtype=complex)
    cm = sample.convex_measure
    rot = z[..., None] * np.exp(-1j * cm.angles)
    gprime = np.exp(-2.0 * np.sum(cm.weights * np.log(1.0 - rot), axis=-1))
    hm = sample.herglotz_measure
    if hm is None:
        return gprime
    rot = z[..., None] * np.exp(-1j * hm.angles)
    p = np.sum(hm.weights * (1.0 + rot) / (1.0 - rot), axis=-1)
    return gprime * p


def _cumulative_integral(sample: CtcSample, knots: np.ndarray, panels: int, order: int) -> np.ndarray:
    """f at each knot (f(0) = 0) by composite Gauss-Legendre on each knot interval."""
    x, w = _gauss_legendre(order)
    edges = np.linspace(0.0, 1.0, panels + 1)
    lo = knots[:-1, None] + (knots[1:, None] - knots[:-1, None]) * edges[None, :-1]
    hi = knots[:-1, None] + (knots[1:, None] - knots[:-1, None]) * edges[None, 1:]
    half = 0.5 * (hi - lo)
    nodes = (0.5 * (hi + lo))[..., None] + half[..., None] * x
    vals = ctc_derivative(sample, nodes)
    pieces = np.sum(vals * w, axis=-1) * half
    return np.concatenate([[0.0], np.cumsum(pieces.sum(axis=1))])


def sample_ctc(
    sample: CtcSample,
    r: float,
    quad_order: int = 16,
    checkpoints: int = 64,
    max_doublings: int = 12,
    rtol: float = 1e-12,
) -> complex:
    """log(f(r)/r) for the close-to-convex function described by ``sample``.

    f(r) is integrated from f' along [0, r]. The panel count doubles until
    two successive passes agree to ``rtol`` relative to max(1, |f|). The
    argument of f(s)/s is continued from 0 at s = 0 through the
    checkpoints, which are doubled whenever a step turns by more than pi/2.

    Raises:
        QuadratureFailure: if the panel doubling does not settle.
    """
    r = check_radius(r, allow_zero=False)
    if quad_order < 16:
        raise DomainError("quad_order must be >= 16")
    while True:
        knots = np.linspace(0.0, r, checkpoints + 1)
        panels = 1
        prev = _cumulative_integral(sample, knots, panels, quad_order)
        for _ in range(max_doublings):
            panels *= 2
            cur = _cumulative_integral(sample, knots, panels, quad_order)
            scale = np.maximum(1.0, np.abs(cur))
            if np.all(np.abs(cur - prev) <= rtol * scale):
                break
            prev = cur
        else:
            raise QuadratureFailure(f"no convergence after {max_doublings} doublings at r={r}")
        ratio = cur[1:] / knots[1:]
        steps = np.angle(ratio[1:] / ratio[:-1])
        if np.all(np.abs(steps) <= math.pi / 2.0):
            break
        checkpoints *= 2
        if checkpoints > 1 << 16:
            raise QuadratureFailure("argument continuation did not stabilise")
    arg = float(np.angle(ratio[0]) + np.sum(steps))
    return complex(math.log(abs(ratio[-1])), arg)
