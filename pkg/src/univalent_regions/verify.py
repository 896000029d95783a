"""Verification suites behind ``univalent-regions verify``.

Each check returns the largest residual it observed and the first failing
input, so a red run can be reproduced from its report alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from . import ctc_bounds as cb
from . import ctc_geometry as cg
from . import disk_classes as dc
from . import oracles
from . import power as pw
from .core import psi_from_phi

SUITES = ("identities", "oracle", "containment", "powerdef")

STAR_RADII = (0.1, 0.5, 0.9)
CTC_RADII = (0.3, 0.6, 0.9)
SHARPNESS_B = (0.0, 0.1, -0.1, 0.5, -0.5, 1.0, -1.0)


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_residual: float
    tol: float
    failing_case: dict | None = None


def _check(name: str, cases: Iterable, residual: Callable, tol: float) -> CheckResult:
    """Run ``residual`` over ``cases``; a case fails when residual > tol."""
    worst, first_bad = 0.0, None
    for case in cases:
        res = float(residual(case))
        if not math.isfinite(res) or res > tol:
            if first_bad is None:
                first_bad = dict(case) if isinstance(case, dict) else {"case": case}
                first_bad["residual"] = res
        if res > worst or not math.isfinite(res):
            worst = res
    return CheckResult(name, first_bad is None, worst, tol, first_bad)


def _star_grid():
    for r in np.linspace(0.05, 0.95, 20):
        for b in np.linspace(-5.0, 5.0, 20):
            yield {"r": float(r), "b": float(b)}


def _pick(tol_override, default):
    return default if tol_override is None else tol_override


# identities


def suite_identities(tol: float | None = None, **_) -> list[CheckResult]:
    out = []
    out.append(
        _check(
            "star_sum_identity",
            _star_grid(),
            lambda c: abs(
                dc.phi_star(c["r"], c["b"], "plus")
                + dc.phi_star(c["r"], c["b"], "minus")
                + 2.0 * math.log1p(-c["r"] ** 2)
            ),
            _pick(tol, 1e-10),
        )
    )
    out.append(
        _check(
            "convex_is_half_star",
            ({**c, "sign": s} for c in _star_grid() for s in ("plus", "minus")),
            lambda c: abs(
                dc.phi_star(c["r"], c["b"], c["sign"], "convex")
                - 0.5 * dc.phi_star(c["r"], c["b"], c["sign"], "star")
            ),
            _pick(tol, 1e-12),
        )
    )
    out.append(
        _check(
            "ctc_evenness",
            ({"b": float(b)} for b in np.linspace(-2, 2, 101)),
            lambda c: abs(cb.phi_ctc_minus(-c["b"]) - cb.phi_ctc_minus(c["b"])),
            _pick(tol, 0.0),
        )
    )
    out.append(
        _check(
            "gap_at_zero_is_log2",
            [{"b": 0.0}],
            lambda c: abs(cb.q_branch(0.0) - cb.p_branch(0.0) - math.log(2.0)),
            _pick(tol, 1e-12),
        )
    )
    b0 = cb.crossover()
    out.append(
        _check(
            "branches_meet_at_b0",
            [{"b": b0}],
            lambda c: abs(cb.p_branch(c["b"]) - cb.q_branch(c["b"])),
            _pick(tol, 1e-10),
        )
    )
    t0 = math.atan(b0)

    def psi_jump(c):
        t = c["t"]
        c_, s, tn = math.cos(t), math.sin(t), math.tan(t)
        root = math.sqrt(1.0 - 8.0 * tn * tn)
        first = -0.5 * c_ * math.log(2.0 * (9 * c_ * c_ - 4 + 3 * c_ * c_ * root)) - s * math.atan(3 * tn / root)
        second = -c_ * math.log(2.0 * c_) - abs(s) * (abs(t) + math.pi)
        return abs(first - second)

    out.append(_check("psi_minus_ctc_continuity", [{"t": t0}, {"t": -t0}], psi_jump, _pick(tol, 1e-10)))
    out.append(
        _check(
            "psi_minus_ctc_vs_phi",
            ({"t": float(t)} for t in np.linspace(-math.pi / 2 + 0.05, math.pi / 2 - 0.05, 201)),
            lambda c: abs(cb.psi_minus_ctc(c["t"]) - math.cos(c["t"]) * cb.phi_ctc_minus(math.tan(c["t"]))),
            _pick(tol, 1e-12),
        )
    )
    out.append(
        _check(
            "gamma_c1_junction",
            [{"t": math.pi}, {"t": -math.pi}],
            lambda c: abs(
                np.angle(cg.gamma_tangent(c["t"], "-")) - np.angle(cg.gamma_tangent(c["t"], "+"))
            ),
            _pick(tol, 0.0),
        )
    )

    def psi_star_vs_boundary(c):
        r, t = c["r"], c["t"]
        val = psi_from_phi(t, dc.phi_star(r, -math.tan(t), "plus"), dc.phi_star(r, -math.tan(t), "minus"))
        w = dc.marx_boundary(r, "star", 20000).w
        return abs(float(val) - float(np.max((np.exp(1j * t) * w).real)))

    out.append(
        _check(
            "psi_star_vs_boundary",
            (
                {"r": r, "t": float(t)}
                for r in (0.3, 0.7)
                for t in np.linspace(-3.1, 3.1, 25)
                if abs(math.cos(t)) > 0.01
            ),
            psi_star_vs_boundary,
            _pick(tol, 1e-6),
        )
    )
    return out


# oracle agreement


def suite_oracle(tol: float | None = None, **_) -> list[CheckResult]:
    out = []
    out.append(
        _check(
            "star_grid_oracle",
            ({**c, "sign": s} for c in _star_grid() for s in ("plus", "minus")),
            lambda c: abs(
                dc.phi_star(c["r"], c["b"], c["sign"])
                - oracles.grid_extremum(c["r"], c["b"], "max" if c["sign"] == "plus" else "min")[1]
            ),
            _pick(tol, 1e-9),
        )
    )
    out.append(
        _check(
            "ctc_curve_oracle",
            ({"b": float(b)} for b in np.linspace(-2.0, 2.0, 50)),
            lambda c: abs(cb.phi_ctc_minus(c["b"]) + oracles.curve_extremum(c["b"])[1]),
            _pick(tol, 1e-6),
        )
    )
    tp = cg.common_tangent()
    out.append(
        _check(
            "b0_analytic_vs_geometric",
            [{"b0_analytic": cb.b0_root(1e-12), "b0_geo": tp.b0_geo}],
            lambda c: abs(c["b0_analytic"] - c["b0_geo"]),
            _pick(tol, 1e-8),
        )
    )
    out.append(
        _check(
            "tangency_residuals",
            ({"relation": k, "value": v} for k, v in tp.residuals.items()),
            lambda c: c["value"],
            _pick(tol, 1e-9),
        )
    )
    return out


# Monte Carlo


@lru_cache(maxsize=32)
def ctc_values(seed: int, count: int, r: float) -> np.ndarray:
    """log(f(r)/r) for ``count`` seeded close-to-convex samples."""
    return np.array(
        [oracles.sample_ctc(oracles.random_ctc_sample(seed, i), r) for i in range(count)]
    )


def starlike_values(seed: int, count: int, r: float) -> np.ndarray:
    return np.array(
        [
            oracles.sample_starlike(oracles.random_measure([seed, 1, i], 6), r)
            for i in range(count)
        ]
    )


def suite_containment(seed: int = 0, trials: int = 10000, tol: float | None = None, **_) -> list[CheckResult]:
    out = []
    ctc_trials = max(1, trials // 10)
    star_tol = _pick(tol, 1e-9)
    for r in STAR_RADII:
        vals = starlike_values(seed, trials, r)
        marx = dc.marx_region(r, "star")
        disk = dc.grunsky_region(r)
        out.append(
            _check(
                f"starlike_in_marx_r{r}",
                ({"seed": seed, "index": i, "r": r, "w": vals[i]} for i in range(len(vals))),
                lambda c, m=marx: 0.0 if m.contains(c["w"], star_tol) else math.inf,
                star_tol,
            )
        )
        out.append(
            _check(
                f"starlike_in_grunsky_r{r}",
                ({"seed": seed, "index": i, "r": r, "w": vals[i]} for i in range(len(vals))),
                lambda c, d=disk: max(0.0, abs(c["w"] - d.center) - d.radius),
                star_tol,
            )
        )
        half = dc.marx_region(r, "convex")
        out.append(
            _check(
                f"convex_in_marx_r{r}",
                ({"seed": seed, "index": i, "r": r, "w": 0.5 * vals[i]} for i in range(len(vals))),
                lambda c, m=half: 0.0 if m.contains(c["w"], star_tol) else math.inf,
                star_tol,
            )
        )
    ctc_tol = _pick(tol, 1e-6)
    for r in CTC_RADII:
        vals = ctc_values(seed, ctc_trials, r)
        inside = cg.region_contains(vals, tol=ctc_tol)
        out.append(
            _check(
                f"ctc_in_region_r{r}",
                ({"seed": seed, "index": i, "r": r, "w": vals[i], "inside": inside[i]} for i in range(len(vals))),
                lambda c: 0.0 if c["inside"] else math.inf,
                ctc_tol,
            )
        )
        out.append(
            _check(
                f"ctc_strip_r{r}",
                ({"seed": seed, "index": i, "r": r, "w": vals[i]} for i in range(len(vals))),
                lambda c: 0.0 if abs(c["w"].imag) < cg.STRIP_HALF_WIDTH else math.inf,
                0.0,
            )
        )
    all_vals = np.concatenate([ctc_values(seed, ctc_trials, r) for r in CTC_RADII])
    out.append(
        _check(
            "ctc_sharpness",
            ({"b": b} for b in SHARPNESS_B),
            lambda c: max(0.0, cb.phi_ctc_minus(c["b"]) - float(np.min(all_vals.real + c["b"] * all_vals.imag))),
            _pick(tol, 1e-6),
        )
    )
    return out


# power deformation


def _power_grid():
    for a in (0.5, -0.5, 1.0, -1.0, 2.0, -2.0):
        for b in np.linspace(-1.0, 1.0, 41):
            yield {"a": a, "b": float(b)}


def suite_powerdef(seed: int = 0, trials: int = 10000, tol: float | None = None, **_) -> list[CheckResult]:
    out = []
    out.append(
        _check(
            "power_vs_phi_ctc",
            _power_grid(),
            lambda c: abs(pw.power_bound(complex(c["a"], c["b"])).value - c["a"] * cb.phi_ctc_minus(c["b"] / c["a"])),
            _pick(tol, 1e-12),
        )
    )
    b0 = cb.crossover()
    out.append(
        _check(
            "power_branch_continuity",
            ({"a": a, "b": s * b0 * abs(a)} for a in (0.5, -0.5, 1.0, -1.0, 2.0, -2.0) for s in (1, -1)),
            lambda c: abs(pw.inner_branch(c["a"], c["b"]) - pw.outer_branch(c["a"], c["b"])),
            _pick(tol, 1e-9),
        )
    )
    vals = np.concatenate([ctc_values(seed, max(1, trials // 10), r) for r in CTC_RADII])
    floor_tol = _pick(tol, 1e-6)

    def floor(c):
        a, b = c["a"], c["b"]
        bound = pw.power_bound(complex(a, b)).value
        got = a * vals.real - b * vals.imag
        return max(0.0, bound - float(got.min())) if a > 0 else max(0.0, float(got.max()) - bound)

    out.append(_check("power_sharpness_floor", _power_grid(), floor, floor_tol))
    return out


_RUNNERS = {
    "identities": suite_identities,
    "oracle": suite_oracle,
    "containment": suite_containment,
    "powerdef": suite_powerdef,
}


def run_suites(names: Iterable[str], seed: int = 0, trials: int = 10000, tol: float | None = None) -> list[CheckResult]:
    results = []
    for name in names:
        results.extend(_RUNNERS[name](seed=seed, trials=trials, tol=tol))
    return results
