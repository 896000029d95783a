import math
import threading

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from univalent_regions import ctc_bounds as cb
from univalent_regions import disk_classes as dc
from univalent_regions import oracles
from univalent_regions.core import POS_INF, ExtendedReal
from univalent_regions.ctc_geometry import common_tangent, gamma
from univalent_regions.errors import DomainError

LOG4 = math.log(4.0)
EDGE = 1 / (2 * math.sqrt(2))

# 40-digit mpmath maximization of X + bY over gamma
PHI_MINUS_B01 = -1.401371539024248181
PHI_MINUS_B05 = -2.384195536198140109
PHI_MINUS_B1 = -4.273564407267214203
GAP_AT_EDGE = -0.2700457507478755810


def test_p_branch_examples():
    assert cb.p_branch(0.0) == pytest.approx(-LOG4, abs=1e-15)
    b0 = cb.crossover()
    assert cb.p_branch(b0) == pytest.approx(cb.q_branch(b0), abs=1e-12)
    with pytest.raises(DomainError):
        cb.p_branch(EDGE + 1e-6)


def test_p_branch_edge_limit():
    left = cb.p_branch(EDGE * (1 - 1e-12))
    assert cb.p_branch(EDGE) == pytest.approx(left, abs=1e-5)
    assert cb.p_branch(-EDGE) == cb.p_branch(EDGE)


def test_p_branch_matches_inner_arc_oracle():
    tp = common_tangent()
    b = 0.1

    def f(t):
        w = gamma(t)
        return w.real + b * w.imag

    t = np.linspace(0, tp.u, 200001)
    i = np.argmax(f(t))
    assert 0 < i < len(t) - 1
    from univalent_regions._solvers import golden_max

    _, best = golden_max(lambda x: float(f(x)), t[i - 1], t[i + 1])
    assert cb.p_branch(b) == pytest.approx(-best, abs=1e-7)
    assert cb.p_branch(b) == pytest.approx(PHI_MINUS_B01, abs=1e-13)


def test_q_branch_examples():
    assert cb.q_branch(0.0) == pytest.approx(-math.log(2), abs=1e-15)
    assert cb.q_branch(0.0) - cb.p_branch(0.0) == pytest.approx(math.log(2), abs=1e-12)
    assert cb.q_branch(1.0) == pytest.approx(PHI_MINUS_B1, abs=1e-13)
    assert cb.branch_gap(EDGE) == pytest.approx(GAP_AT_EDGE, abs=1e-13)
    assert cb.branch_gap(EDGE) < 0


def test_b0_root():
    b0 = cb.b0_root(1e-10)
    assert abs(b0 - 0.24001) < 5e-6
    assert abs(cb.branch_gap(b0)) < 1e-10
    assert abs(b0 - common_tangent().b0_geo) < 1e-8
    assert cb.crossover() == pytest.approx(b0, abs=1e-12)


def test_crossover_initialises_once_across_threads(monkeypatch):
    monkeypatch.setattr(cb, "_B0", None)
    calls = []
    real = cb.b0_root

    def counting(tol):
        calls.append(tol)
        return real(tol)

    monkeypatch.setattr(cb, "b0_root", counting)
    results = []
    threads = [threading.Thread(target=lambda: results.append(cb.crossover())) for _ in range(16)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert len(calls) == 1
    assert len(set(results)) == 1


def test_gap_strictly_decreasing():
    b = np.linspace(0, EDGE, 1001)
    gap = np.array([cb.branch_gap(x) for x in b])
    assert np.all(np.diff(gap) < 0)


def test_phi_ctc_examples():
    assert cb.phi_ctc(0.0, "minus") == ExtendedReal.finite(-LOG4)
    assert cb.phi_ctc(1.0, "minus").value == pytest.approx(PHI_MINUS_B1, abs=1e-13)
    assert cb.phi_ctc(0.5, "minus").value == pytest.approx(PHI_MINUS_B05, abs=1e-13)
    assert cb.phi_ctc(0.1, "minus") == cb.phi_ctc(-0.1, "minus")
    assert cb.phi_ctc(3.0, "plus") == POS_INF


@given(st.floats(-50, 50))
def test_phi_ctc_even(b):
    assert cb.phi_ctc_minus(-b) == cb.phi_ctc_minus(b)


@given(st.floats(-10, 10))
def test_class_nesting_with_starlike(b):
    assert cb.phi_ctc_minus(b) <= dc.phi_star_full_minus(b) + 1e-15


def test_class_nesting_equality_at_zero():
    assert cb.phi_ctc_minus(0.0) == pytest.approx(dc.phi_star_full_minus(0.0), abs=1e-15)


@pytest.mark.parametrize("b", np.linspace(-2, 2, 21))
def test_phi_ctc_matches_curve_oracle(b):
    t, best = oracles.curve_extremum(b)
    assert cb.phi_ctc_minus(b) == pytest.approx(-best, abs=1e-6)


@pytest.mark.parametrize("b", np.linspace(0.01, 2, 40))
def test_support_point_avoids_concave_arc(b):
    tp = common_tangent()
    t, _ = oracles.curve_extremum(b)
    assert abs(t) <= tp.u + 1e-6 or abs(t) >= tp.v - 1e-6


def test_psi_minus_ctc_examples():
    assert cb.psi_minus_ctc(0.0) == pytest.approx(-LOG4, abs=1e-15)
    with pytest.raises(DomainError):
        cb.psi_minus_ctc(math.pi / 2)


def test_psi_minus_ctc_continuity_at_crossover():
    t0 = math.atan(cb.crossover())
    below = cb.psi_minus_ctc(math.nextafter(t0, 0.0))
    above = cb.psi_minus_ctc(math.nextafter(t0, 1.0))
    assert abs(below - above) < 1e-10


@pytest.mark.parametrize("t", np.linspace(-math.pi / 2 + 0.05, math.pi / 2 - 0.05, 61))
def test_psi_minus_ctc_is_scaled_phi(t):
    assert cb.psi_minus_ctc(t) == pytest.approx(math.cos(t) * cb.phi_ctc_minus(math.tan(t)), abs=1e-12)


@pytest.mark.parametrize("t", np.linspace(-1.4, 1.4, 15))
def test_psi_minus_ctc_is_directional_infimum(t):
    # inf over W(C) of Re[e^{it} w], with W(C) = -Omega bounded by -gamma
    _, best = oracles.curve_extremum(math.tan(t))
    assert cb.psi_minus_ctc(t) == pytest.approx(-math.cos(t) * best, abs=1e-6)
