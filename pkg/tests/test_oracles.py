import math

import numpy as np
import pytest

from univalent_regions import ctc_geometry as cg
from univalent_regions import disk_classes as dc
from univalent_regions import oracles
from univalent_regions.errors import DomainError, QuadratureFailure
from univalent_regions.oracles import AtomicMeasure, CtcSample


def test_grid_extremum_b_zero():
    t, v = oracles.grid_extremum(0.4, 0.0, "max")
    # the peak is quadratic, so the argmax is only located to about sqrt(eps)
    assert min(t, 2 * math.pi - t) < 1e-6
    assert v == pytest.approx(-2 * math.log(0.6), abs=1e-14)
    t, v = oracles.grid_extremum(0.4, 0.0, "min")
    assert t == pytest.approx(math.pi, abs=1e-6)
    assert v == pytest.approx(-2 * math.log(1.4), abs=1e-14)


def test_grid_extremum_matches_closed_form():
    _, v = oracles.grid_extremum(0.5, 1.0, "max")
    assert v == pytest.approx(dc.phi_star(0.5, 1.0, "plus"), abs=1e-9)


def test_grid_extremum_validates():
    with pytest.raises(DomainError):
        oracles.grid_extremum(0.5, 1.0, "max", n=100)
    with pytest.raises(DomainError):
        oracles.grid_extremum(0.5, 1.0, "sup")


def test_curve_extremum_examples():
    t, v = oracles.curve_extremum(0.0)
    assert abs(t) < 1e-6
    assert v == pytest.approx(math.log(4), abs=1e-12)
    t, _ = oracles.curve_extremum(1.0)
    assert t == pytest.approx(1.5 * math.pi, abs=1e-6)
    t, _ = oracles.curve_extremum(0.1)
    assert 0 < t <= cg.common_tangent().u


def test_random_measure():
    m1, m2 = oracles.random_measure(11, 7), oracles.random_measure(11, 7)
    assert np.array_equal(m1.angles, m2.angles) and np.array_equal(m1.weights, m2.weights)
    for seed in range(200):
        m = oracles.random_measure(seed, 9)
        assert 1 <= len(m) <= 9
        assert abs(m.weights.sum() - 1) <= 1e-14
        assert np.all((m.angles >= 0) & (m.angles < 2 * math.pi))
    single = oracles.random_measure(5, 1)
    assert len(single) == 1 and single.weights[0] == 1.0


def test_atomic_measure_validation():
    with pytest.raises(ValueError):
        AtomicMeasure([], [])
    with pytest.raises(ValueError):
        AtomicMeasure([0.0, 1.0], [0.5, 0.6])
    with pytest.raises(ValueError):
        AtomicMeasure([0.0, 1.0], [1.5, -0.5])


def test_sample_starlike_examples():
    r = 0.7
    assert oracles.sample_starlike(AtomicMeasure.point(0.0), r) == pytest.approx(-2 * math.log(1 - r), abs=1e-14)
    uniform = AtomicMeasure(2 * math.pi * np.arange(8) / 8, np.full(8, 1 / 8))
    assert abs(oracles.sample_starlike(uniform, 1e-6)) < 1e-10
    for seed in range(500):
        w = oracles.sample_starlike(oracles.random_measure(seed, 6), r)
        assert dc.marx_contains(w, r, "star")


def test_sample_convex_examples():
    r = 0.7
    assert oracles.sample_convex(AtomicMeasure.point(0.0), r) == pytest.approx(-math.log(1 - r), abs=1e-14)
    assert abs(oracles.sample_convex(AtomicMeasure.point(1.0), 1e-8)) < 1e-7
    for seed in range(500):
        assert dc.marx_contains(oracles.sample_convex(oracles.random_measure(seed, 6), r), r, "convex")


def test_sample_ctc_koebe():
    # g' = (1-z)^-2, p = (1+z)/(1-z) gives f' = (1+z)/(1-z)^3, i.e. the Koebe function
    s = CtcSample(AtomicMeasure.point(0.0), AtomicMeasure.point(0.0))
    for r in (0.1, 0.5, 0.9):
        w = oracles.sample_ctc(s, r)
        assert w == pytest.approx(-2 * math.log(1 - r), abs=1e-12)
        assert cg.region_contains(w)


def test_sample_ctc_without_herglotz_factor_is_convex():
    m = oracles.random_measure(3, 4)
    s = CtcSample(m, None)
    for r in (0.3, 0.8):
        w = oracles.sample_ctc(s, r)
        assert dc.marx_contains(w, r, "convex", tol=1e-9)


def test_sample_ctc_matches_closed_form_for_rotated_koebe():
    theta = 2.0
    s = CtcSample(AtomicMeasure.point(theta), AtomicMeasure.point(theta))
    r = 0.8
    expected = -2 * np.log(1 - r * np.exp(-1j * theta))
    assert oracles.sample_ctc(s, r) == pytest.approx(expected, abs=1e-12)


def test_sample_ctc_small_radius():
    for i in range(20):
        assert abs(oracles.sample_ctc(oracles.random_ctc_sample(0, i), 0.01)) < 0.1


def test_sample_ctc_deterministic():
    s = oracles.random_ctc_sample(4, 17)
    assert oracles.sample_ctc(s, 0.9) == oracles.sample_ctc(oracles.random_ctc_sample(4, 17), 0.9)


def test_sample_ctc_quadrature_failure():
    s = oracles.random_ctc_sample(0, 0)
    with pytest.raises(QuadratureFailure):
        oracles.sample_ctc(s, 0.99, max_doublings=0)
    with pytest.raises(DomainError):
        oracles.sample_ctc(s, 0.5, quad_order=8)


def test_trial_rng_independent_of_split():
    seq = [oracles.random_ctc_sample(9, i).convex_measure.angles[0] for i in range(10)]
    back = [oracles.random_ctc_sample(9, i).convex_measure.angles[0] for i in reversed(range(10))]
    assert seq == back[::-1]
