import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from univalent_regions.core import (
    NEG_INF,
    POS_INF,
    BoundaryCurve,
    ExtendedReal,
    check_radius,
    extended_compare,
    psi_from_phi,
)
from univalent_regions.errors import DirectionDegenerateError, DomainError

finite = st.floats(-1e6, 1e6, allow_nan=False)
ext = st.one_of(st.just(POS_INF), st.just(NEG_INF), finite.map(ExtendedReal.finite))


def test_compare_examples():
    assert extended_compare(NEG_INF, ExtendedReal.finite(0.0)) == -1
    assert extended_compare(POS_INF, POS_INF) == 0
    assert extended_compare(ExtendedReal.finite(1.0), ExtendedReal.finite(1.0)) == 0


@given(ext, ext, ext)
def test_compare_is_total_order(a, b, c):
    assert extended_compare(a, b) == -extended_compare(b, a)
    if extended_compare(a, b) <= 0 and extended_compare(b, c) <= 0:
        assert extended_compare(a, c) <= 0
    assert (a < b) == (float(a) < float(b))


def test_infinities_do_not_coerce():
    with pytest.raises(ValueError):
        ExtendedReal.finite(math.inf)
    with pytest.raises(ValueError):
        ExtendedReal.coerce(-math.inf)
    with pytest.raises(DomainError):
        POS_INF.scale(0.0)
    with pytest.raises(DomainError):
        POS_INF + NEG_INF
    assert POS_INF + 3.0 == POS_INF
    assert POS_INF.scale(-2.0) == NEG_INF


@given(ext)
def test_render_parse_roundtrip(x):
    assert ExtendedReal.parse(str(x)) == x


def test_psi_from_phi_examples():
    assert psi_from_phi(0.0, 1.25, 7.0) == ExtendedReal.finite(1.25)
    assert float(psi_from_phi(math.pi, POS_INF, -math.log(4.0))) == pytest.approx(math.log(4.0), abs=1e-15)
    assert psi_from_phi(math.pi / 3, POS_INF, 0.0) == POS_INF
    assert psi_from_phi(math.pi, POS_INF, NEG_INF) == POS_INF


def test_psi_from_phi_rejects_vertical_direction():
    with pytest.raises(DirectionDegenerateError):
        psi_from_phi(math.pi / 2, 0.0, 0.0)


@given(st.floats(-1.5, 1.5), finite, st.floats(1e-3, 1e3))
def test_psi_strictly_increasing_in_phi_plus(t, x, dx):
    assert psi_from_phi(t, x + dx, 0.0) > psi_from_phi(t, x, 0.0)


@pytest.mark.parametrize("r", [-0.1, 1.0, 2.0, math.nan])
def test_check_radius_rejects(r):
    with pytest.raises(DomainError):
        check_radius(r)


def test_boundary_curve_requires_increasing_parameters():
    with pytest.raises(ValueError):
        BoundaryCurve([0.0, 0.0], [0j, 1j])
    c = BoundaryCurve([0.0, 1.0], [0j, 1j], closed=True)
    assert len(c.vertices()) == 3
    assert c.negated().w[1] == -1j
