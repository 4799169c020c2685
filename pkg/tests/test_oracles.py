import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boothlem import (
    Convex,
    DomainError,
    Fournier,
    Janowski,
    MClass,
    SingleCrossingError,
    Starlike,
    StarlikeOrder,
    admissible_interval,
    bs_radius,
    critical_points,
    inscribed_radius,
    circumscribed_radius,
    oracle_bs_radius,
    oracle_circumscribed,
    oracle_inscribed,
    sharpness_witness,
    subordination_check,
)
from boothlem import kernels
from boothlem.discs import inscribed_branch
from boothlem.oracles import (
    LEMMA_TOL,
    RADIUS_TOL,
    certify_bs_radius,
    certify_inscribed,
    containment_margin,
    golden_section,
    touch_cosine,
)
from independent import sampled_radius

STAR_RADIUS = 0.3142696805273545


def test_tolerance_hierarchy():
    from boothlem.oracles import GEOMETRY_TOL

    assert GEOMETRY_TOL < LEMMA_TOL < RADIUS_TOL


def test_golden_section_quadratic():
    x, fx = golden_section(lambda x: (x - 0.3) ** 2 + 1, 0.0, 1.0)
    assert x == pytest.approx(0.3, abs=1e-6) and fx == pytest.approx(1.0, abs=1e-12)


def test_oracle_inscribed_examples():
    assert oracle_inscribed(0.5, 1.2) == pytest.approx(0.692378, abs=1e-6)
    assert oracle_inscribed(0.5, 1.0) == pytest.approx(2 / 3, abs=1e-10)
    assert oracle_circumscribed(0.5, 1.2) == pytest.approx(2.2, abs=1e-10)
    with pytest.raises(DomainError):
        oracle_inscribed(0.5, 1.2, n=2)


def _lemma_grid(n=30):
    for alpha in np.linspace(0.0, 0.95, n):
        lo, hi = admissible_interval(alpha)
        for a in np.linspace(lo, hi, n + 2)[1:-1]:
            yield float(alpha), float(a)


def test_lemma_grid_against_oracle():
    branches = set()
    for alpha, a in _lemma_grid():
        branches.add(inscribed_branch(alpha, a))
        assert abs(oracle_inscribed(alpha, a) - inscribed_radius(alpha, a)) <= LEMMA_TOL
        assert abs(oracle_circumscribed(alpha, a) - circumscribed_radius(alpha, a)) <= LEMMA_TOL
    assert branches == {"left", "middle", "right"}


@pytest.mark.parametrize("alpha, a", [(0.5, 1.2), (0.3, 0.95), (0.8, 1.03), (0.6, 0.9)])
def test_minimizer_is_x2(alpha, a):
    assert inscribed_branch(alpha, a) == "middle"
    rep = certify_inscribed(alpha, a)
    assert rep.verdict == "pass"
    assert rep.touch_parameter == pytest.approx(critical_points(alpha, a)[1], abs=1e-6)


@pytest.mark.parametrize(
    "cls, alpha, expected",
    [
        (Starlike(), 0.5, STAR_RADIUS),
        (StarlikeOrder(0.9), 0.5, 1 / 1.1),
        (Fournier(1 / 3), 0.5, 1.0),
    ],
)
def test_oracle_bs_radius_examples(cls, alpha, expected):
    assert oracle_bs_radius(cls, alpha) == pytest.approx(expected, abs=5e-8)


@pytest.mark.parametrize(
    "cls, alpha",
    [(Convex(), 0.3), (MClass(1.25), 0.4), (Janowski(0.25, -0.75), 0.7), (Janowski(1.0, 0.5), 0.2)],
)
def test_oracle_bs_radius_against_independent(cls, alpha):
    assert oracle_bs_radius(cls, alpha) == pytest.approx(sampled_radius(alpha, *cls.mobius), abs=1e-8)


def test_single_crossing_error(monkeypatch):
    import boothlem.oracles as oracles

    monkeypatch.setattr(oracles.kernels, "lemma_margins", lambda alpha, A, B, rs: np.cos(20 * rs))
    with pytest.raises(SingleCrossingError, match="sign"):
        oracle_bs_radius(Starlike(), 0.5)
    monkeypatch.setattr(oracles.kernels, "lemma_margins", lambda alpha, A, B, rs: -np.ones_like(rs))
    with pytest.raises(SingleCrossingError, match="near r = 0"):
        oracle_bs_radius(Starlike(), 0.5)


@given(st.floats(0.0, 0.95), st.floats(0.0, 1.0))
@settings(max_examples=40, deadline=None)
def test_containment_margin_matches_kernel(alpha, r):
    r = min(max(r, 1e-6), 1 - 1e-6)
    for cls in (Starlike(), MClass(1.2), Janowski(0.5, 0.25)):
        A, B = cls.mobius
        k = kernels.lemma_margins(alpha, A, B, np.array([r]))[0]
        assert k == pytest.approx(containment_margin(alpha, cls, r), abs=1e-12)


def test_certify_bs_radius_report():
    rep = certify_bs_radius(Starlike(), 0.5)
    assert rep.verdict == "pass" and rep.tolerance == RADIUS_TOL
    assert rep.touch_parameter == pytest.approx(1.20943, abs=1e-5)
    assert certify_bs_radius(Fournier(1 / 3), 0.5).touch_parameter is None


def test_witness_starlike():
    w = sharpness_witness(Starlike(), 0.5)
    assert w.x0 == pytest.approx(1.5 / (2 * math.sqrt(4.5)), abs=1e-12)
    assert w.t_star == pytest.approx(1.20943, abs=1e-5)
    assert abs(w.margin) <= 1e-7 and w.witnessed


def test_witness_axis_branch():
    w = sharpness_witness(StarlikeOrder(0.9), 0.5)
    assert w.t_star == 0.0 and w.x0 == 1.0
    assert abs(w.margin) <= 1e-12 and w.witnessed


def test_witness_below_radius_not_witnessed():
    w = sharpness_witness(Starlike(), 0.5, r=0.31)
    assert w.sweep_margin < 0 and not w.witnessed


@pytest.mark.parametrize("alpha", [0.2, 0.5, 0.9])
@pytest.mark.parametrize("beta", [0.0, 0.3, 0.6])
def test_witness_x0_inside_unit_interval_on_root_branch(alpha, beta):
    if bs_radius(StarlikeOrder(beta), alpha).branch == "rho0":
        assert 0 < touch_cosine(alpha, beta) < 1
        assert sharpness_witness(StarlikeOrder(beta), alpha).witnessed


@pytest.mark.parametrize("cls, alpha", [(MClass(1.2), 0.6), (Janowski(0.5, -0.5), 0.5), (Janowski(1.0, 0.5), 0.9)])
def test_witness_other_classes(cls, alpha):
    assert sharpness_witness(cls, alpha).witnessed


def test_witness_errors():
    with pytest.raises(DomainError):
        sharpness_witness(Fournier(1 / 3), 0.5)
    with pytest.raises(DomainError):
        sharpness_witness(Starlike(), 0.5, r=1.0)
    with pytest.raises(DomainError):
        sharpness_witness(Starlike(), 0.5, sweep=16)


def test_subordination_examples():
    assert subordination_check(Starlike(), 0.5, 0.99 * STAR_RADIUS, 4096)
    inside = subordination_check(Starlike(), 0.5, 0.99 * STAR_RADIUS, 4096)
    assert inside.worst_margin < 0
    assert not subordination_check(Starlike(), 0.5, 1.01 * STAR_RADIUS, 4096)
    for cls in (Starlike(), Convex(), MClass(1.3), Janowski(1.0, -0.75), Fournier(0.1)):
        assert subordination_check(cls, 0.7, 1e-9, 64)


@pytest.mark.parametrize("r, n", [(0.0, 64), (1.0, 64), (0.5, 63)])
def test_subordination_errors(r, n):
    with pytest.raises(DomainError):
        subordination_check(Starlike(), 0.5, r, n)
