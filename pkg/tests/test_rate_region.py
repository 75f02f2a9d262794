import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from detic.channel import ChannelGains
from detic.info import evaluate_region_entropies
from detic.polytope import vertices
from detic.rate_region import (
    RatePoint,
    closed_form_region,
    compound_mac_bounds,
    compound_mac_region,
    mac_region,
    project_compound,
    region_equal,
    region_vertices,
    sum_capacity,
    time_share,
    tin_line,
    wcurve,
)

F = Fraction
gains = st.tuples(*[st.integers(0, 8)] * 4).map(lambda t: ChannelGains(*t))


def test_mac_region_vertices():
    assert vertices(mac_region(3, 1)) == frozenset({(0, 0), (3, 0), (2, 1), (0, 1)})


def test_no_interference_is_a_rectangle():
    p = region_vertices(closed_form_region(ChannelGains(2, 0, 0, 2)))
    assert set(p.vertices) == {(0, 0), (2, 0), (2, 2), (0, 2)}


def test_symmetric_three_quarters_sum_capacity():
    assert sum_capacity(ChannelGains(4, 3, 3, 4)) == 5


@pytest.mark.parametrize("t", [(2, 0, 0, 2), (4, 3, 3, 4), (3, 5, 1, 2), (6, 0, 6, 0), (1, 6, 6, 1)])
def test_projection_matches_closed_form(t):
    g = ChannelGains(*t)
    assert region_equal(project_compound(compound_mac_region(g)), closed_form_region(g))


def test_uncorrected_rows_lose_the_no_interference_region():
    g = ChannelGains(2, 0, 0, 2)
    literal = project_compound(compound_mac_region(g, literal=True))
    assert vertices(literal) == frozenset({(0, 0)})
    assert not region_equal(literal, closed_form_region(g))


def test_uncorrected_rows_disagree_with_enumeration():
    # the private+cross row is H(y1 | x1c); enumeration sides with the corrected form
    g = ChannelGains(3, 0, 1, 1)
    got = evaluate_region_entropies(g)["rx1_private_cross"]
    assert got == compound_mac_bounds(g)["rx1_private_cross"] == 2
    assert compound_mac_bounds(g, literal=True)["rx1_private_cross"] == 0


@settings(max_examples=60, deadline=None)
@given(gains)
def test_projection_equals_closed_form_beyond_six(g):
    assert region_equal(project_compound(compound_mac_region(g)), closed_form_region(g))


@given(gains)
def test_mirror_symmetry(g):
    a = {(y, x) for x, y in vertices(closed_form_region(g))}
    assert a == set(vertices(closed_form_region(g.mirrored())))


@given(gains)
def test_region_inside_individual_box(g):
    for r1, r2 in vertices(closed_form_region(g)):
        assert 0 <= r1 <= g.n11 and 0 <= r2 <= g.n22


@pytest.mark.parametrize(
    "alpha,value",
    [(0, 1), ("1/3", "2/3"), ("1/2", "1/2"), ("2/3", "2/3"), ("3/4", "5/8"), (1, "1/2"), ("3/2", "3/4"), (2, 1), (5, 1)],
)
def test_wcurve_values(alpha, value):
    assert wcurve(F(alpha)) == F(value)


def test_wcurve_rejects_negative_and_tin_domain():
    with pytest.raises(ValueError):
        wcurve(-1)
    with pytest.raises(ValueError):
        tin_line(F(3, 2))
    assert tin_line(F(1, 4)) == F(3, 4)


def test_tin_optimal_up_to_half():
    for k in range(0, 7):
        a = F(k, 12)
        assert wcurve(a) == tin_line(a)
    assert wcurve(F(2, 3)) > tin_line(F(2, 3))


def test_time_share():
    p = time_share([RatePoint(r1=3, r2=2), RatePoint(r1=2, r2=3)], ["1/2", "1/2"])
    assert p == RatePoint(r1=F(5, 2), r2=F(5, 2))
    with pytest.raises(ValueError):
        time_share([RatePoint(r1=1)], ["1/2"])
    with pytest.raises(ValueError):
        RatePoint(r1=-1)


def test_time_sharing_stays_in_region():
    g = ChannelGains(8, 6, 6, 8)
    sys_ = closed_form_region(g)
    vs = sorted(vertices(sys_))
    for a, b in itertools.combinations(vs, 2):
        p = time_share([RatePoint(r1=a[0], r2=a[1]), RatePoint(r1=b[0], r2=b[1])], [F(1, 3), F(2, 3)])
        assert sys_.contains(p.coords)
