import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from detic.channel import ChannelGains
from detic.gaussian import (
    COMPLEX,
    DET_TO_GAUSS,
    GAUSS_TO_DET,
    REAL,
    GaussianParams,
    floor_log2,
    gap_ledger,
    gaussian_region_bounds,
    gdof_region_mac,
    mac_one_bit_approx_check,
    map_to_deterministic,
)
from detic.polytope import vertices
from detic.rate_region import mac_region, region_equal


def test_mapping_examples():
    assert map_to_deterministic(GaussianParams(1, 1, 1, 1)) == ChannelGains(0, 0, 0, 0)
    assert map_to_deterministic(GaussianParams(2**20, 2**20, 2**15, 2**15)) == ChannelGains(20, 15, 15, 20)
    assert map_to_deterministic(GaussianParams(2**8, 2**8, 1, 1, REAL)).n11 == 4


def test_mapping_orientation():
    g = map_to_deterministic(GaussianParams(2**10, 2**9, 2**3, 2**5))
    assert g == ChannelGains(n11=10, n12=5, n21=3, n22=9)


@pytest.mark.parametrize("bad", [0, -1, float("nan"), float("inf")])
def test_params_must_be_positive(bad):
    with pytest.raises(ValueError):
        GaussianParams(bad, 1, 1, 1)


def test_floor_log2_exact_near_powers():
    assert floor_log2(2**40) == 40
    assert floor_log2(2**40 - 1) == 39
    assert floor_log2(Fraction(2**10 - 1, 1)) == 9
    assert floor_log2(0.3) == 0
    assert floor_log2(math.nextafter(8.0, 0)) == 2


@given(st.floats(0.01, 1e15), st.floats(1.0, 100.0))
def test_mapping_is_monotone(v, factor):
    for mode in (REAL, COMPLEX):
        a = map_to_deterministic(GaussianParams(v, 1, 1, 1, mode)).n11
        b = map_to_deterministic(GaussianParams(v * factor, 1, 1, 1, mode)).n11
        assert b >= a


def test_ledger_real_gauss_to_det():
    led = gap_ledger(GAUSS_TO_DET, REAL)
    assert [s.loss_bits for s in led.steps] == [4, 2.6, 2, 2, 2, 0]
    assert math.isclose(led.itemized_sum, 12.6) and led.discrepancy


def test_ledger_complex_det_to_gauss_has_no_itemization():
    led = gap_ledger(DET_TO_GAUSS, COMPLEX)
    assert led.steps == () and led.stated_total == 42


def test_ledger_text_table():
    txt = gap_ledger(DET_TO_GAUSS, REAL).to_text()
    assert "discrepancy: yes" in txt and "additive Gaussian noise" in txt


def test_unknown_ledger():
    with pytest.raises(ValueError):
        gap_ledger("sideways", REAL)


def test_bounds_tiny_parameters():
    inner, outer = gaussian_region_bounds(GaussianParams(0.5, 0.5, 0.5, 0.5))
    assert vertices(inner) == frozenset({(0, 0)})
    assert vertices(outer) == frozenset({(0, 0), (42, 0), (42, 42), (0, 42)})


def test_bounds_outer_individual_row():
    _, outer = gaussian_region_bounds(GaussianParams(2**20, 2**20, 2**15, 2**15))
    assert outer.contains({"r1": 62, "r2": 0}) and not outer.contains({"r1": 63, "r2": 0})


def test_bounds_real_gap():
    _, outer = gaussian_region_bounds(GaussianParams(1, 1, 1, 1, REAL))
    assert max(v[0] for v in vertices(outer)) == Fraction("18.6")


def test_gdof_regions():
    assert region_equal(gdof_region_mac(1), gdof_region_mac(1, classical=True))
    assert vertices(gdof_region_mac(Fraction(1, 2))) == frozenset(
        {(0, 0), (1, 0), (Fraction(1, 2), Fraction(1, 2)), (0, Fraction(1, 2))}
    )
    with pytest.raises(ValueError):
        gdof_region_mac(Fraction(3, 2))


def test_deterministic_mac_normalizes_to_gdof():
    n, a = 60, Fraction(1, 2)
    det = mac_region(n, int(a * n)).scaled(Fraction(1, n)).renamed({"r1": "d1", "r2": "d2"})
    assert region_equal(det, gdof_region_mac(a))


def test_mac_check_boundary_and_interior():
    r = mac_one_bit_approx_check(1, 1)
    assert r.ok and r.gaps["r1"] == 1 and r.gaps["r2"] == 1
    r = mac_one_bit_approx_check(2**20, 2**10)
    assert r.ok and r.max_gap < 1


def test_mac_check_raw_sum_gap_can_exceed_one_bit():
    # log2(1 + s1 + s2) - log2(s1) tends to 1 from above as s1 = s2 grows
    r = mac_one_bit_approx_check(4, 4)
    raw = math.log2(1 + 8) - math.log2(4)
    assert raw > 1 and r.gaps["r1+r2"] == raw / 2


def test_mac_check_rejects_bad_order():
    with pytest.raises(ValueError):
        mac_one_bit_approx_check(2, 4)
