"""Acceptance criteria, one test (or a few lettered parts) per criterion.

A summary with one PASS/FAIL line per criterion is printed at the end of the
pytest run (see conftest.py).
"""

import itertools
import math
import random
import time
from fractions import Fraction

import pytest

from detic.channel import ChannelGains
from detic.gaussian import (
    COMPLEX,
    DET_TO_GAUSS,
    GAUSS_TO_DET,
    REAL,
    GaussianParams,
    gap_ledger,
    gaussian_region_bounds,
    mac_one_bit_approx_check,
    map_to_deterministic,
    theorem_gap,
)
from detic.info import (
    check_side_information,
    evaluate_region_entropies,
    quantized_sum_entropy_check,
    random_side_info_joint,
    uniform_sum_entropy_check,
)
from detic.polytope import vertices
from detic.rate_region import (
    RatePoint,
    closed_form_region,
    compound_mac_bounds,
    compound_mac_region,
    project_compound,
    region_equal,
    sum_capacity,
    time_share,
    wcurve,
)
from detic.schemes import (
    in_capacity_region,
    scheme_common_private,
    scheme_private_only,
    scheme_repetition,
    scheme_rate_point,
    scheme_tin,
    verify_zero_error,
)

TOL = 1e-9


def test_criterion_1_region_equivalence():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for t in itertools.product(range(7), repeat=4):
        g = ChannelGains(*t)
        count += 1
        if not region_equal(project_compound(compound_mac_region(g)), closed_form_region(g)):
            bad.append(t)
    elapsed = time.perf_counter() - t0
    assert count == 2401
    assert bad == []
    assert elapsed < 60, f"sweep took {elapsed:.1f} s"


def test_criterion_2_entropy_oracle():
    t0 = time.perf_counter()
    bad = []
    for t in itertools.product(range(5), repeat=4):
        g = ChannelGains(*t)
        got = evaluate_region_entropies(g)
        for k, v in compound_mac_bounds(g).items():
            if abs(got[k] - v) > TOL:
                bad.append((t, k, got[k], v))
    assert bad == []
    assert time.perf_counter() - t0 < 30


def test_criterion_3_wcurve():
    F = Fraction
    for a, v in [(0, 1), (F(1, 2), F(1, 2)), (F(2, 3), F(2, 3)), (1, F(1, 2)), (2, 1), (3, 1), (10, 1)]:
        assert wcurve(a) == v
    assert wcurve(F(1, 3)) == F(2, 3)
    assert wcurve(F(3, 4)) == F(5, 8)
    for n in range(1, 13):
        for m in range(0, 3 * n + 1):
            assert sum_capacity(ChannelGains.symmetric(n, m)) / (2 * n) == wcurve(F(m, n)), (n, m)


@pytest.mark.parametrize("build,base", [(scheme_private_only, 3), (scheme_tin, 3), (scheme_common_private, 3), (scheme_repetition, 4)])
def test_criterion_4_schemes(build, base):
    for n in (base, 2 * base):
        s = build(n)
        rep = verify_zero_error(s.gains, s)
        assert rep.zero_error, rep.counterexample
        assert rep.messages_checked == 2 ** (s.r1 + s.r2)
        assert in_capacity_region(s)
        m = s.mirrored()
        assert verify_zero_error(m.gains, m).zero_error
        assert in_capacity_region(m)
    if build is scheme_repetition:
        s = build(4)
        assert scheme_rate_point(s) == RatePoint(r1=3, r2=2)
        for n in (4, 8):
            s = build(n)
            ts = time_share([scheme_rate_point(s), scheme_rate_point(s.mirrored())], [Fraction(1, 2)] * 2)
            assert ts == RatePoint(r1=Fraction(5 * n, 8), r2=Fraction(5 * n, 8))


def test_criterion_5a_uniform_sum_entropy():
    failures = []
    r = range(1, 7)
    for a, ma, b, mb in itertools.product(r, r, r, r):
        res = uniform_sum_entropy_check(a, ma, b, mb)
        if not res.ok:
            failures.append((a, ma, b, mb))
    assert failures == [], f"{len(failures)} of 1296 tuples violate H >= log2(a*M_A + b*M_B) - 1, e.g. {failures[:3]}"


def test_criterion_5b_quantized_sum_entropy():
    failures = []
    r = range(1, 6)
    for a, ma, b, mb, d in itertools.product(r, r, r, r, (1, 2, 4)):
        res = quantized_sum_entropy_check(a, ma, b, mb, d)
        if not res.ok:
            failures.append((a, ma, b, mb, d))
    assert failures == [], f"{len(failures)} of 1875 tuples violate the margin-2 bound, e.g. {failures[:3]}"


def test_criterion_5c_side_information():
    rng = random.Random(20261015)
    for _ in range(500):
        j, f = random_side_info_joint(rng)
        res = check_side_information(j, f)
        assert res.slack >= -TOL


def test_criterion_6_gap_ledgers():
    d2g_real = gap_ledger(DET_TO_GAUSS, REAL)
    g2d_real = gap_ledger(GAUSS_TO_DET, REAL)
    g2d_cplx = gap_ledger(GAUSS_TO_DET, COMPLEX)
    d2g_cplx = gap_ledger(DET_TO_GAUSS, COMPLEX)
    assert d2g_real.stated_total == 5
    assert g2d_real.stated_total == Fraction("13.6")
    assert theorem_gap(REAL) == Fraction("18.6") == d2g_real.stated_total + g2d_real.stated_total
    assert theorem_gap(COMPLEX) == 42 == g2d_cplx.stated_total == d2g_cplx.stated_total
    assert math.isclose(d2g_real.itemized_sum, 2 * math.log2(3) + 1.5, abs_tol=TOL)
    assert math.isclose(g2d_real.itemized_sum, 12.6, abs_tol=TOL)
    assert math.isclose(g2d_cplx.itemized_sum, 29.1, abs_tol=TOL)
    assert g2d_real.discrepancy and g2d_cplx.discrepancy and d2g_real.discrepancy
    for led in (d2g_real, g2d_real, g2d_cplx, d2g_cplx):
        assert led.itemized_sum <= float(led.stated_total) + TOL

    rng = random.Random(7)
    for _ in range(100):
        mode = rng.choice((REAL, COMPLEX))
        p = GaussianParams(*(2 ** rng.uniform(-2, 40) for _ in range(4)), field_mode=mode)
        inner, outer = gaussian_region_bounds(p)
        det = closed_form_region(map_to_deterministic(p))
        for v in vertices(inner):
            assert det.contains(dict(zip(("r1", "r2"), v)))
            assert outer.contains(dict(zip(("r1", "r2"), v)))
        for v in vertices(det):
            assert outer.contains(dict(zip(("r1", "r2"), v)))


def test_criterion_7_mac_approximation():
    grid = [2 ** (30 * k / 29) for k in range(30)]
    worst = 0.0
    for s1 in grid:
        for s2 in grid:
            if s2 > s1:
                continue
            res = mac_one_bit_approx_check(s1, s2)
            assert res.ok, (s1, s2, res.gaps)
            assert all(-TOL <= g <= 1 + TOL for g in res.gaps.values())
            worst = max(worst, res.max_gap)
    assert worst <= 1 + TOL
