import json
from fractions import Fraction

import pytest

from detic.channel import ChannelGains, LevelWord
from detic.rate_region import RatePoint, closed_form_region, time_share
from detic.schemes import (
    EnumerationCapError,
    LevelScheme,
    empty_scheme,
    in_capacity_region,
    preset,
    scheme_collision,
    scheme_repetition,
    scheme_rate_point,
    verify_zero_error,
)


def test_repetition_layout():
    s = scheme_repetition(4)
    assert s.user1 == ("b1", "b2", "rep:b2", "b3")
    assert s.user2 == ("b1", "0", "0", "b2")
    assert (s.r1, s.r2) == (3, 2)


def test_encode_bit_order():
    s = scheme_repetition(4)
    # message bits b1=1, b2=0, b3=1 -> levels 1, 0, 0, 1
    assert s.encode(1, 0b101) == LevelWord.from_str("1001")
    assert s.encode(1, 0b010) == LevelWord.from_str("0110")


@pytest.mark.parametrize("name,n", [("private", 3), ("tin", 6), ("common-private", 9), ("repetition", 8)])
def test_presets_verify(name, n):
    s = preset(name, n)
    rep = verify_zero_error(s.gains, s)
    assert rep.zero_error and rep.counterexample is None
    assert in_capacity_region(s)


def test_repetition_is_on_the_boundary():
    s = scheme_repetition(8)
    region = closed_form_region(s.gains)
    bumped = {"r1": Fraction(s.r1) + Fraction(1, 100), "r2": Fraction(s.r2)}
    assert region.contains(scheme_rate_point(s).coords) and not region.contains(bumped)


def test_collision_counterexample():
    s = scheme_collision()
    rep = verify_zero_error(s.gains, s)
    assert not rep.zero_error
    ce = rep.counterexample
    assert ce["receiver"] == 1 and ce["m1"] != ce["m1_alt"]
    json.loads(rep.to_json())


def test_empty_scheme():
    s = empty_scheme()
    rep = verify_zero_error(s.gains, s)
    assert rep.zero_error and rep.messages_checked == 1


def test_cap_enforced():
    s = scheme_repetition(8)
    with pytest.raises(EnumerationCapError):
        verify_zero_error(s.gains, s, cap=100)


def test_gains_mismatch_rejected():
    s = scheme_repetition(4)
    with pytest.raises(ValueError):
        verify_zero_error(ChannelGains(4, 2, 2, 4), s)


@pytest.mark.parametrize(
    "u1,r1",
    [(("b1", "b1"), 2), (("b2", "0"), 1), (("b1", "rep:b2"), 1), (("x", "0"), 0), (("b1",), 1)],
)
def test_malformed_schemes(u1, r1):
    with pytest.raises(ValueError):
        LevelScheme(ChannelGains(2, 0, 0, 2), u1, ("0", "0"), r1, 0)


def test_json_roundtrip():
    s = scheme_repetition(8)
    assert LevelScheme.from_json(s.to_json()) == s


def test_uncoordinated_fill_collides():
    # both users fill every level of a strong-interference channel
    g = ChannelGains(2, 2, 2, 2)
    s = LevelScheme(g, ("b1", "b2"), ("b1", "b2"), 2, 2)
    assert not verify_zero_error(g, s).zero_error


def test_mirror_time_share():
    s = scheme_repetition(8)
    p = time_share([scheme_rate_point(s), scheme_rate_point(s.mirrored())], ["1/2", "1/2"])
    assert p == RatePoint(r1=5, r2=5)
