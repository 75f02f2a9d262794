"""Capacity regions of the deterministic MAC and interference channel, exactly."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .channel import ChannelGains
from .polytope import (
    HalfspaceSystem,
    Polygon2D,
    as_fraction,
    fourier_motzkin,
    polygon,
    systems_equal,
)

SPLIT_VARIABLES = ("r1c", "r1p", "r2c", "r2p")
RATE_VARIABLES = ("r1", "r2")
SPLIT_SUBSTITUTIONS = {"r1": {"r1c": 1, "r1p": 1}, "r2": {"r2c": 1, "r2p": 1}}


def _pos(v: int) -> int:
    return v if v > 0 else 0


class RatePoint:
    """Exact nonnegative rates keyed by variable name."""

    __slots__ = ("coords",)

    def __init__(self, coords: Mapping[str, object] | None = None, **kw):
        merged = dict(coords or {}, **kw)
        self.coords = {k: as_fraction(v) for k, v in merged.items()}
        bad = {k: v for k, v in self.coords.items() if v < 0}
        if bad:
            raise ValueError(f"negative rates: {bad}")

    def __getitem__(self, k: str) -> Fraction:
        return self.coords[k]

    def __eq__(self, other):
        return isinstance(other, RatePoint) and self.coords == other.coords

    def __repr__(self):
        inner = ", ".join(f"{k}={v}" for k, v in self.coords.items())
        return f"RatePoint({inner})"

    def to_dict(self) -> dict:
        return {k: str(v) for k, v in self.coords.items()}


def mac_region(n1: int, n2: int) -> HalfspaceSystem:
    return HalfspaceSystem.from_dicts(
        RATE_VARIABLES,
        [({"r1": 1}, n1), ({"r2": 1}, n2), ({"r1": 1, "r2": 1}, max(n1, n2))],
    )


def compound_mac_bounds(g: ChannelGains, literal: bool = False) -> dict[str, int]:
    """Right-hand sides of the ten split-rate constraints, keyed by constraint name.

    Each bound is the entropy of a uniform-input channel quantity, named in
    the comment beside it.  With ``literal=True`` the two private+cross rows
    use ``min(n_jj + p_i, n_ij)``; that form drops the case where the private
    part alone is wider than the cross gain, and is kept only for comparison.
    """
    n11, n12, n21, n22 = g.as_tuple()
    p1, p2 = _pos(n11 - n21), _pos(n22 - n12)
    if literal:
        pc1 = min(n22 + p1, n12)
        pc2 = min(n11 + p2, n21)
    else:
        pc1 = max(p1, min(n22 + p1, n12))
        pc2 = max(p2, min(n11 + p2, n21))
    return {
        "rx1_all": n11 + min(n22, _pos(n12 - n11)),  # H(y1)
        "rx1_own": n11,  # H(x1)
        "rx1_cross": min(n12, n22),  # H(x2c)
        "rx1_private_cross": pc1,  # H(y1 | x1c)
        "rx1_private": p1,  # H(x1p)
        "rx2_all": n22 + min(n11, _pos(n21 - n22)),  # H(y2)
        "rx2_own": n22,  # H(x2)
        "rx2_cross": min(n21, n11),  # H(x1c)
        "rx2_private_cross": pc2,  # H(y2 | x2c)
        "rx2_private": p2,  # H(x2p)
    }


COMPOUND_ROWS = {
    "rx1_all": {"r1c": 1, "r1p": 1, "r2c": 1},
    "rx1_own": {"r1c": 1, "r1p": 1},
    "rx1_cross": {"r2c": 1},
    "rx1_private_cross": {"r1p": 1, "r2c": 1},
    "rx1_private": {"r1p": 1},
    "rx2_all": {"r2c": 1, "r2p": 1, "r1c": 1},
    "rx2_own": {"r2c": 1, "r2p": 1},
    "rx2_cross": {"r1c": 1},
    "rx2_private_cross": {"r2p": 1, "r1c": 1},
    "rx2_private": {"r2p": 1},
}


def compound_mac_region(g: ChannelGains, literal: bool = False) -> HalfspaceSystem:
    """Split-rate region over (r1c, r1p, r2c, r2p) with uniform inputs.

    An empty private part (cross gain at least the direct gain) shows up as
    a zero bound on that private rate.
    """
    bounds = compound_mac_bounds(g, literal=literal)
    return HalfspaceSystem.from_dicts(SPLIT_VARIABLES, [(COMPOUND_ROWS[k], bounds[k]) for k in COMPOUND_ROWS])


def project_compound(sys: HalfspaceSystem) -> HalfspaceSystem:
    """Eliminate the common/private split, leaving a region over (r1, r2)."""
    return fourier_motzkin(sys, SPLIT_VARIABLES, SPLIT_SUBSTITUTIONS).reordered(RATE_VARIABLES)


def closed_form_region(g: ChannelGains) -> HalfspaceSystem:
    n11, n12, n21, n22 = g.as_tuple()
    rows = [
        ({"r1": 1}, n11),
        ({"r2": 1}, n22),
        ({"r1": 1, "r2": 1}, _pos(n11 - n12) + max(n22, n12)),
        ({"r1": 1, "r2": 1}, _pos(n22 - n21) + max(n11, n21)),
        ({"r1": 1, "r2": 1}, max(n21, _pos(n11 - n12)) + max(n12, _pos(n22 - n21))),
        ({"r1": 2, "r2": 1}, max(n11, n21) + _pos(n11 - n12) + max(n12, _pos(n22 - n21))),
        ({"r1": 1, "r2": 2}, max(n22, n12) + _pos(n22 - n21) + max(n21, _pos(n11 - n12))),
    ]
    return HalfspaceSystem.from_dicts(RATE_VARIABLES, rows)


def region_vertices(sys: HalfspaceSystem) -> Polygon2D:
    if set(sys.variables) != set(RATE_VARIABLES):
        raise ValueError(f"expected variables {RATE_VARIABLES}, got {sys.variables}")
    return polygon(sys.reordered(RATE_VARIABLES))


def region_equal(a: HalfspaceSystem, b: HalfspaceSystem) -> bool:
    return systems_equal(a, b)


def sum_capacity(g: ChannelGains) -> Fraction:
    return region_vertices(closed_form_region(g)).max_linear(1, 1)


def wcurve(alpha) -> Fraction:
    """Normalized symmetric per-user capacity at interference level ``alpha``."""
    a = as_fraction(alpha)
    if a < 0:
        raise ValueError(f"alpha must be nonnegative, got {a}")
    if a <= Fraction(1, 2):
        return 1 - a
    if a <= Fraction(2, 3):
        return a
    if a <= 1:
        return 1 - a / 2
    if a <= 2:
        return a / 2
    return Fraction(1)


def tin_line(alpha) -> Fraction:
    """Per-user rate from treating interference as noise, normalized."""
    a = as_fraction(alpha)
    if not 0 <= a <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {a}")
    return 1 - a


def time_share(points, weights) -> RatePoint:
    """Convex combination of rate points with exact weights summing to one."""
    weights = [as_fraction(w) for w in weights]
    if len(weights) != len(points) or sum(weights) != 1 or any(w < 0 for w in weights):
        raise ValueError("weights must be nonnegative, one per point, and sum to 1")
    keys = points[0].coords.keys()
    return RatePoint({k: sum(w * p[k] for w, p in zip(weights, points)) for k in keys})
