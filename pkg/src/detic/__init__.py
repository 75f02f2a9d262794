"""Two-user deterministic interference channel: level model, exact capacity regions,
zero-error level schemes, entropy lemmas and the Gaussian gap bridge."""

from .channel import ChannelGains, DimensionError, LevelWord, transmit_ic, transmit_mac, transmit_p2p
from .gaussian import GaussianParams, gap_ledger, gaussian_region_bounds, map_to_deterministic
from .polytope import HalfspaceSystem, fourier_motzkin, vertices
from .rate_region import closed_form_region, compound_mac_region, project_compound, region_equal, sum_capacity, wcurve
from .schemes import LevelScheme, verify_zero_error

__version__ = "0.1.0"

__all__ = [
    "ChannelGains",
    "DimensionError",
    "GaussianParams",
    "HalfspaceSystem",
    "LevelScheme",
    "LevelWord",
    "closed_form_region",
    "compound_mac_region",
    "fourier_motzkin",
    "gap_ledger",
    "gaussian_region_bounds",
    "map_to_deterministic",
    "project_compound",
    "region_equal",
    "sum_capacity",
    "transmit_ic",
    "transmit_mac",
    "transmit_p2p",
    "verify_zero_error",
    "vertices",
    "wcurve",
]
