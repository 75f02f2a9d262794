"""Bridge between Gaussian channel parameters and the deterministic model.

Gain mapping, the itemized per-step gap ledgers, constant-gap inner/outer
regions, and the MAC generalized degrees of freedom.  All logs are base 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .channel import ChannelGains
from .polytope import HalfspaceSystem, as_fraction
from .rate_region import closed_form_region

REAL, COMPLEX = "real", "complex"
DET_TO_GAUSS, GAUSS_TO_DET = "det-to-gauss", "gauss-to-det"
TOL = 1e-9

# per-user gap between the two capacity regions
THEOREM_GAP = {REAL: Fraction("18.6"), COMPLEX: Fraction(42)}


@dataclass(frozen=True)
class GaussianParams:
    snr1: float
    snr2: float
    inr1: float
    inr2: float
    field_mode: str = COMPLEX

    def __post_init__(self):
        for name in ("snr1", "snr2", "inr1", "inr2"):
            v = getattr(self, name)
            if not (isinstance(v, (int, float, Fraction)) and math.isfinite(v) and v > 0):
                raise ValueError(f"{name} must be a positive finite number, got {v!r}")
        if self.field_mode not in (REAL, COMPLEX):
            raise ValueError(f"field_mode must be 'real' or 'complex', got {self.field_mode!r}")

    @classmethod
    def from_dict(cls, d: dict) -> GaussianParams:
        return cls(d["snr1"], d["snr2"], d["inr1"], d["inr2"], d.get("field_mode", COMPLEX))

    def to_dict(self) -> dict:
        return {"snr1": self.snr1, "snr2": self.snr2, "inr1": self.inr1, "inr2": self.inr2, "field_mode": self.field_mode}


def floor_log2(v) -> int:
    """Exact ``floor(log2 v)`` for ``v >= 1``, and 0 below 1."""
    if v < 1:
        return 0
    if isinstance(v, int):
        return v.bit_length() - 1
    if isinstance(v, Fraction):
        k = v.numerator.bit_length() - v.denominator.bit_length()
        return k if Fraction(2) ** k <= v else k - 1
    return math.frexp(v)[1] - 1


def level_gain(v, field_mode: str) -> int:
    n = floor_log2(v)
    # floor(x / 2) == floor(floor(x) / 2)
    return n // 2 if field_mode == REAL else n


def map_to_deterministic(p: GaussianParams) -> ChannelGains:
    """Gain ``n_ij`` from the matching SNR/INR: n11 <- SNR1, n12 <- INR2, n21 <- INR1, n22 <- SNR2."""
    m = p.field_mode
    return ChannelGains(level_gain(p.snr1, m), level_gain(p.inr2, m), level_gain(p.inr1, m), level_gain(p.snr2, m))


@dataclass(frozen=True)
class GapStep:
    name: str
    loss_bits: float
    stated: str


@dataclass(frozen=True)
class GapLedger:
    direction: str
    field_mode: str
    steps: tuple[GapStep, ...]
    stated_total: Fraction
    note: str = ""

    @property
    def itemized_sum(self) -> float:
        return math.fsum(s.loss_bits for s in self.steps)

    @property
    def discrepancy(self) -> bool:
        return abs(self.itemized_sum - float(self.stated_total)) > TOL

    def to_dict(self) -> dict:
        return {
            "direction": self.direction,
            "field_mode": self.field_mode,
            "steps": [{"name": s.name, "loss_bits": s.loss_bits, "stated": s.stated} for s in self.steps],
            "stated_total": str(self.stated_total),
            "itemized_sum": self.itemized_sum,
            "discrepancy": self.discrepancy,
            "note": self.note,
        }

    def to_text(self) -> str:
        width = max([len(s.name) for s in self.steps] + [len("itemized sum")])
        lines = [f"{self.direction} ({self.field_mode})"]
        lines += [f"  {s.name:<{width}}  {s.loss_bits:8.4f}  [{s.stated}]" for s in self.steps]
        lines.append(f"  {'itemized sum':<{width}}  {self.itemized_sum:8.4f}")
        lines.append(f"  {'stated total':<{width}}  {float(self.stated_total):8.4f}")
        lines.append(f"  discrepancy: {'yes' if self.discrepancy else 'no'}")
        if self.note:
            lines.append(f"  note: {self.note}")
        return "\n".join(lines)


LOG3 = math.log2(3)

_LEDGERS = {
    (DET_TO_GAUSS, REAL): (
        [
            ("real addition", 0.0, "0"),
            ("real-valued gains", LOG3, "log 3"),
            ("additive Gaussian noise", 1.5, "1.5"),
            ("remove truncation at noise level", LOG3, "log 3"),
        ],
        Fraction(5),
        "",
    ),
    (GAUSS_TO_DET, REAL): (
        [
            ("peak power constraint", 4.0, "4"),
            ("truncate at noise, integer gains, remove noise", 2.6, "2.6"),
            ("single letter, uniform inputs", 2.0, "2"),
            ("positive inputs and gains", 2.0, "2"),
            ("addition over F2", 2.0, "2"),
            ("gains of the form 2^n", 0.0, "0"),
        ],
        Fraction("13.6"),
        "",
    ),
    (GAUSS_TO_DET, COMPLEX): (
        [
            ("peak power constraint", 8.0, "8"),
            ("truncate at noise, integer gains, remove noise", 5.1, "5.1"),
            ("single letter, decoupling, uniform inputs", 6.0, "6"),
            ("positive inputs and gains", 4.0, "4"),
            ("addition over F2", 2.0, "2"),
            ("gains of the form 2^n", 0.0, "0"),
            ("combine real and imaginary parallel channels", 4.0, "4"),
        ],
        Fraction(42),
        "stated total is the overall per-user gap for complex channels",
    ),
    (DET_TO_GAUSS, COMPLEX): (
        [],
        Fraction(42),
        "steps not itemized; obtained by reversing the real-valued argument",
    ),
}


def gap_ledger(direction: str, field_mode: str) -> GapLedger:
    key = (direction, field_mode)
    if key not in _LEDGERS:
        raise ValueError(f"no ledger for direction={direction!r}, field_mode={field_mode!r}")
    steps, total, note = _LEDGERS[key]
    return GapLedger(direction, field_mode, tuple(GapStep(*s) for s in steps), total, note)


def theorem_gap(field_mode: str) -> Fraction:
    return THEOREM_GAP[field_mode]


def gaussian_region_bounds(p: GaussianParams) -> tuple[HalfspaceSystem, HalfspaceSystem]:
    """Inner and outer regions: the deterministic region with every bound moved by the per-user gap.

    A row's bound moves by the gap times the row's coefficient l1-norm, so each
    user gains or loses the gap; inner bounds are clamped at zero.
    """
    det = closed_form_region(map_to_deterministic(p))
    k = theorem_gap(p.field_mode)
    return det.shifted(-k), det.shifted(k)


def gdof_region_mac(alpha, classical: bool = False) -> HalfspaceSystem:
    a = as_fraction(alpha)
    if not 0 <= a <= 1:
        raise ValueError(f"alpha must lie in [0, 1] (stronger user first), got {a}")
    d2 = Fraction(1) if classical else a
    return HalfspaceSystem.from_dicts(("d1", "d2"), [({"d1": 1}, 1), ({"d2": 1}, d2), ({"d1": 1, "d2": 1}, 1)])


@dataclass(frozen=True)
class MacApproxResult:
    ok: bool
    max_gap: float
    gaps: dict


def mac_one_bit_approx_check(snr1: float, snr2: float) -> MacApproxResult:
    """Compare the MAC capacity bounds with their ``log SNR`` approximations.

    Each gap is per user: the sum-rate gap is split over its two users.
    """
    if snr1 < 1 or snr2 < 1:
        raise ValueError("SNRs must be at least 1")
    if snr1 < snr2:
        raise ValueError("expects snr1 >= snr2")
    l1, l2 = math.log2(snr1), math.log2(snr2)
    gaps = {
        "r1": math.log2(1 + snr1) - l1,
        "r2": math.log2(1 + snr2) - l2,
        "r1+r2": (math.log2(1 + snr1 + snr2) - l1) / 2,
    }
    ok = all(-TOL <= g <= 1 + TOL for g in gaps.values())
    return MacApproxResult(ok, max(gaps.values()), gaps)
