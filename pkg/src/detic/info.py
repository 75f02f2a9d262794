"""Exact-probability entropy tools and checks of the entropy inequalities used in the gap argument."""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .channel import ChannelGains, LevelWord, split_common_private, transmit_ic

TOL = 1e-9


class InvalidPmfError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class OracleCapError(ValueError):
    pass


def _exact(v) -> Fraction:
    if isinstance(v, float):
        raise InvalidPmfError(f"probabilities must be exact rationals, got float {v!r}")
    return Fraction(v)


def _check_probs(probs: Iterable[Fraction]):
    total = Fraction(0)
    for p in probs:
        if not isinstance(p, (Fraction, int)):
            raise InvalidPmfError(f"probabilities must be exact, got {p!r}")
        if p < 0:
            raise InvalidPmfError(f"negative probability {p}")
        total += p
    if total != 1:
        raise InvalidPmfError(f"probabilities sum to {total}, not 1")


def _h(probs: Iterable[Fraction]) -> float:
    return -math.fsum(float(p) * math.log2(p) for p in probs if p > 0)


@dataclass(frozen=True)
class FinitePmf:
    table: Mapping[Hashable, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "table", {k: _exact(v) for k, v in dict(self.table).items()})
        _check_probs(self.table.values())

    @classmethod
    def uniform(cls, support: Iterable[Hashable]) -> FinitePmf:
        c = Counter(support)
        n = sum(c.values())
        return cls({v: Fraction(k, n) for v, k in c.items()})

    @classmethod
    def from_pairs(cls, support: Sequence[Hashable], probabilities: Sequence) -> FinitePmf:
        if len(support) != len(probabilities):
            raise InvalidPmfError("support and probabilities differ in length")
        t: dict = defaultdict(Fraction)
        for v, p in zip(support, probabilities):
            t[v] += _exact(p)
        return cls(dict(t))

    @property
    def support(self) -> list:
        return [v for v, p in self.table.items() if p > 0]


def entropy(p: FinitePmf) -> float:
    """Shannon entropy in bits."""
    return _h(p.table.values())


@dataclass(frozen=True)
class JointPmf:
    variables: tuple[str, ...]
    table: Mapping[tuple, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        t = {}
        for k, v in dict(self.table).items():
            k = tuple(k)
            if len(k) != len(self.variables):
                raise InvalidPmfError(f"outcome {k} does not match variables {self.variables}")
            t[k] = _exact(v)
        object.__setattr__(self, "table", t)
        _check_probs(t.values())

    def _idx(self, names: Sequence[str]) -> list[int]:
        out = []
        for n in names:
            if n not in self.variables:
                raise KeyError(f"unknown variable {n!r}; have {self.variables}")
            out.append(self.variables.index(n))
        return out

    def marginal(self, names: Sequence[str]) -> FinitePmf:
        idx = self._idx(names)
        t: dict = defaultdict(Fraction)
        for k, p in self.table.items():
            t[tuple(k[i] for i in idx)] += p
        return FinitePmf(dict(t))

    def H(self, *names: str) -> float:
        return entropy(self.marginal(names))

    def conditional_entropy(self, targets: Sequence[str], given: Sequence[str]) -> float:
        return self.H(*targets, *given) - self.H(*given)


def mutual_information(j: JointPmf, xs: Sequence[str], ys: Sequence[str]) -> float:
    """``H(X) + H(Y) - H(X, Y)``, clipped at zero against rounding."""
    xs, ys = list(xs), list(ys)
    val = j.H(*xs) + j.H(*ys) - j.H(*xs, *ys)
    return val if val > 0 else 0.0


@dataclass(frozen=True)
class SideInfoResult:
    ok: bool
    slack: float
    i_x_ytilde: float
    i_x_y: float
    h_s: float


def check_side_information(
    j: JointPmf,
    reconstruction: Mapping[tuple, Hashable],
    names: tuple[str, str, str, str] = ("x", "y", "ytilde", "s"),
) -> SideInfoResult:
    """If ``y`` is a function of ``(ytilde, s)``, then ``I(x; ytilde) >= I(x; y) - H(s)``.

    ``reconstruction`` maps ``(ytilde, s)`` to ``y``; it is checked on the
    whole support before anything is evaluated.
    """
    x, y, yt, s = names
    ix, iy, iyt, is_ = j._idx([x, y, yt, s])
    for k, p in j.table.items():
        if p == 0:
            continue
        key = (k[iyt], k[is_])
        if key not in reconstruction or reconstruction[key] != k[iy]:
            raise PreconditionError(f"y={k[iy]!r} is not recovered from (ytilde, s)={key!r}")
    i_xyt = mutual_information(j, [x], [yt])
    i_xy = mutual_information(j, [x], [y])
    hs = j.H(s)
    slack = i_xyt - (i_xy - hs)
    return SideInfoResult(slack >= -TOL, slack, i_xyt, i_xy, hs)


@dataclass(frozen=True)
class SumEntropyResult:
    """Entropy of a sum of independent uniforms against two lower bounds.

    ``bound`` is ``log2(total_span) - margin`` and ``ok`` compares against it.
    ``lemma_bound`` is ``log2(|support|) - margin``; since no distribution on
    the same supports can exceed ``log2(|support|)``, clearing it shows that
    the uniform inputs are within ``margin`` bits of the best inputs.
    """

    entropy: float
    bound: float
    ok: bool
    max_entropy_bound: float
    support_size: int
    lemma_bound: float
    lemma_ok: bool


def _progression(step: int, size: int) -> list[int]:
    return [k * step for k in range(size)]


def _sum_entropy(us: list[int], vs: list[int], quant: int) -> tuple[float, int]:
    c = Counter(quant * (u // quant) + quant * (v // quant) for u in us for v in vs)
    n = len(us) * len(vs)
    return _h(Fraction(k, n) for k in c.values()), len(c)


def uniform_sum_entropy_check(a: int, m_a: int, b: int, m_b: int) -> SumEntropyResult:
    """``H(X + Y)`` for X, Y uniform on ``{0, a, .., (m_a-1)a}`` and ``{0, b, .., (m_b-1)b}``.

    The steps are divided by their gcd first, which leaves the entropy alone.
    """
    for name, v in (("a", a), ("m_a", m_a), ("b", b), ("m_b", m_b)):
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")
    g = math.gcd(a, b)
    a, b = a // g, b // g
    h, size = _sum_entropy(_progression(a, m_a), _progression(b, m_b), 1)
    span = a * m_a + b * m_b
    bound = math.log2(span) - 1
    lemma_bound = math.log2(size) - 1
    return SumEntropyResult(h, bound, h >= bound - TOL, math.log2(span), size, lemma_bound, h >= lemma_bound - TOL)


def quantized_sum_entropy_check(a: int, m_a: int, b: int, m_b: int, delta: int) -> SumEntropyResult:
    """``H(Q(U) + Q(V))`` with ``Q(t) = delta * floor(t / delta)`` and margin 2.

    U and V are uniform on the progressions with steps ``a`` and ``b``.
    Dividing ``a``, ``b`` and ``delta`` by a common factor changes nothing.
    """
    for name, v in (("a", a), ("m_a", m_a), ("b", b), ("m_b", m_b), ("delta", delta)):
        if v < 1:
            raise ValueError(f"{name} must be a positive integer, got {v}")
    g = math.gcd(math.gcd(a, b), delta)
    a, b, delta = a // g, b // g, delta // g
    h, size = _sum_entropy(_progression(a, m_a), _progression(b, m_b), delta)
    span = Fraction(a * m_a + b * m_b, delta)
    bound = math.log2(span) - 2
    lemma_bound = math.log2(size) - 2
    return SumEntropyResult(h, bound, h >= bound - TOL, math.log2(span), size, lemma_bound, h >= lemma_bound - TOL)


ORACLE_CAP = 10


def uniform_input_joint(g: ChannelGains) -> JointPmf:
    """Joint law of the four signal parts and both outputs under uniform inputs.

    Each user drives only the levels its own receiver sees, uniformly; the
    parts come from ``split_common_private`` and the outputs from
    ``transmit_ic``.
    """
    q = g.q
    words1 = [LevelWord(v << (q - g.n11), q) for v in range(1 << g.n11)]
    words2 = [LevelWord(v << (q - g.n22), q) for v in range(1 << g.n22)]
    parts1 = [split_common_private(g, w, 1) for w in words1]
    parts2 = [split_common_private(g, w, 2) for w in words2]
    prob = Fraction(1, len(words1) * len(words2))
    table = {}
    for w1, s1 in zip(words1, parts1):
        for w2, s2 in zip(words2, parts2):
            y1, y2 = transmit_ic(g, w1, w2)
            key = (s1.common.value, s1.private.value, s2.common.value, s2.private.value, y1.value, y2.value)
            table[key] = table.get(key, 0) + prob
    return JointPmf(("x1c", "x1p", "x2c", "x2p", "y1", "y2"), table)


def evaluate_region_entropies(g: ChannelGains, cap: int = ORACLE_CAP) -> dict[str, float]:
    """Enumerate uniform inputs through the channel and return the ten entropy terms.

    Keys match ``rate_region.compound_mac_bounds``.
    """
    if g.q > cap:
        raise OracleCapError(f"max gain {g.q} exceeds oracle cap {cap}")
    j = uniform_input_joint(g)
    return {
        "rx1_all": j.H("y1"),
        "rx1_own": j.H("x1c", "x1p"),
        "rx1_cross": j.H("x2c"),
        "rx1_private_cross": j.conditional_entropy(["y1"], ["x1c"]),
        "rx1_private": j.H("x1p"),
        "rx2_all": j.H("y2"),
        "rx2_own": j.H("x2c", "x2p"),
        "rx2_cross": j.H("x1c"),
        "rx2_private_cross": j.conditional_entropy(["y2"], ["x2c"]),
        "rx2_private": j.H("x2p"),
    }


@dataclass(frozen=True)
class SweepSummary:
    """Aggregate of one lemma sweep; ``failures`` keeps the first few failing cases."""

    name: str
    cases: int
    passed: int
    lemma_passed: int
    min_slack: float
    failures: tuple

    @property
    def ok(self) -> bool:
        return self.passed == self.cases

    @property
    def lemma_ok(self) -> bool:
        return self.lemma_passed == self.cases

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "passed": self.passed,
            "ok": self.ok,
            "lemma_passed": self.lemma_passed,
            "lemma_ok": self.lemma_ok,
            "min_slack": self.min_slack,
            "failures": [list(f) for f in self.failures],
        }


def _summarize(name: str, results: list[tuple[tuple, SumEntropyResult]], keep: int = 5) -> SweepSummary:
    bad = [args for args, r in results if not r.ok]
    return SweepSummary(
        name,
        len(results),
        len(results) - len(bad),
        sum(r.lemma_ok for _, r in results),
        min(r.entropy - r.bound for _, r in results),
        tuple(bad[:keep]),
    )


def sweep_uniform_sum(max_value: int = 6) -> SweepSummary:
    """All ``(a, m_a, b, m_b)`` in ``[1..max_value]^4``."""
    rng = range(1, max_value + 1)
    res = [((a, ma, b, mb), uniform_sum_entropy_check(a, ma, b, mb)) for a in rng for ma in rng for b in rng for mb in rng]
    return _summarize("uniform_sum", res)


def sweep_quantized_sum(max_value: int = 5, deltas: Sequence[int] = (1, 2, 4)) -> SweepSummary:
    rng = range(1, max_value + 1)
    res = [
        ((a, ma, b, mb, d), quantized_sum_entropy_check(a, ma, b, mb, d))
        for a in rng
        for ma in rng
        for b in rng
        for mb in rng
        for d in deltas
    ]
    return _summarize("quantized_sum", res)


def random_side_info_joint(rng, max_alphabet: int = 4, denominator: int = 60) -> tuple[JointPmf, dict]:
    """A random exact joint of (x, ytilde, s) with ``y = f(ytilde, s)`` for a random ``f``.

    Returns the joint over ``("x", "y", "ytilde", "s")`` and the map ``f``.
    """
    nx, nt, ns, ny = (rng.randint(1, max_alphabet) for _ in range(4))
    cells = [(x, t, s) for x in range(nx) for t in range(nt) for s in range(ns)]
    weights = [rng.randint(0, denominator) for _ in cells]
    if not any(weights):
        weights[0] = 1
    total = sum(weights)
    f = {(t, s): rng.randrange(ny) for t in range(nt) for s in range(ns)}
    table: dict = defaultdict(Fraction)
    for (x, t, s), w in zip(cells, weights):
        table[(x, f[(t, s)], t, s)] += Fraction(w, total)
    return JointPmf(("x", "y", "ytilde", "s"), table), f


def sweep_side_information(count: int = 500, seed: int = 0) -> SweepSummary:
    import random

    rng = random.Random(seed)
    slacks = []
    for _ in range(count):
        j, f = random_side_info_joint(rng)
        slacks.append(check_side_information(j, f).slack)
    passed = sum(s >= -TOL for s in slacks)
    return SweepSummary("side_information", count, passed, passed, min(slacks), ())


def lemma_report() -> dict[str, SweepSummary]:
    return {s.name: s for s in (sweep_uniform_sum(), sweep_quantized_sum(), sweep_side_information())}
