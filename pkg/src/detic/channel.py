"""Deterministic point-to-point, MAC and interference channels over GF(2) levels.

A signal is a column of binary levels, most significant first.  A gain of
``n`` lets the top ``n`` levels of the input through; everything below is
lost in the noise.  Signals arriving at the same receiver are XORed level by
level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

Q_MAX = 64


class DimensionError(ValueError):
    """Word lengths or level counts do not fit together."""


@dataclass(frozen=True)
class ChannelGains:
    """Integer level gains ``n_ij``: receiver ``i`` sees ``n_ij`` levels of transmitter ``j``."""

    n11: int
    n12: int
    n21: int
    n22: int

    def __post_init__(self):
        for name in ("n11", "n12", "n21", "n22"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an int, got {v!r}")
            if v < 0:
                raise ValueError(f"{name} must be nonnegative, got {v}")
            if v > Q_MAX:
                raise ValueError(f"{name}={v} exceeds q_max={Q_MAX}")

    @property
    def q(self) -> int:
        return max(self.n11, self.n12, self.n21, self.n22)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n11, self.n12, self.n21, self.n22)

    def mirrored(self) -> ChannelGains:
        """Relabel the users: user 1 becomes user 2 and vice versa."""
        return ChannelGains(self.n22, self.n21, self.n12, self.n11)

    @classmethod
    def symmetric(cls, n: int, m: int) -> ChannelGains:
        return cls(n, m, m, n)

    def to_dict(self) -> dict:
        return {"n11": self.n11, "n12": self.n12, "n21": self.n21, "n22": self.n22}

    @classmethod
    def from_dict(cls, d: dict) -> ChannelGains:
        missing = {"n11", "n12", "n21", "n22"} - set(d)
        if missing:
            raise ValueError(f"missing gains: {sorted(missing)}")
        return cls(d["n11"], d["n12"], d["n21"], d["n22"])

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> ChannelGains:
        return cls.from_dict(json.loads(s))


@dataclass(frozen=True)
class LevelWord:
    """A column of ``length`` binary levels stored as an int.

    Level 1 (the most significant) is bit ``length - 1`` of ``value``, so
    ``value`` is also the integer ``floor(2**length * 0.b1 b2 ...)``.
    """

    value: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise DimensionError("negative word length")
        if not 0 <= self.value < (1 << self.length):
            raise ValueError(f"value {self.value} does not fit in {self.length} levels")

    @classmethod
    def zeros(cls, length: int) -> LevelWord:
        return cls(0, length)

    @classmethod
    def from_bits(cls, bits) -> LevelWord:
        bits = list(bits)
        v = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"not a bit: {b!r}")
            v = (v << 1) | b
        return cls(v, len(bits))

    @classmethod
    def from_str(cls, s: str, length: int | None = None) -> LevelWord:
        """Parse an MSB-first binary string; ``0.`` prefixes are accepted.

        With ``length`` the word is zero-padded below its last level, which
        keeps its value as a binary fraction unchanged.
        """
        s = s.strip()
        if s.startswith("0."):
            s = s[2:]
        w = cls.from_bits(int(c) for c in s)
        return w if length is None else w.padded(length)

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.length - 1 - i)) & 1 for i in range(self.length))

    def padded(self, length: int) -> LevelWord:
        """Extend with zero levels at the bottom."""
        if length < self.length:
            raise DimensionError(f"cannot pad {self.length} levels down to {length}")
        return LevelWord(self.value << (length - self.length), length)

    def top(self, k: int) -> LevelWord:
        """The ``k`` most significant levels as a word of length ``k``."""
        if not 0 <= k <= self.length:
            raise DimensionError(f"cannot take {k} of {self.length} levels")
        return LevelWord(self.value >> (self.length - k), k)

    def segment(self, start: int, stop: int) -> LevelWord:
        """Levels ``start+1 .. stop`` (0-based half-open over the MSB-first order)."""
        if not 0 <= start <= stop <= self.length:
            raise DimensionError(f"bad segment [{start}, {stop}) of {self.length} levels")
        k = stop - start
        return LevelWord((self.value >> (self.length - stop)) & ((1 << k) - 1), k)

    def concat(self, other: LevelWord) -> LevelWord:
        return LevelWord((self.value << other.length) | other.value, self.length + other.length)

    def __xor__(self, other: LevelWord) -> LevelWord:
        if not isinstance(other, LevelWord):
            return NotImplemented
        if other.length != self.length:
            raise DimensionError(f"XOR of {self.length}- and {other.length}-level words")
        return LevelWord(self.value ^ other.value, self.length)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return "".join(map(str, self.bits))


def _check_gain(n: int, length: int):
    if n < 0:
        raise ValueError(f"negative gain {n}")
    if n > length:
        raise DimensionError(f"gain {n} exceeds word length {length}")


def transmit_p2p(n: int, x: LevelWord) -> LevelWord:
    """``floor(2**n x)``: the top ``n`` levels of ``x``, right-aligned in a word of the same length."""
    _check_gain(n, x.length)
    return LevelWord(x.value >> (x.length - n), x.length)


def transmit_mac(n1: int, n2: int, x1: LevelWord, x2: LevelWord) -> LevelWord:
    """``floor(2**n1 x1) XOR floor(2**n2 x2)``."""
    if x1.length != x2.length:
        raise DimensionError(f"inputs have {x1.length} and {x2.length} levels")
    return transmit_p2p(n1, x1) ^ transmit_p2p(n2, x2)


def transmit_ic(g: ChannelGains, x1: LevelWord, x2: LevelWord) -> tuple[LevelWord, LevelWord]:
    for i, x in ((1, x1), (2, x2)):
        if x.length != g.q:
            raise DimensionError(f"x{i} has {x.length} levels, channel needs q={g.q}")
    return transmit_mac(g.n11, g.n12, x1, x2), transmit_mac(g.n21, g.n22, x1, x2)


def shift_matrix(q: int) -> list[list[int]]:
    """The q x q down-shift matrix: ones on the first subdiagonal."""
    return [[1 if i == j + 1 else 0 for j in range(q)] for i in range(q)]


def _gf2_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] & b[t][j] for t in range(k)) & 1 for j in range(m)] for i in range(n)]


def shift_matrix_apply(q: int, n: int, x: LevelWord) -> LevelWord:
    """Compute ``S**(q-n) x`` by explicit GF(2) matrix products."""
    if x.length != q:
        raise DimensionError(f"word has {x.length} levels, expected {q}")
    if not 0 <= n <= q:
        raise DimensionError(f"need 0 <= n <= q, got n={n}, q={q}")
    s = shift_matrix(q)
    power = [[int(i == j) for j in range(q)] for i in range(q)]
    for _ in range(q - n):
        power = _gf2_matmul(s, power)
    col = [[b] for b in x.bits]
    out = _gf2_matmul(power, col) if q else []
    return LevelWord.from_bits(row[0] for row in out)


@dataclass(frozen=True)
class LevelSplit:
    """A user's used levels split into the part the other receiver sees and the rest."""

    common: LevelWord
    private: LevelWord
    user: int

    def reassemble(self) -> LevelWord:
        return self.common.concat(self.private)


def private_width(g: ChannelGains, user: int) -> int:
    """Number of levels seen by the intended receiver only: ``(n_ii - n_ji)^+``."""
    if user == 1:
        return max(g.n11 - g.n21, 0)
    if user == 2:
        return max(g.n22 - g.n12, 0)
    raise ValueError(f"user must be 1 or 2, got {user!r}")


def common_width(g: ChannelGains, user: int) -> int:
    """Number of used levels that also reach the other receiver: ``min(n_ji, n_ii)``."""
    if user == 1:
        return min(g.n21, g.n11)
    if user == 2:
        return min(g.n12, g.n22)
    raise ValueError(f"user must be 1 or 2, got {user!r}")


def split_common_private(g: ChannelGains, x: LevelWord, user: int) -> LevelSplit:
    if x.length != g.q:
        raise DimensionError(f"word has {x.length} levels, channel needs q={g.q}")
    c, p = common_width(g, user), private_width(g, user)
    return LevelSplit(common=x.segment(0, c), private=x.segment(c, c + p), user=user)
