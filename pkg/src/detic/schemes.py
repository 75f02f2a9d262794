"""Single-letter level-allocation schemes and their exhaustive zero-error check.

A scheme says, for each user and each of the ``q`` transmit levels (top
first), what goes there: ``"0"``, a fresh message bit ``"b<k>"``, or a copy
of one ``"rep:b<k>"``.  Decoding is never built explicitly: a scheme is
zero-error when each receiver's message is a function of its output.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .channel import ChannelGains, LevelWord, transmit_ic
from .rate_region import RatePoint, closed_form_region

DEFAULT_CAP = 1 << 24
_ENTRY = re.compile(r"^(?:0|b([1-9][0-9]*)|rep:b([1-9][0-9]*))$")


class EnumerationCapError(ValueError):
    pass


def _parse(entry: str) -> tuple[str, int]:
    m = _ENTRY.match(entry)
    if not m:
        raise ValueError(f"bad level entry {entry!r}; expected '0', 'b<k>' or 'rep:b<k>'")
    if entry == "0":
        return "0", 0
    return ("b", int(m.group(1))) if m.group(1) else ("rep", int(m.group(2)))


@dataclass(frozen=True)
class LevelScheme:
    gains: ChannelGains
    user1: tuple[str, ...]
    user2: tuple[str, ...]
    r1: int
    r2: int

    def __post_init__(self):
        object.__setattr__(self, "user1", tuple(self.user1))
        object.__setattr__(self, "user2", tuple(self.user2))
        q = self.gains.q
        for i, levels, rate in ((1, self.user1, self.r1), (2, self.user2, self.r2)):
            if len(levels) != q:
                raise ValueError(f"user {i} assigns {len(levels)} levels, channel has q={q}")
            parsed = [_parse(e) for e in levels]
            fresh = [k for kind, k in parsed if kind == "b"]
            if len(set(fresh)) != len(fresh):
                raise ValueError(f"user {i} places a fresh bit twice; use 'rep:b<k>' for copies")
            if sorted(fresh) != list(range(1, rate + 1)):
                raise ValueError(f"user {i} declares rate {rate} but has fresh bits {sorted(fresh)}")
            missing = {k for kind, k in parsed if kind == "rep"} - set(fresh)
            if missing:
                raise ValueError(f"user {i} repeats bits that are never sent fresh: {sorted(missing)}")

    def levels(self, user: int) -> tuple[str, ...]:
        return {1: self.user1, 2: self.user2}[user]

    def encode(self, user: int, message: int) -> LevelWord:
        """Transmit word for ``message``, whose bit ``k`` (1-based, LSB first) is ``b<k>``."""
        v = 0
        for entry in self.levels(user):
            kind, k = _parse(entry)
            bit = 0 if kind == "0" else (message >> (k - 1)) & 1
            v = (v << 1) | bit
        return LevelWord(v, self.gains.q)

    def mirrored(self) -> LevelScheme:
        """Swap the users' roles (on the mirrored channel)."""
        return LevelScheme(self.gains.mirrored(), self.user2, self.user1, self.r2, self.r1)

    def to_dict(self) -> dict:
        return {"gains": self.gains.to_dict(), "user1": list(self.user1), "user2": list(self.user2), "r1": self.r1, "r2": self.r2}

    @classmethod
    def from_dict(cls, d: dict) -> LevelScheme:
        g = ChannelGains.from_dict(d["gains"])
        u1, u2 = tuple(d["user1"]), tuple(d["user2"])

        def fresh(levels):
            return sum(1 for e in levels if _parse(e)[0] == "b")

        return cls(g, u1, u2, d.get("r1", fresh(u1)), d.get("r2", fresh(u2)))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> LevelScheme:
        return cls.from_dict(json.loads(s))


def _layout(q: int, blocks: list[tuple[int, str]]) -> tuple[str, ...]:
    """Concatenate blocks top-down. Each block is (width, 'fresh' | 'zero' | 'rep:<start>')."""
    out: list[str] = []
    nxt = 1
    for width, kind in blocks:
        if kind == "zero":
            out += ["0"] * width
        elif kind == "fresh":
            out += [f"b{nxt + i}" for i in range(width)]
            nxt += width
        else:
            start = int(kind.split(":")[1])
            out += [f"rep:b{start + i}" for i in range(width)]
    assert len(out) == q
    return tuple(out)


def _require_multiple(n: int, k: int):
    if isinstance(n, bool) or not isinstance(n, int) or n < 0 or n % k:
        raise ValueError(f"n must be a nonnegative multiple of {k}, got {n!r}")


def scheme_private_only(n: int) -> LevelScheme:
    """alpha = 1/3: both users send only below the cross-link cut."""
    _require_multiple(n, 3)
    t = n // 3
    g = ChannelGains.symmetric(n, t)
    lv = _layout(n, [(t, "zero"), (2 * t, "fresh")])
    return LevelScheme(g, lv, lv, 2 * t, 2 * t)


def scheme_tin(n: int) -> LevelScheme:
    """alpha = 1/3: top two thirds carry data, the interfered bottom third is left empty."""
    _require_multiple(n, 3)
    t = n // 3
    g = ChannelGains.symmetric(n, t)
    lv = _layout(n, [(2 * t, "fresh"), (t, "zero")])
    return LevelScheme(g, lv, lv, 2 * t, 2 * t)


def scheme_common_private(n: int) -> LevelScheme:
    """alpha = 2/3: top third common, middle third silent, bottom third private."""
    _require_multiple(n, 3)
    t = n // 3
    g = ChannelGains.symmetric(n, 2 * t)
    lv = _layout(n, [(t, "fresh"), (t, "zero"), (t, "fresh")])
    return LevelScheme(g, lv, lv, 2 * t, 2 * t)


def scheme_repetition(n: int) -> LevelScheme:
    """alpha = 3/4, rate point (3n/4, n/2).

    By quarters from the top, user 1 sends c, b, b, a (``b`` twice) and user
    2 sends b', 0, 0, a'.  Receiver 1 reads c, then b from the third quarter
    where user 2 is silent, then a.  Receiver 2 reads b' on top and gets a'
    by cancelling the second copy of b against the first.
    """
    _require_multiple(n, 4)
    t = n // 4
    g = ChannelGains.symmetric(n, 3 * t)
    # fresh bits are numbered top-down: c = b1..bt, b = b(t+1)..b(2t), a = b(2t+1)..b(3t)
    u1 = _layout(n, [(t, "fresh"), (t, "fresh"), (t, f"rep:{t + 1}"), (t, "fresh")])
    u2 = _layout(n, [(t, "fresh"), (t, "zero"), (t, "zero"), (t, "fresh")])
    return LevelScheme(g, u1, u2, 3 * t, 2 * t)


def scheme_collision() -> LevelScheme:
    """Both users put a fresh bit on the only level of a (1,1,1,1) channel: not decodable."""
    return LevelScheme(ChannelGains(1, 1, 1, 1), ("b1",), ("b1",), 1, 1)


def empty_scheme() -> LevelScheme:
    return LevelScheme(ChannelGains(0, 0, 0, 0), (), (), 0, 0)


@dataclass(frozen=True)
class VerificationReport:
    zero_error: bool
    messages_checked: int
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        return {"zero_error": self.zero_error, "messages_checked": self.messages_checked, "counterexample": self.counterexample}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_zero_error(g: ChannelGains, s: LevelScheme, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check every message pair; report the first collision in lexicographic order.

    A collision at receiver ``i`` is two pairs with equal ``y_i`` but
    different user-``i`` messages.
    """
    if s.gains != g:
        raise ValueError(f"scheme was built for {s.gains}, not {g}")
    pairs = 1 << (s.r1 + s.r2)
    if pairs > cap:
        raise EnumerationCapError(f"{pairs} message pairs exceed the cap of {cap}")
    x1s = [s.encode(1, m) for m in range(1 << s.r1)]
    x2s = [s.encode(2, m) for m in range(1 << s.r2)]
    seen: tuple[dict, dict] = ({}, {})
    for m1, x1 in enumerate(x1s):
        for m2, x2 in enumerate(x2s):
            outs = transmit_ic(g, x1, x2)
            for rx, (y, own) in enumerate(zip(outs, (m1, m2)), start=1):
                prev = seen[rx - 1].setdefault(y.value, (own, m1, m2))
                if prev[0] != own:
                    return VerificationReport(
                        False,
                        pairs,
                        {"receiver": rx, "m1": prev[1], "m2": prev[2], "m1_alt": m1, "m2_alt": m2, "output": str(y)},
                    )
    return VerificationReport(True, pairs)


def scheme_rate_point(s: LevelScheme) -> RatePoint:
    return RatePoint(r1=s.r1, r2=s.r2)


def in_capacity_region(s: LevelScheme) -> bool:
    p = scheme_rate_point(s)
    return closed_form_region(s.gains).contains(p.coords)


PRESETS = {
    "private": scheme_private_only,
    "tin": scheme_tin,
    "common-private": scheme_common_private,
    "repetition": scheme_repetition,
}


def preset(name: str, n: int | None = None) -> LevelScheme:
    if name == "empty":
        return empty_scheme()
    if name == "collision":
        return scheme_collision()
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS) + ['collision', 'empty']}")
    if n is None:
        raise ValueError(f"preset {name!r} needs n")
    return PRESETS[name](n)
