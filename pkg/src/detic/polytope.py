"""Exact rational polyhedra: halfspace systems, projection, vertices.

Everything here is ``fractions.Fraction``; no floating point is used.
Variables are implicitly nonnegative in every system.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Sequence

Rational = Fraction
Point = tuple[Fraction, ...]


class UnboundedRegionError(ValueError):
    pass


class InfeasibleSystemError(ValueError):
    pass


def as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        raise TypeError("floats are not accepted in exact systems; pass a Fraction or a 'p/q' string")
    return Fraction(v)


class Halfspace(NamedTuple):
    """``<coeffs, r> <= bound``."""

    coeffs: tuple[Fraction, ...]
    bound: Fraction


@dataclass(frozen=True)
class HalfspaceSystem:
    variables: tuple[str, ...]
    rows: tuple[Halfspace, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variables in {self.variables}")
        rows = []
        for coeffs, bound in self.rows:
            coeffs = tuple(as_fraction(c) for c in coeffs)
            if len(coeffs) != len(self.variables):
                raise ValueError(f"row has {len(coeffs)} coefficients for {len(self.variables)} variables")
            rows.append(Halfspace(coeffs, as_fraction(bound)))
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def from_dicts(cls, variables: Sequence[str], rows: Iterable[tuple[Mapping[str, object], object]]):
        """Build from ``({name: coeff}, bound)`` pairs."""
        variables = tuple(variables)
        built = []
        for coeffs, bound in rows:
            unknown = set(coeffs) - set(variables)
            if unknown:
                raise ValueError(f"row references undeclared variables {sorted(unknown)}")
            built.append((tuple(as_fraction(coeffs.get(v, 0)) for v in variables), bound))
        return cls(variables, tuple(built))

    @property
    def dim(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}; have {self.variables}") from None

    def contains(self, point) -> bool:
        """Exact membership, nonnegativity included. ``point`` maps names to values."""
        x = [as_fraction(point[v]) for v in self.variables]
        if any(xi < 0 for xi in x):
            return False
        return all(sum(a * xi for a, xi in zip(row.coeffs, x)) <= row.bound for row in self.rows)

    def reordered(self, variables: Sequence[str]) -> HalfspaceSystem:
        if sorted(variables) != sorted(self.variables):
            raise ValueError(f"cannot reorder {self.variables} as {tuple(variables)}")
        idx = [self.index(v) for v in variables]
        return HalfspaceSystem(tuple(variables), tuple(Halfspace(tuple(r.coeffs[i] for i in idx), r.bound) for r in self.rows))

    def renamed(self, mapping: Mapping[str, str]) -> HalfspaceSystem:
        return HalfspaceSystem(tuple(mapping.get(v, v) for v in self.variables), self.rows)

    def scaled(self, factor) -> HalfspaceSystem:
        """The image of the set under ``r -> factor * r`` (factor > 0)."""
        f = as_fraction(factor)
        if f <= 0:
            raise ValueError("scale factor must be positive")
        return HalfspaceSystem(self.variables, tuple(Halfspace(r.coeffs, r.bound * f) for r in self.rows))

    def shifted(self, per_unit, clamp: bool = True) -> HalfspaceSystem:
        """Move every bound by ``per_unit`` times the row's coefficient l1-norm."""
        k = as_fraction(per_unit)
        rows = []
        for r in self.rows:
            b = r.bound + k * sum(abs(a) for a in r.coeffs)
            rows.append(Halfspace(r.coeffs, max(b, Fraction(0)) if clamp else b))
        return HalfspaceSystem(self.variables, tuple(rows))

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "rows": [{"coeffs": [str(a) for a in r.coeffs], "bound": str(r.bound)} for r in self.rows],
        }

    @classmethod
    def from_dict(cls, d: dict) -> HalfspaceSystem:
        return cls(tuple(d["variables"]), tuple((tuple(Fraction(a) for a in r["coeffs"]), Fraction(r["bound"])) for r in d["rows"]))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, s: str) -> HalfspaceSystem:
        return cls.from_dict(json.loads(s))

    def describe(self) -> list[str]:
        out = []
        for r in self.rows:
            terms = []
            for a, v in zip(r.coeffs, self.variables):
                if a == 0:
                    continue
                if a == 1:
                    terms.append(f"+ {v}")
                elif a == -1:
                    terms.append(f"- {v}")
                else:
                    terms.append(f"{'+' if a > 0 else '-'} {abs(a)}*{v}")
            lhs = " ".join(terms).lstrip("+ ") or "0"
            out.append(f"{lhs} <= {r.bound}")
        return out


# -- exact simplex ---------------------------------------------------------

def _pivot(tab: list[list[Fraction]], basis: list[int], r: int, c: int):
    piv = tab[r][c]
    tab[r] = [v / piv for v in tab[r]]
    for i, row in enumerate(tab):
        if i != r and row[c] != 0:
            f = row[c]
            tab[i] = [a - f * b for a, b in zip(row, tab[r])]
    basis[r] = c


def _run_simplex(tab, basis, obj_row: int, ncols: int) -> bool:
    """Maximize; the objective row holds reduced costs negated. Bland's rule. False if unbounded."""
    m = len(basis)
    while True:
        enter = next((j for j in range(ncols) if tab[obj_row][j] < 0), None)
        if enter is None:
            return True
        best = None
        for i in range(m):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(tab, basis, best[1], enter)


def lp_max(c: Sequence[Fraction], rows: Sequence[Halfspace]):
    """Maximize ``c.x`` over ``{x >= 0, rows}``.

    Returns ``("optimal", value)``, ``("unbounded", None)`` or ``("infeasible", None)``.
    """
    n, m = len(c), len(rows)
    # columns: x (n), slacks (m), artificial (1), rhs
    width = n + m + 1
    tab = []
    for i, r in enumerate(rows):
        row = list(r.coeffs) + [Fraction(int(j == i)) for j in range(m)] + [Fraction(-1), r.bound]
        tab.append(row)
    basis = [n + i for i in range(m)]
    if m and min(r.bound for r in rows) < 0:
        # phase 1: maximize -a over Ax - a <= b
        tab.append([Fraction(0)] * (n + m) + [Fraction(1), Fraction(0)])
        worst = min(range(m), key=lambda i: tab[i][-1])
        _pivot(tab, basis, worst, n + m)
        _run_simplex(tab, basis, m, width)
        if tab[m][-1] != 0:
            return "infeasible", None
        if n + m in basis:
            r = basis.index(n + m)
            col = next((j for j in range(n + m) if tab[r][j] != 0), None)
            if col is not None:
                _pivot(tab, basis, r, col)
        tab.pop()
    for row in tab:
        row[n + m] = Fraction(0)
    obj = [-as_fraction(v) for v in c] + [Fraction(0)] * (m + 1) + [Fraction(0)]
    for i, bcol in enumerate(basis):
        if obj[bcol] != 0:
            f = obj[bcol]
            obj = [a - f * b for a, b in zip(obj, tab[i])]
    tab.append(obj)
    if not _run_simplex(tab, basis, m, n + m):
        return "unbounded", None
    return "optimal", tab[m][-1]


# -- row hygiene -----------------------------------------------------------

def _normalize(row: Halfspace) -> Halfspace | None:
    """Scale so the first nonzero coefficient has magnitude one. None for ``0 <= b``."""
    lead = next((a for a in row.coeffs if a != 0), None)
    if lead is None:
        if row.bound < 0:
            raise InfeasibleSystemError("row 0 <= negative bound")
        return None
    s = abs(lead)
    return Halfspace(tuple(a / s for a in row.coeffs), row.bound / s)


def _dedupe(rows: Iterable[Halfspace]) -> list[Halfspace]:
    best: dict[tuple, Fraction] = {}
    for r in rows:
        nr = _normalize(r)
        if nr is None:
            continue
        if nr.coeffs not in best or nr.bound < best[nr.coeffs]:
            best[nr.coeffs] = nr.bound
    return [Halfspace(k, v) for k, v in best.items()]


def _is_nonneg_row(row: Halfspace) -> bool:
    nz = [a for a in row.coeffs if a != 0]
    return len(nz) == 1 and nz[0] < 0 and row.bound == 0


def remove_redundant(rows: Sequence[Halfspace], keep: Sequence[Halfspace] = ()) -> list[Halfspace]:
    """Drop rows implied by the others together with ``keep`` and ``x >= 0``."""
    rows = _dedupe(rows)
    rows.sort(key=lambda r: (sum(1 for a in r.coeffs if a != 0), r.coeffs, r.bound))
    i = len(rows) - 1
    while i >= 0:
        others = rows[:i] + rows[i + 1:] + list(keep)
        status, value = lp_max(rows[i].coeffs, others)
        if status == "infeasible":
            raise InfeasibleSystemError("system has no feasible point")
        if status == "optimal" and value <= rows[i].bound:
            rows.pop(i)
        i -= 1
    return rows


def simplify(sys: HalfspaceSystem) -> HalfspaceSystem:
    rows = [r for r in _dedupe(sys.rows) if not _is_nonneg_row(r)]
    return HalfspaceSystem(sys.variables, tuple(remove_redundant(rows)))


# -- Fourier-Motzkin -------------------------------------------------------

def fourier_motzkin(
    sys: HalfspaceSystem,
    eliminate: Sequence[str],
    substitutions: Mapping[str, Mapping[str, object]] | None = None,
) -> HalfspaceSystem:
    """Project ``sys`` onto the variables it keeps.

    ``substitutions`` introduces new variables as linear combinations of old
    ones, e.g. ``{"r1": {"r1c": 1, "r1p": 1}}``; they are added before the
    listed variables are eliminated.  The result keeps the uneliminated
    original variables followed by the new ones, all nonnegative.
    """
    substitutions = dict(substitutions or {})
    for v in eliminate:
        sys.index(v)
    for new, combo in substitutions.items():
        if new in sys.variables:
            raise ValueError(f"substitution target {new!r} is already a variable")
        for v in combo:
            sys.index(v)

    variables = list(sys.variables) + list(substitutions)
    n = len(variables)
    pos = {v: i for i, v in enumerate(variables)}

    def widen(coeffs):
        return tuple(coeffs) + (Fraction(0),) * (n - len(coeffs))

    rows = [Halfspace(widen(r.coeffs), r.bound) for r in sys.rows]
    rows += [Halfspace(tuple(Fraction(-int(j == i)) for j in range(n)), Fraction(0)) for i in range(n)]

    todo = list(dict.fromkeys(eliminate))
    for new, combo in substitutions.items():
        # new - sum(c_k v_k) = 0
        eq = [Fraction(0)] * n
        eq[pos[new]] = Fraction(1)
        for v, c in combo.items():
            eq[pos[v]] -= as_fraction(c)
        pivot = next((pos[v] for v in todo if eq[pos[v]] != 0), None)
        if pivot is None:
            rows.append(Halfspace(tuple(eq), Fraction(0)))
            rows.append(Halfspace(tuple(-a for a in eq), Fraction(0)))
            continue
        # x_p = -(sum_{j != p} eq_j x_j) / eq_p
        sub = []
        for r in rows:
            a = r.coeffs[pivot]
            if a == 0:
                sub.append(r)
                continue
            f = a / eq[pivot]
            sub.append(Halfspace(tuple(ri - f * ei for ri, ei in zip(r.coeffs, eq)), r.bound))
        rows = sub
        todo.remove(variables[pivot])

    for v in todo:
        j = pos[v]
        zero, plus, minus = [], [], []
        for r in rows:
            (plus if r.coeffs[j] > 0 else minus if r.coeffs[j] < 0 else zero).append(r)
        combined = list(zero)
        for p in plus:
            for q in minus:
                a, b = p.coeffs[j], -q.coeffs[j]
                combined.append(Halfspace(tuple(b * x + a * y for x, y in zip(p.coeffs, q.coeffs)), b * p.bound + a * q.bound))
        nonneg = [r for r in _dedupe(combined) if _is_nonneg_row(r)]
        rest = [r for r in _dedupe(combined) if not _is_nonneg_row(r)]
        rows = remove_redundant(rest) + nonneg

    gone = {pos[v] for v in eliminate}
    keep_idx = [i for i in range(n) if i not in gone]
    out = []
    for r in rows:
        if any(r.coeffs[i] != 0 for i in gone):
            raise AssertionError("eliminated variable survived projection")
        out.append(Halfspace(tuple(r.coeffs[i] for i in keep_idx), r.bound))
    return simplify(HalfspaceSystem(tuple(variables[i] for i in keep_idx), tuple(out)))


# -- vertices --------------------------------------------------------------

def _solve(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Unique solution of a square system, or None if singular."""
    n = len(a)
    m = [row[:] + [bi] for row, bi in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [v / p for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def check_bounded(sys: HalfspaceSystem):
    for i, v in enumerate(sys.variables):
        status, _ = lp_max(tuple(Fraction(int(j == i)) for j in range(sys.dim)), sys.rows)
        if status == "unbounded":
            raise UnboundedRegionError(f"variable {v!r} is unbounded")
        if status == "infeasible":
            raise InfeasibleSystemError("system has no feasible point")


def vertices(sys: HalfspaceSystem) -> frozenset[Point]:
    """All vertices of a bounded system (nonnegativity included)."""
    check_bounded(sys)
    d = sys.dim
    if d == 0:
        return frozenset({()})
    cons = list(_dedupe(sys.rows)) + [Halfspace(tuple(Fraction(-int(j == i)) for j in range(d)), Fraction(0)) for i in range(d)]
    found = set()
    for combo in itertools.combinations(cons, d):
        x = _solve([list(r.coeffs) for r in combo], [r.bound for r in combo])
        if x is None:
            continue
        if all(sum(a * xi for a, xi in zip(r.coeffs, x)) <= r.bound for r in cons):
            found.add(tuple(x))
    return frozenset(found)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: Iterable[Point]) -> list[Point]:
    """Monotone-chain hull, counterclockwise from the lowest-leftmost point, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class Polygon2D:
    """Convex polygon in the first quadrant, vertices counterclockwise."""

    vertices: tuple[Point, ...]
    variables: tuple[str, str] = ("r1", "r2")

    def max_linear(self, w1, w2) -> Fraction:
        w1, w2 = as_fraction(w1), as_fraction(w2)
        return max(w1 * x + w2 * y for x, y in self.vertices)

    def to_dict(self) -> dict:
        return {"variables": list(self.variables), "vertices": [[str(x), str(y)] for x, y in self.vertices]}

    @classmethod
    def from_dict(cls, d: dict) -> Polygon2D:
        return cls(tuple((Fraction(x), Fraction(y)) for x, y in d["vertices"]), tuple(d.get("variables", ("r1", "r2"))))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def polygon(sys: HalfspaceSystem) -> Polygon2D:
    if sys.dim != 2:
        raise ValueError(f"need a 2-variable system, got {sys.variables}")
    return Polygon2D(tuple(convex_hull(vertices(sys))), tuple(sys.variables))


def systems_equal(a: HalfspaceSystem, b: HalfspaceSystem) -> bool:
    """Set equality of two bounded systems via their vertex sets."""
    if set(a.variables) != set(b.variables):
        raise ValueError(f"variable sets differ: {a.variables} vs {b.variables}")
    return vertices(a) == vertices(b.reordered(a.variables))
