"""Inequality systems: McCormick boxes, triangle and clique cuts, the
complete-split system, and the two extra odd-wheel cuts.

A LinearSystem holds rows over x-variables (1..nx) and y-variables (one per
declared pair). Row order is deterministic by construction: family blocks in
a fixed order, lexicographic parameters inside each block.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Tuple

from .graphs import Graph, all_pairs, pair_set, triangles
from .rational import render

Pair = Tuple[int, int]


@dataclass(frozen=True)
class Row:
    x_coefs: Tuple[Tuple[int, Fraction], ...]
    y_coefs: Tuple[Tuple[Pair, Fraction], ...]
    rel: str  # "<=" or ">="
    rhs: Fraction
    family: str
    note: str = ""

    def lhs_value(self, x: Dict[int, Fraction], y: Dict[Pair, Fraction]) -> Fraction:
        total = Fraction(0)
        for i, c in self.x_coefs:
            total += c * x[i]
        for p, c in self.y_coefs:
            total += c * y[p]
        return total

    def satisfied(self, x, y) -> bool:
        v = self.lhs_value(x, y)
        return v <= self.rhs if self.rel == "<=" else v >= self.rhs

    def slack(self, x, y) -> Fraction:
        """Nonnegative iff satisfied."""
        v = self.lhs_value(x, y)
        return self.rhs - v if self.rel == "<=" else v - self.rhs

    def to_json(self) -> dict:
        return {
            "x": {str(i): render(c) for i, c in self.x_coefs},
            "y": {f"{i},{j}": render(c) for (i, j), c in self.y_coefs},
            "rel": self.rel,
            "rhs": render(self.rhs),
            "family": self.family,
            "note": self.note,
        }


def _row(xc: Dict[int, Fraction], yc: Dict[Pair, Fraction], rel, rhs, family, note=""):
    return Row(
        x_coefs=tuple(sorted((i, Fraction(c)) for i, c in xc.items() if c != 0)),
        y_coefs=tuple(sorted((p, Fraction(c)) for p, c in yc.items() if c != 0)),
        rel=rel,
        rhs=Fraction(rhs),
        family=family,
        note=note,
    )


@dataclass(frozen=True)
class LinearSystem:
    nx: int
    pairs: Tuple[Pair, ...]
    rows: Tuple[Row, ...]

    def __post_init__(self):
        declared = set(self.pairs)
        for row in self.rows:
            for p, _ in row.y_coefs:
                if p not in declared:
                    raise ValueError(f"row references undeclared pair {p}")

    def with_rows(self, extra: List[Row]) -> "LinearSystem":
        return LinearSystem(self.nx, self.pairs, self.rows + tuple(extra))

    def to_json(self) -> dict:
        return {
            "nx": self.nx,
            "pairs": [list(p) for p in self.pairs],
            "rows": [r.to_json() for r in self.rows],
        }


def _box_rows(n: int) -> List[Row]:
    rows = []
    for i in range(1, n + 1):
        rows.append(_row({i: 1}, {}, ">=", 0, "box", f"x_{i} >= 0"))
        rows.append(_row({i: 1}, {}, "<=", 1, "box", f"x_{i} <= 1"))
    return rows


def _mccormick_rows(pairs, lb_pairs=None) -> List[Row]:
    """Per-pair rows; lb_pairs restricts which pairs get the two lower
    bounding rows (default: all)."""
    rows = []
    lb = set(pairs) if lb_pairs is None else set(lb_pairs)
    for i, j in pairs:
        tag = f"y_{i}{j}" if max(i, j) < 10 else f"y_{i},{j}"
        if (i, j) in lb:
            rows.append(_row({}, {(i, j): 1}, ">=", 0, "mccormick_lb", f"{tag} >= 0"))
        rows.append(_row({i: -1}, {(i, j): 1}, "<=", 0, "mccormick_ub", f"{tag} <= x_{i}"))
        rows.append(_row({j: -1}, {(i, j): 1}, "<=", 0, "mccormick_ub", f"{tag} <= x_{j}"))
        if (i, j) in lb:
            rows.append(
                _row({i: 1, j: 1}, {(i, j): -1}, "<=", 1, "mccormick_lb",
                     f"x_{i}+x_{j}-{tag} <= 1")
            )
    return rows


def mccormick(g: Graph, full: bool = False) -> LinearSystem:
    """M_n(G) (pairs = edges) or M_n (pairs = all of E*(V))."""
    pairs = tuple(all_pairs(g.n)) if full else tuple(g.edge_list())
    rows = _mccormick_rows(pairs) + _box_rows(g.n)
    return LinearSystem(g.n, pairs, tuple(rows))


def triangle_relaxation(g: Graph) -> LinearSystem:
    """McCormick over the edges plus one cut per triangle of g."""
    base = mccormick(g, full=False)
    extra = []
    for i, j, k in triangles(g):
        extra.append(
            _row({i: 1, j: 1, k: 1}, {(i, j): -1, (i, k): -1, (j, k): -1},
                 "<=", 1, "triangle", f"triangle {i},{j},{k}")
        )
    return base.with_rows(extra)


def clique_inequality(w, alpha: int) -> Row:
    """y(E*(W)) >= alpha*x(W) - C(alpha+1, 2)."""
    vs = sorted(w)
    if len(vs) < 2:
        raise ValueError("clique inequality needs |W| >= 2")
    if not 1 <= alpha <= len(vs) - 1:
        raise ValueError(f"alpha={alpha} out of range for |W|={len(vs)}")
    rhs = Fraction(-alpha * (alpha + 1), 2)
    xc = {i: Fraction(-alpha) for i in vs}
    yc = {p: Fraction(1) for p in pair_set(vs)}
    return _row(xc, yc, ">=", rhs, f"clique({','.join(map(str, vs))};{alpha})",
                f"y(E*(W)) >= {alpha} x(W) - C({alpha + 1},2)")


def split_relaxation(n1: int, n2: int) -> LinearSystem:
    """The complete-split system: upper bounds on every pair, lower bounds on
    clique-to-independent pairs, and clique cuts on V_1 together with every
    independent subset of size at most n1-1."""
    if n1 < 1:
        raise ValueError("clique part must be nonempty")
    n = n1 + n2
    pairs = tuple(all_pairs(n))
    v1 = list(range(1, n1 + 1))
    v2 = list(range(n1 + 1, n + 1))
    lb_pairs = {(i, j) for i in v1 for j in v2}
    rows: List[Row] = []
    for i, j in pairs:
        rows.append(_row({}, {(i, j): 1}, ">=", 0, "mccormick_lb", f"y_{i},{j} >= 0"))
    rows += _mccormick_rows(pairs, lb_pairs=lb_pairs)
    for size in range(0, n1):
        for s in combinations(v2, size):
            w = v1 + list(s)
            for alpha in range(1, n1):
                rows.append(clique_inequality(w, alpha))
    rows += _box_rows(n)
    return LinearSystem(n, pairs, tuple(rows))


def wheel_extra_inequalities(m: int) -> Tuple[Row, Row]:
    """The two odd-wheel cuts: with n = m+1 and E the wheel's edges,
    y(E) >= (m-1)/2 * x_n + sum x_i - (m-1)/2 and
    y(E) >= (m+1)/2 * x_n + 2 sum x_i - m."""
    if m % 2 == 0 or m < 3:
        raise ValueError("odd m >= 3 required")
    from .graphs import wheel

    g = wheel(m)
    n = m + 1
    yc = {e: Fraction(1) for e in g.edge_list()}
    half_low = Fraction(m - 1, 2)
    half_high = Fraction(m + 1, 2)
    xc1 = {i: Fraction(-1) for i in range(1, n)}
    xc1[n] = -half_low
    row1 = _row(xc1, yc, ">=", -half_low, "wheel_extra_1",
                f"y(E) >= {half_low} x_{n} + sum x - {half_low}")
    xc2 = {i: Fraction(-2) for i in range(1, n)}
    xc2[n] = -half_high
    row2 = _row(xc2, yc, ">=", Fraction(-m), "wheel_extra_2",
                f"y(E) >= {half_high} x_{n} + 2 sum x - {m}")
    return row1, row2
