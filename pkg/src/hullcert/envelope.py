"""Exact convex-envelope oracle for graph-quadratic functions.

For f(x) = sum_{ij in E} x_i x_j over the unit hypercube, the convex
envelope at a point equals the cheapest convex combination of hypercube
vertices averaging to that point. This is a small exact LP over all 2^n
vertices, so it is only practical for modest n; it serves as the
independent ground truth the certificate constructions are checked against.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import List, Sequence

from .graphs import Graph
from .lp import OPTIMAL, solve_lp

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_MAX_N = 16


def f_value(graph: Graph, x: Sequence[Fraction]) -> Fraction:
    """sum_{ij in E} x_i x_j (1-based edges)."""
    return sum((Fraction(x[i - 1]) * Fraction(x[j - 1])
                for i, j in graph.edge_list()), ZERO)


def _check_point(graph: Graph, x, max_n: int) -> List[Fraction]:
    n = graph.n
    if n > max_n:
        raise ValueError(
            f"envelope oracle enumerates 2^n hypercube vertices; n={n} "
            f"exceeds the limit {max_n} (raise max_n to override)")
    if len(x) != n:
        raise ValueError("x has wrong dimension")
    x = [Fraction(v) for v in x]
    if any(v < 0 or v > 1 for v in x):
        raise ValueError("x must lie in the unit hypercube")
    return x


def _master(graph: Graph, x: List[Fraction], vertices: List[Tuple]):
    cost = [f_value(graph, v) for v in vertices]
    rows = []
    for i in range(graph.n):
        rows.append(([v[i] for v in vertices], "=", x[i]))
    rows.append(([ONE] * len(vertices), "=", ONE))
    bounds = [(ZERO, ONE)] * len(vertices)
    res = solve_lp(cost, rows, bounds)
    if res.status != OPTIMAL:
        raise AssertionError(f"envelope LP ended with status {res.status}")
    return res


def _interval_columns(n: int, sets) -> List[tuple]:
    """Hypercube vertices read off an interval family X_1..X_n: for each
    elementary segment between consecutive endpoints, the 0/1 indicator of
    which sets cover it. Weighting each vertex by its segment length gives
    a convex combination averaging to (mu(X_1), ..., mu(X_n))."""
    points = {ZERO, ONE}
    for s in sets:
        points.update(s.endpoints())
    points = sorted(points)
    columns = []
    for a, b in zip(points, points[1:]):
        mid = (a + b) / 2
        columns.append(tuple(ONE if s.contains_point(mid) else ZERO
                             for s in sets))
    return columns


def envelope_value_bruteforce(graph: Graph, x: Sequence[Fraction], *,
                              max_n: int = DEFAULT_MAX_N) -> Fraction:
    """One exact LP over all 2^n hypercube vertices: min sum lam_v f(v)
    with sum lam_v v = x, sum lam = 1, lam >= 0. Reference implementation
    kept as the oracle's oracle."""
    x = _check_point(graph, x, max_n)
    vertices = list(product((ZERO, ONE), repeat=graph.n))
    return _master(graph, x, vertices).value


def envelope_value(graph: Graph, x: Sequence[Fraction], *,
                   max_n: int = DEFAULT_MAX_N,
                   known_lower_bound: Fraction | None = None,
                   hint_intervals=None) -> Fraction:
    """Convex envelope of f over [0,1]^n at x: same LP as the brute-force
    form, solved by column generation. The restricted master starts from
    the staircase decomposition of x (nested 0/1 indicators, always
    feasible) and repeatedly adds the hypercube vertex with the most
    negative reduced cost until none exists, which certifies optimality
    over all 2^n columns.

    known_lower_bound, when given, must be a valid lower bound on the
    envelope (any LP-relaxation bound qualifies). The restricted master
    value is always an upper bound on the envelope, so as soon as it hits
    the lower bound the envelope value is pinned exactly and the remaining
    pricing rounds are skipped.

    hint_intervals, when given, is a family of interval sets with
    mu(X_i) = x_i; its elementary-segment indicator vertices seed the
    restricted master. Hints never change the result, only how many
    pricing rounds it takes to certify it."""
    n = graph.n
    x = _check_point(graph, x, max_n)

    order = sorted(range(n), key=lambda i: -x[i])
    columns = []
    for k in range(n + 1):
        v = [ZERO] * n
        for i in order[:k]:
            v[i] = ONE
        columns.append(tuple(v))
    seen = set(columns)
    if hint_intervals is not None:
        for v in _interval_columns(n, list(hint_intervals)):
            if v not in seen:
                columns.append(v)
                seen.add(v)

    all_vertices = list(product((ZERO, ONE), repeat=n))
    costs = {v: f_value(graph, v) for v in all_vertices}

    batch = n + 1  # columns added per pricing round
    while True:
        res = _master(graph, x, columns)
        if known_lower_bound is not None:
            if res.value < known_lower_bound:
                raise AssertionError(
                    "known_lower_bound exceeds the envelope value")
            if res.value == known_lower_bound:
                return res.value
        y = res.duals
        y0 = y[n]
        violated = []
        for v in all_vertices:
            if v in seen:
                continue
            red = costs[v] - y0
            for i in range(n):
                if v[i]:
                    red -= y[i]
            if red < 0:
                violated.append((red, v))
        if not violated:
            return res.value
        violated.sort(key=lambda t: t[0])
        for _, v in violated[:batch]:
            columns.append(v)
            seen.add(v)


def upper_boundary(graph: Graph, x: Sequence[Fraction]) -> Fraction:
    """max{z : (x, z) in conv epigraph-region of f}, which for
    graph-quadratics is sum_{ij in E} min(x_i, x_j)."""
    return sum((min(Fraction(x[i - 1]), Fraction(x[j - 1]))
                for i, j in graph.edge_list()), ZERO)
