"""Interval certificates for complete split graphs.

For a complete split graph (clique V_1 = {1..n1} joined to an independent
set V_2 = {n1+1..n}) and a point x, a greedy staircase construction builds
interval sets X_i whose pairwise overlaps realize the exact lower bound of
the McCormick-plus-clique relaxation. The bookkeeping vectors (a_p, A_p)
track the staircase of right endpoints and which vertices occupy each level;
from the final state a vertex set S is derived on which the binding clique
inequality lives, together with the integer alpha such that the height
function h(t) = |{i in V_1 u S : t in X_i}| only takes values alpha and
alpha + 1.

Boundary coordinates (x_i of 0 or 1) are handled by running the whole
construction on symbolically perturbed inputs (an exact infinitesimal
epsilon) and taking standard parts at the end, so every reported number is
an exact rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import envelope as env
from . import intervals as iv
from . import lp
from .graphs import Graph, complete_split
from .intervals import IntervalSet
from .perturb import Perturbed, std_part
from .relaxations import split_relaxation

ZERO = Fraction(0)
ONE = Fraction(1)


# ---------------------------------------------------------------------------
# Boundary perturbation
# ---------------------------------------------------------------------------


def interiorize(x: Sequence[Fraction]):
    """Push boundary coordinates into the open cube: 0 -> eps, 1 -> 1 - eps
    with eps = (smallest positive pairwise gap among {0, 1, x_i, 1-x_i}) /
    (4 n^2). Returns (x', eps, restore) where restore maps a finished list
    of interval sets back to the original point's boundary semantics
    (empty set for x_i = 0, all of [0,1) for x_i = 1)."""
    x = [Fraction(v) for v in x]
    n = len(x)
    if any(v < 0 or v > 1 for v in x):
        raise ValueError("x must lie in the unit hypercube")
    values = sorted({ZERO, ONE, *x, *(1 - v for v in x)})
    gaps = [b - a for a, b in zip(values, values[1:]) if b > a]
    eps = (min(gaps) if gaps else ONE) / (4 * n * n)
    xp = [eps if v == 0 else 1 - eps if v == 1 else v for v in x]

    def restore(xs: Sequence[IntervalSet]) -> List[IntervalSet]:
        out = []
        for v, xset in zip(x, xs):
            if v == 0:
                out.append(iv.EMPTY)
            elif v == 1:
                out.append(iv.full())
            else:
                out.append(xset)
        return out

    return xp, eps, restore


def symbolic_interiorize(x: Sequence[Fraction]) -> List[Perturbed]:
    """Same move with an exact infinitesimal: 0 -> eps, 1 -> 1 - eps where
    eps is a formal positive infinitesimal, so standard parts of the
    construction are the exact limit eps -> 0."""
    out = []
    for v in x:
        v = Fraction(v)
        if v == 0:
            out.append(Perturbed(ZERO, ONE))
        elif v == 1:
            out.append(Perturbed(ONE, -ONE))
        else:
            out.append(Perturbed(v))
    return out


# ---------------------------------------------------------------------------
# Greedy construction
# ---------------------------------------------------------------------------


@dataclass
class SplitState:
    """Staircase bookkeeping. a[p] and A[p] follow the fixed-length vector
    semantics of the construction: a has virtual indices 0..len-1 with
    a[0] = 1 and a trailing sentinel 0; A[p] (1-based via A[p-1] storage
    offset avoided -- A is indexed so that A[p] corresponds to a[p]) holds
    the vertices whose sets end at level a[p], with the sentinel vertex
    n + 1 occupying the trailing zero levels."""

    n1: int
    n2: int
    x: List  # sorted-desc-within-groups coordinates, possibly Perturbed
    a: List
    A: List[frozenset]  # A[0] unused placeholder so A[p] matches a[p]
    trace: List[Dict] = field(default_factory=list)

    def live_prefix(self):
        return [v for v in self.a if v > 0]


def construct_split(n1: int, n2: int, x: Sequence,
                    ) -> Tuple[List[IntervalSet], SplitState]:
    """Greedy staircase construction. Requires interior coordinates sorted
    non-increasingly within the clique block x_1..x_{n1} and within the
    independent block x_{n1+1}..x_n. Returns the clique interval sets
    X_1..X_{n1} and the final state (independent sets are X_j = [0, x_j))."""
    n = n1 + n2
    x = list(x)
    if len(x) != n:
        raise ValueError("x has wrong dimension")
    if any(not (0 < v < 1) for v in x):
        raise ValueError("construction requires interior coordinates")
    if any(x[i] < x[i + 1] for i in range(n1 - 1)):
        raise ValueError("clique coordinates must be sorted non-increasingly")
    if any(x[i] < x[i + 1] for i in range(n1, n - 1)):
        raise ValueError("independent coordinates must be sorted non-increasingly")

    sentinel = n + 1
    a = [ONE] + [x[n1 + j] for j in range(n2)] + [ZERO]
    A = [frozenset()] + [frozenset({n1 + 1 + j}) for j in range(n2)] \
        + [frozenset({sentinel})]
    state = SplitState(n1, n2, x, a, A)
    xs: List[IntervalSet] = []
    for i in range(1, n1 + 1):
        xi = x[i - 1]
        p = next(k for k in range(len(a)) if a[k] + xi < 1)
        if p == 0:
            raise AssertionError("a_0 = 1 can never admit an interior x_i")
        xset = iv.make([(a[p - 1], ONE), (a[p], a[p] + a[p - 1] + xi - 1)])
        xs.append(xset)
        if p == 1:
            a[1] = a[1] + xi
            A[1] = A[1] | {i}
        else:
            a[p - 1] = a[p] + a[p - 1] + xi - 1
            A[p - 1] = A[p] | A[p - 1] | {i}
            del a[p]
            del A[p]
        # fixed-length semantics: shifting pulls in trailing zero levels,
        # so keep at least one sentinel level available
        if a[-1] != 0:
            a.append(ZERO)
            A.append(frozenset({sentinel}))
        assert iv.measure(xset) == xi
        assert all(a[q] >= a[q + 1] for q in range(len(a) - 1)), \
            "staircase must stay non-increasing"
        state.trace.append({
            "i": i, "p": p, "interval_set": xset,
            "a": list(a), "A": [set(s) for s in A],
        })
    return xs, state


def v2_interval_sets(n1: int, n2: int, x: Sequence) -> List[IntervalSet]:
    return [iv.make([(ZERO, x[n1 + j])]) for j in range(n2)]


# ---------------------------------------------------------------------------
# The set S
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SDerivation:
    k: int
    j: Tuple[int, ...]        # j_p = max A_p for p in [k]
    p0: Optional[int]         # min{p : |A_p| > 1}; None when no A_p ever grew
    j_star: Optional[int]
    S: frozenset
    case: int                 # 1 drops j_star as well, 2 does not


def derive_S(state: SplitState) -> SDerivation:
    """Read S off the final staircase: k is the number of levels holding an
    independent vertex, j_p the top vertex of each, j* the first independent
    vertex of the first level that ever grew."""
    n1, n2 = state.n1, state.n2
    n = n1 + n2
    v2 = set(range(n1 + 1, n + 1))
    k = sum(1 for p in range(1, len(state.A)) if state.A[p] & v2)
    j = tuple(max(state.A[p]) for p in range(1, k + 1))
    grown = [p for p in range(1, len(state.A)) if len(state.A[p]) > 1]
    p0 = min(grown) if grown else None
    j_star = None
    if p0 is not None:
        pool = state.A[p0] & v2
        if pool:
            j_star = min(pool)

    _assert_sandwich(state, k, j, p0, j_star)

    a1 = state.A[1]
    v1 = set(range(1, n1 + 1))
    # the sentinel vertex n+1 acts as a virtual independent vertex with
    # x = 0 (it can be merged into A_1 through a zero staircase level), so
    # it counts on the independent side of the case condition
    v2ext = v2 | {n + 1}
    if p0 is not None and j_star is not None and (
            p0 >= 2 or len(a1 & v2ext) == len(a1 & v1) + 1):
        S = frozenset(v2 - set(j) - {j_star})
        case = 1
    else:
        assert p0 is None or j_star is None or len(a1 & v2ext) <= len(a1 & v1)
        S = frozenset(v2 - set(j))
        case = 2
    return SDerivation(k, j, p0, j_star, S, case)


def _assert_sandwich(state: SplitState, k, j, p0, j_star):
    """0 = a_{k+1} <= x_{j_k} <= a_k <= ... <= a_{p} <= x_{j_{p-1}} ...,
    with equality x_{j_p} = a_p below p0."""
    x = state.x
    n = state.n1 + state.n2

    def xv(vertex):  # sentinel vertex n+1 carries x = 0
        return ZERO if vertex == n + 1 else x[vertex - 1]

    for p in range(1, k + 1):
        nxt = state.a[p + 1] if p + 1 < len(state.a) else ZERO
        assert nxt <= xv(j[p - 1]) <= state.a[p], "sandwich chain violated"
        if p0 is None or p < p0:
            assert xv(j[p - 1]) == state.a[p], "sandwich chain violated"
    if j_star is not None and p0 is not None and p0 >= 2:
        assert state.a[p0] <= xv(j_star) <= xv(j[p0 - 2]), \
            "sandwich chain violated"


# ---------------------------------------------------------------------------
# The height function and the three structural checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HeightFunction:
    breakpoints: Tuple  # 0 = t_0 < t_1 < ... < t_r = 1
    values: Tuple[int, ...]  # value on [t_s, t_{s+1})

    def distinct_values(self):
        return sorted(set(self.values))


def height_function(sets: Sequence[IntervalSet]) -> HeightFunction:
    points = {ZERO, ONE}
    for s in sets:
        points.update(s.endpoints())
    bps = sorted(points)
    vals = []
    for aa, bb in zip(bps, bps[1:]):
        vals.append(sum(1 for s in sets if s.contains_point(aa)))
    return HeightFunction(tuple(bps), tuple(vals))


def _floor(value) -> int:
    if isinstance(value, Perturbed):
        f = floor(value.std)
        if value.std == f and value.eps < 0:
            return f - 1
        return f
    return floor(value)


def check_S_properties(n1: int, n2: int, x: Sequence,
                       xs_all: Sequence[IntervalSet],
                       S: frozenset) -> Dict:
    """Three exact checks: |S| <= n1 - 1; interactions with independent
    vertices outside S collapse to max(0, x_i + x_j - 1); the occupancy
    height over V_1 u S stays within {alpha, alpha + 1} for
    alpha = floor(x(V_1 u S))."""
    n = n1 + n2
    v2 = set(range(n1 + 1, n + 1))
    size_ok = len(S) <= n1 - 1
    small = []
    for i in range(1, n1 + 1):
        for jv in sorted(v2 - S):
            got = iv.measure(iv.intersect(xs_all[i - 1], xs_all[jv - 1]))
            want = max(0 * x[i - 1], x[i - 1] + x[jv - 1] - 1)
            small.append((i, jv, got == want))
    members = sorted(set(range(1, n1 + 1)) | S)
    h = height_function([xs_all[i - 1] for i in members])
    total = sum((x[i - 1] for i in members), ZERO * ONE)
    alpha = _floor(total)
    heights_ok = set(h.distinct_values()) <= {alpha, alpha + 1}
    return {
        "size_ok": size_ok,
        "small_intersections_ok": all(t[2] for t in small),
        "small_intersections": small,
        "height": h,
        "alpha": alpha,
        "heights_ok": heights_ok,
        "ok": size_ok and all(t[2] for t in small) and heights_ok,
    }


def accounting_identity(n1: int, n2: int, x: Sequence, S: frozenset,
                        alpha: int):
    """Right-hand side of the exactness accounting: the edge sum equals
    alpha x(V_1 u S) - C(alpha+1, 2) - sum_{l=2..k} (l-1) x_{s_l}
    + sum_{i in V_1, j in V_2 \\ S} max(0, x_i + x_j - 1), where s_1 >= s_2
    >= ... enumerates x over S in non-increasing order."""
    n = n1 + n2
    v2 = set(range(n1 + 1, n + 1))
    members = sorted(set(range(1, n1 + 1)) | S)
    total = sum((x[i - 1] for i in members), ZERO * ONE)
    value = alpha * total - Fraction(alpha * (alpha + 1), 2)
    s_sorted = sorted((x[j - 1] for j in S), reverse=True)
    for l, xv in enumerate(s_sorted, start=1):
        value = value - (l - 1) * xv
    for i in range(1, n1 + 1):
        for jv in sorted(v2 - S):
            value = value + max(0 * x[i - 1], x[i - 1] + x[jv - 1] - 1)
    return value


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------


def _sort_within_groups(n1: int, n2: int, x: Sequence):
    """Non-increasing order inside each block, ties by original index.
    Returns (sorted values, order) with order[k] = original index (0-based)
    of sorted position k."""
    def block(indices):
        return sorted(indices, key=lambda i: (-std_part(x[i]),
                                              -(x[i] - std_part(x[i])), i))
    order = block(range(n1)) + block(range(n1, n1 + n2))
    return [x[i] for i in order], order


def split_edge_sum(n1: int, n2: int, xs_all: Sequence[IntervalSet]):
    g = complete_split(n1, n2)
    return sum((iv.measure(iv.intersect(xs_all[i - 1], xs_all[j - 1]))
                for i, j in g.edge_list()), ZERO * ONE)


def split_certificate(n1: int, n2: int, x: Sequence[Fraction],
                      check_lb: bool = True,
                      check_envelope: bool = True) -> Dict:
    """Build and self-check an interval certificate proving exactness of
    the complete-split relaxation at x. Boundary coordinates go through the
    symbolic perturbation; all reported quantities are exact rationals in
    the caller's coordinate order."""
    n = n1 + n2
    x = [Fraction(v) for v in x]
    if len(x) != n:
        raise ValueError("x has wrong dimension")
    if any(v < 0 or v > 1 for v in x):
        raise ValueError("x must lie in the unit hypercube")
    _, eps, _ = interiorize(x)
    xp = symbolic_interiorize(x)
    xs_sorted, order = _sort_within_groups(n1, n2, xp)

    clique_sets, state = construct_split(n1, n2, xs_sorted)
    all_sorted = clique_sets + v2_interval_sets(n1, n2, xs_sorted)
    sder = derive_S(state)
    props = check_S_properties(n1, n2, xs_sorted, all_sorted, sder.S)
    if not props["ok"]:
        raise AssertionError("structural checks failed on the perturbed point")

    perturbed_sum = split_edge_sum(n1, n2, all_sorted)
    identity = accounting_identity(n1, n2, xs_sorted, sder.S, props["alpha"])
    if perturbed_sum != identity:
        raise AssertionError("edge sum does not match the accounting identity")

    # back to caller coordinates, exact limit of the perturbation
    xs_caller: List[IntervalSet] = [None] * n
    for pos, orig in enumerate(order):
        xs_caller[orig] = all_sorted[pos]
    restored = []
    for i in range(n):
        if x[i] == 0:
            restored.append(iv.EMPTY)
        elif x[i] == 1:
            restored.append(iv.full())
        else:
            restored.append(iv.standard_part(xs_caller[i]))
    for i in range(n):
        assert iv.measure(restored[i]) == x[i]

    edge_sum = split_edge_sum(n1, n2, restored)
    assert edge_sum == std_part(perturbed_sum)

    graph = complete_split(n1, n2)
    lb_value = None
    if check_lb:
        lb_value = lp.lb(split_relaxation(n1, n2), graph, x)
        if lb_value != edge_sum:
            raise AssertionError("edge sum does not meet the LP lower bound")
    env_value = None
    if check_envelope and n <= env.DEFAULT_MAX_N:
        env_value = env.envelope_value(graph, x, known_lower_bound=lb_value,
                                       hint_intervals=restored)
        if env_value != edge_sum:
            raise AssertionError("edge sum does not meet the envelope oracle")

    # S in caller vertex labels
    s_caller = frozenset(order[j - 1] + 1 for j in sder.S)
    return {
        "graph": graph,
        "x": list(x),
        "epsilon": eps,
        "order": order,
        "S": sorted(s_caller),
        "S_sorted_labels": sorted(sder.S),
        "case": sder.case,
        "alpha": props["alpha"],
        "edge_sum": edge_sum,
        "identity": std_part(identity),
        "lb": lb_value,
        "envelope": env_value,
        "intervals": restored,
        "state": state,
        "derivation": sder,
        "checks": props,
    }
