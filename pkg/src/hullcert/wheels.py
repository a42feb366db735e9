"""Interval certificates for even wheels.

Pipeline: for a wheel with even rim length m = n-1 and a point x, the lower
bound of the triangle relaxation equals

    Phi* = max over cyclically independent T of phi(T),

where phi(T) sums rim, spoke and triangle contributions depending on T.
The optimal T is found by max-weight independent set on the rim cycle,
then normalized to a canonical T*. A feasible point z of a small linear
system turns into interval sets X_1..X_n whose pairwise overlaps realize
phi(T*) as the edge sum, certifying exactness of the relaxation.

The module also builds the single-commodity flow network whose negative
cycles witness infeasibility of the z-system (equivalently, suboptimality
of T), and derives an improved T from such a cycle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .graphs import Graph, wheel
from . import intervals as iv
from .intervals import IntervalSet
from .relaxations import LinearSystem, Row, _row
from . import lp

ZERO = Fraction(0)
ONE = Fraction(1)


def _check_wheel_point(x: Sequence[Fraction]) -> List[Fraction]:
    x = [Fraction(v) for v in x]
    if len(x) < 4:
        raise ValueError("need at least 3 rim vertices plus a hub")
    if any(v < 0 or v > 1 for v in x):
        raise ValueError("x must lie in the unit hypercube")
    return x


def _succ(i: int, m: int) -> int:
    return 1 if i == m else i + 1


def _pred(i: int, m: int) -> int:
    return m if i == 1 else i - 1


def _is_cyclically_independent(T: Set[int], m: int) -> bool:
    return all(_succ(i, m) not in T for i in T)


@dataclass(frozen=True)
class WheelBounds:
    """Per-rim-index interval bounds used by the z-system and the network."""

    m_lo: Tuple[Fraction, ...]   # m_i  = max(0, x_i - x_n)
    m_hi: Tuple[Fraction, ...]   # M_i  = min(x_i, 1 - x_n)
    p_lo: Tuple[Fraction, ...]   # m'_i = min(1, x_i + x_{i+1}) - x_n
    p_hi: Tuple[Fraction, ...]   # M'_i = max(1, x_i + x_{i+1}) - x_n

    @staticmethod
    def from_point(x: Sequence[Fraction]) -> "WheelBounds":
        x = _check_wheel_point(x)
        m = len(x) - 1
        xn = x[-1]
        m_lo, m_hi, p_lo, p_hi = [], [], [], []
        for i in range(1, m + 1):
            xi = x[i - 1]
            xj = x[_succ(i, m) - 1]
            m_lo.append(max(ZERO, xi - xn))
            m_hi.append(min(xi, 1 - xn))
            p_lo.append(min(ONE, xi + xj) - xn)
            p_hi.append(max(ONE, xi + xj) - xn)
        b = WheelBounds(tuple(m_lo), tuple(m_hi), tuple(p_lo), tuple(p_hi))
        for i in range(m):
            assert b.m_lo[i] <= b.m_hi[i] and b.p_lo[i] <= b.p_hi[i]
        return b


@dataclass(frozen=True)
class TSelection:
    T: frozenset
    phi_value: Fraction
    normalized: bool


def _terms(x: List[Fraction], i: int):
    """A_i, B_i, C_i: the rim, spoke and triangle max-terms at rim index i."""
    m = len(x) - 1
    xn = x[-1]
    xi = x[i - 1]
    xj = x[_succ(i, m) - 1]
    a = max(ZERO, xi + xj - 1)
    b = max(ZERO, xi + xn - 1)
    c = max(ZERO, xi + xj + xn - 1)
    return a, b, c


def phi(x: Sequence[Fraction], T) -> Fraction:
    """phi(T): rim terms off T, spoke terms off T u (T+1), triangle terms
    on T."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    T = set(T)
    if not T.issubset(range(1, m + 1)):
        raise ValueError("T must be a subset of the rim indices")
    if not _is_cyclically_independent(T, m):
        raise ValueError("T contains cyclically adjacent indices")
    shifted = {_succ(i, m) for i in T}
    total = ZERO
    for i in range(1, m + 1):
        a, b, c = _terms(x, i)
        if i in T:
            total += c
        else:
            total += a
            if i not in shifted:
                total += b
    return total


def selection_weights(x: Sequence[Fraction]) -> Tuple[Fraction, List[Fraction]]:
    """phi(T) = base + sum_{i in T} w_i with w_i = C_i - A_i - B_i - B_{i+1}."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    base = ZERO
    abc = [_terms(x, i) for i in range(1, m + 1)]
    for a, b, _ in abc:
        base += a + b
    w = []
    for i in range(1, m + 1):
        a, b, c = abc[i - 1]
        b_next = abc[_succ(i, m) - 1][1]
        w.append(c - a - b - b_next)
    return base, w


def _max_is_cycle(w: List[Fraction], fixed: Dict[int, bool]) -> Optional[Fraction]:
    """Max-weight independent set value on the cycle 1..m, honoring fixed
    in/out decisions (1-based keys). None when fixed is itself infeasible."""
    m = len(w)

    def allowed(i: int, s: int) -> bool:
        want = fixed.get(i)
        return want is None or want == bool(s)

    best = None
    first_states = [s for s in (0, 1) if allowed(1, s)]
    for s1 in first_states:
        # dp over 2..m given the state of vertex 1
        dp = {s1: (w[0] if s1 else ZERO)}
        for i in range(2, m + 1):
            ndp = {}
            for s in (0, 1):
                if not allowed(i, s):
                    continue
                for ps, val in dp.items():
                    if s and ps:
                        continue
                    cand = val + (w[i - 1] if s else ZERO)
                    if s not in ndp or cand > ndp[s]:
                        ndp[s] = cand
            dp = ndp
            if not dp:
                break
        for s, val in dp.items():
            if s and s1 and m > 1:
                continue  # wrap edge (m, 1)
            if best is None or val > best:
                best = val
    return best


def optimal_T(x: Sequence[Fraction]) -> TSelection:
    """A normalized maximizer T* of phi. The maximum is a max-weight
    independent set on the rim cycle; ties break to the lexicographically
    smallest T (greedy earliest inclusion), then a fixpoint normalization
    establishes 1 <= x_i + x_{i+1} + x_n <= 2 on T* and maximality."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    base, w = selection_weights(x)
    fixed: Dict[int, bool] = {}
    best = _max_is_cycle(w, fixed)
    assert best is not None and best >= 0  # empty set is independent
    for i in range(1, m + 1):
        trial = dict(fixed)
        trial[i] = True
        if _max_is_cycle(w, trial) == best:
            fixed[i] = True
        else:
            fixed[i] = False
    T = {i for i, v in fixed.items() if v}
    phi_star = base + best
    assert phi(x, T) == phi_star

    T = _normalize(x, T, phi_star)
    return TSelection(frozenset(T), phi_star, True)


def _normalize(x: List[Fraction], T: Set[int], phi_star: Fraction) -> Set[int]:
    """Fixpoint of: drop i with x_i+x_{i+1}+x_n < 1; then add i with
    1 <= sum <= 2 whose closed neighborhood misses T. Removals run before
    additions, both in ascending index order; phi never decreases."""
    m = len(x) - 1
    xn = x[-1]

    def tri_sum(i: int) -> Fraction:
        return x[i - 1] + x[_succ(i, m) - 1] + xn

    T = set(T)
    current = phi(x, T)
    while True:
        changed = False
        for i in sorted(T):
            if tri_sum(i) < 1:
                T.remove(i)
                changed = True
        for i in range(1, m + 1):
            if i in T:
                continue
            if ONE <= tri_sum(i) <= 2 and not ({_pred(i, m), i, _succ(i, m)} & T):
                T.add(i)
                changed = True
        new = phi(x, T)
        assert new >= current, "normalization must not decrease phi"
        current = new
        if not changed:
            break
    assert current == phi_star
    for i in T:
        assert ONE <= tri_sum(i) <= 2
        assert _succ(i, m) not in T
    for i in range(1, m + 1):
        assert {_pred(i, m), i, _succ(i, m)} & T or not (ONE <= tri_sum(i) <= 2), \
            "normalized T must be maximal"
    return T


def brute_force_phi_star(x: Sequence[Fraction]) -> Fraction:
    """Exhaustive maximum of phi over all cyclically independent T (oracle)."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    best = None
    for mask in range(1 << m):
        T = {i + 1 for i in range(m) if mask >> i & 1}
        if not _is_cyclically_independent(T, m):
            continue
        val = phi(x, T)
        if best is None or val > best:
            best = val
    return best


# ---------------------------------------------------------------------------
# The z-system (rows over z_1..z_{n-1}) and interval construction
# ---------------------------------------------------------------------------


def z_system(x: Sequence[Fraction], tstar: TSelection) -> LinearSystem:
    """Linear system whose feasible points z yield interval certificates:
    z_i >= m_i on T* u (T*+1), z_i >= M_i off it, z_i <= M_i everywhere,
    z_i + z_{i+1} >= M'_i on T*, m'_i <= z_i + z_{i+1} <= M'_i off T*."""
    x = _check_wheel_point(x)
    if not tstar.normalized:
        raise ValueError("z_system requires a normalized T selection")
    m = len(x) - 1
    b = WheelBounds.from_point(x)
    T = set(tstar.T)
    shifted = T | {_succ(i, m) for i in T}
    rows: List[Row] = []
    for i in range(1, m + 1):
        if i in shifted:
            rows.append(_row({i: ONE}, {}, ">=", b.m_lo[i - 1],
                             family="z_lower", note=f"z_{i} >= m_{i}"))
        else:
            rows.append(_row({i: ONE}, {}, ">=", b.m_hi[i - 1],
                             family="z_lower", note=f"z_{i} >= M_{i}"))
    for i in range(1, m + 1):
        rows.append(_row({i: ONE}, {}, "<=", b.m_hi[i - 1],
                         family="z_upper", note=f"z_{i} <= M_{i}"))
    for i in range(1, m + 1):
        j = _succ(i, m)
        pair = {i: ONE, j: ONE} if i != j else {i: Fraction(2)}
        if i in T:
            rows.append(_row(pair, {}, ">=", b.p_hi[i - 1],
                             family="z_pair_lower",
                             note=f"z_{i}+z_{j} >= M'_{i}"))
        else:
            rows.append(_row(pair, {}, ">=", b.p_lo[i - 1],
                             family="z_pair_lower",
                             note=f"z_{i}+z_{j} >= m'_{i}"))
            rows.append(_row(pair, {}, "<=", b.p_hi[i - 1],
                             family="z_pair_upper",
                             note=f"z_{i}+z_{j} <= M'_{i}"))
    return LinearSystem(nx=m, pairs=(), rows=tuple(rows))


def feasible_z(x: Sequence[Fraction], tstar: TSelection) -> Optional[List[Fraction]]:
    """A feasible point of the z-system, or None when infeasible."""
    res = lp.feasible_point(z_system(x, tstar))
    if res.status != lp.OPTIMAL:
        return None
    return res.point


def build_intervals_wheel(x: Sequence[Fraction], tstar: TSelection,
                          z: Sequence[Fraction]) -> List[IntervalSet]:
    """Interval sets from a feasible z: X_n = [0, x_n); odd rim i gets
    [x_n, x_n + z_i) u [0, x_i - z_i); even rim i gets
    [1 - z_i, 1) u [x_n - x_i + z_i, x_n)."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    if m % 2 != 0:
        raise ValueError("interval construction requires an even rim length")
    z = [Fraction(v) for v in z]
    if len(z) != m:
        raise ValueError("z has wrong dimension")
    system = z_system(x, tstar)
    zv = {i + 1: z[i] for i in range(m)}
    for row in system.rows:
        if not row.satisfied(zv, {}):
            raise ValueError(f"z violates {row.note}")
    xn = x[-1]
    out: List[IntervalSet] = []
    for i in range(1, m + 1):
        xi = x[i - 1]
        zi = z[i - 1]
        if i % 2 == 1:
            out.append(iv.make([(xn, xn + zi), (ZERO, xi - zi)]))
        else:
            out.append(iv.make([(1 - zi, ONE), (xn - xi + zi, xn)]))
    out.append(iv.make([(ZERO, xn)]))
    for i, xset in enumerate(out):
        assert iv.measure(xset) == x[i], f"interval measure mismatch at {i + 1}"
    return out


def verify_eq_target(x: Sequence[Fraction], tstar: TSelection,
                     xs: Sequence[IntervalSet]) -> Dict:
    """Check that the interval overlaps realize phi(T*) as the wheel edge
    sum, along with the three per-index overlap equalities that
    characterize it."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    xn = x[-1]
    T = set(tstar.T)
    shifted = T | {_succ(i, m) for i in T}
    edge_sum = ZERO
    rim = {}
    spoke = {}
    for i in range(1, m + 1):
        j = _succ(i, m)
        rim[i] = iv.measure(iv.intersect(xs[i - 1], xs[j - 1]))
        spoke[i] = iv.measure(iv.intersect(xs[i - 1], xs[m]))
        edge_sum += rim[i] + spoke[i]
    conditions = []
    for i in sorted(T):
        j = _succ(i, m)
        lhs = rim[i] + spoke[i] + spoke[j]
        rhs = max(ZERO, x[i - 1] + x[j - 1] + xn - 1)
        conditions.append(("triangle", i, lhs == rhs))
    for i in range(1, m + 1):
        if i in T:
            continue
        j = _succ(i, m)
        rhs = max(ZERO, x[i - 1] + x[j - 1] - 1)
        conditions.append(("rim", i, rim[i] == rhs))
    for i in range(1, m + 1):
        if i in shifted:
            continue
        rhs = max(ZERO, x[i - 1] + xn - 1)
        conditions.append(("spoke", i, spoke[i] == rhs))
    target = tstar.phi_value
    ok = edge_sum == target and all(c[2] for c in conditions)
    return {
        "edge_sum": edge_sum,
        "phi": target,
        "conditions": conditions,
        "ok": ok,
    }


# ---------------------------------------------------------------------------
# Flow network and negative-cycle analysis
# ---------------------------------------------------------------------------

O_NODE = 0


@dataclass(frozen=True)
class Arc:
    tail: int
    head: int
    cost: Fraction
    label: str


@dataclass(frozen=True)
class FlowNetwork:
    m: int  # rim length; nodes are {0 (= O)} u {1..m}
    arcs: Tuple[Arc, ...]


def build_network(x: Sequence[Fraction], tstar: TSelection) -> FlowNetwork:
    """Dual network of the z-system: a negative directed cycle exists
    exactly when the z-system is infeasible."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    b = WheelBounds.from_point(x)
    T = set(tstar.T)
    shifted = T | {_succ(i, m) for i in T}
    arcs: List[Arc] = []
    for i in range(1, m + 1):
        odd = i % 2 == 1
        if i in shifted:
            lo = b.m_lo[i - 1]
        else:
            lo = b.m_hi[i - 1]
        hi = b.m_hi[i - 1]
        if odd:
            arcs.append(Arc(O_NODE, i, hi, f"pi+_{i}"))
            arcs.append(Arc(i, O_NODE, -lo, f"pi-_{i}"))
        else:
            arcs.append(Arc(O_NODE, i, -lo, f"pi-_{i}"))
            arcs.append(Arc(i, O_NODE, hi, f"pi+_{i}"))
    for i in range(1, m + 1):
        j = _succ(i, m)
        odd = i % 2 == 1
        if i in T:
            if odd:
                arcs.append(Arc(i, j, -b.p_hi[i - 1], f"sigma-_{i}"))
            else:
                arcs.append(Arc(j, i, -b.p_hi[i - 1], f"sigma-_{i}"))
        else:
            if odd:
                arcs.append(Arc(i, j, -b.p_lo[i - 1], f"sigma-_{i}"))
                arcs.append(Arc(j, i, b.p_hi[i - 1], f"sigma+_{i}"))
            else:
                arcs.append(Arc(j, i, -b.p_lo[i - 1], f"sigma-_{i}"))
                arcs.append(Arc(i, j, b.p_hi[i - 1], f"sigma+_{i}"))
    return FlowNetwork(m, tuple(arcs))


def assert_no_negative_cycle(net: FlowNetwork) -> Optional[List[int]]:
    """Bellman-Ford over exact rationals. Returns None when every directed
    cycle has nonnegative cost, else one negative cycle as a node list."""
    nodes = list(range(net.m + 1))
    dist = {v: ZERO for v in nodes}
    pred: Dict[int, Optional[Arc]] = {v: None for v in nodes}
    flagged = None
    for it in range(len(nodes)):
        changed = False
        for arc in net.arcs:
            nd = dist[arc.tail] + arc.cost
            if nd < dist[arc.head]:
                dist[arc.head] = nd
                pred[arc.head] = arc
                changed = True
                flagged = arc.head
        if not changed:
            return None
    # a relaxation on the last pass: walk predecessors to land on a cycle
    v = flagged
    for _ in nodes:
        v = pred[v].tail
    cycle = [v]
    u = pred[v].tail
    while u != v:
        cycle.append(u)
        u = pred[u].tail
    cycle.reverse()
    total = ZERO
    for k, node in enumerate(cycle):
        nxt = cycle[(k + 1) % len(cycle)]
        total += min(a.cost for a in net.arcs
                     if a.tail == node and a.head == nxt)
    assert total < 0, "extracted cycle is not negative"
    return cycle


def improved_T_from_cycle(x: Sequence[Fraction], T, cycle: List[int]):
    """Given a negative cycle in the network built for T, derive a
    cyclically independent T' with phi(T') > phi(T). A full-rim cycle
    replaces T wholesale by one parity class; a cycle through the root
    swaps the parity on the rim segment it covers. Both parities (covering
    forward and backward traversals) are tried and the best strictly
    improving candidate is returned."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    xn = x[-1]
    T = set(T)

    def tri_ok(i: int) -> bool:
        s = x[i - 1] + x[_succ(i, m) - 1] + xn
        return ONE <= s <= 2

    candidates: List[Set[int]] = []

    def segment_variants(seg: List[int]):
        seg_set = set(seg)
        for parity in (0, 1):
            cand = (T - seg_set) | {k for k in seg if k % 2 == parity and tri_ok(k)}
            candidates.append(cand)

    if O_NODE in cycle:
        k = cycle.index(O_NODE)
        rim_nodes = cycle[k + 1:] + cycle[:k]
        # forward reading: rim nodes i..j+1 swap the segment [i, j]
        for nodes in (rim_nodes, list(reversed(rim_nodes))):
            if len(nodes) >= 2:
                seg = []
                v = nodes[0]
                while v != nodes[-1]:
                    seg.append(v)
                    v = _succ(v, m)
                segment_variants(seg)
    else:
        segment_variants(list(range(1, m + 1)))

    base_phi = phi(x, T)
    best: Optional[Set[int]] = None
    best_phi = base_phi
    for cand in candidates:
        if not _is_cyclically_independent(cand, m):
            continue
        val = phi(x, cand)
        if val > best_phi:
            best, best_phi = cand, val
    if best is None:
        raise AssertionError("negative cycle yielded no improving T")
    return frozenset(best), best_phi


# ---------------------------------------------------------------------------
# Full pipeline
# ---------------------------------------------------------------------------


def wheel_certificate(x: Sequence[Fraction]) -> Dict:
    """Build and self-check an interval certificate proving that the
    triangle relaxation of an even wheel is exact at x. Returns the
    certificate payload; raises on any internal inconsistency."""
    x = _check_wheel_point(x)
    m = len(x) - 1
    if m % 2 != 0:
        raise ValueError("wheel certificates require an even rim length")
    tstar = optimal_T(x)
    z = feasible_z(x, tstar)
    if z is None:
        raise AssertionError("z-system infeasible for a normalized optimal T")
    xs = build_intervals_wheel(x, tstar, z)
    report = verify_eq_target(x, tstar, xs)
    if not report["ok"]:
        raise AssertionError("interval overlaps do not realize phi(T*)")
    return {
        "graph": wheel(m),
        "x": list(x),
        "Tstar": sorted(tstar.T),
        "phi": tstar.phi_value,
        "z": list(z),
        "intervals": xs,
        "checks": report,
    }
