"""Certificate validation and exactness verdicts.

An interval certificate claims that the projection of a relaxation P equals
the convex hull X(f) at a point x: it carries interval sets X_1..X_n with
mu(X_i) = x_i whose pairwise overlap sum along the edges is at least (here:
exactly equals) the LP lower bound LB_P(x). This module re-checks such
certificates from scratch, checks the two structural hypotheses the
characterization needs from P, and reproduces the 5-wheel counterexample
showing that McCormick + triangle rows are not always enough.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import envelope as env
from . import intervals as ivx
from . import lp
from .graphs import Graph, all_pairs, wheel
from .intervals import IntervalSet
from .relaxations import (LinearSystem, triangle_relaxation,
                          wheel_extra_inequalities)

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass
class Certificate:
    graph: Graph
    x: List[Fraction]
    sets: List[IntervalSet]
    claimed_lb: Fraction
    relaxation: str
    metadata: Dict = field(default_factory=dict)


def check_certificate(cert: Certificate, system: LinearSystem) -> Dict:
    """Re-derive everything the certificate claims: measures, edge sum,
    and the LP lower bound. Passes iff the measures match and
    LB >= edge sum; equality is reported separately (the constructions in
    this package always achieve it)."""
    g = cert.graph
    measures_ok = all(
        ivx.measure(cert.sets[i]) == Fraction(cert.x[i]) for i in range(g.n))
    edge_sum = sum((ivx.measure(ivx.intersect(cert.sets[i - 1],
                                              cert.sets[j - 1]))
                    for i, j in g.edge_list()), ZERO)
    res = lp.lb_result(system, g, cert.x)
    lb_value = res.value if res.status == lp.OPTIMAL else None
    ok = (measures_ok and lb_value is not None and lb_value >= edge_sum
          and cert.claimed_lb == edge_sum)
    return {
        "measures_ok": measures_ok,
        "edge_sum": edge_sum,
        "lb": lb_value,
        "claimed_lb": cert.claimed_lb,
        "lb_meets_edge_sum": lb_value is not None and lb_value >= edge_sum,
        "equality": lb_value == edge_sum,
        "tight_row_families": sorted({system.rows[r].family
                                      for r in res.tight_rows})
        if res.status == lp.OPTIMAL else [],
        "ok": ok,
    }


def check_membership_preconditions(system: LinearSystem, g: Graph,
                                 x: Sequence[Fraction]) -> Dict:
    """The characterization needs two things from P at x: (1) every edge
    coordinate is capped by min(x_i, x_j); (2) the point with
    y_ij = min(x_i, x_j) on edges (and the standard lower-bound value
    max(0, x_i + x_j - 1) on declared non-edge pairs) lies in P."""
    x = [Fraction(v) for v in x]
    cap_ok = True
    cap_witness = None
    for (i, j) in g.edge_list():
        res = lp.minimize_over(system, x, {(i, j): -ONE})
        if res.status != lp.OPTIMAL:
            cap_ok, cap_witness = False, {"edge": (i, j), "status": res.status}
            break
        max_y = -res.value
        if max_y > min(x[i - 1], x[j - 1]):
            cap_ok = False
            cap_witness = {"edge": (i, j), "max": max_y,
                           "cap": min(x[i - 1], x[j - 1])}
            break
    y = {}
    for (i, j) in system.pairs:
        if g.has_edge(i, j):
            y[(i, j)] = min(x[i - 1], x[j - 1])
        else:
            y[(i, j)] = max(ZERO, x[i - 1] + x[j - 1] - 1)
    xv = {i + 1: x[i] for i in range(g.n)}
    violations = [row.note or row.family for row in system.rows
                  if not row.satisfied(xv, y)]
    return {
        "edge_cap_ok": cap_ok,
        "edge_cap_witness": cap_witness,
        "min_point_feasible": not violations,
        "min_point_violations": violations,
        "ok": cap_ok and not violations,
    }


def exactness_verdict(system: LinearSystem, g: Graph,
                      x: Sequence[Fraction]) -> Dict:
    """Pointwise comparison of the relaxation's lower bound against the
    true convex envelope."""
    lb_value = lp.lb(system, g, x)
    env_value = env.envelope_value(g, x)
    return {
        "lb": lb_value,
        "envelope": env_value,
        "exact_at_x": lb_value == env_value,
        "gap": env_value - lb_value,
    }


def five_wheel_counterexample() -> Dict:
    """The two witness points showing that for the 5-wheel the triangle
    relaxation plus either one of the two extra odd-wheel rows is not
    enough: each point satisfies all triangle-relaxation rows and one
    extra row while violating the other by exactly 1/6."""
    g = wheel(5)
    system = triangle_relaxation(g)
    row1, row2 = wheel_extra_inequalities(5)
    rim = [tuple(sorted((i, i % 5 + 1))) for i in range(1, 6)]
    spokes = [(i, 6) for i in range(1, 6)]
    chords = [p for p in all_pairs(6) if p not in set(rim) | set(spokes)]

    def point(x_rim, x_hub, y_spoke, y_rim, y_chord):
        x = [x_rim] * 5 + [x_hub]
        y = {}
        for e in spokes:
            y[e] = y_spoke
        for e in rim:
            y[e] = y_rim
        for e in chords:
            y[e] = y_chord
        return x, y

    reports = {}
    for name, (x, y), good_row, bad_row in (
        ("left", point(Fraction(1, 3), Fraction(2, 3), Fraction(1, 6),
                       ZERO, Fraction(1, 6)), row2, row1),
        ("right", point(Fraction(2, 3), Fraction(1, 3), Fraction(1, 6),
                        Fraction(1, 3), Fraction(1, 2)), row1, row2),
    ):
        xv = {i + 1: x[i] for i in range(6)}
        ye = {e: y[e] for e in set(rim) | set(spokes)}  # edge coords only
        triangle_ok = all(row.satisfied(xv, y) for row in system.rows)
        y_edge_sum = sum((ye[e] for e in ye), ZERO)
        violation = bad_row.slack(xv, ye)
        satisfied = good_row.satisfied(xv, ye)
        reports[name] = {
            "x": x,
            "y_edge_sum": y_edge_sum,
            "projection": x + [y_edge_sum],
            "triangle_rows_ok": triangle_ok,
            "violated_row": bad_row.family,
            "violation": -violation,  # positive amount by which it fails
            "other_row_ok": satisfied,
            "ok": triangle_ok and satisfied and -violation == Fraction(1, 6),
        }
    reports["ok"] = reports["left"]["ok"] and reports["right"]["ok"]
    return reports
