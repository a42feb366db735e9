"""Interval certificates for convex hulls of graph-quadratic functions.

Given a graph G and f(x) = sum_{ij in E} x_i x_j, this package builds
linear relaxations (McCormick, triangle, complete-split clique systems),
computes exact LP lower bounds and exact convex-envelope values, and
constructs interval certificates proving the relaxations exact for even
wheels and complete split graphs.
"""

from .envelope import envelope_value, envelope_value_bruteforce, f_value, upper_boundary
from .graphs import Graph, complete_split, generic, is_bipartite, wheel
from .intervals import IntervalSet
from .lp import LPResult, feasible_point, lb, solve_lp
from .perturb import Perturbed, std_part
from .rational import Rational, parse_rational, parse_vector, render
from .relaxations import (LinearSystem, Row, clique_inequality, mccormick,
                          split_relaxation, triangle_relaxation,
                          wheel_extra_inequalities)
from .splits import (construct_split, derive_S, interiorize,
                     split_certificate)
from .verify import (Certificate, check_certificate,
                     check_membership_preconditions, exactness_verdict,
                     five_wheel_counterexample)
from .wheels import (FlowNetwork, TSelection, WheelBounds,
                     assert_no_negative_cycle, build_intervals_wheel,
                     build_network, optimal_T, phi, verify_eq_target,
                     wheel_certificate, z_system)

__all__ = [
    "Certificate", "FlowNetwork", "Graph", "IntervalSet", "LPResult",
    "LinearSystem", "Perturbed", "Rational", "Row", "TSelection",
    "WheelBounds", "assert_no_negative_cycle", "build_intervals_wheel",
    "build_network", "check_certificate", "check_membership_preconditions",
    "clique_inequality", "complete_split", "construct_split", "derive_S",
    "envelope_value", "envelope_value_bruteforce", "exactness_verdict",
    "f_value", "feasible_point", "five_wheel_counterexample", "generic",
    "interiorize", "is_bipartite", "lb", "mccormick", "optimal_T",
    "parse_rational", "parse_vector", "phi", "render", "solve_lp",
    "split_certificate", "split_relaxation", "std_part",
    "triangle_relaxation", "upper_boundary", "verify_eq_target", "wheel",
    "wheel_certificate", "wheel_extra_inequalities", "z_system",
]

__version__ = "1.0.0"
