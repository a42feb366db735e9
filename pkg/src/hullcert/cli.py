"""Command-line front end.

Subcommands map 1:1 onto the library pipelines:

    lb          exact LP lower bound of a relaxation at a point
    envelope    exact convex-envelope value at a point
    wheel-cert  build + verify an even-wheel interval certificate
    split-cert  build + verify a complete-split interval certificate
    verify      re-check a certificate JSON produced by the cert commands
    five-wheel  reproduce the 5-wheel counterexample report
    suite       seeded random property suites over a graph family

Exit codes: 0 all checks passed, 1 some check failed, 2 usage error.
Reports are JSON (schema "hullcert-report/1"), written to stdout or --out;
all rationals render as "p/q" so identical inputs give identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from typing import Dict, List, Optional

from . import envelope as env
from . import intervals as iv
from . import lp
from . import splits
from . import verify as verify_mod
from . import wheels
from .graphs import Graph, complete_split, generic, wheel
from .rational import parse_rational, parse_vector, render
from .relaxations import (mccormick, split_relaxation, triangle_relaxation,
                          wheel_extra_inequalities)

SCHEMA = "hullcert-report/1"


class UsageError(Exception):
    pass


def _jsonify(value):
    if isinstance(value, Fraction):
        return render(value)
    if isinstance(value, iv.IntervalSet):
        return iv.to_json(value)
    if isinstance(value, Graph):
        return value.to_json()
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, (frozenset, set)):
        return sorted(_jsonify(v) for v in value)
    return value


def _emit(report: Dict, out: Optional[str]) -> None:
    payload = {"schema": SCHEMA, **_jsonify(report)}
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _graph_from_args(args) -> Graph:
    if args.graph:
        with open(args.graph) as fh:
            return Graph.from_json(json.load(fh))
    if args.family == "wheel":
        if args.m is None:
            raise UsageError("--family wheel requires --m")
        return wheel(args.m)
    if args.family == "split":
        if args.n1 is None or args.n2 is None:
            raise UsageError("--family split requires --n1 and --n2")
        return complete_split(args.n1, args.n2)
    raise UsageError("provide --graph FILE or --family wheel/split")


def _system_for(graph: Graph, relaxation: str):
    if relaxation == "mccormick":
        return mccormick(graph)
    if relaxation == "mccormick-full":
        return mccormick(graph, full=True)
    if relaxation == "triangle":
        return triangle_relaxation(graph)
    if relaxation == "split":
        if graph.family != "complete_split":
            raise UsageError("--relaxation split needs a complete split graph")
        n1, n2 = graph.params
        return split_relaxation(n1, n2)
    raise UsageError(f"unknown relaxation {relaxation!r}")


def _cmd_lb(args) -> int:
    graph = _graph_from_args(args)
    x = parse_vector(args.x)
    if len(x) != graph.n:
        raise UsageError("--x dimension does not match the graph")
    system = _system_for(graph, args.relaxation)
    res = lp.lb_result(system, graph, x)
    if res.status != lp.OPTIMAL:
        raise UsageError(f"LP ended with status {res.status}")
    _emit({
        "command": "lb",
        "graph": graph,
        "relaxation": args.relaxation,
        "x": x,
        "lb": res.value,
        "tight_row_families": sorted({system.rows[r].family
                                      for r in res.tight_rows}),
    }, args.out)
    return 0


def _cmd_envelope(args) -> int:
    graph = _graph_from_args(args)
    x = parse_vector(args.x)
    if len(x) != graph.n:
        raise UsageError("--x dimension does not match the graph")
    value = env.envelope_value(graph, x, max_n=args.max_n)
    _emit({
        "command": "envelope",
        "graph": graph,
        "x": x,
        "envelope": value,
        "f": env.f_value(graph, x),
        "upper_boundary": env.upper_boundary(graph, x),
    }, args.out)
    return 0


def _cmd_wheel_cert(args) -> int:
    x = parse_vector(args.x)
    cert = wheels.wheel_certificate(x)
    report = {
        "command": "wheel-cert",
        "graph": cert["graph"],
        "x": cert["x"],
        "Tstar": cert["Tstar"],
        "phi": cert["phi"],
        "z": cert["z"],
        "intervals": cert["intervals"],
        "edge_sum": cert["checks"]["edge_sum"],
        "ok": cert["checks"]["ok"],
    }
    _emit(report, args.out)
    return 0 if cert["checks"]["ok"] else 1


def _cmd_split_cert(args) -> int:
    x = parse_vector(args.x)
    cert = splits.split_certificate(args.n1, args.n2, x,
                                    check_lb=not args.skip_lb,
                                    check_envelope=not args.skip_envelope)
    report = {
        "command": "split-cert",
        "graph": cert["graph"],
        "x": cert["x"],
        "S": cert["S"],
        "alpha": cert["alpha"],
        "case": cert["case"],
        "intervals": cert["intervals"],
        "edge_sum": cert["edge_sum"],
        "lb": cert["lb"],
        "envelope": cert["envelope"],
        "ok": True,
    }
    _emit(report, args.out)
    return 0


def _cmd_verify(args) -> int:
    with open(args.certificate) as fh:
        data = json.load(fh)
    graph = Graph.from_json(data["graph"])
    raw = data["x"] if isinstance(data["x"], list) else data["x"].split(",")
    x = [parse_rational(str(v)) for v in raw]
    sets = [iv.from_json(s) for s in data["intervals"]]
    claimed = data.get("edge_sum") or data.get("phi")
    claimed = Fraction(claimed)
    relaxation = data.get("relaxation") or (
        "triangle" if graph.family == "wheel" else
        "split" if graph.family == "complete_split" else "mccormick")
    system = _system_for(graph, relaxation)
    cert = verify_mod.Certificate(graph, x, sets, claimed, relaxation)
    report = verify_mod.check_certificate(cert, system)
    _emit({"command": "verify", "relaxation": relaxation, **report}, args.out)
    return 0 if report["ok"] else 1


def _cmd_five_wheel(args) -> int:
    report = verify_mod.five_wheel_counterexample()
    _emit({"command": "five-wheel", **report}, args.out)
    return 0 if report["ok"] else 1


def _random_x(rng: random.Random, n: int, boundary_prob: float) -> List[Fraction]:
    out = []
    for _ in range(n):
        if boundary_prob and rng.random() < boundary_prob:
            out.append(Fraction(rng.choice((0, 1))))
        else:
            den = rng.choice((8, 10, 12))
            out.append(Fraction(rng.randint(0, den), den))
    return out


def _cmd_suite(args) -> int:
    rng = random.Random(args.seed)
    results = []
    ok = True
    if args.family == "even-wheel":
        ms = [int(tok) for tok in args.m.split(",")] if args.m else [4, 6]
        for m in ms:
            g = wheel(m)
            system = triangle_relaxation(g)
            for s in range(args.samples):
                x = _random_x(rng, m + 1, args.boundary_prob)
                cert = wheels.wheel_certificate(x)
                lb_value = lp.lb(system, g, x)
                env_value = env.envelope_value(g, x)
                passed = (cert["phi"] == cert["checks"]["edge_sum"]
                          == lb_value == env_value)
                ok = ok and passed
                results.append({"family": f"wheel({m})", "sample": s,
                                "x": x, "phi": cert["phi"], "lb": lb_value,
                                "envelope": env_value, "ok": passed})
    elif args.family == "split":
        sizes = [tuple(int(t) for t in tok.split("-"))
                 for tok in (args.sizes or "2-1,3-2").split(",")]
        for n1, n2 in sizes:
            for s in range(args.samples):
                x = _random_x(rng, n1 + n2, args.boundary_prob)
                cert = splits.split_certificate(n1, n2, x)
                passed = cert["edge_sum"] == cert["lb"] == cert["envelope"]
                ok = ok and passed
                results.append({"family": f"complete_split({n1},{n2})",
                                "sample": s, "x": x,
                                "edge_sum": cert["edge_sum"],
                                "lb": cert["lb"],
                                "envelope": cert["envelope"], "ok": passed})
    elif args.family == "bipartite":
        for s in range(args.samples):
            n = rng.randint(2, 8)
            sides = [rng.randint(0, 1) for _ in range(n)]
            edges = [(i, j) for i in range(1, n + 1)
                     for j in range(i + 1, n + 1)
                     if sides[i - 1] != sides[j - 1] and rng.random() < 0.6]
            g = generic(n, edges)
            system = mccormick(g)
            x = _random_x(rng, n, args.boundary_prob)
            lb_value = lp.lb(system, g, x)
            env_value = env.envelope_value(g, x)
            passed = lb_value == env_value
            ok = ok and passed
            results.append({"family": "bipartite", "sample": s, "n": n,
                            "edges": edges, "x": x, "lb": lb_value,
                            "envelope": env_value, "ok": passed})
    else:
        raise UsageError(f"unknown suite family {args.family!r}")
    _emit({"command": "suite", "family": args.family, "seed": args.seed,
           "samples": args.samples, "ok": ok, "results": results}, args.out)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullcert",
        description="Interval certificates for convex hulls of "
                    "graph-quadratic functions")
    sub = parser.add_subparsers(dest="command")

    def add_graph_args(p):
        p.add_argument("--graph", help="graph JSON file")
        p.add_argument("--family", choices=["wheel", "split"])
        p.add_argument("--m", type=int, help="rim length for --family wheel")
        p.add_argument("--n1", type=int, help="clique size for --family split")
        p.add_argument("--n2", type=int,
                       help="independent-set size for --family split")

    p = sub.add_parser("lb", help="exact LP lower bound at a point")
    add_graph_args(p)
    p.add_argument("--relaxation", default="mccormick",
                   choices=["mccormick", "mccormick-full", "triangle",
                            "split"])
    p.add_argument("--x", required=True,
                   help="comma-separated rationals (decimals or p/q)")
    p.add_argument("--out")

    p = sub.add_parser("envelope", help="exact convex-envelope value")
    add_graph_args(p)
    p.add_argument("--x", required=True)
    p.add_argument("--max-n", type=int, default=env.DEFAULT_MAX_N)
    p.add_argument("--out")

    p = sub.add_parser("wheel-cert", help="even-wheel interval certificate")
    p.add_argument("--x", required=True,
                   help="rim coordinates then hub, n = m+1 values")
    p.add_argument("--out")

    p = sub.add_parser("split-cert",
                       help="complete-split interval certificate")
    p.add_argument("--n1", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--skip-lb", action="store_true")
    p.add_argument("--skip-envelope", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("verify", help="re-check a certificate JSON")
    p.add_argument("--certificate", required=True)
    p.add_argument("--out")

    p = sub.add_parser("five-wheel",
                       help="reproduce the 5-wheel counterexample")
    p.add_argument("--out")

    p = sub.add_parser("suite", help="seeded random property suite")
    p.add_argument("--family", required=True,
                   choices=["even-wheel", "split", "bipartite"])
    p.add_argument("--m", help="comma-separated rim lengths (even-wheel)")
    p.add_argument("--sizes", help="comma-separated n1-n2 pairs (split)")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--boundary-prob", type=float, default=0.0)
    p.add_argument("--out")
    return parser


_HANDLERS = {
    "lb": _cmd_lb,
    "envelope": _cmd_envelope,
    "wheel-cert": _cmd_wheel_cert,
    "split-cert": _cmd_split_cert,
    "verify": _cmd_verify,
    "five-wheel": _cmd_five_wheel,
    "suite": _cmd_suite,
}


def run(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if not args.command:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return _HANDLERS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
