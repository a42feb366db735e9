"""Exact rational linear programming: primal simplex with Bland's rule.

The core solver works on min c.v subject to general rows and per-variable
bounds, everything a Fraction. Bounded variables are handled natively
(nonbasic-at-lower / nonbasic-at-upper), which keeps the McCormick box out of
the tableau. Phase 1 uses artificial variables; an infeasible phase 1 yields
a Farkas certificate (nonnegative row combination proving emptiness) that is
re-verified before being returned.

On top of the core sit the domain entry points: solving a LinearSystem with
the x-coordinates fixed (LB computation) and finding a feasible point of a
pure inequality system (the wheel z-system).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .relaxations import LinearSystem, Row

ZERO = Fraction(0)
ONE = Fraction(1)

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    point: Optional[List[Fraction]] = None
    farkas: Optional[List[Fraction]] = None  # per input row, see solve_lp
    duals: Optional[List[Fraction]] = None   # per input row, caller orientation
    tight_rows: List[int] = field(default_factory=list)


class _Tableau:
    """Dense simplex tableau over Fractions with variable bounds."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: List[List[Fraction]] = []
        self.basis: List[int] = []
        self.xb: List[Fraction] = []
        self.lower: List[Fraction] = []
        self.upper: List[Optional[Fraction]] = []
        self.at_upper: List[bool] = []

    def pivot(self, r: int, col: int):
        row = self.rows[r]
        piv = row[col]
        if piv != ONE:
            inv = ONE / piv
            self.rows[r] = row = [v * inv for v in row]
        nonzero = [k for k, v in enumerate(row) if v]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            factor = other[col]
            if factor:
                for k in nonzero:
                    other[k] -= factor * row[k]
        self.basis[r] = col


def _nonbasic_value(t: _Tableau, j: int) -> Fraction:
    return t.upper[j] if t.at_upper[j] else t.lower[j]


def _reduced_costs(t: _Tableau, c: List[Fraction]) -> List[Fraction]:
    # y = c_B B^-1 applied through the updated tableau columns
    d = list(c)
    for r, j in enumerate(t.basis):
        cb = c[j]
        if cb:
            row = t.rows[r]
            for k in range(t.ncols):
                if row[k]:
                    d[k] -= cb * row[k]
    return d


def _simplex(t: _Tableau, c: List[Fraction]) -> str:
    """Optimize min c.v from the current basic feasible solution. Bland's
    rule throughout; returns OPTIMAL or UNBOUNDED."""
    in_basis = [False] * t.ncols
    for j in t.basis:
        in_basis[j] = True
    while True:
        d = _reduced_costs(t, c)
        enter = -1
        direction = 0
        for j in range(t.ncols):
            if in_basis[j]:
                continue
            if not t.at_upper[j] and d[j] < 0:
                enter, direction = j, 1
                break
            if t.at_upper[j] and d[j] > 0:
                enter, direction = j, -1
                break
        if enter < 0:
            return OPTIMAL
        col = [t.rows[r][enter] * direction for r in range(len(t.rows))]
        # max step before a basic variable hits a bound
        best_t: Optional[Fraction] = None
        leave = -1
        leave_to_upper = False
        for r in range(len(t.rows)):
            cr = col[r]
            if cr > 0:
                limit = (t.xb[r] - t.lower[t.basis[r]]) / cr
                hits_upper = False
            elif cr < 0:
                ub = t.upper[t.basis[r]]
                if ub is None:
                    continue
                limit = (ub - t.xb[r]) / (-cr)
                hits_upper = True
            else:
                continue
            if best_t is None or limit < best_t or (
                limit == best_t and leave >= 0 and t.basis[r] < t.basis[leave]
            ):
                best_t, leave, leave_to_upper = limit, r, hits_upper
        ub_enter = t.upper[enter]
        span = None if ub_enter is None else ub_enter - t.lower[enter]
        if best_t is None and span is None:
            return UNBOUNDED
        if span is not None and (best_t is None or span <= best_t):
            # bound flip: entering variable crosses to its other bound
            step = span
            for r in range(len(t.rows)):
                if col[r]:
                    t.xb[r] -= step * col[r]
            t.at_upper[enter] = not t.at_upper[enter]
            continue
        step = best_t
        new_val = _nonbasic_value(t, enter) + direction * step
        for r in range(len(t.rows)):
            if col[r]:
                t.xb[r] -= step * col[r]
        out = t.basis[leave]
        t.at_upper[out] = leave_to_upper
        in_basis[out] = False
        in_basis[enter] = True
        t.pivot(leave, enter)
        t.xb[leave] = new_val


def solve_lp(
    c: Sequence[Fraction],
    rows: Sequence[Tuple[Sequence[Fraction], str, Fraction]],
    bounds: Sequence[Tuple[Optional[Fraction], Optional[Fraction]]],
    start_at_upper: Optional[Sequence[bool]] = None,
) -> LPResult:
    """Minimize c.v subject to rows (coeffs, rel in {<=, >=, =}, rhs) and
    bounds (lo, hi), entries None for unbounded. Returns exact optimum,
    a Farkas certificate on infeasibility (multipliers lam per row with
    lam >= 0 on inequality rows oriented as given, sum lam_r row_r an
    identically-zero lhs with violated rhs), or UNBOUNDED."""
    nv = len(c)
    c = [Fraction(v) for v in c]

    # variable transforms: flip hi-only vars, split free vars
    flip = [False] * nv
    split: List[int] = []
    lower: List[Fraction] = []
    upper: List[Optional[Fraction]] = []
    col_of_var: List[int] = []
    for j in range(nv):
        lo, hi = bounds[j]
        if lo is None and hi is None:
            split.append(j)
            col_of_var.append(-1)
            continue
        if lo is None:
            flip[j] = True
            lo, hi = -hi, None  # v = -w
        if hi is not None and hi < lo:
            return LPResult(status=INFEASIBLE, farkas=None)
        col_of_var.append(len(lower))
        lower.append(Fraction(lo))
        upper.append(None if hi is None else Fraction(hi))
    split_base = len(lower)
    for _ in split:
        lower += [ZERO, ZERO]
        upper += [None, None]
    for idx, j in enumerate(split):
        col_of_var[j] = split_base + 2 * idx

    def expand_coeffs(coeffs: Sequence[Fraction]) -> List[Fraction]:
        out = [ZERO] * len(lower)
        for j, a in enumerate(coeffs):
            if not a:
                continue
            a = Fraction(a)
            if col_of_var[j] >= split_base and j in split:
                out[col_of_var[j]] += a
                out[col_of_var[j] + 1] -= a
            else:
                out[col_of_var[j]] += -a if flip[j] else a
        return out

    # orient rows: "<=" and "=" kept; ">=" negated to "<="
    orient: List[int] = []
    eq_flags: List[bool] = []
    mat: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for coeffs, rel, b in rows:
        a = expand_coeffs(coeffs)
        b = Fraction(b)
        if rel == ">=":
            a = [-v for v in a]
            b = -b
            orient.append(-1)
        else:
            orient.append(1)
        eq_flags.append(rel == "=")
        mat.append(a)
        rhs.append(b)

    nstruct = len(lower)
    nrows = len(mat)
    nslack = sum(1 for e in eq_flags if not e)
    ncols = nstruct + nslack + nrows  # slacks then artificials

    t = _Tableau(ncols)
    t.lower = lower + [ZERO] * (nslack + nrows)
    t.upper = upper + [None] * (nslack + nrows)
    t.at_upper = [False] * ncols
    if start_at_upper is not None:
        for j in range(nv):
            if start_at_upper[j] and upper[col_of_var[j]] is not None and not flip[j] \
                    and col_of_var[j] < split_base:
                t.at_upper[col_of_var[j]] = True

    cexp = expand_coeffs(c) + [ZERO] * (nslack + nrows)

    slack_col: List[Optional[int]] = []
    si = nstruct
    for e in eq_flags:
        if e:
            slack_col.append(None)
        else:
            slack_col.append(si)
            si += 1

    art_col = [nstruct + nslack + r for r in range(nrows)]
    art_sign: List[int] = []
    phase1 = [ZERO] * ncols
    need_phase1 = False
    for r in range(nrows):
        row = [ZERO] * ncols
        a = mat[r]
        for k in range(nstruct):
            row[k] = a[k]
        if slack_col[r] is not None:
            row[slack_col[r]] = ONE
        # residual once nonbasics sit at their starting bounds
        resid = rhs[r]
        for k in range(nstruct):
            if row[k]:
                resid -= row[k] * _value_at_start(t, k)
        if slack_col[r] is not None and resid >= 0:
            t.basis.append(slack_col[r])
            t.xb.append(resid)
            art_sign.append(0)
            row[art_col[r]] = ONE  # unused artificial, pinned at 0
            t.upper[art_col[r]] = ZERO
        else:
            sign = 1 if resid >= 0 else -1
            if sign < 0:
                # negate the equation so the basic artificial enters with +1
                row = [-v for v in row]
            row[art_col[r]] = ONE
            t.basis.append(art_col[r])
            t.xb.append(abs(resid))
            art_sign.append(sign)
            phase1[art_col[r]] = ONE
            need_phase1 = True
        t.rows.append(row)

    if need_phase1:
        status = _simplex(t, phase1)
        assert status == OPTIMAL  # phase-1 objective is bounded below by 0
        infeas = sum(
            (t.xb[r] for r in range(nrows) if t.basis[r] >= nstruct + nslack),
            ZERO,
        )
        if infeas > 0:
            lam = _farkas_from_phase1(t, phase1, nstruct, nslack, nrows,
                                      orient, art_sign)
            _verify_farkas(lam, rows, bounds, nv)
            return LPResult(status=INFEASIBLE, farkas=lam)
        _drive_out_artificials(t, nstruct, nslack)

    # pin artificials at zero for phase 2
    for j in range(nstruct + nslack, ncols):
        t.upper[j] = ZERO

    status = _simplex(t, cexp)
    if status == UNBOUNDED:
        return LPResult(status=UNBOUNDED)

    values = [ZERO] * ncols
    for j in range(ncols):
        values[j] = _nonbasic_value(t, j)
    for r, j in enumerate(t.basis):
        values[j] = t.xb[r]

    point: List[Fraction] = []
    for j in range(nv):
        cj = col_of_var[j]
        if j in split:
            point.append(values[cj] - values[cj + 1])
        elif flip[j]:
            point.append(-values[cj])
        else:
            point.append(values[cj])
    obj = sum((c[j] * point[j] for j in range(nv)), ZERO)

    tight = []
    for r, (coeffs, rel, b) in enumerate(rows):
        lhs = sum((Fraction(a) * point[j] for j, a in enumerate(coeffs) if a), ZERO)
        if lhs == Fraction(b):
            tight.append(r)
        elif rel == "=" or (rel == "<=" and lhs > b) or (rel == ">=" and lhs < b):
            raise AssertionError(f"simplex returned a point violating row {r}")

    # row duals via the artificial columns: each stored equation r has the
    # unit column e_r there, so its reduced cost recovers the dual value
    d = _reduced_costs(t, cexp)
    duals = []
    for r in range(nrows):
        y_stored = cexp[art_col[r]] - d[art_col[r]]
        sign = -1 if art_sign[r] < 0 else 1
        duals.append(y_stored * sign * orient[r])
    return LPResult(status=OPTIMAL, value=obj, point=point, duals=duals,
                    tight_rows=tight)


def _value_at_start(t: _Tableau, k: int) -> Fraction:
    return t.upper[k] if t.at_upper[k] else t.lower[k]


def _drive_out_artificials(t: _Tableau, nstruct: int, nslack: int):
    first_art = nstruct + nslack
    for r in range(len(t.rows)):
        if t.basis[r] < first_art:
            continue
        # basic artificial at value 0: pivot in any usable column
        for j in range(first_art):
            if j in t.basis:
                continue
            if t.rows[r][j]:
                entering_value = _nonbasic_value(t, j)
                t.pivot(r, j)
                t.xb[r] = entering_value  # zero-length step
                break
        # if no pivot column exists the row is redundant; the artificial
        # stays basic at 0 and is pinned there by its upper bound


def _farkas_from_phase1(t, phase1, nstruct, nslack, nrows, orient, art_sign):
    """Row multipliers from the phase-1 dual: each row's artificial column
    is +-e_r, so its reduced cost d_j = c_j - y_r * sign recovers the dual
    value y_r; mapping through the original row orientation gives Farkas
    multipliers for the rows as stated by the caller."""
    d = _reduced_costs(t, phase1)
    lam = []
    first_art = nstruct + nslack
    for r in range(nrows):
        j = first_art + r
        sign = -1 if art_sign[r] < 0 else 1
        lam.append(-(phase1[j] - d[j]) * sign)
    return lam


def _verify_farkas(lam, rows, bounds, nv):
    """Check that the multipliers prove emptiness: orienting every row as
    combo . v <= total, the minimum of combo . v over the variable box must
    exceed total."""
    combo = [ZERO] * nv
    total = ZERO
    for mult, (coeffs, rel, b) in zip(lam, rows):
        if rel != "=" and mult < 0:
            raise AssertionError("Farkas multiplier sign violation")
        if not mult:
            continue
        s = 1 if rel in ("<=", "=") else -1
        for j, a in enumerate(coeffs):
            if a:
                combo[j] += mult * s * Fraction(a)
        total += mult * s * Fraction(b)
    floor = ZERO
    for j in range(nv):
        cj = combo[j]
        if not cj:
            continue
        lo, hi = bounds[j]
        pick = lo if cj > 0 else hi
        if pick is None:
            raise AssertionError("Farkas combination unbounded below")
        floor += cj * Fraction(pick)
    if floor <= total:
        raise AssertionError("invalid Farkas certificate")


# ---------------------------------------------------------------------------
# Domain layer: LinearSystem with fixed x-coordinates
# ---------------------------------------------------------------------------


@dataclass
class FixedSystem:
    """A LinearSystem with x substituted: variables are the declared pairs
    (or raw x-variables when nx_free), with folded bounds and general rows."""

    var_names: List
    bounds: List[Tuple[Optional[Fraction], Optional[Fraction]]]
    gen_rows: List[Tuple[List[Fraction], str, Fraction]]
    gen_row_sources: List[int]  # index into system.rows


def substitute_x(system: LinearSystem, x: Sequence[Fraction]) -> FixedSystem:
    """Fix the x-coordinates; single-variable rows fold into bounds, the
    rest become general rows over the y-variables."""
    if len(x) != system.nx:
        raise ValueError("x has wrong dimension")
    xv = {i + 1: Fraction(v) for i, v in enumerate(x)}
    idx = {p: k for k, p in enumerate(system.pairs)}
    nvars = len(system.pairs)
    lo: List[Optional[Fraction]] = [None] * nvars
    hi: List[Optional[Fraction]] = [None] * nvars
    gen_rows = []
    gen_sources = []
    for r_index, row in enumerate(system.rows):
        const = sum((c * xv[i] for i, c in row.x_coefs), ZERO)
        b = row.rhs - const
        ys = row.y_coefs
        if not ys:
            ok = const <= row.rhs if row.rel == "<=" else const >= row.rhs
            if not ok:
                raise ValueError(f"x violates pure-x row {row.note or row.family}")
            continue
        if len(ys) == 1:
            (p, coef), = ys
            k = idx[p]
            bound = b / coef
            le = (row.rel == "<=") == (coef > 0)
            if le:
                hi[k] = bound if hi[k] is None else min(hi[k], bound)
            else:
                lo[k] = bound if lo[k] is None else max(lo[k], bound)
            continue
        coeffs = [ZERO] * nvars
        for p, c in ys:
            coeffs[idx[p]] += c
        gen_rows.append((coeffs, row.rel, b))
        gen_sources.append(r_index)
    bounds = list(zip(lo, hi))
    return FixedSystem(list(system.pairs), bounds, gen_rows, gen_sources)


def minimize_over(system: LinearSystem, x, objective: Dict) -> LPResult:
    """min sum objective[p]*y_p over the system at fixed x."""
    fixed = substitute_x(system, x)
    c = [objective.get(p, ZERO) for p in fixed.var_names]
    # the min-point y = upper bound is feasible for every shipped row system, so
    # starting nonbasics at their upper bounds usually skips phase 1
    at_upper = [b[1] is not None for b in fixed.bounds]
    res = solve_lp(c, fixed.gen_rows, fixed.bounds, start_at_upper=at_upper)
    if res.status == OPTIMAL:
        res.tight_rows = [fixed.gen_row_sources[r] for r in res.tight_rows]
        _recheck(system, x, dict(zip(fixed.var_names, res.point)))
    return res


def lb(system: LinearSystem, graph, x) -> Fraction:
    """LB_P(x): exact minimum of sum_{ij in E} y_ij over the system at x."""
    objective = {e: ONE for e in graph.edge_list()}
    declared = set(system.pairs)
    for e in objective:
        if e not in declared:
            raise ValueError(f"system lacks a y-variable for edge {e}")
    res = minimize_over(system, x, objective)
    if res.status != OPTIMAL:
        raise ValueError(f"LB computation ended with status {res.status}")
    return res.value


def lb_result(system: LinearSystem, graph, x) -> LPResult:
    objective = {e: ONE for e in graph.edge_list()}
    return minimize_over(system, x, objective)


def _recheck(system: LinearSystem, x, y: Dict) -> None:
    """Independent substitution of the solution into every original row."""
    xv = {i + 1: Fraction(v) for i, v in enumerate(x)}
    for row in system.rows:
        if not row.satisfied(xv, y):
            raise AssertionError(f"LP point violates row {row.note or row.family}")


def feasible_point(system: LinearSystem, x: Optional[Sequence[Fraction]] = None) -> LPResult:
    """Phase-1 only: find any point of the system (x-variables free unless
    fixed), or return a Farkas witness. No bound folding, so the witness
    covers every original row."""
    if x is not None:
        fixed = substitute_x(system, x)
        # refold bounds as rows so the witness maps to original rows: here we
        # just solve with folded bounds; infeasibility between folded bounds
        # is reported without a row witness
        c = [ZERO] * len(fixed.var_names)
        return solve_lp(c, fixed.gen_rows, fixed.bounds)
    # raw system over x-variables only (used for the wheel z-system)
    if system.pairs:
        raise ValueError("feasible_point without x works on pure-x systems")
    nv = system.nx
    rows = []
    for row in system.rows:
        coeffs = [ZERO] * nv
        for i, cf in row.x_coefs:
            coeffs[i - 1] += cf
        rows.append((coeffs, row.rel, row.rhs))
    bounds = [(None, None)] * nv
    return solve_lp([ZERO] * nv, rows, bounds)
