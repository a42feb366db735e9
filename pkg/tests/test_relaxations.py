from fractions import Fraction
from itertools import product
from random import Random

from hullcert import graphs, relaxations as rel

F = Fraction


def integral_points(system, n):
    """Every 0/1 point lifted with y_ij = x_i x_j must satisfy every row:
    all these systems are relaxations of the Boolean quadric polytope."""
    for bits in product((0, 1), repeat=n):
        xv = {i + 1: F(bits[i]) for i in range(n)}
        yv = {(i, j): F(bits[i - 1] * bits[j - 1]) for i, j in system.pairs}
        yield xv, yv


def assert_valid_for_bqp(system, n):
    for xv, yv in integral_points(system, n):
        for row in system.rows:
            assert row.satisfied(xv, yv), (row.note, xv)


def count(system, family_prefix):
    return sum(1 for r in system.rows if r.family.startswith(family_prefix))


def test_mccormick_counts_and_validity():
    g = graphs.wheel(5)
    sys_edges = rel.mccormick(g)
    assert len(sys_edges.pairs) == 10
    assert count(sys_edges, "mccormick_ub") == 20
    assert count(sys_edges, "mccormick_lb") == 20
    assert count(sys_edges, "box") == 12
    assert_valid_for_bqp(sys_edges, g.n)

    sys_full = rel.mccormick(g, full=True)
    assert len(sys_full.pairs) == 15  # all of E*(V)
    assert count(sys_full, "mccormick_ub") == 30


def test_triangle_relaxation():
    g = graphs.wheel(4)
    system = rel.triangle_relaxation(g)
    assert count(system, "triangle") == 4
    assert_valid_for_bqp(system, g.n)


def test_clique_inequality_validity_and_range():
    w = [1, 2, 4, 5]
    for alpha in (1, 2, 3):
        row = rel.clique_inequality(w, alpha)
        # validity over all 0/1 points on 5 vertices
        for bits in product((0, 1), repeat=5):
            xv = {i + 1: F(bits[i]) for i in range(5)}
            yv = {(i, j): xv[i] * xv[j] for i, j in graphs.pair_set(w)}
            assert row.satisfied(xv, yv)
        # tight exactly when x(W) is alpha or alpha+1
        for k in (alpha, alpha + 1):
            ones = w[:k]
            xv = {i: F(1 if i in ones else 0) for i in range(1, 6)}
            yv = {(i, j): xv[i] * xv[j] for i, j in graphs.pair_set(w)}
            assert row.slack(xv, yv) == 0


def test_clique_inequality_rejects_bad_alpha():
    import pytest
    with pytest.raises(ValueError):
        rel.clique_inequality([1, 2, 3], 3)
    with pytest.raises(ValueError):
        rel.clique_inequality([1], 1)


def test_split_relaxation_shape():
    n1, n2 = 3, 2
    system = rel.split_relaxation(n1, n2)
    n = n1 + n2
    assert system.nx == n
    assert len(system.pairs) == n * (n - 1) // 2
    # clique rows: subsets S of V_2 with |S| <= n1-1, each with alpha in [1, n1-1]
    from math import comb
    expected_cliques = sum(comb(n2, size)
                           for size in range(0, n1)) * (n1 - 1)
    assert count(system, "clique(") == expected_cliques
    # y >= 0 on every pair; the two lower-bounding rows (y >= 0 and
    # x_i + x_j - y <= 1) only on clique-to-independent pairs
    lb_rows = [r for r in system.rows if r.family == "mccormick_lb"]
    assert len(lb_rows) == len(system.pairs) + 2 * n1 * n2
    tightened = [r for r in lb_rows if r.rel == "<="]
    assert len(tightened) == n1 * n2
    assert_valid_for_bqp(system, n)


def test_wheel_extra_inequalities_valid_and_distinct():
    row1, row2 = rel.wheel_extra_inequalities(5)
    g = graphs.wheel(5)
    for bits in product((0, 1), repeat=6):
        xv = {i + 1: F(bits[i]) for i in range(6)}
        yv = {(i, j): xv[i] * xv[j] for i, j in g.edge_list()}
        assert row1.satisfied(xv, yv)
        assert row2.satisfied(xv, yv)
    assert row1.family != row2.family


def test_row_slack_sign_convention():
    rng = Random(7)
    g = graphs.wheel(4)
    system = rel.triangle_relaxation(g)
    for _ in range(50):
        xv = {i: F(rng.randrange(-4, 9), 4) for i in range(1, g.n + 1)}
        yv = {p: F(rng.randrange(-4, 9), 4) for p in system.pairs}
        for row in system.rows:
            assert (row.slack(xv, yv) >= 0) == row.satisfied(xv, yv)
