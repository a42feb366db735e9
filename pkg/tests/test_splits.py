from fractions import Fraction
from random import Random

import pytest

from hullcert import envelope as env, graphs, intervals as iv, lp, splits
from hullcert import relaxations as rel
from hullcert.perturb import Perturbed, std_part
from hullcert.rational import parse_vector
from conftest import rand_x

F = Fraction

EX2_X = parse_vector("0.85,0.8,0.7,0.5,0.8,0.6,0.5,0.3,0.1")


def mk(*pairs):
    return iv.make([(F(a), F(b)) for a, b in pairs])


def test_interiorize_numeric():
    xp, eps, restore = splits.interiorize([F(0), F(1, 2), F(1)])
    assert eps > 0
    assert xp == [eps, F(1, 2), 1 - eps]
    done = restore([mk((0, F(1, 4))), mk((0, F(1, 2))), mk((0, 1))])
    assert done[0] == iv.EMPTY
    assert done[2] == iv.full()
    assert done[1] == mk((0, F(1, 2)))


def test_symbolic_interiorize():
    out = splits.symbolic_interiorize([F(0), F(1, 3), F(1)])
    assert out[0] == Perturbed(F(0), F(1))
    assert out[1] == F(1, 3)
    assert out[2] == Perturbed(F(1), F(-1))
    assert F(0) < out[0] < out[1] < out[2] < F(1)


def test_construct_split_requires_sorted_interior():
    with pytest.raises(ValueError):
        splits.construct_split(2, 1, [F(1, 4), F(1, 2), F(1, 3)])  # unsorted
    with pytest.raises(ValueError):
        splits.construct_split(2, 1, [F(1, 2), F(0), F(1, 3)])  # boundary


def test_construct_split_example_staircase():
    """The worked 4+5 instance: every greedy step, interval set and final
    staircase level."""
    xs, state = splits.construct_split(4, 5, EX2_X)
    assert xs[0] == mk((F(1, 10), F(1, 4)), (F(3, 10), 1))
    assert xs[1] == mk((0, F(1, 20)), (F(1, 4), 1))
    assert xs[2] == mk((F(1, 20), F(1, 4)), (F(1, 2), 1))
    assert xs[3] == mk((F(1, 4), F(7, 20)), (F(3, 5), 1))
    for i in range(4):
        assert iv.measure(xs[i]) == EX2_X[i]
    assert state.live_prefix() == [1, F(4, 5), F(7, 20)]
    # staircase stays non-increasing at every snapshot
    for snap in state.trace:
        a = snap["a"]
        assert all(a[q] >= a[q + 1] for q in range(len(a) - 1))


def min_added_overlap(placed, xi):
    """Independent oracle: the least possible sum of overlaps between the
    already-placed sets and any new measurable set of measure xi is found
    by filling the lowest-height elementary segments first."""
    points = {F(0), F(1)}
    for s in placed:
        points.update(s.endpoints())
    pts = sorted(points)
    segments = []
    for a, b in zip(pts, pts[1:]):
        mid = (a + b) / 2
        h = sum(1 for s in placed if s.contains_point(mid))
        segments.append((h, b - a))
    segments.sort()
    total = F(0)
    remaining = xi
    for h, length in segments:
        take = min(length, remaining)
        total += h * take
        remaining -= take
        if remaining == 0:
            break
    assert remaining == 0
    return total


def test_greedy_step_achieves_the_minimum_added_overlap():
    rng = Random(51)
    for _ in range(12):
        n1 = rng.randrange(1, 4)
        n2 = rng.randrange(1, 4)
        x = sorted([F(rng.randrange(1, 12), 12) for _ in range(n1)],
                   reverse=True) + \
            sorted([F(rng.randrange(1, 12), 12) for _ in range(n2)],
                   reverse=True)
        xs, state = splits.construct_split(n1, n2, x)
        placed = splits.v2_interval_sets(n1, n2, x)
        for step, snap in enumerate(state.trace):
            xi = x[step]
            chosen = snap["interval_set"]
            added = sum((iv.measure(iv.intersect(chosen, s))
                         for s in placed), F(0))
            assert added == min_added_overlap(placed, xi)
            placed.append(chosen)


def test_derive_S_example():
    xs, state = splits.construct_split(4, 5, EX2_X)
    sder = splits.derive_S(state)
    assert sder.S == frozenset({7, 8, 9})
    assert sder.k == 2
    assert len(sder.S) <= 3  # |S| <= n1 - 1


def test_height_function_two_values():
    rng = Random(53)
    for _ in range(15):
        n1 = rng.randrange(1, 5)
        n2 = rng.randrange(1, 5)
        n = n1 + n2
        x = sorted([F(rng.randrange(1, 16), 16) for _ in range(n1)],
                   reverse=True) + \
            sorted([F(rng.randrange(1, 16), 16) for _ in range(n2)],
                   reverse=True)
        xs, state = splits.construct_split(n1, n2, x)
        all_sets = xs + splits.v2_interval_sets(n1, n2, x)
        sder = splits.derive_S(state)
        props = splits.check_S_properties(n1, n2, x, all_sets, sder.S)
        assert props["ok"], props
        members = sorted(set(range(1, n1 + 1)) | sder.S)
        total = sum(x[i - 1] for i in members)
        assert props["alpha"] == total.__floor__()


def test_accounting_identity_matches_edge_sum():
    rng = Random(59)
    for _ in range(15):
        n1 = rng.randrange(2, 5)
        n2 = rng.randrange(1, 5)
        n = n1 + n2
        x = sorted([F(rng.randrange(1, 16), 16) for _ in range(n1)],
                   reverse=True) + \
            sorted([F(rng.randrange(1, 16), 16) for _ in range(n2)],
                   reverse=True)
        xs, state = splits.construct_split(n1, n2, x)
        all_sets = xs + splits.v2_interval_sets(n1, n2, x)
        sder = splits.derive_S(state)
        props = splits.check_S_properties(n1, n2, x, all_sets, sder.S)
        got = splits.split_edge_sum(n1, n2, all_sets)
        want = splits.accounting_identity(n1, n2, x, sder.S, props["alpha"])
        assert got == want


def test_split_certificate_example2():
    cert = splits.split_certificate(4, 5, EX2_X)
    assert cert["edge_sum"] == F(161, 20)
    assert cert["lb"] == F(161, 20)
    assert cert["envelope"] == F(161, 20)
    assert cert["S"] == [7, 8, 9]
    assert cert["alpha"] == 3


def test_split_certificate_handles_boundary_coordinates():
    # the symbolic perturbation keeps boundary instances exact
    cert = splits.split_certificate(2, 1, [F(1), F(1, 2), F(1, 2)])
    assert cert["edge_sum"] == cert["lb"] == cert["envelope"]
    assert cert["intervals"][0] == iv.full()
    cert0 = splits.split_certificate(2, 2, [F(1, 2), F(0), F(1), F(0)])
    assert cert0["edge_sum"] == cert0["lb"] == cert0["envelope"]
    assert cert0["intervals"][1] == iv.EMPTY


def test_split_certificate_random_small():
    rng = Random(61)
    for _ in range(12):
        n1 = rng.randrange(1, 4)
        n2 = rng.randrange(1, 4)
        x = rand_x(rng, n1 + n2, boundary_prob=0.15)
        cert = splits.split_certificate(n1, n2, x)
        assert cert["edge_sum"] == cert["lb"] == cert["envelope"]
        assert len(cert["S"]) <= n1 - 1 or n1 == 1
        for i, s in enumerate(cert["intervals"]):
            assert iv.measure(s) == x[i]


def test_split_certificate_unsorted_input_maps_back():
    x = [F(1, 2), F(3, 4), F(1, 4), F(7, 8)]  # deliberately unsorted blocks
    cert = splits.split_certificate(2, 2, x)
    assert cert["x"] == x
    for i, s in enumerate(cert["intervals"]):
        assert iv.measure(s) == x[i]
    assert cert["edge_sum"] == cert["lb"] == cert["envelope"]


def test_split_certificate_validates_input():
    with pytest.raises(ValueError):
        splits.split_certificate(2, 1, [F(1, 2)] * 4)  # wrong length
    with pytest.raises(ValueError):
        splits.split_certificate(2, 1, [F(3, 2), F(1, 2), F(1, 2)])
