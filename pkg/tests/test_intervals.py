from fractions import Fraction
from random import Random

import pytest
from hypothesis import given, settings, strategies as st

from hullcert import intervals as iv
from conftest import rand_interval_set

F = Fraction


def mk(*pairs):
    return iv.make([(F(a), F(b)) for a, b in pairs])


def refine_measures(x, y):
    """Oracle: chop [0,1) at every endpoint of x and y and classify each
    elementary segment by midpoint membership."""
    points = {F(0), F(1)}
    points.update(x.endpoints())
    points.update(y.endpoints())
    pts = sorted(points)
    inter = union = diff = comp_x = F(0)
    for a, b in zip(pts, pts[1:]):
        mid = (a + b) / 2
        in_x, in_y = x.contains_point(mid), y.contains_point(mid)
        if in_x and in_y:
            inter += b - a
        if in_x or in_y:
            union += b - a
        if in_x and not in_y:
            diff += b - a
        if not in_x:
            comp_x += b - a
    return inter, union, diff, comp_x


def test_make_normalizes():
    assert mk((F(1, 2), F(1, 2))) == iv.EMPTY          # empty piece dropped
    assert mk((0, F(1, 2)), (F(1, 2), 1)) == iv.full()  # adjacent merge
    assert mk((0, F(3, 4)), (F(1, 2), 1)) == iv.full()  # overlap merge
    assert mk((F(1, 4), F(1, 2)), (0, F(1, 8))) == \
        mk((0, F(1, 8)), (F(1, 4), F(1, 2)))             # sorted


def test_make_rejects_out_of_range():
    with pytest.raises(ValueError):
        mk((F(-1, 2), F(1, 4)))
    with pytest.raises(ValueError):
        mk((F(1, 2), F(5, 4)))


def test_measure_and_ops():
    a = mk((0, F(1, 2)))
    b = mk((F(1, 4), F(3, 4)))
    assert iv.measure(a) == F(1, 2)
    assert iv.intersect(a, b) == mk((F(1, 4), F(1, 2)))
    assert iv.union(a, b) == mk((0, F(3, 4)))
    assert iv.difference(a, b) == mk((0, F(1, 4)))
    assert iv.complement(a) == mk((F(1, 2), 1))
    assert iv.measure(iv.EMPTY) == 0
    assert iv.measure(iv.full()) == 1


def test_contains_point():
    a = mk((F(1, 4), F(1, 2)))
    assert a.contains_point(F(1, 4))
    assert a.contains_point(F(1, 3))
    assert not a.contains_point(F(1, 2))  # half-open on the right
    assert not a.contains_point(F(0))


def test_json_round_trip():
    a = mk((0, F(1, 10)), (F(3, 10), 1))
    assert iv.from_json(iv.to_json(a)) == a


interval_sets = st.builds(
    lambda seed: rand_interval_set(Random(seed)),
    st.integers(min_value=0, max_value=10 ** 9))


@settings(max_examples=300, deadline=None)
@given(interval_sets, interval_sets)
def test_algebra_against_refinement_oracle(a, b):
    inter, union, diff, comp = refine_measures(a, b)
    assert iv.measure(iv.intersect(a, b)) == inter
    assert iv.measure(iv.union(a, b)) == union
    assert iv.measure(iv.difference(a, b)) == diff
    assert iv.measure(iv.complement(a)) == comp
    # inclusion-exclusion
    assert iv.measure(a) + iv.measure(b) == union + inter
    # normalization idempotence
    assert iv.make(a.intervals) == a
    # difference via complement
    assert iv.difference(a, b) == iv.intersect(a, iv.complement(b))
