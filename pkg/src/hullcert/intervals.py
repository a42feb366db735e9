"""Finite unions of half-open subintervals of [0,1) with exact measure.

The normal form is a strictly increasing, non-touching chain
0 <= a_1 < b_1 < a_2 < b_2 < ... < a_k < b_k <= 1, so set equality is plain
list equality. Endpoints are exact rationals (or any exactly ordered numeric
type supporting +/-; the split pipeline passes perturbed rationals through).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .rational import parse_rational, render

Endpoint = Fraction  # or any exact, totally ordered additive type


class IntervalSet:
    """Immutable element of the interval algebra."""

    __slots__ = ("intervals",)

    def __init__(self, intervals: Tuple[Tuple[Endpoint, Endpoint], ...]):
        # callers go through make(); the constructor trusts its input
        object.__setattr__(self, "intervals", intervals)

    def __setattr__(self, name, value):
        raise AttributeError("IntervalSet is immutable")

    def __eq__(self, other):
        return isinstance(other, IntervalSet) and self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __bool__(self):
        return bool(self.intervals)

    def __repr__(self):
        if not self.intervals:
            return "IntervalSet(empty)"
        parts = " u ".join(f"[{a}, {b})" for a, b in self.intervals)
        return f"IntervalSet({parts})"

    def endpoints(self) -> list:
        out = []
        for a, b in self.intervals:
            out.append(a)
            out.append(b)
        return out

    def contains_point(self, t) -> bool:
        return any(a <= t < b for a, b in self.intervals)


EMPTY = IntervalSet(())


def make(raw: Iterable[Sequence]) -> IntervalSet:
    """Normalize arbitrary [a,b) pairs: drop empties, sort, merge overlaps
    and touching neighbours. Raises on a > b or endpoints outside [0,1]."""
    pairs = []
    for a, b in raw:
        if not (0 <= a and b <= 1):
            raise ValueError(f"interval [{a}, {b}) outside [0,1]")
        if a > b:
            raise ValueError(f"reversed interval [{a}, {b})")
        if a < b:
            pairs.append((a, b))
    pairs.sort()
    merged: list = []
    for a, b in pairs:
        if merged and a <= merged[-1][1]:
            if b > merged[-1][1]:
                merged[-1] = (merged[-1][0], b)
        else:
            merged.append((a, b))
    return IntervalSet(tuple(merged))


def full() -> IntervalSet:
    return IntervalSet(((Fraction(0), Fraction(1)),))


def measure(x: IntervalSet):
    total = Fraction(0)
    for a, b in x.intervals:
        total = total + (b - a)
    return total


def intersect(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    out = []
    i = j = 0
    xs, ys = x.intervals, y.intervals
    while i < len(xs) and j < len(ys):
        a = max(xs[i][0], ys[j][0])
        b = min(xs[i][1], ys[j][1])
        if a < b:
            out.append((a, b))
        if xs[i][1] <= ys[j][1]:
            i += 1
        else:
            j += 1
    return IntervalSet(tuple(out))


def union(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    return make(list(x.intervals) + list(y.intervals))


def complement(x: IntervalSet) -> IntervalSet:
    """[0,1) minus x."""
    out = []
    cursor = Fraction(0)
    for a, b in x.intervals:
        if cursor < a:
            out.append((cursor, a))
        cursor = b
    if cursor < 1:
        out.append((cursor, Fraction(1)))
    return IntervalSet(tuple(out))


def difference(x: IntervalSet, y: IntervalSet) -> IntervalSet:
    return intersect(x, complement(y))


def standard_part(x: IntervalSet) -> IntervalSet:
    """Limit of a perturbed interval set: take standard parts of endpoints,
    dropping intervals that collapse."""
    from .perturb import std_part

    return make([(std_part(a), std_part(b)) for a, b in x.intervals])


def to_json(x: IntervalSet) -> list:
    return [[render(Fraction(a)), render(Fraction(b))] for a, b in x.intervals]


def from_json(data: Iterable[Sequence[str]]) -> IntervalSet:
    return make([(parse_rational(a), parse_rational(b)) for a, b in data])
