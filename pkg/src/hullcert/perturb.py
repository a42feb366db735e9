"""First-order infinitesimal perturbations.

A ``Perturbed`` value is a + b*eps where eps is a positive infinitesimal;
ordering is lexicographic in (a, b). The split-graph construction only adds,
subtracts and compares coordinates, so running it on Perturbed inputs computes
the exact limit of the construction as the boundary perturbation goes to zero.
``std`` recovers the limit value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True, order=False)
class Perturbed:
    std: Fraction
    eps: Fraction = Fraction(0)

    @staticmethod
    def lift(value) -> "Perturbed":
        if isinstance(value, Perturbed):
            return value
        return Perturbed(Fraction(value))

    def _key(self):
        return (self.std, self.eps)

    def __add__(self, other):
        o = Perturbed.lift(other)
        return Perturbed(self.std + o.std, self.eps + o.eps)

    __radd__ = __add__

    def __sub__(self, other):
        o = Perturbed.lift(other)
        return Perturbed(self.std - o.std, self.eps - o.eps)

    def __rsub__(self, other):
        return Perturbed.lift(other) - self

    def __neg__(self):
        return Perturbed(-self.std, -self.eps)

    def __mul__(self, other):
        if isinstance(other, Perturbed):
            raise TypeError("Perturbed values are first-order only")
        return Perturbed(self.std * other, self.eps * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self._key() == Perturbed.lift(other)._key()

    def __lt__(self, other):
        return self._key() < Perturbed.lift(other)._key()

    def __le__(self, other):
        return self._key() <= Perturbed.lift(other)._key()

    def __gt__(self, other):
        return self._key() > Perturbed.lift(other)._key()

    def __ge__(self, other):
        return self._key() >= Perturbed.lift(other)._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.eps == 0:
            return f"{self.std}"
        return f"{self.std}{'+' if self.eps > 0 else ''}{self.eps}*eps"


def std_part(value) -> Fraction:
    return value.std if isinstance(value, Perturbed) else Fraction(value)
