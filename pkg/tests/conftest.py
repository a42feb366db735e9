"""Shared helpers: seeded random rational points and interval sets.

All randomness in the suite flows through explicitly seeded
``random.Random`` instances so that every run checks exactly the same
instances.
"""

from fractions import Fraction
from random import Random

DENOMINATORS = (8, 10, 12)


def rand_frac(rng: Random, denominators=DENOMINATORS) -> Fraction:
    d = rng.choice(denominators)
    return Fraction(rng.randrange(0, d + 1), d)


def rand_x(rng: Random, n: int, boundary_prob: float = 0.0,
           denominators=DENOMINATORS) -> list:
    out = []
    for _ in range(n):
        if boundary_prob and rng.random() < boundary_prob:
            out.append(Fraction(rng.choice((0, 1))))
        else:
            out.append(rand_frac(rng, denominators))
    return out


def rand_interior_x(rng: Random, n: int, denominators=DENOMINATORS) -> list:
    out = []
    for _ in range(n):
        d = rng.choice(denominators)
        out.append(Fraction(rng.randrange(1, d), d))
    return out


def rand_interval_set(rng: Random, max_pieces: int = 4, denom: int = 60):
    """A random interval set in [0,1) with rational endpoints."""
    from hullcert import intervals as iv

    pieces = []
    for _ in range(rng.randrange(0, max_pieces + 1)):
        a = Fraction(rng.randrange(0, denom + 1), denom)
        b = Fraction(rng.randrange(0, denom + 1), denom)
        if a > b:
            a, b = b, a
        pieces.append((a, b))
    return iv.make(pieces)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
