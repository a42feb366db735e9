"""Exact rational scalars.

Every number that enters a verification path is a ``fractions.Fraction``:
arbitrary-precision, always in canonical form (positive denominator, gcd 1).
This module adds the parsing/rendering conventions used across the package.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_FRACTION_RE = re.compile(r"^([+-]?\d+)\s*/\s*(\d+)$")
_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or a finite decimal like "0.85" into an exact Fraction.

    Decimals convert in exact base 10 (0.85 -> 17/20), never through floats.
    """
    s = text.strip()
    m = _FRACTION_RE.match(s)
    if m:
        num, den = int(m.group(1)), int(m.group(2))
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(num, den)
    if _DECIMAL_RE.match(s):
        if "." in s:
            whole, frac = s.split(".")
            sign = -1 if whole.startswith("-") else 1
            whole = whole.lstrip("+-") or "0"
            scale = 10 ** len(frac)
            frac_int = int(frac) if frac else 0
            return sign * Fraction(int(whole) * scale + frac_int, scale)
        return Fraction(int(s))
    raise ValueError(f"not a rational literal: {text!r}")


def render(r: Fraction) -> str:
    """Canonical "p/q" rendering (round-trips through parse_rational)."""
    return f"{r.numerator}/{r.denominator}"


def render_decimal(r: Fraction) -> str:
    """Decimal rendering for display only; falls back to p/q when the
    denominator is not of the form 2^a 5^b."""
    a = b = 0
    d = r.denominator
    while d % 2 == 0:
        d //= 2
        a += 1
    while d % 5 == 0:
        d //= 5
        b += 1
    if d != 1:
        return render(r)
    digits = max(a, b)
    if digits == 0:
        return str(r.numerator)
    scaled = abs(r.numerator) * 10**digits // r.denominator
    sign = "-" if r.numerator < 0 else ""
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def parse_vector(text: str) -> list[Fraction]:
    """Comma-separated rational literals, e.g. "0.85,0.8,1/2"."""
    return [parse_rational(tok) for tok in text.split(",") if tok.strip()]
