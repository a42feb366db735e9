from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hullcert.rational import parse_rational, parse_vector, render, render_decimal


def test_parse_fraction_forms():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-3/4") == Fraction(-3, 4)
    assert parse_rational(" 6 / 8 ") == Fraction(3, 4)
    assert parse_rational("2") == Fraction(2)


def test_parse_decimal_is_exact_base_ten():
    assert parse_rational("0.85") == Fraction(17, 20)
    assert parse_rational("-0.5") == Fraction(-1, 2)
    assert parse_rational(".25") == Fraction(1, 4)
    assert parse_rational("1.") == Fraction(1)


@pytest.mark.parametrize("bad", ["1/0", "abc", "1e3", "0x2", "1/2/3", ""])
def test_parse_rejects_garbage(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_render_round_trip_examples():
    for r in (Fraction(161, 20), Fraction(-7, 3), Fraction(0), Fraction(5)):
        assert parse_rational(render(r)) == r


def test_render_decimal():
    assert render_decimal(Fraction(17, 20)) == "0.85"
    assert render_decimal(Fraction(3)) == "3"
    assert render_decimal(Fraction(-1, 4)) == "-0.25"
    # denominators with prime factors beyond 2 and 5 fall back to p/q
    assert render_decimal(Fraction(1, 3)) == "1/3"


def test_parse_vector():
    assert parse_vector("0.85,0.8,1/2") == [
        Fraction(17, 20), Fraction(4, 5), Fraction(1, 2)]
    assert parse_vector("1, 2 ,3") == [Fraction(1), Fraction(2), Fraction(3)]


@given(st.fractions())
def test_render_parse_round_trip(r):
    assert parse_rational(render(r)) == r
    assert parse_rational(render_decimal(r)) == r
