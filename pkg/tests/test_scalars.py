from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sibirsky.scalars import (
    GaussianRational,
    I,
    format_gaussian,
    gauss_arith,
    gauss_pow,
    parse_gaussian,
    parse_rational,
    rat_normalize,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(lambda z: not z.is_zero())


@pytest.mark.parametrize("num, den, expected", [
    (2, -4, Fraction(-1, 2)),
    (0, 7, Fraction(0, 1)),
    (6, 3, Fraction(2, 1)),
])
def test_rat_normalize(num, den, expected):
    r = rat_normalize(num, den)
    assert r == expected
    assert r.denominator > 0
    assert (r.numerator, r.denominator) == (expected.numerator, expected.denominator)


def test_rat_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_normalize(1, 0)


def test_gauss_arith_examples():
    assert gauss_arith(1 + I, 1 - I, "mul") == 2
    assert gauss_arith(1 + I, 1 + I, "div") == 1
    assert gauss_arith(Fraction(3, 2), Fraction(-3, 2), "add") == 0
    with pytest.raises(ZeroDivisionError):
        gauss_arith(1, 0, "div")
    with pytest.raises(ValueError):
        gauss_arith(1, 1, "pow")


def test_gauss_pow_examples():
    assert gauss_pow(2, -3) == Fraction(1, 8)
    assert gauss_pow(I, 2) == -1
    assert gauss_pow(Fraction(5, 3), 0) == 1
    with pytest.raises(ZeroDivisionError):
        gauss_pow(0, -1)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(r, s, t):
    assert (r + s) + t == r + (s + t)
    assert (r * s) * t == r * (s * t)
    assert r * (s + t) == r * s + r * t


@given(gaussians, gaussians, gaussians)
def test_gaussian_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(gaussians, nonzero_gaussians)
def test_division_inverts_multiplication(a, b):
    assert (a / b) * b == a


@given(nonzero_gaussians, st.integers(-8, 8), st.integers(-8, 8))
def test_gauss_pow_additive(a, m, n):
    assert gauss_pow(a, m + n) == gauss_pow(a, m) * gauss_pow(a, n)


@given(gaussians)
def test_results_are_canonical(z):
    for part in (z.re, z.im):
        again = rat_normalize(part.numerator, part.denominator)
        assert (again.numerator, again.denominator) == (part.numerator, part.denominator)


@given(gaussians)
def test_text_round_trip(z):
    assert parse_gaussian(format_gaussian(z)) == z


@pytest.mark.parametrize("text, re, im", [
    ("1", 1, 0),
    ("-1/2", Fraction(-1, 2), 0),
    ("i", 0, 1),
    ("-i", 0, -1),
    ("3/4*i", 0, Fraction(3, 4)),
    ("1/2-3/4*i", Fraction(1, 2), Fraction(-3, 4)),
    ("1+i", 1, 1),
    (" 2 + 5/7 * i ", 2, Fraction(5, 7)),
])
def test_parse_gaussian(text, re, im):
    assert parse_gaussian(text) == GaussianRational(re, im)


@pytest.mark.parametrize("text", ["", "1/", "i*", "1+*i", "abc", "*i", "1-i-i", "1/0"])
def test_parse_gaussian_rejects(text):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_gaussian(text)


def test_parse_rational():
    assert parse_rational("-6/4") == Fraction(-3, 2)
    with pytest.raises(ValueError):
        parse_rational("1.5")
