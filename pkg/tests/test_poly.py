from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from sibirsky.poly import (
    GREVLEX,
    LEX,
    MonomialOrder,
    Polynomial,
    PolynomialSyntaxError,
    VariableTable,
    cmp_monomials,
    evaluate,
    is_binomial,
    leading_term,
    poly_arith,
)
from sibirsky.scalars import GaussianRational, I

XY = VariableTable(["x", "y"])
XYZ = VariableTable(["x", "y", "z"])


def P(text, ring=XY, order=LEX):
    return Polynomial.parse(text, ring, order)


ORDERS = [LEX, GREVLEX, MonomialOrder.block(1), MonomialOrder.block(2, "grevlex", "grevlex"),
          MonomialOrder.block(1, "lex", "grevlex")]

expo3 = st.tuples(*[st.integers(0, 6)] * 3)


def test_cmp_examples():
    assert cmp_monomials((2, 0), (1, 1), LEX) == 1
    for order in ORDERS:
        assert cmp_monomials((3, 1), (3, 1), order) == 0
    # w vs x^5 with w eliminated
    assert cmp_monomials((1, 0), (0, 5), MonomialOrder.block(1)) == 1
    assert cmp_monomials((1, 0), (0, 5), MonomialOrder.block(1, "grevlex", "grevlex")) == 1
    with pytest.raises(ValueError):
        cmp_monomials((1,), (1, 2), LEX)


@pytest.mark.parametrize("order", ORDERS, ids=lambda o: f"{o.kind}{o.split}{o.inner}")
@given(u=expo3, v=expo3, w=expo3)
def test_order_axioms(order, u, v, w):
    c = cmp_monomials(u, v, order)
    assert c == -cmp_monomials(v, u, order)
    assert (c == 0) == (u == v)
    uw = tuple(a + b for a, b in zip(u, w))
    vw = tuple(a + b for a, b in zip(v, w))
    assert cmp_monomials(uw, vw, order) == c
    assert cmp_monomials(u, (0, 0, 0), order) >= 0


@given(u=expo3, v=expo3, w=expo3)
def test_block_order_is_elimination(u, v, w):
    order = MonomialOrder.block(1, "grevlex", "grevlex")
    if u[0] > 0 and v[0] == 0:
        assert cmp_monomials(u, v, order) == 1


def test_arith_examples():
    assert P("x+y") + P("x-y") == P("2*x")
    assert (P("x+y") * Polynomial.zero(XY)).is_zero()
    assert P("x+1") * P("x-1") == P("x^2-1")
    assert poly_arith(P("x"), P("y"), "sub") == P("x-y")
    with pytest.raises(ValueError):
        P("x") + Polynomial.var(XYZ, "x")


def test_leading_term_examples():
    lt = leading_term(P("x^2-y"), LEX)
    assert (lt.coeff, lt.expo) == (1, (2, 0))
    assert leading_term(P("x+y^2"), LEX).expo == (1, 0)
    assert leading_term(P("x+y^2"), GREVLEX).expo == (0, 2)
    with pytest.raises(ValueError):
        leading_term(Polynomial.zero(XY), LEX)


def test_evaluate_examples():
    R = VariableTable(["a10", "a01", "b10", "b01"])
    f = Polynomial.parse("a10*a01 - b01*b10", R)
    assert evaluate(f, {"a10": 1, "a01": 2, "b01": 2, "b10": 1}) == 0
    assert evaluate(P("x^2-y"), {"x": 3, "y": 9}) == 0
    assert evaluate(P("x+y"), {"x": I, "y": 1}) == GaussianRational(1, 1)
    with pytest.raises(KeyError):
        evaluate(P("x+y"), {"x": 1})


def test_evaluate_ignores_unused_unbound_variables():
    assert evaluate(P("x^2"), {"x": 2}) == 4


def test_is_binomial():
    R = VariableTable(["a01", "a-1,2", "b10", "b2,-1"])
    f = Polynomial.parse("a01^3*b2,-1 - a-1,2*b10^3", R)
    t1, t2 = is_binomial(f)
    assert t1.coeff == 1 and t1.expo == (3, 0, 0, 1)
    assert t2.coeff == -1 and t2.expo == (0, 1, 3, 0)
    assert is_binomial(P("x^2-y+1")) is None
    (mono,) = is_binomial(P("x^3"))
    assert mono.expo == (3, 0)


def test_parse_names_with_signs_and_commas():
    R = VariableTable(["a-1,2", "b2,-1", "a10"])
    f = Polynomial.parse("-a-1,2^2*b2,-1 + 3/2*a10 - 1", R)
    assert f.coefficient((2, 1, 0)) == -1
    assert f.coefficient((0, 0, 1)) == Fraction(3, 2)
    assert f.coefficient((0, 0, 0)) == -1
    assert Polynomial.parse(f.to_text(), R) == f


@pytest.mark.parametrize("text", ["", "x+", "x**2", "2x", "x^", "q", "x/2", "1/0*x"])
def test_parse_rejects(text):
    with pytest.raises(PolynomialSyntaxError):
        P(text)


small_fracs = st.fractions(min_value=-10, max_value=10, max_denominator=6)
terms = st.dictionaries(expo3, small_fracs, max_size=4)
polys = st.builds(lambda t: Polynomial(XYZ, t), terms)
points = st.fixed_dictionaries({
    n: st.builds(GaussianRational, small_fracs, small_fracs) for n in "xyz"
})


@settings(max_examples=60)
@given(polys, polys, points)
def test_evaluate_is_multiplicative(f, g, pt):
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@given(polys, polys, polys)
def test_ring_axioms_and_canonical_form(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f * (g + h) == f * g + f * h
    for r in (f + g, f - g, f * g):
        d = r.as_dict()
        assert all(c != 0 for c in d.values())
        assert Polynomial(XYZ, d) == r
        listed = [t.expo for t in r.terms(GREVLEX)]
        assert listed == sorted(listed, key=GREVLEX.key, reverse=True)
        assert len(set(listed)) == len(listed)


@given(polys)
def test_text_and_struct_round_trip(f):
    assert Polynomial.parse(f.to_text(), XYZ) == f
    assert Polynomial.from_struct(f.to_struct(), XYZ) == f


def test_variable_table_validation():
    with pytest.raises(ValueError):
        VariableTable(["x", "x"])
    with pytest.raises(ValueError):
        VariableTable(["x y"])


def test_primitive_and_monic():
    f = P("4/3*x - 2*y")
    assert f.primitive() == P("2*x - 3*y")
    assert (-f).primitive() == P("2*x - 3*y")
    assert f.monic() == P("x - 3/2*y")
