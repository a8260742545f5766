import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, given, settings, strategies as st

from sibirsky.groebner import (
    Budget,
    BudgetExceeded,
    IdealBasis,
    eliminate,
    groebner_basis,
    ideal_equal,
    ideal_member,
    is_groebner,
    is_reduced_basis,
    normal_form,
    s_polynomial,
)
from sibirsky.poly import GREVLEX, LEX, MonomialOrder, Polynomial, VariableTable

XY = VariableTable(["x", "y"])
TXY = VariableTable(["t", "x", "y"])
XYZ = VariableTable(["x", "y", "z"])


def P(text, ring=XY):
    return Polynomial.parse(text, ring)


def texts(G):
    return sorted(str(g) for g in G)


# -- independent oracles --------------------------------------------------
def naive_divide(f, divisors, order):
    """Textbook division, one leading-term step at a time, Fraction arithmetic."""
    p, r = f, Polynomial.zero(f.ring)
    while not p.is_zero():
        c, e = p.leading_term(order)
        for g in divisors:
            gc, ge = g.leading_term(order)
            if all(a >= b for a, b in zip(e, ge)):
                q = tuple(a - b for a, b in zip(e, ge))
                p = p - g.mul_monomial(q, c / gc)
                break
        else:
            lead = Polynomial.monomial(f.ring, e, c)
            r, p = r + lead, p - lead
    return r


def det(matrix):
    """Leibniz determinant over polynomials (small matrices only)."""
    n = len(matrix)
    total = Polynomial.zero(matrix[0][0].ring)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.constant(total.ring, -1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
        total = total + term
    return total


def sylvester_resultant_in_t():
    """Res_t(t^2 - x, t^3 - y) built by hand from the Sylvester matrix."""
    R = VariableTable(["x", "y"])
    zero, one = Polynomial.zero(R), Polynomial.constant(R, 1)
    x, y = Polynomial.var(R, "x"), Polynomial.var(R, "y")
    f = [one, zero, -x]          # t^2 - x
    g = [one, zero, zero, -y]    # t^3 - y
    rows = []
    for shift in range(3):
        rows.append([zero] * shift + f + [zero] * (2 - shift))
    for shift in range(2):
        rows.append([zero] * shift + g + [zero] * (1 - shift))
    return det(rows)


# -- normal form ----------------------------------------------------------
def test_normal_form_example():
    f, G = P("x^2*y"), [P("x^2-y")]
    r = normal_form(f, G, LEX)
    assert r == P("y^2")
    assert r == naive_divide(f, G, LEX)


def test_normal_form_member_and_irreducible():
    G = groebner_basis([P("x^2-y")], LEX)
    assert normal_form(P("x^2-y"), G).is_zero()
    assert normal_form(P("y"), G) == P("y")
    assert normal_form(Polynomial.zero(XY), G).is_zero()


def test_normal_form_keeps_rational_remainder_exact():
    G = [P("2*x - 3")]
    r = normal_form(P("x^2 + 1/3"), G, LEX)
    assert r == Polynomial.constant(XY, Fraction(9, 4) + Fraction(1, 3))
    # f - r lies in the ideal: divisible by 2x - 3
    assert normal_form(P("x^2 + 1/3") - r, G, LEX).is_zero()


# -- S-polynomials --------------------------------------------------------
def test_s_polynomial_examples():
    f, g = P("x^2-y"), P("x*y-x")
    s = s_polynomial(f, g, LEX)
    assert s == P("y") * f - P("x") * g
    assert s == P("x^2-y^2")
    assert s_polynomial(f, f, LEX).is_zero()
    # coprime leading monomials: S-poly reduces to zero (product criterion)
    a, b = P("x^2+y"), P("y^2+x")
    assert normal_form(s_polynomial(a, b, GREVLEX), [a, b], GREVLEX).is_zero()
    with pytest.raises(ValueError):
        s_polynomial(f, Polynomial.zero(XY), LEX)


# -- Groebner bases -------------------------------------------------------
def test_groebner_example():
    F = [P("x^2-y"), P("x*y-x")]
    G = groebner_basis(F, LEX)
    assert texts(G) == texts([P("x^2-y"), P("x*y-x"), P("y^2-y")])
    assert is_groebner(G) and is_reduced_basis(G)
    G0 = groebner_basis(F, GREVLEX)
    assert all(ideal_member(f, G) for f in G0) and all(ideal_member(f, G0) for f in F)


def test_groebner_trivial_and_degenerate():
    assert texts(groebner_basis([P("x")], LEX)) == ["x"]
    assert len(groebner_basis([Polynomial.zero(XY)], LEX)) == 0
    G = groebner_basis([P("x"), P("x-1")], LEX)
    assert texts(G) == ["1"] and G.is_unit()
    with pytest.raises(ValueError):
        groebner_basis([], LEX)


def test_groebner_matches_sympy_textbook_cases():
    x, y, z = sympy.symbols("x y z")
    cases = [
        (["x^2 + 2*x*y^2", "x*y + 2*y^3 - 1"], "lex"),
        (["-x^2 + y", "-x^3 + z"], "lex"),
        (["-x^2 + y", "-x^3 + z"], "grevlex"),
        (["x^3 - 2*x*y", "x^2*y + x - 2*y^2"], "grevlex"),
        (["x*y*z - 1", "x^2 - y", "y^2 - z*x"], "grevlex"),
    ]
    for gens, kind in cases:
        ours = groebner_basis([Polynomial.parse(g, XYZ) for g in gens],
                              LEX if kind == "lex" else GREVLEX)
        theirs = sympy.groebner([sympy.sympify(g.replace("^", "**")) for g in gens],
                                x, y, z, order=kind)
        assert {sympy.expand(sympy.sympify(str(g).replace("^", "**"))) for g in ours} == {
            sympy.expand(g / sympy.Poly(g, x, y, z).LC(order=kind)) for g in theirs.exprs
        }


small_expo = st.tuples(*[st.integers(0, 2)] * 3)
small_poly = st.dictionaries(small_expo, st.integers(-3, 3).filter(bool), min_size=1, max_size=3)


def _sympy_reduced(F, kind):
    x, y, z = sympy.symbols("x y z")
    exprs = [sympy.sympify(str(f).replace("^", "**")) for f in F]
    G = sympy.groebner(exprs, x, y, z, order=kind)
    return {sympy.expand(g / sympy.Poly(g, x, y, z).LC(order=kind)) for g in G.exprs}


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(small_poly, min_size=1, max_size=3),
       st.sampled_from(["lex", "grevlex", "block"]),
       st.randoms(use_true_random=False))
def test_groebner_properties(raw, kind, rnd):
    order = {"lex": LEX, "grevlex": GREVLEX,
             "block": MonomialOrder.block(1, "grevlex", "grevlex")}[kind]
    F = [Polynomial(XYZ, t) for t in raw]
    G = groebner_basis(F, order, Budget(seconds=20))
    assert is_groebner(G)
    assert is_reduced_basis(G)
    assert all(ideal_member(f, G) for f in F)
    if kind != "block":
        ours = {sympy.expand(sympy.sympify(str(g).replace("^", "**"))) for g in G}
        assert ours == _sympy_reduced(F, kind)
    # uniqueness under input permutation
    shuffled = list(F)
    rnd.shuffle(shuffled)
    assert groebner_basis(shuffled, order).generators == G.generators
    # normal form idempotence
    f = Polynomial(XYZ, {(2, 1, 1): 1, (0, 2, 0): -2, (1, 0, 0): 3})
    r = normal_form(f, G)
    assert normal_form(r, G) == r


# -- elimination ----------------------------------------------------------
def test_eliminate_twisted_cubic_projection():
    G = groebner_basis([Polynomial.parse("t^2-x", TXY), Polynomial.parse("t^3-y", TXY)], LEX)
    assert is_groebner(G)
    kept = eliminate(G, ["x", "y"])
    assert all(g.support() <= {"x", "y"} for g in kept)
    assert all(ideal_member(g, G) for g in kept)
    res = sylvester_resultant_in_t()
    as_xy = [Polynomial(res.ring, {e[1:]: c for e, c in g.as_dict().items()}) for g in kept]
    assert ideal_equal(as_xy, [res], LEX)
    assert texts(as_xy) == texts([P("x^3 - y^2")])


def test_eliminate_with_block_order_and_keep_all():
    order = MonomialOrder.block(1, "grevlex", "grevlex")
    G = groebner_basis([Polynomial.parse("t^2-x", TXY), Polynomial.parse("t^3-y", TXY)], order)
    kept = eliminate(G, ["x", "y"])
    R = VariableTable(["x", "y"])
    assert ideal_equal([Polynomial(R, {e[1:]: c for e, c in g.as_dict().items()}) for g in kept],
                       [P("x^3-y^2")], LEX)
    assert eliminate(G, ["t", "x", "y"]) == list(G.generators)


def test_eliminate_rejects_incompatible_order():
    G = groebner_basis([Polynomial.parse("t^2-x", TXY)], GREVLEX)
    with pytest.raises(ValueError):
        eliminate(G, ["x", "y"])
    G = groebner_basis([Polynomial.parse("t^2-x", TXY)], MonomialOrder.block(2))
    with pytest.raises(ValueError):
        eliminate(G, ["x", "y"])
    with pytest.raises(ValueError):
        eliminate(G, ["t", "y"])


# -- membership and equality ---------------------------------------------
def test_ideal_member_examples():
    R = VariableTable(["a10", "a01", "a-1,2", "b10", "b01", "b2,-1"])
    fs = [Polynomial.parse(t, R) for t in (
        "a01^3*b2,-1 - a-1,2*b10^3",
        "a10*a01 - b01*b10",
        "a10^3*a-1,2 - b2,-1*b01^3",
        "a10*a-1,2*b10^2 - a01^2*b2,-1*b01",
        "a10^2*a-1,2*b10 - a01*b2,-1*b01^2",
    )]
    G = groebner_basis(fs, LEX)
    assert ideal_member(fs[0], G)
    assert ideal_member(Polynomial.var(R, "a10") * fs[1] + fs[2], G)
    assert not ideal_member(Polynomial.constant(XY, 1), groebner_basis([P("x")], LEX))
    with pytest.raises(ValueError):
        ideal_member(fs[0], IdealBasis(tuple(fs), LEX, R, reduced=False))


def test_ideal_equal_examples():
    assert ideal_equal([P("x^2-y")], [P("2*x^2-2*y")], LEX)
    assert not ideal_equal([P("x")], [P("x^2")], LEX)
    assert ideal_equal([Polynomial.zero(XY)], [], LEX)


def test_budget_abort_reports_partial_state():
    R = VariableTable([f"x{i}" for i in range(4)])
    rnd = random.Random(3)
    F = [Polynomial(R, {tuple(rnd.randint(0, 3) for _ in range(4)): rnd.randint(1, 9)
                        for _ in range(4)}) for _ in range(4)]
    with pytest.raises(BudgetExceeded) as info:
        groebner_basis(F, LEX, Budget(max_degree=2))
    assert info.value.diagnostics["max_degree"] > 2
    assert "pending_pairs" in info.value.diagnostics
