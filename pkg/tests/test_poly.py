import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadkit.poly import (GREVLEX, LEX, MonomialOrder, Polynomial, VarSet,
                          det, poly_arith)

XY = VarSet(("x", "y"))
ABCDEF = VarSet(("a", "b", "c", "d", "e", "f"))


def _v(vars, name):
    return Polynomial.variable(vars, name)


def test_varset_rejects_duplicates_and_bad_names():
    with pytest.raises(ValueError):
        VarSet(("x", "x"))
    with pytest.raises(ValueError):
        VarSet(("x", "2bad"))


def test_difference_of_squares():
    x, y = _v(XY, "x"), _v(XY, "y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2


def test_additive_identity():
    p = Polynomial.parse("3*x^2 - y + 1/2", XY)
    assert p + Polynomial.zero(XY) == p
    assert poly_arith(p, Polynomial.zero(XY), "add") == p


def test_ptolemy_product_expansion():
    # (ac+bd-ef)(ac+bd+ef) expanded by hand
    p = Polynomial.parse("a*c + b*d - e*f", ABCDEF)
    q = Polynomial.parse("a*c + b*d + e*f", ABCDEF)
    expected = Polynomial.parse(
        "a^2*c^2 + 2*a*b*c*d + b^2*d^2 - e^2*f^2", ABCDEF)
    assert poly_arith(p, q, "mul") == expected


def test_varset_mismatch_errors():
    p = Polynomial.parse("x + y", XY)
    q = Polynomial.parse("a", ABCDEF)
    with pytest.raises(ValueError):
        p + q
    with pytest.raises(ValueError):
        poly_arith(p, q, "mul")


def test_zero_coefficients_never_stored():
    x, y = _v(XY, "x"), _v(XY, "y")
    p = x + y - x - y
    assert p.is_zero and p.terms == {}
    q = (x + y) - x
    assert set(q.terms) == {(0, 1)}


def test_pow_and_scalar_ops():
    x, y = _v(XY, "x"), _v(XY, "y")
    assert (x + 1) ** 3 == x ** 3 + 3 * x ** 2 + 3 * x + 1
    assert Fraction(1, 2) * (2 * x) == x
    assert (x - y) ** 0 == Polynomial.one(XY)
    with pytest.raises(ValueError):
        x ** -1


def test_leading_monomials_per_order():
    # x^2*y vs x*y^2 vs y^3: grevlex and grlex tie-break differently from lex
    p = Polynomial.parse("x*y^2 + x^2*y + y^3 + x", XY)
    assert p.leading_monomial(LEX) == (2, 1)
    assert p.leading_monomial(MonomialOrder.grlex()) == (2, 1)
    assert p.leading_monomial(GREVLEX) == (2, 1)
    q = Polynomial.parse("x*y^2 + y^3", XY)
    assert q.leading_monomial(GREVLEX) == (1, 2)


def test_block_order_dominates_on_first_block():
    order = MonomialOrder.block_elimination(1)
    # any monomial containing x beats any pure-y monomial
    assert order.key((1, 0)) > order.key((0, 9))
    assert order.key((2, 0)) > order.key((1, 5))


def test_order_is_multiplicative_and_well_founded():
    rng = random.Random(5)
    for order in (LEX, MonomialOrder.grlex(), GREVLEX,
                  MonomialOrder.block_elimination(2)):
        one = (0, 0, 0)
        for _ in range(200):
            u = tuple(rng.randint(0, 4) for _ in range(3))
            v = tuple(rng.randint(0, 4) for _ in range(3))
            w = tuple(rng.randint(0, 4) for _ in range(3))
            if order.key(u) < order.key(v):
                uw = tuple(a + b for a, b in zip(u, w))
                vw = tuple(a + b for a, b in zip(v, w))
                assert order.key(uw) < order.key(vw)
            if u != one:
                assert order.key(u) > order.key(one)


def test_parse_print_round_trip_examples():
    texts = [
        "a*c + b*d - e*f",
        "1/2*a^2 - 3*b*c + 7",
        "-a + 2/3",
        "0",
        "e^2*(a*b + c*d) - (a^2 + b^2)*c*d - (c^2 + d^2)*a*b",
    ]
    for text in texts:
        p = Polynomial.parse(text, ABCDEF)
        assert Polynomial.parse(p.to_text(), ABCDEF) == p
        assert Polynomial.parse(p.to_text(LEX), ABCDEF) == p


def test_parse_bracketed_names_and_implicit_mult():
    V = VarSet(("x", "eta"))
    p = Polynomial.parse("2x*[eta]^2 - [eta]", V)
    x, eta = Polynomial.variables(V)
    assert p == 2 * x * eta ** 2 - eta
    assert Polynomial.parse(p.to_text(), V) == p


def test_parse_rejects_garbage():
    for bad in ("x +", "(x", "x ^ y", "x**2", "[unclosed"):
        with pytest.raises(ValueError):
            Polynomial.parse(bad, XY)


@st.composite
def _polys(draw):
    n_terms = draw(st.integers(0, 6))
    terms = {}
    for _ in range(n_terms):
        mono = (draw(st.integers(0, 3)), draw(st.integers(0, 3)))
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 9)))
        terms[mono] = terms.get(mono, 0) + coeff
    return Polynomial(XY, terms)


@settings(max_examples=120, deadline=None)
@given(_polys(), _polys(), _polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert (p - q) + q == p


@settings(max_examples=80, deadline=None)
@given(_polys())
def test_text_round_trip(p):
    assert Polynomial.parse(p.to_text(), XY) == p


def test_evaluate_rational_and_generic():
    p = Polynomial.parse("x^2*y - 3*x + 1/2", XY)
    val = p.evaluate({"x": Fraction(2), "y": Fraction(-1)})
    assert val == Fraction(-4) - 6 + Fraction(1, 2)


def test_on_vars_embedding_and_projection():
    p = Polynomial.parse("x^2 - y", XY)
    big = VarSet(("t", "x", "y"))
    q = p.on_vars(big)
    assert q.to_text() == p.to_text()
    assert q.on_vars(XY) == p
    with pytest.raises(ValueError):
        Polynomial.parse("t", big).on_vars(XY)


def test_det_small_matrices():
    assert det([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2
    m = [[Fraction(x) for x in row]
         for row in ((2, 0, 1), (1, 1, 0), (0, 3, 1))]
    assert det(m) == 2 * 1 - 0 + 1 * 3
    x, y = Polynomial.variables(XY)
    sym = det([[x, y], [y, x]])
    assert sym == x ** 2 - y ** 2
