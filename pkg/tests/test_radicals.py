import random
from decimal import Decimal, getcontext
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadkit.radicals import (NotRepresentableInQuadraticTower, RadicalValue,
                              factorize, rad_arith, rad_sign, rad_sqrt,
                              sqrt_rational, squarefree_decompose)


def test_sqrt_rational_examples():
    assert sqrt_rational(Fraction(25, 4)) == RadicalValue.from_rational(Fraction(5, 2))
    assert sqrt_rational(8).coords == {2: Fraction(2)}          # 2*sqrt(2)
    assert sqrt_rational(Fraction(50, 9)).coords == {2: Fraction(5, 3)}
    assert sqrt_rational(0).is_zero
    with pytest.raises(ValueError):
        sqrt_rational(-1)


def test_squarefree_decompose():
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(8) == (2, 2)
    assert squarefree_decompose(360) == (10, 6)
    p = 10 ** 6 + 3  # prime
    assert squarefree_decompose(p * p * 7) == (7, p)
    n = 2 ** 3 * 3 ** 4 * 5
    s, k = squarefree_decompose(n)
    assert s * k * k == n and s == 10


def test_factorize_large_semiprime():
    p, q = 1000003, 1000033
    assert factorize(p * q) == ((p, 1), (q, 1))


def test_arithmetic_examples():
    r2, r3 = sqrt_rational(2), sqrt_rational(3)
    assert rad_arith(r2, r2, "mul") == RadicalValue.from_rational(2)
    assert (1 + r2) * (1 - r2) == RadicalValue.from_rational(-1)
    assert rad_arith(r2, r3, "mul") == sqrt_rational(6)
    assert sqrt_rational(8) - 2 * r2 == RadicalValue.from_rational(0)
    with pytest.raises(ValueError):
        rad_arith(r2, r3, "div")


def test_sign_examples():
    r2, r3, r5 = (sqrt_rational(n) for n in (2, 3, 5))
    assert rad_sign(r2 + r3 - r5) == 1
    assert rad_sign(RadicalValue.from_rational(0)) == 0
    # folded-rectangle P value: 3*4 + 4*3 - 5*(7/5) = 18 > 0, via radicals
    p = (sqrt_rational(16) * sqrt_rational(16)
         + sqrt_rational(9) * sqrt_rational(9)
         - sqrt_rational(25) * sqrt_rational(Fraction(49, 25)))
    assert p == RadicalValue.from_rational(18)
    assert rad_sign(p) == 1


def test_sign_near_zero_needs_precision():
    r2 = sqrt_rational(2)
    # continued-fraction convergents of sqrt(2) straddle it
    assert rad_sign(r2 - Fraction(99, 70)) == -1
    assert rad_sign(r2 - Fraction(239, 169)) == 1
    assert rad_sign(r2 - Fraction(114243, 80782)) == -1
    big = Fraction(886731088897, 627013566048)  # very close convergent
    expected = 1 if big * big < 2 else -1
    assert rad_sign(r2 - big) == expected


def test_zero_is_decided_symbolically():
    x = (sqrt_rational(2) + sqrt_rational(3)) ** 2 - (5 + 2 * sqrt_rational(6))
    assert x.is_zero and rad_sign(x) == 0
    y = sqrt_rational(Fraction(4, 9)) - Fraction(2, 3)
    assert y.is_zero


def test_sign_multiplicativity_on_random_values():
    rng = random.Random(23)

    def rand_val():
        v = RadicalValue.from_rational(0)
        for s in rng.sample((1, 2, 3, 5, 6, 7, 10), k=3):
            c = Fraction(rng.randint(-8, 8), rng.randint(1, 5))
            v = v + c * sqrt_rational(s)
        return v

    for _ in range(300):
        x, y = rand_val(), rand_val()
        if x.is_zero or y.is_zero:
            continue
        assert rad_sign(x * y) == rad_sign(x) * rad_sign(y)


def test_sign_against_100_digit_decimal():
    getcontext().prec = 110
    rng = random.Random(7)
    radicands = (1, 2, 3, 5, 6, 7, 11, 13, 15, 21)
    for _ in range(1000):
        coords = {}
        for s in rng.sample(radicands, k=rng.randint(1, 4)):
            coords[s] = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
        v = RadicalValue(coords)
        approx = Decimal(0)
        for s, c in v.coords.items():
            approx += (Decimal(c.numerator) / Decimal(c.denominator)
                       * Decimal(s).sqrt())
        want = 0 if v.is_zero else (1 if approx > 0 else -1)
        assert rad_sign(v) == want


def test_inverse_and_division():
    rng = random.Random(5)
    for _ in range(60):
        coords = {s: Fraction(rng.randint(-6, 6), rng.randint(1, 4))
                  for s in rng.sample((1, 2, 3, 5, 7, 30), k=3)}
        x = RadicalValue(coords)
        if x.is_zero:
            continue
        assert x * x.inverse() == RadicalValue.from_rational(1)
        assert (x / x) == RadicalValue.from_rational(1)
    with pytest.raises(ZeroDivisionError):
        RadicalValue.from_rational(0).inverse()


def test_pow():
    r2 = sqrt_rational(2)
    assert (1 + r2) ** 3 == 7 + 5 * r2
    assert (1 + r2) ** 0 == RadicalValue.from_rational(1)
    assert (1 + r2) ** -1 == (1 + r2).inverse()


def test_radicand_normalization_in_constructor():
    # non-squarefree radicands are normalized on entry: sqrt(12) = 2*sqrt(3)
    v = RadicalValue({12: Fraction(1)})
    assert v.coords == {3: Fraction(2)}
    w = RadicalValue({3: Fraction(1), 12: Fraction(1)})
    assert w.coords == {3: Fraction(3)}


def test_str_format():
    v = Fraction(3, 2) + 5 * sqrt_rational(2) - Fraction(1, 3) * sqrt_rational(6)
    assert str(v) == "3/2 + 5*sqrt(2) - 1/3*sqrt(6)"
    assert str(RadicalValue.from_rational(0)) == "0"


def test_rad_sqrt_denesting():
    r2 = sqrt_rational(2)
    assert rad_sqrt(3 + 2 * r2) == 1 + r2
    assert rad_sqrt(RadicalValue.from_rational(Fraction(9, 4))) == \
        RadicalValue.from_rational(Fraction(3, 2))
    with pytest.raises(ValueError):
        rad_sqrt(RadicalValue.from_rational(-1))
    with pytest.raises(NotRepresentableInQuadraticTower):
        rad_sqrt(1 + r2)  # sqrt(1+sqrt 2) does not denest


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10 ** 6))
def test_squarefree_property(n):
    s, k = squarefree_decompose(n)
    assert s * k * k == n
    for p, e in factorize(s):
        assert e == 1
