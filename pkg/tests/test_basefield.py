from fractions import Fraction
from random import Random

import pytest

from conftest import random_poly, random_ratfunc
from diffalg.basefield import (
    BaseField,
    Poly,
    RatFunc,
    antiderivative_in_field,
    hermite_reduce,
    log_derivative_decompose,
    poly_gcd,
    poly_xgcd,
    smallest_exponential_index,
    squarefree_decomposition,
)

T = Poly.t()
ONE = Poly((1,))


def rf(num, den=1):
    return RatFunc(num, den, BaseField.RATIONAL)


def test_normalization():
    f = rf(Poly((-1, 0, 1)), Poly((-1, 1)))        # (t^2-1)/(t-1)
    assert f == rf(Poly((1, 1)))                   # t+1
    g = rf(Poly((0, 2)), Poly((4,)))               # 2t/4
    assert g.num == Poly((0, Fraction(1, 2))) and g.den == ONE
    with pytest.raises(ZeroDivisionError):
        rf(ONE, Poly())


def test_normalization_random():
    rng = Random(1)
    for _ in range(200):
        f = random_ratfunc(rng)
        assert f.den.lead() == 1
        assert poly_gcd(f.num, f.den).degree() <= 0
        if f.num.is_zero():
            assert f.den == ONE


def test_derive_examples():
    assert rf(T * T).derive() == rf(Poly((0, 2)))
    assert rf(ONE, T).derive() == rf(Poly((-1,)), T * T)
    assert rf(Poly((Fraction(7, 3),))).derive().is_zero()


def test_derive_leibniz_additive():
    rng = Random(2)
    for _ in range(150):
        f = random_ratfunc(rng)
        g = random_ratfunc(rng)
        assert (f * g).derive() == f.derive() * g + f * g.derive()
        assert (f + g).derive() == f.derive() + g.derive()


def test_constants_have_zero_derivative():
    rng = Random(3)
    for _ in range(100):
        f = random_ratfunc(rng)
        if f.derive().is_zero():
            assert f.num.degree() <= 0 and f.den.degree() <= 0
    # and conversely on constants
    assert rf(Poly((Fraction(-5, 7),))).derive().is_zero()


def test_poly_gcd_xgcd():
    rng = Random(4)
    for _ in range(120):
        a = random_poly(rng, 5)
        b = random_poly(rng, 5)
        g = poly_gcd(a, b)
        if a.is_zero() and b.is_zero():
            assert g.is_zero()
            continue
        assert g.lead() == 1
        assert a.divmod(g)[1].is_zero()
        assert b.divmod(g)[1].is_zero()
        g2, u, v = poly_xgcd(a, b)
        assert g2 == g
        assert u * a + v * b == g


def test_poly_shift_matches_evaluation():
    rng = Random(5)
    for _ in range(80):
        p = random_poly(rng, 5)
        a = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        x = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        assert p.shift(a)(x) == p(x + a)


def test_squarefree_decomposition():
    rng = Random(6)
    for _ in range(60):
        p = ONE
        for _ in range(rng.randint(1, 3)):
            p = p * random_poly(rng, 2, 4, nonzero=True) ** rng.randint(1, 3)
        if p.degree() <= 0:
            continue
        dec = squarefree_decomposition(p)
        prod = ONE
        for f, m in dec:
            assert f.lead() == 1 and f.degree() > 0
            assert poly_gcd(f, f.derivative()).degree() == 0
            prod = prod * f ** m
        for i in range(len(dec)):
            for j in range(i + 1, len(dec)):
                assert poly_gcd(dec[i][0], dec[j][0]).degree() == 0
        assert prod == p.monic()


def test_hermite_reduce_identity():
    rng = Random(7)
    for _ in range(80):
        a = random_ratfunc(rng, max_deg=3, bound=5)
        g, h = hermite_reduce(a)
        assert g.derive() + h == a
        # remainder is proper with squarefree denominator
        assert h.is_zero() or h.num.degree() < h.den.degree()
        assert poly_gcd(h.den, h.den.derivative()).degree() <= 0


def test_antiderivative_examples():
    assert antiderivative_in_field(rf(Poly((0, 2)))) == rf(T * T)
    assert antiderivative_in_field(rf(ONE, T * T)) == rf(Poly((-1,)), T)
    # 1/t: the Hermite remainder survives with an irreducible simple pole
    g, h = hermite_reduce(rf(ONE, T))
    assert h == rf(ONE, T) and h.den.degree() == 1
    assert antiderivative_in_field(rf(ONE, T)) is None


def test_antiderivative_roundtrip():
    rng = Random(8)
    hits = 0
    for _ in range(120):
        c = random_ratfunc(rng, max_deg=3, bound=5)
        a = c.derive()
        b = antiderivative_in_field(a)
        assert b is not None
        assert b.derive() == a
        hits += 1
    assert hits == 120


def test_antiderivative_none_is_honest():
    rng = Random(9)
    for _ in range(80):
        a = random_ratfunc(rng, max_deg=3, bound=5)
        b = antiderivative_in_field(a)
        if b is not None:
            assert b.derive() == a


def test_constants_field():
    c = RatFunc(Poly((3,)), 1, BaseField.CONSTANTS)
    assert c.derive().is_zero()
    assert antiderivative_in_field(c) is None
    zero = RatFunc(Poly(), 1, BaseField.CONSTANTS)
    assert antiderivative_in_field(zero) == zero
    with pytest.raises(ValueError):
        RatFunc(T, 1, BaseField.CONSTANTS)


def test_log_derivative_examples():
    assert log_derivative_decompose(rf(ONE, T)) == [(T, Fraction(1))]
    assert log_derivative_decompose(rf(ONE, Poly((0, 2)))) == [(T, Fraction(1, 2))]
    assert log_derivative_decompose(rf(ONE)) is None


def test_log_derivative_reconstruction():
    rng = Random(10)
    for _ in range(60):
        # build a from a known combination, decompose, reconstruct
        parts = []
        seen = set()
        for _ in range(rng.randint(1, 3)):
            p = random_poly(rng, 1, 6, nonzero=True).monic()
            if p.degree() == 0 or p in seen:
                continue
            seen.add(p)
            parts.append((p, Fraction(rng.randint(-4, 4), rng.randint(1, 4))))
        a = rf(Poly())
        for p, c in parts:
            a = a + rf(p.derivative() * c, p)
        dec = log_derivative_decompose(a)
        assert dec is not None
        back = rf(Poly())
        for p, c in dec:
            assert poly_gcd(p, p.derivative()).degree() == 0  # squarefree => degree-1 irreducible here
            back = back + rf(p.derivative() * c, p)
        assert back == a


def test_log_derivative_rejects_double_pole():
    assert log_derivative_decompose(rf(ONE, T * T)) is None
    assert log_derivative_decompose(rf(T * T)) is None


def test_log_derivative_irrational_residue():
    # 1/(t^2 - 2): residues live in Q(sqrt 2), not Q
    assert log_derivative_decompose(rf(ONE, Poly((-2, 0, 1)))) is None
    # but t/(t^2 - 2) = (1/2) * (t^2-2)'/(t^2-2) works
    dec = log_derivative_decompose(rf(T, Poly((-2, 0, 1))))
    assert dec == [(Poly((-2, 0, 1)), Fraction(1, 2))]


def test_smallest_exponential_index_examples():
    n, beta = smallest_exponential_index(rf(ONE, Poly((0, 2))))
    assert (n, beta) == (2, rf(T))
    n, beta = smallest_exponential_index(rf(ONE, T))
    assert (n, beta) == (1, rf(T))
    assert smallest_exponential_index(rf(ONE)) is None
    assert smallest_exponential_index(rf(Poly())) == (1, rf(ONE))


def test_smallest_exponential_index_properties():
    rng = Random(11)
    found = 0
    for _ in range(60):
        parts = []
        seen = set()
        for _ in range(rng.randint(1, 2)):
            p = random_poly(rng, 1, 5, nonzero=True).monic()
            if p.degree() == 0 or p in seen:
                continue
            seen.add(p)
            parts.append((p, Fraction(rng.randint(-3, 3), rng.randint(1, 5))))
        if not parts:
            continue
        a = rf(Poly())
        for p, c in parts:
            a = a + rf(p.derivative() * c, p)
        res = smallest_exponential_index(a)
        assert res is not None
        n, beta = res
        assert beta.derive() == a * n * beta
        dec = log_derivative_decompose(a)
        for m in range(1, n):
            assert any((c * m).denominator != 1 for _p, c in dec)
        found += 1
    assert found > 20
