from fractions import Fraction
from random import Random

import pytest

from conftest import random_poly, random_ratfunc
from diffalg.basefield import Poly, RatFunc
from diffalg.errors import PoleAtBasePoint, ShapeError
from diffalg.odeseries import (
    TruncatedSeries,
    fundamental_system_series,
    ode_residual,
    series_expand,
    series_wronskian,
)
from diffalg.wronskian import LinearODE

ZERO = RatFunc(0)


def test_series_expand_examples():
    s = series_expand(RatFunc(1, Poly((1, -1))), 0, 3)
    assert s.coeffs == (1, 1, 1, 1)
    s = series_expand(RatFunc(Poly((0, 0, 1))), 0, 4)
    assert s.coeffs == (0, 0, 1, 0, 0)
    with pytest.raises(PoleAtBasePoint):
        series_expand(RatFunc(1, Poly.t()), 0, 3)


def test_series_expand_matches_evaluation():
    # p(t) expanded at t0 has coefficients whose partial sums evaluate back
    rng = Random(40)
    for _ in range(50):
        f = random_ratfunc(rng, 3, 5)
        t0 = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        if f.den(t0) == 0:
            continue
        s = series_expand(f, t0, 8)
        assert s.coeffs[0] == f(t0)
        # derivative of the expansion is the expansion of the derivative
        ds = series_expand(f.derive(), t0, 7)
        assert s.derive() == ds


def test_series_arithmetic_truncates_consistently():
    rng = Random(41)
    for _ in range(40):
        f = random_ratfunc(rng, 2, 4)
        g = random_ratfunc(rng, 2, 4)
        if f.den(0) == 0 or g.den(0) == 0:
            continue
        sf = series_expand(f, 0, 9)
        sg = series_expand(g, 0, 7)
        prod = sf * sg
        assert prod.precision == 7
        assert prod == series_expand(f * g, 0, 7)
        assert (sf + sg) == series_expand(f + g, 0, 7)


def test_fundamental_system_examples():
    ode = LinearODE(2, [ZERO, ZERO])
    u0, u1 = fundamental_system_series(ode, 0, 5)
    assert u0.coeffs == (1, 0, 0, 0, 0, 0)
    assert u1.coeffs == (0, 1, 0, 0, 0, 0)

    cosh_sinh = fundamental_system_series(LinearODE(2, [ZERO, RatFunc(-1)]), 0, 5)
    assert cosh_sinh[0].coeffs == (1, 0, Fraction(1, 2), 0, Fraction(1, 24), 0)
    assert cosh_sinh[1].coeffs == (0, 1, 0, Fraction(1, 6), 0, Fraction(1, 120))

    airy = fundamental_system_series(LinearODE(2, [ZERO, RatFunc(Poly((0, -1)))]), 0, 6)
    assert airy[0].coeffs == (1, 0, 0, Fraction(1, 6), 0, 0, Fraction(1, 180))
    assert airy[1].coeffs == (0, 1, 0, 0, Fraction(1, 12), 0, 0)


def test_series_wronskian():
    one = TruncatedSeries(0, [1, 0, 0])
    t = TruncatedSeries(0, [0, 1, 0])
    assert series_wronskian([one, t]).coeffs == (1, 0)
    assert series_wronskian([t, t * 2]).is_zero()
    with pytest.raises(ShapeError):
        series_wronskian([])
    shifted = TruncatedSeries(1, [1, 1])
    with pytest.raises(ShapeError):
        series_wronskian([one, shifted])


def test_ode_residual_examples():
    ode = LinearODE(2, [ZERO, ZERO])
    assert ode_residual(ode, TruncatedSeries(0, [0, 1, 0, 0])).is_zero()
    hyper = LinearODE(2, [ZERO, RatFunc(-1)])
    cosh = fundamental_system_series(hyper, 0, 8)[0]
    assert ode_residual(hyper, cosh).is_zero()
    res = ode_residual(hyper, series_expand(RatFunc(Poly((0, 0, 1))), 0, 6))
    assert res.coeffs == (2, 0, -1, 0, 0)


def _random_ordinary_ode(rng: Random, t0: Fraction, max_order: int = 4) -> LinearODE:
    n = rng.randint(1, max_order)
    coeffs = []
    for _ in range(n):
        while True:
            f = random_ratfunc(rng, 3, 5)
            if f.den(t0) != 0:
                coeffs.append(f)
                break
    return LinearODE(n, coeffs)


def test_fundamental_system_properties():
    rng = Random(42)
    for _ in range(25):
        t0 = Fraction(rng.randint(-2, 2))
        ode = _random_ordinary_ode(rng, t0, 3)
        sys = fundamental_system_series(ode, t0, 12)
        for s in sys:
            assert ode_residual(ode, s).is_zero()
        w = series_wronskian(sys)
        assert w.coeffs[0] == 1


def test_abel_identity():
    # W' = -a1 W through the valid precision
    rng = Random(43)
    for _ in range(20):
        t0 = Fraction(rng.randint(-2, 2))
        ode = _random_ordinary_ode(rng, t0, 3)
        sys = fundamental_system_series(ode, t0, 12)
        w = series_wronskian(sys)
        lhs = w.derive()
        a1 = series_expand(ode.coeffs[0], t0, lhs.precision)
        rhs = -(a1 * w)
        n = min(lhs.precision, rhs.precision)
        assert lhs.truncate(n) == rhs.truncate(n)


def test_pole_rejection_and_precision_guards():
    ode = LinearODE(1, [RatFunc(1, Poly.t())])
    with pytest.raises(PoleAtBasePoint):
        fundamental_system_series(ode, 0, 8)
    # fine at a different base point
    sys = fundamental_system_series(ode, 1, 8)
    assert ode_residual(ode, sys[0]).is_zero()
    with pytest.raises(ShapeError):
        fundamental_system_series(LinearODE(2, [ZERO, ZERO]), 0, 1)
    with pytest.raises(ShapeError):
        ode_residual(LinearODE(2, [ZERO, ZERO]), TruncatedSeries(0, [1, 1]))


def test_series_str():
    s = series_expand(RatFunc(1, Poly((1, -1))), 0, 3)
    assert str(s) == "1 + t + t^2 + t^3 + O(t^4)"
    cosh = fundamental_system_series(LinearODE(2, [ZERO, RatFunc(-1)]), 0, 4)[0]
    assert str(cosh) == "1 + 1/2*t^2 + 1/24*t^4 + O(t^5)"
    assert str(TruncatedSeries(Fraction(1, 2), [0, -1])) == "-(t - 1/2) + O((t - 1/2)^2)"
