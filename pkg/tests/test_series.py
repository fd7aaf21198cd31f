"""Laurent-series windows in x, where the series variable substitutes the
polynomial variable as e^x."""

import pytest

from hzknots.laurent import LaurentPoly
from hzknots.ratfunc import RationalFunc
from hzknots.rational import rat
from hzknots.series import SeriesError, XSeries, poly_to_xseries, to_xseries

Q1 = ("q",)
QL = ("q", "lam")


def _rf1(num_terms, den_terms):
    return RationalFunc(
        LaurentPoly(Q1, num_terms), LaurentPoly(Q1, den_terms), reduce=False
    )


def test_exponential_coefficients():
    # q -> e^x: coefficients 1/n!
    s = to_xseries(RationalFunc.from_poly(LaurentPoly(Q1, {(1,): 1})), order=8)
    fact = 1
    for n in range(8):
        if n:
            fact *= n
        assert s.coeff(n) == rat(1, fact)


def test_bernoulli_window():
    # 1/(1 - e^x) = -1/x + 1/2 - x/12 + x^3/720 - ...
    s = to_xseries(_rf1({(0,): 1}, {(0,): 1, (1,): -1}), order=6)
    assert s.min_exp == -1
    expected = {-1: rat(-1), 0: rat(1, 2), 1: rat(-1, 12), 2: rat(0), 3: rat(1, 720), 4: rat(0)}
    for e, c in expected.items():
        assert s.coeff(e) == c


def test_double_pole_window():
    # e^x/(1-e^x)^2 = 1/(4 sinh^2(x/2)) = x^-2 - 1/12 + x^2/240 - ...
    s = to_xseries(_rf1({(1,): 1}, {(0,): 1, (1,): -2, (2,): 1}), order=6)
    assert s.min_exp == -2
    assert s.coeff(-2) == 1
    assert s.coeff(-1) == 0
    assert s.coeff(0) == rat(-1, 12)
    assert s.coeff(1) == 0
    assert s.coeff(2) == rat(1, 240)


def test_series_product_is_one():
    f = _rf1({(0,): 1}, {(0,): 1, (1,): -1})
    s = to_xseries(f, order=6)
    p = poly_to_xseries(LaurentPoly(Q1, {(0,): 1, (1,): -1}), 10)
    prod = s * p
    assert prod.coeff(0) == 1
    for e in range(1, 4):
        assert prod.coeff(e) == 0


def test_lambda_substitution():
    # lam/((1)(1-lam*q)) at lam=1: 1/(1-e^x) again
    num = LaurentPoly(QL, {(0, 1): 1})
    den = LaurentPoly(QL, {(0, 0): 1, (1, 1): -1})
    s = to_xseries(RationalFunc(num, den, reduce=False), lambda_value=1, order=5)
    assert s.coeff(-1) == -1
    assert s.coeff(0) == rat(1, 2)


def test_power_substitution_scaling():
    # q^2 -> e^(2x): coefficients 2^n/n!
    s = to_xseries(RationalFunc.from_poly(LaurentPoly(Q1, {(2,): 1})), order=6)
    fact = 1
    for n in range(6):
        if n:
            fact *= n
        assert s.coeff(n) == rat(2**n, fact)


def test_deep_pole_window_extends_down():
    f = _rf1({(0,): 1}, {(0,): 1, (1,): -1})
    deep = f * f * f * f
    s = to_xseries(deep, order=2)
    assert s.min_exp == -4
    assert s.coeff(-4) == 1


def test_vanishing_denominator_rejected():
    num = LaurentPoly(QL, {(0, 1): 1})
    den = LaurentPoly(QL, {(0, 0): 1, (0, 1): -1})  # 1 - lam, dies at lam=1
    with pytest.raises((SeriesError, ZeroDivisionError)):
        to_xseries(RationalFunc(num, den, reduce=False), lambda_value=1, order=3)


def test_xseries_reports_zero():
    s = to_xseries(RationalFunc.zero(Q1), order=4)
    assert s.is_zero
