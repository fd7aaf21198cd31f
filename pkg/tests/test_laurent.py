"""Ring laws, exact division, and gcd of the sparse polynomial core,
property-tested against randomized inputs and an independent gcd oracle."""

from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from hzknots.laurent import LaurentPoly, divide_exact, eval_complex, poly_gcd
from hzknots.rational import rat

QL = ("q", "lam")
Q1 = ("q",)

_coeffs = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=12
).filter(lambda f: f != 0)


def _poly(variables, max_terms=6, span=5):
    n_vars = len(variables)
    term = st.tuples(
        st.tuples(*[st.integers(min_value=-span, max_value=span)] * n_vars), _coeffs
    )
    return st.lists(term, min_size=0, max_size=max_terms).map(
        lambda items: LaurentPoly(variables, {e: rat(c.numerator, c.denominator) for e, c in items})
    )


def _int_poly(max_terms=5, span=6):
    term = st.tuples(
        st.integers(min_value=0, max_value=span),
        st.integers(min_value=-9, max_value=9).filter(bool),
    )
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda items: LaurentPoly(Q1, {(e,): c for e, c in items})
    ).filter(lambda p: not p.is_zero)


@settings(max_examples=80, deadline=None)
@given(_poly(QL), _poly(QL), _poly(QL))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero(QL)
    assert a * LaurentPoly.one(QL) == a


@settings(max_examples=80, deadline=None)
@given(_poly(QL), _poly(QL).filter(lambda p: not p.is_zero))
def test_divide_exact_recovers_factor(a, b):
    assert divide_exact(a * b, b) == a


def test_divide_exact_rejects_inexact():
    p = LaurentPoly(Q1, {(2,): 1, (0,): 1})  # q^2 + 1
    d = LaurentPoly(Q1, {(1,): 1, (0,): -1})  # q - 1
    assert divide_exact(p, d) is None


def _canonical(p: LaurentPoly) -> LaurentPoly:
    """Shift valuation to zero, clear denominators, divide by integer content,
    make the trailing coefficient positive -- a unique unit-normal form."""
    (v,) = p.min_exps()
    p = p.shift((-v,))
    denoms = [c.denominator for c in p.terms.values()]
    lcm = 1
    for d in denoms:
        lcm = lcm * d // __import__("math").gcd(lcm, d)
    p = p.scale(lcm)
    nums = [abs(int(c)) for c in p.terms.values()]
    g = 0
    for n in nums:
        g = __import__("math").gcd(g, n)
    p = p.scale(rat(1, g))
    if p.terms[p.trailing_key()] < 0:
        p = p.scale(-1)
    return p


def _to_sympy(p: LaurentPoly, x):
    return sympy.Add(*[int(c) * x ** int(e[0]) for e, c in p.terms.items()])


def _from_sympy(expr, x) -> LaurentPoly:
    poly = sympy.Poly(expr, x)
    return LaurentPoly(Q1, {(int(e),): int(c) for (e,), c in poly.terms()})


@settings(max_examples=60, deadline=None)
@given(_int_poly(), _int_poly(), _int_poly())
def test_gcd_matches_independent_oracle(g, a, b):
    x = sympy.Symbol("x")
    p, q = g * a, g * b
    mine = _canonical(poly_gcd(p, q))
    oracle = sympy.gcd(_to_sympy(p, x), _to_sympy(q, x), x)
    assert mine == _canonical(_from_sympy(oracle, x))


@settings(max_examples=60, deadline=None)
@given(_int_poly(), _int_poly())
def test_gcd_divides_both(a, b):
    g = poly_gcd(a, b)
    assert divide_exact(a, g) is not None
    assert divide_exact(b, g) is not None


def test_gcd_bivariate_common_factor():
    m = LaurentPoly(QL, {(1, 1): 1, (0, 0): 1})  # q*lam + 1
    a = LaurentPoly(QL, {(2, 0): 1, (0, 0): -1})
    b = LaurentPoly(QL, {(1, 0): 1, (0, 0): 1})
    g = poly_gcd(m * a, m * b)
    assert divide_exact(g, m) is not None


def test_eval_complex_matches_horner():
    import mpmath

    p = LaurentPoly(Q1, {(3,): 2, (1,): -1, (0,): rat(1, 2), (-2,): 5})
    with mpmath.workprec(120):
        z = mpmath.mpc("0.3", "-1.7")
        direct = 2 * z**3 - z + mpmath.mpf(1) / 2 + 5 * z**-2
        got = eval_complex(p, z, 120)
        assert abs(got - direct) < mpmath.mpf(2) ** -100


def test_levels_and_coeff_of():
    p = LaurentPoly(QL, {(2, 1): 3, (2, 0): -1, (0, 1): 7})
    levels = p.levels("q")
    assert sorted(levels) == [0, 2]
    assert levels[2] == LaurentPoly(("lam",), {(1,): 3, (0,): -1})
    assert p.coeff_of("lam", 1) == LaurentPoly(Q1, {(2,): 3, (0,): 7})
