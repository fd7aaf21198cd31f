"""Exact algebra core: Laurent polynomials and rational functions over
arbitrary-precision rationals, Laurent-series windows, and text parsing.

This module is the stable import surface for the algebraic types; the
implementations live in laurent, ratfunc, series, and polyexpr.
"""

from .laurent import (
    LaurentPoly,
    div_basis_factor,
    divide_exact,
    eval_complex,
    poly_gcd,
)
from .polyexpr import ParseError, parse_poly
from .rational import ONE, RAT, ZERO, rat, rat_str
from .ratfunc import (
    RationalFunc,
    poly_collapse,
    poly_diff,
    poly_eval_var,
    poly_subst_monomial,
)
from .series import XSeries, poly_to_xseries, to_xseries

__all__ = [
    "LaurentPoly",
    "RationalFunc",
    "XSeries",
    "ParseError",
    "RAT",
    "ONE",
    "ZERO",
    "rat",
    "rat_str",
    "parse_poly",
    "divide_exact",
    "div_basis_factor",
    "poly_gcd",
    "poly_diff",
    "poly_eval_var",
    "poly_subst_monomial",
    "poly_collapse",
    "poly_to_xseries",
    "to_xseries",
    "eval_complex",
]
