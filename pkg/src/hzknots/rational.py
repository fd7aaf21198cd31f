"""Exact rational scalars.

Coefficients throughout the package are arbitrary-precision rationals.  gmpy2's
mpq is used when available (it is considerably faster on the large sweeps);
fractions.Fraction is a drop-in fallback with the same arithmetic API.
"""

from __future__ import annotations

try:
    from gmpy2 import mpq as RAT

    _BACKEND = "gmpy2"
except ImportError:  # pragma: no cover
    from fractions import Fraction as RAT

    _BACKEND = "fractions"

ZERO = RAT(0)
ONE = RAT(1)


def rat(a, b=1):
    """Build an exact rational from ints, strings ('3', '-4/5'), or rationals."""
    if b == 1 and isinstance(a, str):
        return RAT(a)
    return RAT(a, b)


def is_integral(c) -> bool:
    return c.denominator == 1


def rat_str(c) -> str:
    """Canonical text form: 'p' or 'p/q' in lowest terms."""
    return str(c)


def as_int(c) -> int:
    if c.denominator != 1:
        raise ValueError(f"not an integer: {c}")
    return int(c.numerator)
