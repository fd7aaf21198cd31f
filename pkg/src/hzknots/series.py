"""Truncated Laurent series in x under the substitution q = e^x.

An XSeries stores exact rational coefficients for the exponent window
min_exp .. min_exp + order; everything below min_exp is known to vanish and
nothing is claimed beyond the window.  Arithmetic intersects windows.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .ratfunc import RationalFunc, poly_eval_var
from .rational import ONE, RAT, ZERO

__all__ = ["XSeries", "SeriesError", "poly_to_xseries", "to_xseries"]

_RAT_TYPE = type(ONE)


class SeriesError(ArithmeticError):
    pass


class XSeries:
    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int, coeffs):
        coeffs = [c if isinstance(c, _RAT_TYPE) else RAT(c) for c in coeffs]
        # strip leading zeros: they are knowledge, not content
        while coeffs and len(coeffs) > 1 and coeffs[0] == 0:
            coeffs.pop(0)
            min_exp += 1
        self.min_exp = min_exp
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def max_exp(self) -> int:
        return self.min_exp + len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coeff(self, exp: int):
        """Exact coefficient of x**exp; raises beyond the known window."""
        if exp < self.min_exp:
            return ZERO
        if exp > self.max_exp:
            raise SeriesError(f"coefficient x^{exp} beyond truncation order (max {self.max_exp})")
        return self.coeffs[exp - self.min_exp]

    # ---- arithmetic (windows intersect) ----

    def __neg__(self):
        return XSeries(self.min_exp, [-c for c in self.coeffs])

    def _binop(self, other, sub: bool):
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.max_exp, other.max_exp)
        out = []
        for e in range(lo, hi + 1):
            a = self.coeffs[e - self.min_exp] if e >= self.min_exp else ZERO
            b = other.coeffs[e - other.min_exp] if e >= other.min_exp else ZERO
            out.append(a - b if sub else a + b)
        return XSeries(lo, out)

    def __add__(self, other):
        return self._binop(other, False)

    def __sub__(self, other):
        return self._binop(other, True)

    def __mul__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            return XSeries(self.min_exp, [c * other for c in self.coeffs])
        n = min(len(self.coeffs), len(other.coeffs))
        out = [ZERO] * n
        for i in range(n):
            a = self.coeffs[i]
            if a == 0:
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] = out[i + j] + a * b
        return XSeries(self.min_exp + other.min_exp, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            return XSeries(self.min_exp, [c / other for c in self.coeffs])
        if other.is_zero:
            raise SeriesError("division by a series that vanishes to its stored order")
        if self.is_zero:
            return XSeries(self.min_exp - other.min_exp, [ZERO] * len(self.coeffs))
        b0 = other.coeffs[0]
        n = min(len(self.coeffs), len(other.coeffs))
        out = []
        for j in range(n):
            a = self.coeffs[j]
            s = a
            for i, c in enumerate(out):
                b = other.coeffs[j - i]
                if b != 0:
                    s = s - c * b
            out.append(s / b0)
        return XSeries(self.min_exp - other.min_exp, out)

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.max_exp, other.max_exp)
        for e in range(lo, hi + 1):
            if self.coeff(e) != other.coeff(e):
                return False
        return True

    __hash__ = None

    def render(self) -> str:
        parts = [f"({c})*x^{self.min_exp + i}" for i, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"XSeries({self.render()} + O(x^{self.max_exp + 1}))"


def poly_to_xseries(p: LaurentPoly, n_terms: int) -> XSeries:
    """Series of p(e^x) for a univariate Laurent polynomial p: exact
    coefficients of x^0 .. x^(n_terms-1) via sum of exp(e*x) expansions."""
    if len(p.variables) != 1:
        raise ValueError("poly_to_xseries expects a univariate polynomial")
    out = []
    fact = ONE
    for j in range(n_terms):
        if j > 1:
            fact = fact * j
        s = ZERO
        for (e,), c in p.terms.items():
            if e == 0:
                if j == 0:
                    s = s + c
            else:
                s = s + c * e**j
        out.append(s / fact if j > 1 else s)
    return XSeries(0, out)


def to_xseries(f: RationalFunc, lambda_value=None, order: int = 12, lam: str = "lam") -> XSeries:
    """Expand f around q = 1 by substituting q = e^x: returns the series with
    coefficients known for min_exp .. min_exp + order.

    If f is 2-variable, its lam variable is first evaluated exactly at
    lambda_value.  Pole orders (negative min_exp) are handled by series
    division; the guard window grows automatically until the requested order
    is certain.
    """
    if len(f.variables) == 2:
        if lambda_value is None:
            raise ValueError("lambda_value required for a 2-variable function")
        num = poly_eval_var(f.num, lam, lambda_value)
        den = poly_eval_var(f.den, lam, lambda_value)
    else:
        num, den = f.num, f.den
    if den.is_zero:
        raise SeriesError("denominator vanishes identically at the given lambda")
    if num.is_zero:
        return XSeries(0, [ZERO] * (order + 1))
    guard = 8
    while True:
        n_terms = order + 1 + guard
        sn = poly_to_xseries(num, n_terms)
        sd = poly_to_xseries(den, n_terms)
        if sd.is_zero:
            if guard >= 512:
                raise SeriesError("denominator series vanishes beyond guard window")
            guard *= 4
            continue
        q = sn / sd
        if q.order >= order:
            return XSeries(q.min_exp, q.coeffs[: order + 1])
        guard = (order - q.order) + guard * 2
        if guard > 4096:
            raise SeriesError("series division failed to reach requested order")
