"""Rational functions built from Laurent polynomials, in canonical reduced form.

Canonical form: the denominator has no negative exponents, its minimum
exponent in every variable is exactly 0, its trailing coefficient (at the
lexicographically smallest exponent vector) is +1, and gcd(num, den) is a
unit.  This makes equal functions structurally equal.
"""

from __future__ import annotations

from typing import Mapping

from .laurent import LaurentPoly, divide_exact, poly_gcd
from .rational import ONE, RAT, ZERO

__all__ = [
    "RationalFunc",
    "poly_diff",
    "poly_eval_var",
    "poly_subst_monomial",
    "poly_collapse",
]

_RAT_TYPE = type(ONE)


def poly_diff(p: LaurentPoly, var: str) -> LaurentPoly:
    """Formal derivative with respect to var (Laurent: d/dx x^e = e x^(e-1))."""
    i = p._vix(var)
    terms = {}
    for e, c in p.terms.items():
        if e[i] == 0:
            continue
        k = list(e)
        k[i] -= 1
        terms[tuple(k)] = c * e[i]
    return LaurentPoly._raw(p.variables, terms)


def poly_eval_var(p: LaurentPoly, var: str, value) -> LaurentPoly:
    """Partially evaluate one variable of a 2-variable polynomial at an exact
    rational point, returning a polynomial in the remaining variable."""
    if len(p.variables) != 2:
        raise ValueError("poly_eval_var needs a 2-variable polynomial")
    if not isinstance(value, _RAT_TYPE):
        value = RAT(value)
    i = p._vix(var)
    j = 1 - i
    out: dict = {}
    powers: dict[int, object] = {}
    for e, c in p.terms.items():
        x = e[i]
        v = powers.get(x)
        if v is None:
            if x < 0 and value == 0:
                raise ZeroDivisionError("negative exponent at 0")
            v = value**x if x >= 0 else ONE / value ** (-x)
            powers[x] = v
        t = c * v
        if t == 0:
            continue
        k = (e[j],)
        s = out.get(k)
        if s is None:
            out[k] = t
        else:
            s = s + t
            if s == 0:
                del out[k]
            else:
                out[k] = s
    return LaurentPoly._raw((p.variables[j],), out)


def poly_subst_monomial(p: LaurentPoly, mapping: Mapping[str, tuple]) -> LaurentPoly:
    """Substitute variables by monomials of the same ring: var -> coeff * x^vec.

    mapping: {var: (coeff, exponent vector over p.variables)}; variables not
    mentioned map to themselves.  Such maps are ring automorphisms when the
    monomials are invertible, so they are safe on reduced fractions.
    """
    n = len(p.variables)
    coeffs = []
    vecs = []
    for ix, v in enumerate(p.variables):
        if v in mapping:
            c, vec = mapping[v]
            if not isinstance(c, _RAT_TYPE):
                c = RAT(c)
            vec = tuple(vec)
            if len(vec) != n:
                raise ValueError("monomial exponent arity mismatch")
        else:
            c = ONE
            vec = tuple(1 if k == ix else 0 for k in range(n))
        coeffs.append(c)
        vecs.append(vec)
    out: dict = {}
    for e, c in p.terms.items():
        new = [0] * n
        coef = c
        for x, cc, vec in zip(e, coeffs, vecs):
            if x:
                for k in range(n):
                    new[k] += x * vec[k]
                if cc != 1:
                    coef = coef * (cc**x if x >= 0 else ONE / cc ** (-x))
        k = tuple(new)
        s = out.get(k)
        if s is None:
            out[k] = coef
        else:
            s = s + coef
            if s == 0:
                del out[k]
            else:
                out[k] = s
    return LaurentPoly._raw(p.variables, out)


def poly_collapse(p: LaurentPoly, var: str) -> LaurentPoly:
    """Drop a variable in which p has zero exponent span."""
    i = p._vix(var)
    if p.exponent_span(var) != 0 or (p.terms and p.valuation(var) != 0):
        raise ValueError(f"polynomial still involves {var!r}")
    j = 1 - i
    return LaurentPoly._raw((p.variables[j],), {(e[j],): c for e, c in p.terms.items()})


class RationalFunc:
    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, reduce: bool = True):
        if den is None:
            den = LaurentPoly.one(num.variables)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.variables != den.variables:
            raise ValueError(f"variable mismatch: {num.variables} vs {den.variables}")
        if num.is_zero:
            self.num = num
            self.den = LaurentPoly.one(num.variables)
            return
        if den.is_monomial:
            num = divide_exact(num, den)
            den = LaurentPoly.one(num.variables)
        elif reduce and not num.is_monomial:
            g = poly_gcd(num, den)
            if not g.is_monomial:
                num = divide_exact(num, g)
                den = divide_exact(den, g)
                if num is None or den is None:
                    raise ArithmeticError("gcd division failed")
        # unit canonicalization: den min exponents 0, trailing coefficient +1
        mins = den.min_exps()
        if any(mins):
            shift = tuple(-m for m in mins)
            den = den.shift(shift)
            num = num.shift(shift)
        tc = den.trailing_coeff()
        if tc != 1:
            inv = ONE / tc
            den = den.scale(inv)
            num = num.scale(inv)
        self.num = num
        self.den = den

    # ---- constructors ----

    @classmethod
    def zero(cls, variables) -> "RationalFunc":
        return cls(LaurentPoly.zero(variables), reduce=False)

    @classmethod
    def one(cls, variables) -> "RationalFunc":
        return cls(LaurentPoly.one(variables), reduce=False)

    @classmethod
    def constant(cls, variables, c) -> "RationalFunc":
        return cls(LaurentPoly.constant(variables, c), reduce=False)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunc":
        return cls(p, reduce=False)

    # ---- predicates ----

    @property
    def variables(self) -> tuple:
        return self.num.variables

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.num == self.den

    # ---- arithmetic ----

    def _coerced(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            return RationalFunc.constant(self.variables, other)
        if isinstance(other, LaurentPoly):
            return RationalFunc.from_poly(other)
        if isinstance(other, RationalFunc):
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFunc(self.num + other.num, self.den)
        return RationalFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunc(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero function")
        return RationalFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerced(other)
        return other / self

    def __pow__(self, n: int):
        if n == 0:
            return RationalFunc.one(self.variables)
        if n < 0:
            return RationalFunc(self.den**-n, self.num**-n)
        return RationalFunc(self.num**n, self.den**n, reduce=False)

    def __eq__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    # ---- evaluation & substitution ----

    def evaluate(self, values: Mapping[str, object]):
        d = self.den.evaluate(values)
        if d == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.evaluate(values) / d

    def eval_var(self, var: str, value) -> "RationalFunc":
        """Partially evaluate one variable at an exact rational point."""
        num = poly_eval_var(self.num, var, value)
        den = poly_eval_var(self.den, var, value)
        return RationalFunc(num, den)

    def subst_monomial(self, mapping: Mapping[str, tuple]) -> "RationalFunc":
        """Apply a monomial substitution (ring automorphism) to num and den."""
        return RationalFunc(
            poly_subst_monomial(self.num, mapping),
            poly_subst_monomial(self.den, mapping),
            reduce=False,
        )

    # ---- rendering & serialization ----

    def render(self) -> str:
        if self.den.is_one:
            return self.num.render()
        return f"({self.num.render()}) / ({self.den.render()})"

    def __repr__(self):
        return f"RationalFunc({self.render()})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "num": _poly_json(self.num),
            "den": _poly_json(self.den),
        }

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunc":
        variables = tuple(data["variables"])
        return cls(_poly_from_json(variables, data["num"]), _poly_from_json(variables, data["den"]))


def _poly_json(p: LaurentPoly) -> list:
    return [[list(e), str(c)] for e, c in sorted(p.terms.items())]


def _poly_from_json(variables: tuple, items: list) -> LaurentPoly:
    from .rational import rat

    return LaurentPoly(variables, {tuple(e): rat(c) for e, c in items})
