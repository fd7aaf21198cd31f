"""Exact Laurent polynomials in one or two variables.

A polynomial is a mapping {exponent vector: nonzero rational coefficient}.
Exponents may be negative (Laurent).  Instances are treated as immutable:
no method mutates ``terms`` after construction, so values can be shared
freely across threads and memo tables.

The canonical text rendering (used for golden files and the CLI) writes every
variable with an explicit exponent, terms ordered by primary exponent
descending then secondary ascending::

    -1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2
"""

from __future__ import annotations

from math import gcd as _int_gcd, lcm as _int_lcm
from typing import Mapping

import mpmath

from .rational import RAT, ZERO, ONE, rat_str

__all__ = [
    "LaurentPoly",
    "poly_gcd",
    "divide_exact",
    "div_basis_factor",
    "eval_complex",
]

_RAT_TYPE = type(ONE)


class LaurentPoly:
    __slots__ = ("variables", "terms")

    def __init__(self, variables, terms: Mapping | None = None):
        if isinstance(variables, str):
            variables = (variables,)
        self.variables = tuple(variables)
        clean: dict = {}
        if terms:
            nv = len(self.variables)
            for exps, c in terms.items():
                if c == 0:
                    continue
                if not isinstance(exps, tuple):
                    exps = (exps,)
                if len(exps) != nv:
                    raise ValueError("exponent arity mismatch")
                if not isinstance(c, _RAT_TYPE):
                    c = RAT(c)
                if exps in clean:
                    c = clean[exps] + c
                    if c == 0:
                        del clean[exps]
                        continue
                clean[exps] = c
        self.terms = clean

    @classmethod
    def _raw(cls, variables: tuple, terms: dict) -> "LaurentPoly":
        p = object.__new__(cls)
        p.variables = variables
        p.terms = terms
        return p

    # ---- constructors ----

    @classmethod
    def zero(cls, variables) -> "LaurentPoly":
        return cls(variables, {})

    @classmethod
    def one(cls, variables) -> "LaurentPoly":
        return cls.constant(variables, 1)

    @classmethod
    def constant(cls, variables, c) -> "LaurentPoly":
        if isinstance(variables, str):
            variables = (variables,)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables, exps, coeff=1) -> "LaurentPoly":
        if isinstance(exps, int):
            exps = (exps,)
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def var(cls, name: str, variables=None) -> "LaurentPoly":
        if variables is None:
            variables = (name,)
        if isinstance(variables, str):
            variables = (variables,)
        if name not in variables:
            raise ValueError(f"variable {name!r} not in {variables}")
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    # ---- predicates ----

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_one(self) -> bool:
        z = (0,) * len(self.variables)
        return len(self.terms) == 1 and self.terms.get(z) == 1

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def is_constant(self) -> bool:
        z = (0,) * len(self.variables)
        return not self.terms or (len(self.terms) == 1 and z in self.terms)

    def constant_value(self):
        z = (0,) * len(self.variables)
        return self.terms.get(z, ZERO)

    # ---- structure ----

    def _vix(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise KeyError(f"variable {var!r} not in {self.variables}") from None

    def degree(self, var: str) -> int:
        """Highest exponent of var (0 for the zero polynomial)."""
        i = self._vix(var)
        return max((e[i] for e in self.terms), default=0)

    def valuation(self, var: str) -> int:
        i = self._vix(var)
        return min((e[i] for e in self.terms), default=0)

    def exponent_span(self, var: str) -> int:
        return self.degree(var) - self.valuation(var)

    def min_exps(self) -> tuple:
        if not self.terms:
            return (0,) * len(self.variables)
        return tuple(min(col) for col in zip(*self.terms))

    def trailing_key(self) -> tuple:
        return min(self.terms)

    def trailing_coeff(self):
        return self.terms[min(self.terms)]

    def levels(self, var: str) -> dict:
        """Split a 2-variable polynomial by the exponent of var:
        {exponent: 1-variable polynomial in the other variable}."""
        if len(self.variables) != 2:
            raise ValueError("levels() needs a 2-variable polynomial")
        i = self._vix(var)
        j = 1 - i
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[(e[j],)] = c
        other = (self.variables[j],)
        return {lv: LaurentPoly._raw(other, d) for lv, d in buckets.items()}

    @classmethod
    def from_levels(cls, variables: tuple, level_var: str, levels: Mapping) -> "LaurentPoly":
        """Assemble a 2-variable polynomial from {level_var exponent: 1-var poly}."""
        variables = tuple(variables)
        i = variables.index(level_var)
        terms = {}
        for lv, poly in levels.items():
            for (e,), c in poly.terms.items():
                key = (e, lv) if i == 1 else (lv, e)
                terms[key] = c
        return cls._raw(variables, terms)

    def coeff_of(self, var: str, exp: int) -> "LaurentPoly":
        """Coefficient of var**exp, as a polynomial in the other variable."""
        i = self._vix(var)
        j = 1 - i
        if len(self.variables) == 1:
            return LaurentPoly((), {(): self.terms.get((exp,), ZERO)})
        d = {(e[j],): c for e, c in self.terms.items() if e[i] == exp}
        return LaurentPoly._raw((self.variables[j],), d)

    # ---- arithmetic ----

    def _coerced(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            return LaurentPoly.constant(self.variables, other)
        if isinstance(other, LaurentPoly):
            if self.variables != other.variables:
                raise ValueError(f"variable mismatch: {self.variables} vs {other.variables}")
            return other
        return None

    def __add__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        t = dict(self.terms)
        for e, c in other.terms.items():
            s = t.get(e)
            if s is None:
                t[e] = c
            else:
                s = s + c
                if s == 0:
                    del t[e]
                else:
                    t[e] = s
        return LaurentPoly._raw(self.variables, t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            return self.scale(other)
        other = self._coerced(other)
        if other is None:
            return NotImplemented
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        if len(self.variables) == 1:
            for (e1,), c1 in b.items():
                for (e2,), c2 in a.items():
                    k = (e1 + e2,)
                    s = out.get(k)
                    if s is None:
                        out[k] = c1 * c2
                    else:
                        s = s + c1 * c2
                        if s == 0:
                            del out[k]
                        else:
                            out[k] = s
        else:
            for (x1, y1), c1 in b.items():
                for (x2, y2), c2 in a.items():
                    k = (x1 + x2, y1 + y2)
                    s = out.get(k)
                    if s is None:
                        out[k] = c1 * c2
                    else:
                        s = s + c1 * c2
                        if s == 0:
                            del out[k]
                        else:
                            out[k] = s
        return LaurentPoly._raw(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("integer powers only")
        if n < 0:
            if not self.is_monomial:
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self.terms.items()
            return LaurentPoly._raw(self.variables, {tuple(x * n for x in e): ONE / c ** (-n)})
        result = LaurentPoly.one(self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, deltas) -> "LaurentPoly":
        """Multiply by the monomial with the given exponent vector."""
        if isinstance(deltas, int):
            deltas = (deltas,)
        deltas = tuple(deltas)
        if not any(deltas):
            return self
        return LaurentPoly._raw(
            self.variables, {tuple(x + d for x, d in zip(e, deltas)): c for e, c in self.terms.items()}
        )

    def scale(self, c) -> "LaurentPoly":
        if c == 0:
            return LaurentPoly.zero(self.variables)
        if c == 1:
            return self
        if not isinstance(c, _RAT_TYPE):
            c = RAT(c)
        return LaurentPoly._raw(self.variables, {e: v * c for e, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, _RAT_TYPE)):
            return self.is_constant and self.constant_value() == other
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.variables == other.variables and self.terms == other.terms

    __hash__ = None

    # ---- conversions ----

    def embed(self, variables) -> "LaurentPoly":
        """Reinterpret in a larger variable tuple (new variables get exponent 0)."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        pos = [variables.index(v) for v in self.variables]
        n = len(variables)
        terms = {}
        for e, c in self.terms.items():
            new = [0] * n
            for p, x in zip(pos, e):
                new[p] = x
            terms[tuple(new)] = c
        return LaurentPoly._raw(variables, terms)

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        return LaurentPoly._raw(tuple(mapping.get(v, v) for v in self.variables), dict(self.terms))

    def evaluate(self, values: Mapping[str, object]):
        """Exact evaluation at rational points (all variables assigned)."""
        vals = [v if isinstance(v := values[name], _RAT_TYPE) else RAT(v) for name in self.variables]
        out = ZERO
        for e, c in self.terms.items():
            t = c
            for x, val in zip(e, vals):
                if x:
                    if val == 0 and x < 0:
                        raise ZeroDivisionError("negative exponent at 0")
                    t = t * val**x
            out = out + t
        return out

    def substitute(self, var: str, value: "LaurentPoly") -> "LaurentPoly":
        """Replace var by a polynomial in the other variable.  Negative
        exponents of var are allowed only when value is a monomial."""
        if len(self.variables) != 2:
            raise ValueError("substitute needs a 2-variable polynomial")
        i = self._vix(var)
        j = 1 - i
        other = (self.variables[j],)
        if value.variables != other:
            raise ValueError("substitution value must live in the other variable")
        if self.is_zero:
            return LaurentPoly.zero(other)
        if value.is_monomial:
            ((me, mc),) = value.terms.items()
            terms: dict = {}
            for e, c in self.terms.items():
                x = e[i]
                k = (e[j] + me[0] * x,)
                v = c * (mc**x if x >= 0 else ONE / mc ** (-x))
                s = terms.get(k)
                if s is None:
                    terms[k] = v
                else:
                    s = s + v
                    if s == 0:
                        del terms[k]
                    else:
                        terms[k] = s
            return LaurentPoly._raw(other, terms)
        lv = self.levels(var)
        if min(lv) < 0:
            raise ValueError("negative exponent substitution of a non-monomial")
        acc = LaurentPoly.zero(other)
        prev = None
        for e in sorted(lv, reverse=True):
            if prev is not None:
                acc = acc * value ** (prev - e)
            acc = acc + lv[e]
            prev = e
        if prev:
            acc = acc * value**prev
        return acc

    # ---- rendering ----

    def render(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda e: (-e[0],) + tuple(e[1:]))
        parts = []
        for idx, e in enumerate(keys):
            c = self.terms[e]
            neg = c < 0
            mag = -c if neg else c
            body = "*".join([rat_str(mag)] + [f"{v}^{x}" for v, x in zip(self.variables, e)])
            if idx == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({self.render()})"


# ---- exact division ----


def divide_exact(p: LaurentPoly, d: LaurentPoly):
    """Return p/d when d divides p exactly in the Laurent ring, else None."""
    if d.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero:
        return p
    if p.variables != d.variables:
        raise ValueError("variable mismatch")
    if d.is_monomial:
        ((de, dc),) = d.terms.items()
        return LaurentPoly._raw(
            p.variables, {tuple(x - y for x, y in zip(e, de)): c / dc for e, c in p.terms.items()}
        )
    # greedy lex division by a single divisor: exact iff the remainder vanishes
    rem = dict(p.terms)
    dlead = max(d.terms)
    dlc = d.terms[dlead]
    dothers = [(e, c) for e, c in d.terms.items() if e != dlead]
    quot: dict = {}
    budget = 8 * (len(p.terms) + len(d.terms)) * max(1, _exp_volume(p) // max(1, len(d.terms))) + 256
    while rem:
        e = max(rem)
        c = rem.pop(e)
        qe = tuple(x - y for x, y in zip(e, dlead))
        qc = c / dlc
        quot[qe] = qc
        for fe, fc in dothers:
            k = tuple(x + y for x, y in zip(qe, fe))
            v = qc * fc
            s = rem.get(k)
            if s is None:
                rem[k] = -v
            else:
                s = s - v
                if s == 0:
                    del rem[k]
                else:
                    rem[k] = s
        budget -= 1
        if budget < 0:
            return None
    return LaurentPoly._raw(p.variables, quot)


def _exp_volume(p: LaurentPoly) -> int:
    vol = 1
    for v in p.variables:
        vol *= p.exponent_span(v) + 1
    return vol


def div_basis_factor(p: LaurentPoly, sign: int, k: int, lam: str = "lam"):
    """Divide p by (1 - sign*lam*q^k).  Returns the quotient or None if inexact.

    Synthetic division over the exponent levels of lam; linear in term count.
    """
    if p.is_zero:
        return p
    i = p._vix(lam)
    levels = p.levels(lam)
    top = max(levels)
    bottom = min(levels)
    qvar = p.variables[1 - i]
    zero_q = LaurentPoly.zero((qvar,))
    prev = zero_q
    out_levels = {}
    for j in range(bottom, top + 1):
        cj = levels.get(j, zero_q)
        if prev.is_zero:
            qj = cj
        else:
            qj = cj + prev.shift((k,)).scale(sign)
        if j == top:
            if not qj.is_zero:
                return None
        elif not qj.is_zero:
            out_levels[j] = qj
            prev = qj
        else:
            prev = zero_q
    return LaurentPoly.from_levels(p.variables, lam, out_levels)


# ---- dense integer polynomial helpers (internal, for gcd and roots) ----


def _ideg(p: list) -> int:
    return len(p) - 1


def _itrim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _iadd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _itrim(out)


def _imul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _itrim(out)


def _imul_scalar(a: list, s: int) -> list:
    if s == 0:
        return []
    return [c * s for c in a]


def _ipow(a: list, n: int) -> list:
    out = [1]
    for _ in range(n):
        out = _imul(out, a)
    return out


def _iexact_div(a: list, b: list):
    """Exact division of dense int polynomials; None when not exact."""
    if not b:
        raise ZeroDivisionError
    if not a:
        return []
    if len(a) < len(b):
        return None
    out = [0] * (len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(out) - 1, -1, -1):
        num = rem[i + len(b) - 1]
        if num % b[-1]:
            return None
        q = num // b[-1]
        out[i] = q
        if q:
            for j, c in enumerate(b):
                rem[i + j] -= q * c
    if any(rem):
        return None
    return out


def _iprem(a: list, b: list) -> list:
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b."""
    db = _ideg(b)
    lb = b[-1]
    r = list(a)
    e = _ideg(a) - db + 1
    while r and _ideg(r) >= db:
        lr = r[-1]
        dr = _ideg(r)
        r = _imul_scalar(r, lb)
        for j, c in enumerate(b):
            r[dr - db + j] -= lr * c
        _itrim(r)
        e -= 1
    if e > 0:
        r = _imul_scalar(r, lb**e)
    return r


def _icontent(a: list) -> int:
    g = 0
    for c in a:
        g = _int_gcd(g, c)
        if g == 1:
            break
    return g or 1


def _igcd_dense(a: list, b: list) -> list:
    """Subresultant-PRS gcd of dense int polynomials (positive leading coeff)."""
    if not a:
        return [c if b[-1] > 0 else -c for c in b] if b else []
    if not b:
        return [c if a[-1] > 0 else -c for c in a]
    ca, cb = _icontent(a), _icontent(b)
    A = [c // ca for c in a]
    B = [c // cb for c in b]
    if _ideg(A) < _ideg(B):
        A, B = B, A
    g, h = 1, 1
    while True:
        if _ideg(B) == 0:
            G = [1]
            break
        delta = _ideg(A) - _ideg(B)
        R = _iprem(A, B)
        if not R:
            G = B
            break
        denom = g * h**delta
        A, B = B, [c // denom for c in R]
        g = A[-1]
        if delta == 1:
            h = g
        elif delta:
            h = g**delta // h ** (delta - 1)
    cg = _icontent(G)
    s = 1 if G[-1] > 0 else -1
    return [s * (c // cg) * _int_gcd(ca, cb) for c in G]


# ---- gcd over the Laurent ring ----


def _int_dict(p: LaurentPoly, var: str) -> dict:
    """Shift var-exponents to >= 0 and clear rational denominators: {exp: int}."""
    v0 = p.valuation(var)
    i = p._vix(var)
    den = 1
    for c in p.terms.values():
        den = _int_lcm(den, int(c.denominator))
    out: dict = {}
    for e, c in p.terms.items():
        k = e[i] - v0
        out[k] = out.get(k, 0) + int(c.numerator) * (den // int(c.denominator))
    return {e: c for e, c in out.items() if c}


def _dense(d: dict) -> list:
    out = [0] * (max(d) + 1)
    for e, c in d.items():
        out[e] = c
    return out


def _normalize_unit(g: LaurentPoly) -> LaurentPoly:
    """Normalize up to monomial unit: min exponents 0, trailing coefficient +1."""
    if g.is_zero:
        return g
    mins = g.min_exps()
    if any(mins):
        g = g.shift(tuple(-m for m in mins))
    tc = g.trailing_coeff()
    if tc != 1:
        g = g.scale(ONE / tc)
    return g


def _gcd_univ(p: LaurentPoly, q: LaurentPoly, var: str) -> LaurentPoly:
    g = _igcd_dense(_dense(_int_dict(p, var)), _dense(_int_dict(q, var)))
    return _normalize_unit(LaurentPoly((var,), {(e,): c for e, c in enumerate(g) if c}))


def _to_xt(p: LaurentPoly, x: str) -> list:
    """Dense-in-x list of dense int polynomials in t, shifted and cleared."""
    ix = p._vix(x)
    it = 1 - ix
    vx = p.valuation(x)
    vt = p.valuation(p.variables[it])
    den = 1
    for c in p.terms.values():
        den = _int_lcm(den, int(c.denominator))
    cols: list[dict] = [dict() for _ in range(p.degree(x) - vx + 1)]
    for e, c in p.terms.items():
        d = cols[e[ix] - vx]
        te = e[it] - vt
        d[te] = d.get(te, 0) + int(c.numerator) * (den // int(c.denominator))
    out = []
    for d in cols:
        d = {e: c for e, c in d.items() if c}
        out.append(_dense(d) if d else [])
    while out and not out[-1]:
        out.pop()
    return out


def _xt_prem(A: list, B: list) -> list:
    dB = len(B) - 1
    lB = B[-1]
    R = [list(c) for c in A]
    e = (len(A) - 1) - dB + 1
    while R and (len(R) - 1) >= dB:
        lR = R[-1]
        dR = len(R) - 1
        R = [_imul(c, lB) for c in R]
        for j, bc in enumerate(B):
            R[dR - dB + j] = _iadd(R[dR - dB + j], _imul_scalar(_imul(lR, bc), -1))
        while R and not R[-1]:
            R.pop()
        e -= 1
    if e > 0:
        f = _ipow(lB, e)
        R = [_imul(c, f) for c in R]
    return R


def _xt_content(A: list) -> list:
    g: list = []
    for c in A:
        g = _igcd_dense(g, c)
        if g == [1]:
            break
    return g or [1]


def _xt_div_coeffs(A: list, d: list) -> list:
    out = []
    for c in A:
        q = _iexact_div(c, d) if c else []
        if q is None:
            raise ArithmeticError("inexact coefficient division in subresultant PRS")
        out.append(q)
    return out


def _gcd_bivar(p: LaurentPoly, q: LaurentPoly, x: str) -> LaurentPoly:
    A = _to_xt(p, x)
    B = _to_xt(q, x)
    contA, contB = _xt_content(A), _xt_content(B)
    A = _xt_div_coeffs(A, contA)
    B = _xt_div_coeffs(B, contB)
    if len(A) < len(B):
        A, B = B, A
    g, h = [1], [1]
    while True:
        if len(B) == 1:
            G = [[1]]
            break
        delta = (len(A) - 1) - (len(B) - 1)
        R = _xt_prem(A, B)
        if not R:
            G = B
            break
        denom = _imul(g, _ipow(h, delta))
        A, B = B, _xt_div_coeffs(R, denom)
        g = A[-1]
        if delta == 1:
            h = g
        elif delta:
            hq = _iexact_div(_ipow(g, delta), _ipow(h, delta - 1))
            if hq is None:
                raise ArithmeticError("subresultant invariant violated")
            h = hq
    G = _xt_div_coeffs(G, _xt_content(G))
    cgcd = _igcd_dense(contA, contB)
    ix = p._vix(x)
    terms = {}
    for xe, cpoly in enumerate(G):
        for te, c in enumerate(_imul(cpoly, cgcd)):
            if c:
                terms[(xe, te) if ix == 0 else (te, xe)] = c
    return _normalize_unit(LaurentPoly(p.variables, terms))


def poly_gcd(p: LaurentPoly, q: LaurentPoly, primary: str | None = None) -> LaurentPoly:
    """gcd up to a monomial unit: min exponents 0, trailing coefficient +1.

    Univariate inputs use a subresultant PRS over the integers; 2-variable
    inputs run the PRS in the primary variable with integer-polynomial
    coefficients, contents handled exactly.
    """
    if p.variables != q.variables:
        raise ValueError("variable mismatch")
    if p.is_zero and q.is_zero:
        raise ValueError("gcd(0, 0) is undefined")
    if p.is_zero:
        return _normalize_unit(q)
    if q.is_zero:
        return _normalize_unit(p)
    if p.is_monomial or q.is_monomial:
        return LaurentPoly.one(p.variables)
    if len(p.variables) == 1:
        return _gcd_univ(p, q, p.variables[0])
    v0, v1 = p.variables
    span = {v: max(p.exponent_span(v), q.exponent_span(v)) for v in (v0, v1)}
    if span[v0] == 0 or span[v1] == 0:
        # effectively univariate in the other variable
        var = v1 if span[v0] == 0 else v0
        return _normalize_unit(_gcd_univ_embedded(p, q, var))
    if primary is None:
        primary = v0 if span[v0] <= span[v1] else v1
    if p.exponent_span(primary) == 0 or q.exponent_span(primary) == 0:
        # one side is free of the primary: gcd = gcd(content of the other, it)
        other = v1 if primary == v0 else v0
        free, full = (p, q) if p.exponent_span(primary) == 0 else (q, p)
        cont = _content_in(full, primary)
        g = _gcd_univ(cont, _project(free, other), other)
        return _normalize_unit(g.embed(p.variables))
    return _gcd_bivar(p, q, primary)


def _project(p: LaurentPoly, var: str) -> LaurentPoly:
    """Forget the unused variable, keeping var only."""
    i = p._vix(var)
    return LaurentPoly((var,), {(e[i],): c for e, c in p.terms.items()})


def _gcd_univ_embedded(p: LaurentPoly, q: LaurentPoly, var: str) -> LaurentPoly:
    g = _gcd_univ(_project(p, var), _project(q, var), var)
    return g.embed(p.variables)


def _content_in(p: LaurentPoly, split_var: str) -> LaurentPoly:
    """gcd of the coefficients of p viewed as a polynomial in split_var
    (a 1-variable polynomial in the other variable)."""
    lv = p.levels(split_var)
    vals = iter(lv.values())
    g = next(vals)
    var = g.variables[0]
    for c in vals:
        if g.is_monomial:
            break
        g = _gcd_univ(g, c, var)
    if g.is_monomial:
        return LaurentPoly.one(g.variables)
    return g


# ---- numeric evaluation ----


def eval_complex(p: LaurentPoly, point, precision_bits: int = 256):
    """Evaluate a 1-variable polynomial at a complex point with mpmath at the
    requested binary precision (Horner over the exponent ladder)."""
    if len(p.variables) != 1:
        raise ValueError("eval_complex expects a univariate polynomial")
    with mpmath.workprec(precision_bits):
        z = mpmath.mpc(point)
        if not p.terms:
            return mpmath.mpc(0)
        exps = sorted(e[0] for e in p.terms)
        acc = mpmath.mpc(0)
        prev = None
        for e in reversed(exps):
            if prev is not None:
                acc = acc * z ** (prev - e)
            c = p.terms[(e,)]
            acc = acc + mpmath.mpf(int(c.numerator)) / mpmath.mpf(int(c.denominator))
            prev = e
        if exps[0]:
            acc = acc * z ** exps[0]
        return +acc
