"""The discrete Laplace ("Harer-Zagier") transform of unnormalized knot
polynomials:

    Z(q, lam) = sum_{N >= 0} Hbar(q^N, q) lam^N

computed exactly as a rational function of (q, lam), plus closed factored
forms for every implemented family and trial-division factorization over the
basis (1 - sign*lam*q^k).
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from math import gcd
from threading import Lock

from .families import (
    FamilyError,
    FamilyId,
    Knot,
    crossing_number,
    format_family_id,
    in_printed_range,
)
from .homfly import normalized_vz_to_aq, sign_convention, unnormalized_aq
from .laurent import LaurentPoly, div_basis_factor, divide_exact, poly_gcd
from .polyexpr import parse_poly
from .rational import ONE, rat, rat_str
from .ratfunc import RationalFunc, poly_collapse

__all__ = [
    "QL",
    "HZError",
    "FactorizationError",
    "HZFunction",
    "FactoredForm",
    "hz_transform",
    "hz",
    "torus_hz_closed",
    "family_hz_closed",
    "closed_form",
    "family_hz_parts",
    "factorize",
    "hz_from_table",
    "lambda_series_coefficients",
    "hz_to_json",
]

QL = ("q", "lam")
_Q1 = ("q",)


class HZError(ArithmeticError):
    pass


class FactorizationError(HZError):
    pass


def _basis(sign: int, k: int) -> LaurentPoly:
    """(1 - sign * lam * q^k)"""
    return LaurentPoly(QL, {(0, 0): 1, (k, 1): -sign})


def _embed_q(p: LaurentPoly) -> LaurentPoly:
    return LaurentPoly(QL, {(e, 0): c for (e,), c in p.terms.items()})


def _L(j: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(QL, (0, j))


def _Qm(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(QL, (e, 0))


def _L2(e: int, sign: int = 1) -> LaurentPoly:
    """(1 - sign * lam^2 * q^e)"""
    return LaurentPoly(QL, {(0, 0): 1, (e, 2): -sign})


@dataclass(frozen=True)
class HZFunction:
    value: RationalFunc  # reduced, in (q, lam)
    source: str = ""

    def __eq__(self, other):
        if isinstance(other, HZFunction):
            return self.value == other.value
        if isinstance(other, RationalFunc):
            return self.value == other
        return NotImplemented

    __hash__ = None


# ---- the transform ----


def hz_transform(hbar: RationalFunc, source: str = "") -> HZFunction:
    """Resum Hbar(a, q) = sum_m p_m(q) a^m / d(q) over a = q^N against lam^N:
    each a-level contributes p_m(q)/(d(q) (1 - lam q^m)) by the geometric
    series (formal in lam).  The q-only denominator must cancel entirely."""
    num, den = hbar.num, hbar.den
    if "a" in den.variables and den.exponent_span("a") != 0:
        raise HZError("denominator involves a; the transform needs a-levels over q")
    den_q = poly_collapse(den, "a") if "a" in den.variables else den
    if num.is_zero:
        return HZFunction(RationalFunc.zero(QL), source)
    if "a" not in num.variables:
        raise HZError("numerator must be expressed in the variables (a, q)")

    levels = num.levels("a")
    support = sorted(levels)
    facs = {m: _basis(1, m) for m in support}
    big_n = LaurentPoly.zero(QL)
    for m in support:
        t = _embed_q(levels[m])
        for mp in support:
            if mp != m:
                t = t * facs[mp]
        big_n = big_n + t

    d = den_q
    while not d.is_monomial:
        lam_levels = big_n.levels("lam")
        g = None
        for lv in sorted(lam_levels):
            g = lam_levels[lv] if g is None else poly_gcd(g, lam_levels[lv])
            if g.is_monomial:
                break
        g = poly_gcd(g, d)
        if g.is_monomial:
            break
        big_n = LaurentPoly.from_levels(
            QL, "lam", {j: divide_exact(p, g) for j, p in lam_levels.items()}
        )
        d = divide_exact(d, g)
    if not d.is_monomial:
        raise HZError("q-denominator did not cancel in the reduced transform")

    big_n = divide_exact(big_n, _embed_q(d))  # d is a monomial, hence a unit
    big_d = LaurentPoly.one(QL)
    for m in support:
        big_d = big_d * facs[m]
    return HZFunction(RationalFunc(big_n, big_d, reduce=False), source)


_hz_memo: dict = {}
_hz_lock = Lock()


def hz(knot: Knot) -> HZFunction:
    """Transform of the knot's unnormalized polynomial, via the full
    symbolic pipeline (recursion -> (a,q) form -> geometric resummation)."""
    key = (knot, sign_convention())
    hit = _hz_memo.get(key)
    if hit is not None:
        return hit
    out = hz_transform(unnormalized_aq(knot), source=format_family_id(knot))
    with _hz_lock:
        return _hz_memo.setdefault(key, out)


# ---- factored forms ----


@dataclass(frozen=True)
class FactoredForm:
    """prefactor (coeff * q^q_exp * lam^lam_exp) * prod num_factors * residual
    / prod den_factors, with factors (sign, k, multiplicity) encoding
    (1 - sign*lam*q^k)^multiplicity."""

    coeff: object
    q_exp: int
    lam_exp: int
    num_factors: tuple
    den_factors: tuple
    residual: LaurentPoly

    @property
    def fully_factorized(self) -> bool:
        return self.residual.exponent_span("lam") == 0

    def to_rational(self) -> RationalFunc:
        num = LaurentPoly.monomial(QL, (self.q_exp, self.lam_exp), self.coeff) * self.residual
        for s, k, m in self.num_factors:
            num = num * _basis(s, k) ** m
        den = LaurentPoly.one(QL)
        for s, k, m in self.den_factors:
            den = den * _basis(s, k) ** m
        return RationalFunc(num, den, reduce=False)

    def render(self) -> str:
        def fac(s, k, m):
            if k == 0:
                body = "lam"
            elif k == 1:
                body = "lam*q"
            else:
                body = f"lam*q^{k}"
            out = f"(1 {'-' if s == 1 else '+'} {body})"
            return out + (f"^{m}" if m > 1 else "")

        num_parts = []
        if self.coeff != 1:
            num_parts.append(rat_str(self.coeff))
        if self.q_exp:
            num_parts.append("q" if self.q_exp == 1 else f"q^{self.q_exp}")
        if self.lam_exp:
            num_parts.append("lam" if self.lam_exp == 1 else f"lam^{self.lam_exp}")
        num_parts.extend(fac(*f) for f in self.num_factors)
        if not self.residual.is_one:
            num_parts.append(f"[{self.residual.render()}]")
        num_str = "*".join(num_parts) if num_parts else "1"
        if not self.den_factors:
            return num_str
        den_parts = [fac(*f) for f in self.den_factors]
        den_str = den_parts[0] if len(den_parts) == 1 else "(" + "*".join(den_parts) + ")"
        return f"{num_str} / {den_str}"

    def to_json(self):
        return {
            "prefactor": {
                "coeff": rat_str(self.coeff),
                "q_exp": self.q_exp,
                "lam_exp": self.lam_exp,
            },
            "num_factors": [list(f) for f in self.num_factors],
            "den_factors": [list(f) for f in self.den_factors],
            "residual": None if self.residual.is_one else _levels_json(self.residual),
            "fully_factorized": self.fully_factorized,
        }


def _sorted_factors(counter: Counter) -> tuple:
    return tuple(
        (s, k, counter[(s, k)]) for s, k in sorted(counter, key=lambda sk: (-sk[0], sk[1]))
    )


def factorize(z) -> FactoredForm:
    """Trial division by (1 - sign*lam*q^k) for |k| up to the q-exponent span,
    sign +1 before -1, k ascending; multiplicities exhausted per factor.  The
    denominator must factor completely; the numerator may leave a residual."""
    rf = z.value if isinstance(z, HZFunction) else z
    num, den = rf.num, rf.den
    if num.is_zero:
        return FactoredForm(rat(0), 0, 0, (), (), LaurentPoly.one(QL))

    spans = [p.exponent_span("q") for p in (num, den) if "q" in p.variables]
    bound = max(spans) if spans else 0

    def extract(p: LaurentPoly):
        found: Counter = Counter()
        if "lam" not in p.variables or p.exponent_span("lam") == 0:
            return found, p
        for s in (1, -1):
            for k in range(-bound, bound + 1):
                while True:
                    qt = div_basis_factor(p, s, k, "lam")
                    if qt is None:
                        break
                    p = qt
                    found[(s, k)] += 1
                    if "lam" not in p.variables or p.exponent_span("lam") == 0:
                        return found, p
        return found, p

    nf, nrest = extract(num.embed(QL) if len(num.variables) < 2 else num)
    df, drest = extract(den.embed(QL) if len(den.variables) < 2 else den)
    if not drest.is_monomial:
        raise FactorizationError(
            "denominator does not factor over the (1 ± lam*q^k) basis: "
            f"residue {drest.render()}"
        )
    dq, dl = drest.trailing_key()
    dc = drest.trailing_coeff()

    nq, nl = nrest.min_exps()
    shifted = nrest.shift((-nq, -nl))
    nc = shifted.trailing_coeff()
    residual = shifted.scale(1 / nc)

    return FactoredForm(
        coeff=nc / dc,
        q_exp=nq - dq,
        lam_exp=nl - dl,
        num_factors=_sorted_factors(nf),
        den_factors=_sorted_factors(df),
        residual=residual,
    )


def torus_hz_closed(m: int, n: int) -> FactoredForm:
    """lam * prod_{j=0}^{m-2}(1 - lam q^{(m+1)n+m-2-2j})
    / prod_{j=0}^{m}(1 - lam q^{(m-1)n+m-2j}), with common factors cancelled
    at the factor-list level."""
    if m < 1 or n < 1:
        raise FamilyError("torus parameters must be >= 1")
    if gcd(m, n) != 1:
        raise FamilyError(f"closed torus transform needs coprime parameters, got ({m},{n})")
    cn = Counter((m + 1) * n + m - 2 - 2 * j for j in range(m - 1))
    cd = Counter((m - 1) * n + m - 2 * j for j in range(m + 1))
    common = cn & cd
    cn -= common
    cd -= common
    return FactoredForm(
        coeff=ONE,
        q_exp=0,
        lam_exp=1,
        num_factors=_sorted_factors(Counter({(1, k): v for k, v in cn.items()})),
        den_factors=_sorted_factors(Counter({(1, k): v for k, v in cd.items()})),
        residual=LaurentPoly.one(QL),
    )


# ---- printed family numerators and denominator factor lists ----


def _F(k: int, sign: int = 1) -> LaurentPoly:
    return _basis(sign, k)


def _printed_fam_2k_2(n: int):
    part1 = _L() * _F(-5, -1) * _L2(3 * n - 8)
    rest = -(
        _L(2)
        * _Qm(n - 3)
        * (
            (_Qm(2) + 1 + _Qm(-2)) * _F(n - 7)
            + _Qm(-3) * (_Qm(n - 3) + _Qm(3 - n)) * _F(n - 1)
            - _Qm(n) * _F(-n - 7)
        )
    )
    den = [(1, -1), (1, -3), (1, n - 5), (1, n - 3), (1, n - 1)]
    return part1, rest, den


def _printed_fam_2k1_2(n: int):
    part1 = _L() * _F(3) * _F(n - 2) * _F(2 * n + 3)
    rest = -(_L(2) * _F(n + 2) * (_Qm(n) - _Qm(5)) * (1 - _Qm(n - 3)))
    den = [(1, 1), (1, 3), (1, n - 2), (1, n), (1, n + 2)]
    return part1, rest, den


def _printed_fam_2k1_1_2(n: int):
    part1 = _L() * _F(n - 9, -1) * _F(3 * n - 7, -1)
    rest = -(_L(2) * _Qm(2 * n - 8) * (_Qm(-2) + _Qm(2)) * (_Qm(3 - n) + _Qm(n - 3)))
    den = [(1, n - 7), (1, n - 5), (1, n - 3), (1, n - 1)]
    return part1, rest, den


def _printed_fam_2k2_3(n: int):
    part1 = _L() * _F(n - 2) * _F(3 * n - 2)
    rest = -(_L(2) * _Qm(2 * n - 2) * (_Qm(1) - _Qm(-1)) * (_Qm(n - 5) - _Qm(5 - n)))
    den = [(1, n - 4), (1, n - 2), (1, n), (1, n + 2)]
    return part1, rest, den


def _printed_pretzel(n: int):
    k = (n - 6) // 2
    part1 = _L() * _F(13 - 2 * k) * _F(3 * (1 - 2 * k))
    rest = LaurentPoly.zero(QL)
    den = [(1, 1 - 2 * k), (1, 3 - 2 * k), (1, 5 - 2 * k), (1, 7 - 2 * k)]
    return part1, rest, den


def _printed_app_a(n: int):
    part1 = _L() * _F(n - 13) * _F(3 * n - 11)
    rest = -(
        _L(2)
        * _Qm(2 * n - 12)
        * (_Qm(1) - _Qm(-1))
        * (_Qm(2) + _Qm(-2))
        * (_Qm(4 - n) - _Qm(n - 4))
    )
    den = [(1, n - 9), (1, n - 7), (1, n - 5), (1, n - 3)]
    return part1, rest, den


def _printed_app_b(n: int):
    part1 = _L() * _F(-7) * _F(1) * _F(n - 7) * _F(2 * n - 5)
    rest = (
        _L(2)
        * _Qm(n - 2)
        * _F(-7)
        * ((_Qm(5 - n) + _Qm(n - 5)) * _F(n - 7) + _Qm(-1) * _F(3, -1) * (-1 + _Qm(n - 8)))
        + _L(2)
        * _Qm(-5)
        * _F(1)
        * (_F(3 * n - 13) * (1 - _Qm(2)) ** 2 - _Qm(n) * _F(1, -1) * (1 - _Qm(n - 10)))
        - _L(2) * _Qm(2 * n - 11) * (_Qm(2) + _Qm(-2)) * _F(1) * _F(3 - n)
    )
    den = [(1, -3), (1, -1), (1, 1), (1, n - 7), (1, n - 5), (1, n - 3)]
    return part1, rest, den


def _printed_app_c(n: int):
    part1 = _L() * _F(-9, -1) * _F(n - 7) * _F(2 * n - 7, -1) * _L2(n - 10, -1)
    rest = (
        -(
            _L(2)
            * _Qm(n - 7)
            * _F(-9, -1)
            * (_Qm(2) * _F(-5) * _F(2 * n - 9, -1) + _Qm(-2) * (1 - _Qm(n - 2)) * _L2(n - 4, -1))
        )
        - _L(2) * _Qm(n - 3) * _F(-9) * (1 + _Qm(n - 10)) * _L2(n - 8, -1)
        - _L(2)
        * _Qm(-3)
        * (2 * _F(-7, -1) * _L2(4 * n - 20) + _Qm(2 * n - 14) * _F(-1) ** 2 * _F(3))
        + 2
        * _L(2)
        * _L()
        * _Qm(-8)
        * (_F(n - 3) * (1 + _Qm(3 * n - 14)) + _Qm(n + 1) * (_Qm(1) + _Qm(-1)) * _F(2 * n - 19))
    )
    den = [(1, -5), (1, -3), (1, -1), (1, n - 9), (1, n - 7), (1, n - 5), (1, n - 3)]
    return part1, rest, den


def _printed_app_d(n: int):
    part1 = _L() * _F(-11, -1) * _F(n - 5) * _F(2 * n - 13, -1)
    rest = _L(2) * _Qm(-7) * (
        (1 - _Qm(n)) * (1 - _Qm(n - 2)) * _F(n - 13)
        - _Qm(n - 5) * (_Qm(-2) + _Qm(2)) * (_Qm(n - 5) + _Qm(5 - n)) * _F(n - 5)
    )
    den = [(1, -3), (1, -5), (1, n - 9), (1, n - 7), (1, n - 5)]
    return part1, rest, den


_PRINTED = {
    FamilyId.FAM_2K_2: _printed_fam_2k_2,
    FamilyId.FAM_2K1_2: _printed_fam_2k1_2,
    FamilyId.FAM_2K1_1_2: _printed_fam_2k1_1_2,
    FamilyId.FAM_2K2_3: _printed_fam_2k2_3,
    FamilyId.PRETZEL: _printed_pretzel,
    FamilyId.APP_A: _printed_app_a,
    FamilyId.APP_B: _printed_app_b,
    FamilyId.APP_C: _printed_app_c,
    FamilyId.APP_D: _printed_app_d,
}


def _printed_parts(knot: Knot):
    builder = _PRINTED.get(knot.family)
    if builder is None:
        raise FamilyError(f"{knot.family.value} has no printed closed transform")
    return builder(crossing_number(knot))


def family_hz_closed(knot: Knot, extrapolate: bool = False) -> FactoredForm:
    """The printed closed-form transform of a twisted-family member, reduced
    by cancelling denominator basis factors that divide the numerator."""
    if not in_printed_range(knot) and not extrapolate:
        raise FamilyError(
            f"{format_family_id(knot)} is below the generating member; "
            "extrapolated evaluation must be requested explicitly"
        )
    part1, rest, den_list = _printed_parts(knot)
    num = part1 + rest
    remaining: Counter = Counter(den_list)
    for sk in sorted(remaining, key=lambda sk: (-sk[0], sk[1])):
        while remaining[sk] > 0:
            qt = div_basis_factor(num, sk[0], sk[1], "lam")
            if qt is None:
                break
            num = qt
            remaining[sk] -= 1
    den = LaurentPoly.one(QL)
    for (s, k), mult in remaining.items():
        den = den * _basis(s, k) ** mult
    return factorize(RationalFunc(num, den, reduce=False))


def closed_form(knot: Knot, extrapolate: bool = False) -> FactoredForm:
    """Closed factored transform for any family that has one."""
    if knot.family is FamilyId.UNKNOT:
        return torus_hz_closed(1, 1)
    if knot.family is FamilyId.TORUS:
        m, n = knot.params
        if min(m, n) == 1:
            return torus_hz_closed(1, 1)
        return torus_hz_closed(m, n)
    return family_hz_closed(knot, extrapolate=extrapolate)


def family_hz_parts(knot: Knot) -> tuple[RationalFunc, RationalFunc]:
    """Split of the printed transform into the lam-linear factorized leading
    part and the lam^2 correction part, each over the printed denominator."""
    if knot.family in (FamilyId.UNKNOT, FamilyId.TORUS):
        return closed_form(knot).to_rational(), RationalFunc.zero(QL)
    part1, rest, den_list = _printed_parts(knot)
    if not rest.is_zero and rest.valuation("lam") < 2:
        raise HZError("correction part is not divisible by lam^2")
    den = LaurentPoly.one(QL)
    for s, k in den_list:
        den = den * _basis(s, k)
    return RationalFunc(part1, den), RationalFunc(rest, den)


# ---- ingestion and series ----


def hz_from_table(text: str) -> HZFunction:
    """Transform computed from a normalized polynomial H(v,z) given as text
    (e.g. copied from a knot table)."""
    h = parse_poly(text, ("v", "z"))
    zi = h.variables.index("z") if "z" in h.variables else None
    if zi is not None and any(e[zi] % 2 for e in h.terms):
        warnings.warn("odd z-exponents are inconsistent with a knot polynomial")
    return hz_transform(normalized_vz_to_aq(h), source="table")


def lambda_series_coefficients(z, count: int = 6) -> list:
    """First `count` lam-power-series coefficients, as exact Laurent
    polynomials in q.  Coefficient N reproduces Hbar(q^N, q)."""
    rf = z.value if isinstance(z, HZFunction) else z
    num_l = rf.num.levels("lam") if "lam" in rf.num.variables else {0: rf.num}
    den_l = rf.den.levels("lam") if "lam" in rf.den.variables else {0: rf.den}
    zero_q = LaurentPoly.zero(_Q1)
    d0 = den_l.get(0)
    if d0 is None or d0.is_zero:
        raise HZError("series undefined: denominator vanishes at lam=0")
    out = []
    for j in range(count):
        acc = num_l.get(j, zero_q)
        for i in range(j):
            dji = den_l.get(j - i)
            if dji is not None and not out[i].is_zero:
                acc = acc - out[i] * dji
        c = divide_exact(acc, d0)
        if c is None:
            raise HZError(f"series coefficient {j} is not a Laurent polynomial")
        out.append(c)
    return out


# ---- JSON ----


def _levels_json(p: LaurentPoly):
    return [
        [lv, {str(e): rat_str(c) for (e,), c in sorted(pol.terms.items())}]
        for lv, pol in sorted(p.levels("lam").items())
    ]


def hz_to_json(z: HZFunction, factored: FactoredForm | None = None):
    rf = z.value if isinstance(z, HZFunction) else z
    if factored is None:
        try:
            factored = factorize(rf)
        except FactorizationError:
            factored = None
    return {
        "num": _levels_json(rf.num.embed(QL)),
        "den": _levels_json(rf.den.embed(QL)),
        "factored": None if factored is None else factored.to_json(),
    }
