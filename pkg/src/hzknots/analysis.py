"""Analytic identities of the transforms: the q -> 1 Laurent expansion of
Z(q, 1), exact lambda-residue identities, and symmetry / special-value
checks (inversion, negated inversion, q = 1 collapse, printed
single-variable specializations, q -> infinity / 0 limits)."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .families import (
    FamilyError,
    FamilyId,
    Knot,
    crossing_number,
    parse_family_id,
)
from .hz import QL, HZError, HZFunction, factorize, family_hz_parts
from .laurent import LaurentPoly, div_basis_factor
from .rational import rat, rat_str
from .ratfunc import (
    RationalFunc,
    poly_collapse,
    poly_diff,
    poly_subst_monomial,
)
from .series import SeriesError, to_xseries

__all__ = [
    "ExpansionReport",
    "ResidueReport",
    "SymmetryReport",
    "expand_at_1",
    "a2_closed_form",
    "lambda_residues",
    "lambda2_partial_residue_check",
    "symmetry_checks",
    "q_pole_structure_check",
]

_Q1 = ("q",)
_L1 = ("lam",)


def _value_of(z) -> RationalFunc:
    return z.value if isinstance(z, HZFunction) else z


# ---- q -> 1 expansion ----


@dataclass(frozen=True)
class ExpansionReport:
    family: str
    n_or_k: int | None
    coeffs: dict  # {even exponent e: exact coefficient of x^e}, e = -2 .. order
    odd_coeff_max_abs: object  # max |a_e| over odd e in the window; must be 0

    @property
    def a_minus_2(self):
        return self.coeffs[-2]

    def to_json(self):
        return {
            "family": self.family,
            "n_or_k": self.n_or_k,
            "coeffs": {str(e): rat_str(c) for e, c in sorted(self.coeffs.items())},
            "odd_coeff_max_abs": rat_str(self.odd_coeff_max_abs),
        }


def _source_meta(z) -> tuple[str, int | None]:
    source = getattr(z, "source", "") or ""
    try:
        knot = parse_family_id(source, extrapolate=True)
    except Exception:
        return source, None
    if knot.family is FamilyId.TORUS:
        return source, knot.params[1]
    if knot.params:
        return source, knot.params[0]
    return source, None


def expand_at_1(z, order: int = 12) -> ExpansionReport:
    """Expansion of Z(e^x, 1) in x: exact coefficients a_e for
    e = -2 .. order, split into the even map and the max |odd| coefficient."""
    rf = _value_of(z)
    try:
        s = to_xseries(rf, lambda_value=1, order=order + 2)
    except (SeriesError, ZeroDivisionError) as e:
        raise HZError(f"expansion at q=1 undefined: {e}") from e
    if s.is_zero:
        raise HZError("transform vanishes identically at lam=1")
    if s.min_exp < -2:
        raise HZError(f"pole order {-s.min_exp} at q=1 exceeds 2")
    coeffs = {}
    odd_max = rat(0)
    for e in range(-2, order + 1):
        c = s.coeff(e)
        if e % 2 == 0:
            coeffs[e] = c
        else:
            a = -c if c < 0 else c
            if a > odd_max:
                odd_max = a
    family, n_or_k = _source_meta(z)
    return ExpansionReport(family, n_or_k, coeffs, odd_max)


_A2_FORMS = {}


def _a2(fam):
    def reg(fn):
        _A2_FORMS[fam] = fn
        return fn

    return reg


@_a2(FamilyId.FAM_2K_2)
def _a2_fam_a(n):
    # Sign fixed against the exact expansion of this family's transform:
    # the pipeline value is +5/3 at n=4, +1/15 at n=6, ... for every k.
    return rat(1, 3) - rat(4) / ((n - 5) * (n - 3) * (n - 1))


@_a2(FamilyId.FAM_2K1_2)
def _a2_fam_b(n):
    return rat(1, 3) + rat(4) / ((n - 2) * n * (n + 2))


@_a2(FamilyId.FAM_2K1_1_2)
def _a2_fam_c(n):
    return rat(3 * (n * n - 6 * n + 13)) / ((n - 7) * (n - 5) * (n - 3) * (n - 1))


@_a2(FamilyId.FAM_2K2_3)
def _a2_fam_d(n):
    return rat(3 * (n * n - 4 * n + 8)) / ((n - 4) * (n - 2) * n * (n + 2))


@_a2(FamilyId.PRETZEL)
def _a2_pretzel(n):
    return rat(3 * (n - 19)) / ((n - 13) * (n - 11) * (n - 9))


@_a2(FamilyId.APP_A)
def _a2_app_a(n):
    return rat(3 * (n * n - 14 * n + 37)) / ((n - 9) * (n - 7) * (n - 5) * (n - 3))


@_a2(FamilyId.APP_B)
def _a2_app_b(n):
    return rat(-7, 3) + rat(4) / ((n - 7) * (n - 5) * (n - 3))


@_a2(FamilyId.APP_C)
def _a2_app_c(n):
    return rat(1, 15) - rat(8 * (n - 6)) / ((n - 9) * (n - 7) * (n - 5) * (n - 3))


@_a2(FamilyId.APP_D)
def _a2_app_d(n):
    return rat(1, 15) - rat(8) / ((n - 9) * (n - 7) * (n - 5))


def a2_closed_form(knot: Knot):
    """The printed leading-coefficient formula a_{-2}(n), evaluated exactly."""
    form = _A2_FORMS.get(knot.family)
    if form is None:
        raise FamilyError(f"{knot.family.value} has no printed a_-2 formula")
    return form(crossing_number(knot))


# ---- lambda residues ----


@dataclass(frozen=True)
class ResidueReport:
    poles: tuple  # ((location: q-monomial +-q^-k, order, residue: RationalFunc in q), ...)
    finite_sum: RationalFunc
    infinity_residue: RationalFunc

    def to_json(self):
        return {
            "poles": [
                {
                    "location": loc.render(),
                    "order": order,
                    "residue": res.render(),
                }
                for loc, order, res in self.poles
            ],
            "finite_sum": self.finite_sum.render(),
            "infinity_residue": self.infinity_residue.render(),
        }


def _subst_lam_monomial(p: LaurentPoly, s: int, k: int) -> LaurentPoly:
    """p with lam -> s * q^-k, collapsed to a polynomial in q."""
    out = poly_subst_monomial(p, {"lam": (s, (-k, 0))})
    return poly_collapse(out, "lam")


def _finite_residues(rf: RationalFunc):
    """Simple/higher-order pole residues at every lam = s*q^-k denominator
    zero, exact in q, plus their sum."""
    fact = factorize(rf)
    num = rf.num.embed(QL)
    den = rf.den.embed(QL)
    poles = []
    total = RationalFunc.zero(_Q1)
    for s, k, m in fact.den_factors:
        cof = den
        for _ in range(m):
            cof = div_basis_factor(cof, s, k, "lam")
            if cof is None:
                raise HZError("internal: denominator factor did not divide")
        # den = (lam - lam0)^m * e  with  e = (-s)^m q^{mk} * cof
        e = cof.shift((m * k, 0)).scale((-s) ** m)
        fn, fd = num, e
        for _ in range(m - 1):
            fn, fd = poly_diff(fn, "lam") * fd - fn * poly_diff(fd, "lam"), fd * fd
        res = RationalFunc(_subst_lam_monomial(fn, s, k), _subst_lam_monomial(fd, s, k))
        if m > 1:
            res = res / factorial(m - 1)
        location = LaurentPoly(_Q1, {(-k,): s})
        poles.append((location, m, res))
        total = total + res
    return tuple(poles), total


def lambda_residues(z) -> ResidueReport:
    rf = _value_of(z)
    poles, total = _finite_residues(rf)
    num = rf.num.embed(QL)
    den = rf.den.embed(QL)
    dn = num.degree("lam")
    dd = den.degree("lam")
    if dn <= dd - 2:
        inf_res = RationalFunc.zero(_Q1)
    elif dn == dd - 1:
        inf_res = -RationalFunc(num.levels("lam")[dn], den.levels("lam")[dd])
    else:
        raise HZError("transform has a polynomial part in lam; infinity residue undefined here")
    return ResidueReport(poles, total, inf_res)


def lambda2_partial_residue_check(knot: Knot) -> bool:
    """Split the printed numerator into the factorized lam-linear part and the
    lam^2 correction: the first contributes residue sum 1, the second 0."""
    part1, part2 = family_hz_parts(knot)
    _, s1 = _finite_residues(part1)
    if not s1 == 1:
        return False
    if part2.is_zero:
        return True
    _, s2 = _finite_residues(part2)
    return s2.is_zero


def q_pole_structure_check(z) -> bool:
    """At lam = 1 the denominator is a product of (1 - q^k): its q-zeros lie
    at roots of unity (and the poles otherwise at 0 and infinity).  Holds
    exactly when every denominator basis factor has sign +1."""
    return all(s == 1 for s, _k, _m in factorize(_value_of(z)).den_factors)


# ---- symmetry and special values ----


@dataclass(frozen=True)
class SymmetryReport:
    inversion: bool  # Z(1/q, 1/lam) == Z(q, lam)
    negated_inversion: bool  # Z(-1/q, -1/lam) == -Z(q, lam)
    at_q_one: bool  # Z(1, lam) == lam/(1-lam)^2
    specialization: bool | None  # printed single-variable reduction, when one exists
    q_infinity_inverse_lam: bool  # Z -> 1/lam as q -> infinity
    q_zero_lam: bool  # Z -> lam as q -> 0

    @property
    def core_pass(self) -> bool:
        return (
            self.inversion
            and self.negated_inversion
            and self.at_q_one
            and self.specialization is not False
        )

    def to_json(self):
        return {
            "inversion": self.inversion,
            "negated_inversion": self.negated_inversion,
            "at_q_one": self.at_q_one,
            "specialization": self.specialization,
            "q_infinity_inverse_lam": self.q_infinity_inverse_lam,
            "q_zero_lam": self.q_zero_lam,
        }


def _q_limit(rf: RationalFunc, at_infinity: bool) -> RationalFunc | None:
    """Limit of Z as q -> infinity (or 0) as a rational function of lam:
    the ratio of extreme q-levels when the degrees match, else None/0."""
    nl = rf.num.levels("q")
    dl = rf.den.levels("q")
    pick = max if at_infinity else min
    ne, de = pick(nl), pick(dl)
    if (ne > de) if at_infinity else (ne < de):
        return None  # divergent
    if ne != de:
        return RationalFunc.zero(_L1)
    return RationalFunc(nl[ne], dl[de])


def _specialization_target(source: str):
    """Printed single-variable reductions: (lam substitution exponent, RHS)."""
    q = lambda e, c=1: LaurentPoly(_Q1, {(e,): c})  # noqa: E731

    if source == "fam:2k1_2:k=2":
        # lam = q:  q(1-q^16) / ((1-q^2)(1-q^6)(1-q^10))
        rhs = RationalFunc(
            q(1) - q(17), (1 - q(2)) * (1 - q(6)) * (1 - q(10))
        )
        return 1, rhs
    if source == "fam:2k2_3:k=1":
        # lam = 1/q:  (1+q^10) / (q(1-q^2)(1-q^6))
        # Sign fixed against the defining series: sum_N Hbar(q^N,q) q^-N is
        # positive at 0 < q < 1 (e.g. +2.711... at q = 1/2).
        rhs = RationalFunc(1 + q(10), q(1) * (1 - q(2)) * (1 - q(6)))
        return -1, rhs
    if source == "fam:2k2_3:k=2":
        # lam = q:  q(1+q^14) / ((1-q^6)(1-q^10))
        # Sign fixed the same way as the k=1 member above.
        rhs = RationalFunc(q(1) + q(15), (1 - q(6)) * (1 - q(10)))
        return 1, rhs
    return None


def _remark_specialization(z) -> bool | None:
    target = _specialization_target(getattr(z, "source", "") or "")
    if target is None:
        return None
    e, rhs = target
    rf = _value_of(z)
    num = poly_collapse(poly_subst_monomial(rf.num, {"lam": (1, (e, 0))}), "lam")
    den = poly_collapse(poly_subst_monomial(rf.den, {"lam": (1, (e, 0))}), "lam")
    if den.is_zero:
        return False
    return RationalFunc(num, den) == rhs


def symmetry_checks(z) -> SymmetryReport:
    rf = _value_of(z)
    inv = rf.subst_monomial({"q": (1, (-1, 0)), "lam": (1, (0, -1))}) == rf
    neg = rf.subst_monomial({"q": (-1, (-1, 0)), "lam": (-1, (0, -1))}) == -rf

    lam = LaurentPoly.var("lam", _L1)
    at_q1 = rf.eval_var("q", 1) == RationalFunc(lam, (1 - lam) ** 2)

    inv_lam = RationalFunc(LaurentPoly.one(_L1), lam)
    lim_inf = _q_limit(rf, at_infinity=True)
    lim_zero = _q_limit(rf, at_infinity=False)

    return SymmetryReport(
        inversion=inv,
        negated_inversion=neg,
        at_q_one=at_q1,
        specialization=_remark_specialization(z),
        q_infinity_inverse_lam=lim_inf is not None and lim_inf == inv_lam,
        q_zero_lam=lim_zero is not None and lim_zero == RationalFunc.from_poly(lam),
    )
