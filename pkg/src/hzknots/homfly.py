"""HOMFLY polynomials H(v,z) and their unnormalized companions.

All family members are produced by exact recursions or closed formulas over
the Laurent ring in (v, z), normalized so H(unknot) = 1.  The unnormalized
polynomial multiplies H by (v - 1/v)/z; the overall sign of that factor is a
global convention toggle (default +1, matching the Wilson-loop normalization
of the circle).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from threading import Lock

from .families import FamilyError, FamilyId, Knot
from .laurent import LaurentPoly, divide_exact
from .rational import ONE, RAT
from .ratfunc import RationalFunc, poly_collapse, poly_subst_monomial

__all__ = [
    "VZ",
    "AQ",
    "HomflyPair",
    "TorusExplicit",
    "homfly",
    "homfly_torus2",
    "homfly_torus3",
    "homfly_torus_explicit",
    "homfly_family",
    "homfly_compose",
    "torus2",
    "torus2_knots_only",
    "torus3",
    "torus_explicit",
    "normalized_vz_to_aq",
    "unnormalized_aq",
    "evaluate_unnormalized",
    "jones",
    "jones_torus_recursion",
    "set_sign_convention",
    "sign_convention",
]

VZ = ("v", "z")
AQ = ("a", "q")

_sign = 1


def set_sign_convention(sign: int) -> None:
    """Choose the sign of the unknot factor: +1 (default) or -1."""
    global _sign
    if sign not in (1, -1):
        raise ValueError("sign convention must be +1 or -1")
    _sign = sign


def sign_convention() -> int:
    return _sign


def _m(ve: int, ze: int, c=1) -> LaurentPoly:
    return LaurentPoly.monomial(VZ, (ve, ze), c)


_memo: dict = {}
_memo_lock = Lock()


def _memoized(key, compute):
    hit = _memo.get(key)
    if hit is not None:
        return hit
    value = compute()
    with _memo_lock:
        return _memo.setdefault(key, value)


def _v_geom(lo: int, hi: int) -> LaurentPoly:
    """sum of v^(2j) for j = lo..hi (empty when hi < lo)."""
    return LaurentPoly(VZ, {(2 * j, 0): 1 for j in range(lo, hi + 1)})


# ---- 2-strand torus recursion ----


def torus2(n: int) -> LaurentPoly:
    """H of T(2,n) (a knot for odd n, a link for even n)."""
    if n < 1:
        raise FamilyError("torus requires n >= 1")

    def compute():
        h_prev2 = LaurentPoly.one(VZ)  # T(2,1) = unknot
        if n == 1:
            return h_prev2
        h_prev1 = _m(1, -1) * (1 - _m(2, 0) + _m(0, 2))  # T(2,2)
        v2 = _m(2, 0)
        zv = _m(1, 1)
        for _ in range(3, n + 1):
            h_prev2, h_prev1 = h_prev1, v2 * h_prev2 + zv * h_prev1
        return h_prev1

    return _memoized(("t2", n), compute)


def torus2_knots_only(n: int) -> LaurentPoly:
    """H of T(2,n) for odd n via the knots-only recursion (independent path)."""
    if n < 1 or n % 2 == 0:
        raise FamilyError("knots-only recursion requires odd n >= 1")
    k = (n - 1) // 2

    def compute():
        hs = [LaurentPoly.one(VZ)]  # index j holds T(2, 2j+1)
        z2 = _m(0, 2)
        for kk in range(1, k + 1):
            acc = _m(2, 0) * hs[kk - 1]
            for j in range(1, kk + 1):
                acc = acc + z2 * _m(2 * j, 0) * hs[kk - j]
            acc = acc + _m(2 * kk, 0) * (1 - _m(2, 0))
            hs.append(acc)
        return hs[k]

    return _memoized(("t2k", n), compute)


# ---- 3-strand torus recursions ----


def torus3(n: int) -> LaurentPoly:
    """H of T(3,n) via the three residue-class recursions."""
    if n < 1:
        raise FamilyError("torus requires n >= 1")

    def compute():
        hs = {1: LaurentPoly.one(VZ), 2: torus2(3)}
        if n >= 3:
            z2 = _m(0, 2)
            zm2 = _m(0, -2)
            hs[3] = _m(4, 2) * (2 - _m(2, 0) + z2) + _m(4, -2) * (1 - _m(2, 0) + z2) * (
                1 - _m(2, 0) + 2 * z2
            )
        for j in range(4, n + 1):
            r = j % 3
            tail = _m(2 * (j - 1), 0) * (1 - _m(2, 0))
            if r == 2:
                acc = _m(2, 0) * hs[j - 1]
                for i in range(1, j):
                    acc = acc + _m(0, 2) * _m(2 * i, 0) * hs[j - i]
                acc = acc + tail
            elif r == 1:
                acc = _m(4, 0) * hs[j - 2] + _m(2, 2) * hs[j - 1]
                for i in range(2, j):
                    acc = acc + 2 * _m(0, 2) * _m(2 * i, 0) * hs[j - i]
                acc = acc + 2 * tail
            else:
                acc = _m(6, 0) * hs[j - 3] + _m(2, 2) * hs[j - 1] + 2 * _m(4, 2) * hs[j - 2]
                for i in range(3, j):
                    acc = acc + 3 * _m(0, 2) * _m(2 * i, 0) * hs[j - i]
                acc = acc + 3 * tail
            hs[j] = acc
        return hs[n]

    return _memoized(("t3", n), compute)


# ---- twisted families (normalized H) ----


def _fam_2k_2(k: int) -> LaurentPoly:
    # v^(2k) (1 - v^-2) + v^-2 - z^2 sum_{j=0}^{k-1} v^(2j)
    return _m(2 * k, 0) - _m(2 * k - 2, 0) + _m(-2, 0) - _m(0, 2) * _v_geom(0, k - 1)


def _fam_2k1_2(k: int) -> LaurentPoly:
    # v^(2k+2) (1 - v^2) + v^2 + z^2 sum_{j=1}^{k+1} v^(2j)   (valid down to k=0)
    return _m(2 * k + 2, 0) - _m(2 * k + 4, 0) + _m(2, 0) + _m(0, 2) * _v_geom(1, k + 1)


def _fam_2k1_1_2(k: int) -> LaurentPoly:
    return _m(-2, 0) * torus2(2 * k + 1) - _m(-1, 1) * torus2(2 * k + 2)


def _fam_2k2_3(k: int) -> LaurentPoly:
    return _m(2, 0) * torus2(2 * k + 3) + _m(1, 1) * torus2(2 * k + 2)


def _pretzel(k: int) -> LaurentPoly:
    def compute():
        hs = [_fam_2k1_2(1)]  # P(-2,3,-1) is 5_2
        trefoil = torus2(3)
        z2 = _m(0, 2)
        for kk in range(1, k + 1):
            acc = _m(-2, 0) * hs[kk - 1]
            for j in range(1, kk + 1):
                acc = acc + z2 * _m(-2 * j, 0) * hs[kk - j]
            acc = acc - _m(-2 * kk, 0) * (1 - _m(2, 0) + z2) * trefoil
            hs.append(acc)
        return hs[k]

    return _memoized(("pretzel", k), compute)


def _app_a(k: int) -> LaurentPoly:
    return (_m(-2, 0) + _m(-2, 2)) * torus2(2 * k + 1) - _m(-3, 1) * torus2(2 * k)


def _app_b(k: int) -> LaurentPoly:
    return (_m(-2, 0) + _m(-2, 2)) * _fam_2k1_2(k - 1) - _m(-3, 1) * torus2(2)


def _app_c(k: int) -> LaurentPoly:
    return (
        _m(-2, 0) * _fam_2k_2(k + 1)
        - _m(2 * k - 1, 1) * torus2(2)
        - _m(0, 2) * _v_geom(0, k - 1)
    )


def _app_d(k: int) -> LaurentPoly:
    return (
        (_m(-2, 0) + _m(-2, 2)) * _fam_2k_2(k + 1)
        - _m(2 * k - 3, 1) * torus2(2)
        - _m(0, 2) * _v_geom(-1, k - 2)
    )


_FAMILY_H = {
    FamilyId.FAM_2K_2: _fam_2k_2,
    FamilyId.FAM_2K1_2: _fam_2k1_2,
    FamilyId.FAM_2K1_1_2: _fam_2k1_1_2,
    FamilyId.FAM_2K2_3: _fam_2k2_3,
    FamilyId.PRETZEL: _pretzel,
    FamilyId.APP_A: _app_a,
    FamilyId.APP_B: _app_b,
    FamilyId.APP_C: _app_c,
    FamilyId.APP_D: _app_d,
}


# ---- public pair ----


@dataclass(frozen=True)
class HomflyPair:
    knot: Knot
    normalized: LaurentPoly  # H(v,z), H(unknot) = 1
    unnormalized: RationalFunc  # H * sign*(v - 1/v)/z


def _normalized(knot: Knot) -> LaurentPoly:
    f = knot.family
    if f is FamilyId.UNKNOT:
        return LaurentPoly.one(VZ)
    if f is FamilyId.TORUS:
        m, n = knot.params
        if m > n:
            m, n = n, m  # T(m,n) = T(n,m)
        if m == 1:
            return LaurentPoly.one(VZ)
        if m == 2:
            return torus2(n)
        if m == 3:
            return torus3(n)
        raise FamilyError(
            f"no (v,z) recursion for {m}-strand torus members; "
            "the explicit form in (a,q) covers coprime parameters"
        )
    if f is FamilyId.COMPOSE_SUM:
        a, b = knot.children
        return _normalized(a) * _normalized(b)
    if f is FamilyId.COMPOSE_DISJOINT:
        a, b = knot.children
        return (_m(-1, -1) - _m(1, -1)) * _normalized(a) * _normalized(b)
    return _memoized((f, knot.k), lambda: _FAMILY_H[f](knot.k))


def homfly(knot: Knot) -> HomflyPair:
    h = _normalized(knot)
    unnorm = RationalFunc(h * (_m(1, 0) - _m(-1, 0)).scale(_sign), _m(0, 1), reduce=False)
    return HomflyPair(knot, h, unnorm)


def homfly_torus2(n: int) -> HomflyPair:
    return homfly(Knot(FamilyId.TORUS, (2, n)))


def homfly_torus3(n: int) -> HomflyPair:
    return homfly(Knot(FamilyId.TORUS, (3, n)))


def homfly_family(knot: Knot) -> HomflyPair:
    if knot.family not in _FAMILY_H:
        raise FamilyError(f"{knot.family.value} is not a twisted family")
    return homfly(knot)


def homfly_compose(kind: str, a: HomflyPair, b: HomflyPair) -> HomflyPair:
    if kind == "connected_sum":
        fid = FamilyId.COMPOSE_SUM
    elif kind == "disjoint_union":
        fid = FamilyId.COMPOSE_DISJOINT
    else:
        raise FamilyError(f"unknown composition kind {kind!r}")
    return homfly(Knot(fid, (), (a.knot, b.knot)))


# ---- conversion to (a, q) with z = q - 1/q ----


def _subst_vz(p: LaurentPoly, a_name: str, out_vars: tuple) -> LaurentPoly:
    """Map (v,z) -> (a, q - 1/q) for p with nonnegative z-exponents."""
    zq = LaurentPoly(out_vars, {_axis(out_vars, 1, 1): 1, _axis(out_vars, 1, -1): -1})
    levels = p.levels("z")
    if levels and min(levels) < 0:
        raise ValueError("negative z-exponent; clear powers of z first")
    acc = LaurentPoly.zero(out_vars)
    prev = None
    for ze in sorted(levels, reverse=True):
        if prev is not None:
            acc = acc * zq ** (prev - ze)
        lvl = levels[ze].rename({"v": a_name}).embed(out_vars)
        acc = acc + lvl
        prev = ze
    if prev:
        acc = acc * zq**prev
    return acc


def _axis(variables: tuple, index: int, exp: int) -> tuple:
    e = [0] * len(variables)
    e[index] = exp
    return tuple(e)


def normalized_vz_to_aq(h: LaurentPoly) -> RationalFunc:
    """Unnormalize a (v,z) polynomial and re-express it over (a, q) with
    a = q^N symbolic: multiply by sign*(v - v^-1)/z, then substitute
    v -> a, z -> q - q^-1."""
    num = h * (_m(1, 0) - _m(-1, 0)).scale(_sign)
    s = max(0, -num.valuation("z"))
    num = num.shift((0, s))
    num_aq = _subst_vz(num, "a", AQ)
    den = (LaurentPoly(AQ, {(0, 1): 1, (0, -1): -1})) ** (s + 1)
    return RationalFunc(num_aq, den)


def unnormalized_aq(knot: Knot) -> RationalFunc:
    """Unnormalized polynomial as a function of (a, q) with a = q^N symbolic:
    a Laurent polynomial in a over exact rational functions of q."""
    if knot.family is FamilyId.TORUS:
        m, n = knot.params
        if min(m, n) > 3:
            return torus_explicit(m, n)
    return normalized_vz_to_aq(_normalized(knot))


# ---- explicit torus formula ----


def torus_explicit(m: int, n: int) -> RationalFunc:
    """Unnormalized torus polynomial in (a,q) from the explicit strand sum;
    requires coprime (m,n)."""
    if m < 1 or n < 1:
        raise FamilyError("torus parameters must be >= 1")
    if gcd(m, n) != 1:
        raise FamilyError(f"explicit torus form needs coprime parameters, got ({m},{n})")

    def compute():
        a_ = LaurentPoly.var("a", AQ)
        q_ = LaurentPoly.var("q", AQ)
        qi = LaurentPoly.monomial(AQ, (0, -1))
        a2 = a_ * a_

        # beta sum over the common denominator prod_{i=1..m-1}(q^{2i}-1) * prod_{j=1..m-1}(1-q^{2j})
        def up_num(beta):  # prod_{i=1..beta} (a^2 q^{2i} - 1)
            out = LaurentPoly.one(AQ)
            for i in range(1, beta + 1):
                out = out * (a2 * LaurentPoly.monomial(AQ, (0, 2 * i)) - 1)
            return out

        def dn_num(beta):  # prod_{j=1..m-1-beta} (a^2 - q^{2j})
            out = LaurentPoly.one(AQ)
            for j in range(1, m - beta):
                out = out * (a2 - LaurentPoly.monomial(AQ, (0, 2 * j)))
            return out

        def up_den_rest(beta):  # prod_{i=beta+1..m-1} (q^{2i} - 1)
            out = LaurentPoly.one(AQ)
            for i in range(beta + 1, m):
                out = out * (LaurentPoly.monomial(AQ, (0, 2 * i)) - 1)
            return out

        def dn_den_rest(beta):  # prod_{j=m-beta..m-1} (1 - q^{2j})
            out = LaurentPoly.one(AQ)
            for j in range(m - beta, m):
                out = out * (1 - LaurentPoly.monomial(AQ, (0, 2 * j)))
            return out

        total = LaurentPoly.zero(AQ)
        for beta in range(m):
            term = up_num(beta) * dn_num(beta) * up_den_rest(beta) * dn_den_rest(beta)
            total = total + LaurentPoly.monomial(AQ, (0, -2 * n * beta)) * term
        num = (a_ - a_**-1) * LaurentPoly.monomial(AQ, (1, 1)) ** ((m - 1) * (n - 1)) * (1 - qi**2) * total
        den = (q_ - qi) * (1 - qi ** (2 * m))
        for i in range(1, m):
            den = den * (LaurentPoly.monomial(AQ, (0, 2 * i)) - 1)
        for j in range(1, m):
            den = den * (1 - LaurentPoly.monomial(AQ, (0, 2 * j)))
        return RationalFunc(num, den)

    out = _memoized(("texp", m, n), compute)
    if _sign == -1:
        return RationalFunc(out.num.scale(-1), out.den, reduce=False)
    return out


class TorusExplicit:
    """Explicit-sum torus polynomial: symbolic in (a,q) and callable at
    integer strand counts N (returning the exact Laurent polynomial in q)."""

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        self.symbolic = torus_explicit(m, n)

    def __call__(self, N: int) -> LaurentPoly:
        return evaluate_unnormalized(self.symbolic, N)


def homfly_torus_explicit(m: int, n: int) -> TorusExplicit:
    return TorusExplicit(m, n)


def evaluate_unnormalized(rf_aq: RationalFunc, N: int) -> LaurentPoly:
    """Specialize a = q^N: returns the exact Laurent polynomial in q."""
    num = poly_subst_monomial(rf_aq.num, {"a": (1, (0, N))})
    num = poly_collapse(num, "a")
    den = poly_collapse(rf_aq.den, "a")
    if num.is_zero:
        return num
    out = divide_exact(num, den)
    if out is None:
        raise ArithmeticError(f"specialization at N={N} is not a Laurent polynomial")
    return out


# ---- Jones polynomial ----


def jones(knot: Knot) -> LaurentPoly:
    """V(q) = H(q^2, q - 1/q) as a univariate Laurent polynomial."""
    h = _normalized(knot)
    s = max(0, -h.valuation("z"))
    # substitute v -> q^2 and z -> q - 1/q on h * z^s
    p = h.shift((0, s))
    Q = ("q",)
    zq = LaurentPoly(Q, {(1,): 1, (-1,): -1})
    levels = p.levels("z")
    acc = LaurentPoly.zero(Q)
    prev = None
    for ze in sorted(levels, reverse=True):
        if prev is not None:
            acc = acc * zq ** (prev - ze)
        lvl_v = levels[ze]  # univariate in v
        lvl_q = LaurentPoly(Q, {(2 * e,): c for (e,), c in lvl_v.terms.items()})
        acc = acc + lvl_q
        prev = ze
    if prev:
        acc = acc * zq**prev
    if s:
        out = divide_exact(acc, zq**s)
        if out is None:
            raise ArithmeticError("Jones substitution left a spurious pole")
        return out
    return acc


def jones_torus_recursion(m: int, n: int) -> LaurentPoly:
    """V of T(m,n) by the two-step recursion
    V(m,n) = q^(2(m-1)) V(m,n-2) + (1 - q^(2(m-1))) q^((m+1)(n-1)),
    anchored at n <= 2 (closures of the one- and two-crossing braids).

    Anchoring below n = 3 matters: intermediate non-coprime steps such as
    (3,3) must carry the value the recursion itself produces -- the analytic
    continuation of the knot formula -- not the multi-component closure's
    invariant, which differs and would poison every later step."""
    if m < 2 or m > 3:
        raise FamilyError("recursion bases are available for m = 2 and 3 only")
    if n < 1:
        raise FamilyError("torus requires n >= 1")
    Q = ("q",)
    if n <= 2:
        if n == 1:
            return LaurentPoly.one(Q)
        return jones(Knot(FamilyId.TORUS, (m, 2)))

    def compute():
        prev = jones_torus_recursion(m, n - 2)
        shift = LaurentPoly.monomial(Q, (2 * (m - 1),))
        spike = LaurentPoly.monomial(Q, ((m + 1) * (n - 1),))
        return shift * prev + (1 - shift) * spike

    return _memoized(("jones", m, n), compute)
