"""Zero locus of a transform at lam = 1.

The pipeline is exact up to the last step: the specialized numerator is reduced
against the denominator by cyclotomic bookkeeping (the denominator is a product
of basis factors, so its q-specialization splits into cyclotomic polynomials),
normalized to a primitive integer polynomial, and only then handed to a
multiprecision simultaneous root finder (Aberth-Ehrlich).  Classification marks
unit-circle roots, pairs off-circle roots with their conformal partners
(reciprocal modulus, same phase), and checks the endpoint identity
|leading| = |trailing| that forces the product of root moduli to be 1.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
import mpmath
import numpy as np

from .hz import FactoredForm, HZError, HZFunction, factorize
from .laurent import LaurentPoly, divide_exact, poly_gcd
from .ratfunc import RationalFunc, poly_diff, poly_eval_var

__all__ = [
    "ConvergenceError",
    "RootRecord",
    "RootClass",
    "ZeroSet",
    "zero_polynomial",
    "find_roots",
    "classify",
    "zero_set",
    "emit_plot",
]

_Q1 = ("q",)
_QL = ("q", "lam")


class ConvergenceError(ArithmeticError):
    """Root iteration failed to reach the requested accuracy within the cap."""


# ---------------------------------------------------------------------------
# exact part: the zero polynomial
# ---------------------------------------------------------------------------


def _value_of(z) -> RationalFunc:
    if isinstance(z, HZFunction):
        return z.value
    if isinstance(z, FactoredForm):
        return z.to_rational()
    return z


@lru_cache(maxsize=None)
def _cyclotomic(d: int) -> LaurentPoly:
    """d-th cyclotomic polynomial in q (monic, integer coefficients)."""
    if d == 1:
        return LaurentPoly(_Q1, {(1,): 1, (0,): -1})
    num = LaurentPoly(_Q1, {(d,): 1, (0,): -1})
    for e in range(1, d):
        if d % e == 0:
            num = divide_exact(num, _cyclotomic(e))
    return num


def _divisors(a: int) -> list:
    out = [d for d in range(1, int(math.isqrt(a)) + 1) if a % d == 0]
    out += [a // d for d in reversed(out) if d * d != a]
    return out


def _den_cyclotomic_counts(den_factors) -> Counter:
    """Multiplicities of each cyclotomic in the lam = 1 denominator.

    A factor (1 - s*lam*q^k) specializes to (1 - s*q^k); for k < 0 this is a
    unit monomial times (1 - s*q^|k|).  With a = |k|:
      s = +1: (1 - q^a) = prod of Phi_d over d | a;
      s = -1: (1 + q^a) = prod of Phi_d over d | 2a with d not dividing a.
    """
    counts: Counter = Counter()
    for s, k, m in den_factors:
        if k == 0:
            if s == 1:
                raise HZError("denominator vanishes identically at lam = 1")
            continue  # (1 + lam) -> constant 2: no q-dependence
        a = abs(k)
        if s == 1:
            ds = _divisors(a)
        else:
            ds = [d for d in _divisors(2 * a) if a % d != 0]
        for d in ds:
            counts[d] += m
    return counts


def _div_monic(a: list, b: list) -> list:
    """Quotient of dense integer polynomials (ascending), monic divisor; the
    remainder must vanish."""
    n, m = len(a) - 1, len(b) - 1
    rem = list(a)
    quot = [0] * (n - m + 1)
    for i in range(n - m, -1, -1):
        f = rem[i + m]
        if f:
            quot[i] = f
            for j in range(m + 1):
                rem[i + j] -= f * b[j]
    if any(rem):
        raise ArithmeticError("inexact division")
    return quot


def _fold_divisible(a: list, d: int, phi: list) -> bool:
    """Whether Phi_d divides the dense integer polynomial a.  Exponents are
    first folded mod d (reduction modulo q^d - 1, a multiple of Phi_d), so the
    divisibility test runs on a residue of degree < d."""
    fold = [0] * d
    for e, c in enumerate(a):
        if c:
            fold[e % d] += c
    if d == 1:
        return fold[0] == 0
    m = len(phi) - 1
    for i in range(d - 1 - m, -1, -1):
        f = fold[i + m]
        if f:
            for j in range(m + 1):
                fold[i + j] -= f * phi[j]
    return not any(fold)


def _primitive(p: LaurentPoly) -> LaurentPoly:
    """Shift to valuation 0 and scale to a primitive integer polynomial with
    positive constant term (roots away from 0 are unchanged)."""
    if p.is_zero:
        return p
    v = p.valuation("q")
    if v:
        p = p.shift((-v,))
    den_lcm = 1
    for c in p.terms.values():
        den_lcm = math.lcm(den_lcm, int(c.denominator))
    if den_lcm != 1:
        p = p.scale(den_lcm)
    num_gcd = math.gcd(*(int(c.numerator) for c in p.terms.values()))
    if num_gcd > 1:
        p = LaurentPoly._raw(p.variables, {e: c / num_gcd for e, c in p.terms.items()})
    if p.terms[(0,)] < 0:
        p = p.scale(-1)
    return p


def zero_polynomial(z) -> LaurentPoly:
    """Numerator of Z(q, 1) with all denominator factors cancelled.

    Specializes lam = 1, removes the gcd with the denominator (zeros of Z only,
    poles excluded), and returns an ordinary polynomial in q with nonzero
    constant term, primitive integer coefficients, and positive constant term.
    """
    rf = _value_of(z)
    if isinstance(z, FactoredForm):
        den_factors = z.den_factors
    else:
        den_factors = factorize(rf).den_factors
    num = rf.num if rf.num.variables == _QL else rf.num.embed(_QL)
    nq = poly_eval_var(num, "lam", 1)
    if nq.is_zero:
        raise HZError("transform specializes to 0 identically at lam = 1")
    dense = _dense_int_coeffs(_primitive(nq))
    counts = _den_cyclotomic_counts(den_factors)
    for d in sorted(counts):
        phi = _dense_int_coeffs(_cyclotomic(d))
        for _ in range(counts[d]):
            if not _fold_divisible(dense, d, phi):
                break
            dense = _div_monic(dense, phi)
    poly = LaurentPoly(_Q1, {(e,): c for e, c in enumerate(dense) if c})
    return _primitive(poly)


# ---------------------------------------------------------------------------
# numeric part: simultaneous root finding
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootRecord:
    """One distinct root: multiprecision value, certified error radius
    (a disc of this radius around value contains a true root), the residual
    |p(value)|, and the exact multiplicity."""

    value: object
    error_radius: object
    residual: object
    multiplicity: int = 1


def _dense_int_coeffs(p: LaurentPoly) -> list:
    n = p.degree("q")
    out = [0] * (n + 1)
    for e, c in p.terms.items():
        if int(c.denominator) != 1:
            raise ValueError("expected integer coefficients")
        out[e[0]] = int(c.numerator)
    return out


def _gf_squarefree(coeffs: list) -> bool:
    """True if the polynomial is certainly square-free (gcd(p, p') = 1 over
    some prime field; the modular gcd degree can only exceed the rational one,
    so degree 0 mod p is conclusive)."""
    for prime in (2305843009213693951, 2147483647, 999999937):
        if coeffs[-1] % prime == 0:
            continue
        a = [c % prime for c in coeffs]
        b = [(i * c) % prime for i, c in enumerate(coeffs)][1:]
        while b and not b[-1]:
            b.pop()
        if not b:
            continue
        while b:
            inv = pow(b[-1], prime - 2, prime)
            while len(a) >= len(b):
                f = (a[-1] * inv) % prime
                off = len(a) - len(b)
                if f:
                    for i, bc in enumerate(b):
                        a[off + i] = (a[off + i] - f * bc) % prime
                a.pop()
                while a and not a[-1]:
                    a.pop()
                if not a:
                    break
            a, b = b, a
        return len(a) == 1
    return False


def _squarefree_parts(p: LaurentPoly) -> list:
    """Yun decomposition [(factor, multiplicity)] with p = unit * prod f^m."""
    coeffs = _dense_int_coeffs(p)
    if _gf_squarefree(coeffs):
        return [(p, 1)]
    var = p.variables[0]

    def span(f):
        return f.degree(var) - f.valuation(var)

    dp = poly_diff(p, var)
    g = poly_gcd(p, dp)
    if span(g) == 0:
        return [(p, 1)]
    out = []
    c = divide_exact(p, g)
    d = divide_exact(dp, g) - poly_diff(c, var)
    i = 1
    while span(c) > 0:
        a = poly_gcd(c, d)
        if span(a) > 0:
            out.append((_primitive(a), i))
            c = divide_exact(c, a)
            d = divide_exact(d, a) - poly_diff(c, var)
        else:
            d = d - poly_diff(c, var)
        i += 1
    return out


def _aberth_f64(coeffs: list, z0: np.ndarray, cap: int) -> tuple:
    """Vectorized double-precision Aberth sweep; returns (points, iterations)."""
    c = np.array([float(x) for x in coeffs], dtype=np.complex128)
    dc = c[1:] * np.arange(1, len(c))
    crev, dcrev = c[::-1], dc[::-1]
    z = z0.copy()
    used = 0
    for _ in range(cap):
        used += 1
        pz = np.polyval(crev, z)
        dpz = np.polyval(dcrev, z)
        with np.errstate(all="ignore"):
            w = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = (1.0 / diff).sum(axis=1)
            corr = w / (1.0 - w * s)
        corr = np.where(np.isfinite(corr), corr, 0.0)
        z = z - corr
        if not np.all(np.isfinite(z)):
            z = np.where(np.isfinite(z), z, z0)
        if np.max(np.abs(corr)) < 1e-13:
            break
    return z, used


_GOLDEN = 0.6180339887498949


def _initial_circle(coeffs: list, n: int) -> np.ndarray:
    r = math.exp((math.log(abs(coeffs[0])) - math.log(abs(coeffs[-1]))) / n)
    angles = [2.0 * math.pi * (((j + 1) * _GOLDEN) % 1.0) for j in range(n)]
    return np.array([r * complex(math.cos(t), math.sin(t)) for t in angles])


def find_roots(p: LaurentPoly, precision_bits: int = 256, *, max_iterations: int = 500):
    """All complex roots of a univariate polynomial by Aberth-Ehrlich iteration.

    The polynomial is first split into square-free parts (exact), so the
    iteration only ever sees simple roots; multiple roots are reported once
    with their exact multiplicity.  Iteration starts from a perturbed circle
    whose radius is the geometric mean of the root moduli, runs a fast
    double-precision sweep, then refines at precision_bits + 32 until every
    correction is below 2^(-precision_bits/2).  Raises ConvergenceError if the
    total iteration count exceeds max_iterations.
    """
    if len(p.variables) != 1:
        raise ValueError("find_roots expects a univariate polynomial")
    var = p.variables[0]
    if p.is_zero or p.degree(var) < 1:
        raise ValueError("degree must be at least 1")
    if p.valuation(var) != 0:
        raise ValueError("nonzero constant term required")
    p = _primitive(p)
    budget = max_iterations
    records = []
    for part, mult in _squarefree_parts(p):
        roots, used = _aberth_part(part, p, mult, precision_bits, budget)
        budget -= used
        records.extend(roots)
    records.sort(key=lambda r: (float(r.value.real), float(r.value.imag)))
    return tuple(records)


def _g_horner(coeffs_ascending: list, z):
    acc = gmpy2.mpc(0)
    for c in reversed(coeffs_ascending):
        acc = acc * z + c
    return acc


def _mp_from_mpfr(x, wp: int):
    """Exact conversion of a gmpy2 mpfr to an mpmath mpf."""
    if gmpy2.is_nan(x):
        return mpmath.nan
    if gmpy2.is_infinite(x):
        return mpmath.inf if x > 0 else -mpmath.inf
    if x == 0:
        return mpmath.mpf(0)
    man, exp = x.as_mantissa_exp()
    with mpmath.workprec(wp + 8):
        return mpmath.ldexp(mpmath.mpf(int(man)), int(exp))


def _mp_from_mpc(z, wp: int):
    re = _mp_from_mpfr(z.real, wp)
    im = _mp_from_mpfr(z.imag, wp)
    with mpmath.workprec(wp + 8):
        return mpmath.mpc(re, im)


def _aberth_part(part: LaurentPoly, full: LaurentPoly, mult: int, precision_bits: int, budget: int):
    coeffs = _dense_int_coeffs(part)
    n = len(coeffs) - 1
    z0 = _initial_circle(coeffs, n)
    used = 0
    if max(abs(x) for x in coeffs) < 1e300:
        f64_cap = min(300, max(1, budget - 8))
        z0, used = _aberth_f64(coeffs, z0, f64_cap)
    wp = precision_bits + 32
    saved_ctx = gmpy2.get_context()
    gmpy2.set_context(gmpy2.context(precision=wp))
    try:
        cz = [gmpy2.mpz(x) for x in coeffs]
        dz = [gmpy2.mpz(i * x) for i, x in enumerate(coeffs)][1:]
        zs = [gmpy2.mpc(complex(v)) for v in z0]
        threshold = gmpy2.mpfr(2) ** (-(precision_bits // 2))
        converged = False
        while used < budget:
            used += 1
            # pairwise repulsion at double precision: the roots are separated
            # far above 1e-13, and once corrections are small the repulsion
            # term only perturbs them at second order
            zf = np.array([complex(z) for z in zs])
            diff = zf[:, None] - zf[None, :]
            np.fill_diagonal(diff, np.inf)
            with np.errstate(all="ignore"):
                sarr = (1.0 / diff).sum(axis=1)
            sarr = np.where(np.isfinite(sarr), sarr, 0.0)
            corr_max = gmpy2.mpfr(0)
            for j in range(n):
                zj = zs[j]
                pz = _g_horner(cz, zj)
                if pz == 0:
                    continue
                dpz = _g_horner(dz, zj)
                if dpz == 0:
                    corr = gmpy2.mpc(threshold)
                else:
                    w = pz / dpz
                    denom = 1 - w * gmpy2.mpc(complex(sarr[j]))
                    corr = w / denom if denom != 0 else w
                zs[j] = zj - corr
                ac = abs(corr)
                if ac > corr_max:
                    corr_max = ac
            if corr_max < threshold:
                converged = True
                break
        if not converged:
            raise ConvergenceError(
                f"no convergence within {budget} iterations at {precision_bits} bits"
            )
        fullz = [gmpy2.mpz(x) for x in _dense_int_coeffs(full)]
        out = []
        for zj in zs:
            dpz = _g_horner(dz, zj)
            npz = _g_horner(cz, zj)
            radius = gmpy2.inf() if dpz == 0 else n * abs(npz / dpz)
            out.append(
                RootRecord(
                    value=_mp_from_mpc(zj, wp),
                    error_radius=_mp_from_mpfr(radius, wp),
                    residual=_mp_from_mpfr(abs(_g_horner(fullz, zj)), wp),
                    multiplicity=mult,
                )
            )
    finally:
        gmpy2.set_context(saved_ctx)
    return out, used


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootClass:
    """Classification of one root: kind is "on_circle", "conformal_pair" or
    "unclassified"; partner is the paired root's index for conformal pairs;
    real_negative marks roots on the negative real axis."""

    kind: str
    partner: int | None
    real_negative: bool

    @property
    def label(self) -> str:
        if self.real_negative and self.kind == "conformal_pair":
            return "real_negative"
        return self.kind


@dataclass(frozen=True)
class ZeroSet:
    """Roots of the zero polynomial with per-root classification, the product
    of root moduli, and the exact endpoint check |leading| = |trailing| (which
    forces that product to be exactly 1)."""

    roots: tuple
    classes: tuple
    product_of_moduli: object
    exact_endpoint_check: bool
    polynomial: LaurentPoly | None = None
    precision_bits: int = 256

    @property
    def count(self) -> int:
        return sum(r.multiplicity for r in self.roots)

    @property
    def fully_classified(self) -> bool:
        return all(c.kind != "unclassified" for c in self.classes)

    def real_negative_pairs(self) -> tuple:
        out = []
        for i, c in enumerate(self.classes):
            if (
                c.kind == "conformal_pair"
                and c.real_negative
                and c.partner is not None
                and i < c.partner
                and self.classes[c.partner].real_negative
            ):
                out.append((i, c.partner))
        return tuple(out)

    def to_json(self) -> dict:
        roots = []
        for r, c in zip(self.roots, self.classes):
            roots.append(
                {
                    "re": mpmath.nstr(r.value.real, 25),
                    "im": mpmath.nstr(r.value.imag, 25),
                    "modulus": mpmath.nstr(abs(r.value), 25),
                    "class": c.label,
                    "partner": c.partner,
                    "real_negative": c.real_negative,
                    "multiplicity": r.multiplicity,
                    "residual": mpmath.nstr(r.residual, 8),
                    "error_radius": mpmath.nstr(r.error_radius, 8),
                }
            )
        return {
            "count": self.count,
            "roots": roots,
            "product_of_moduli": mpmath.nstr(self.product_of_moduli, 25),
            "exact_endpoint_check": self.exact_endpoint_check,
            "fully_classified": self.fully_classified,
            "precision_bits": self.precision_bits,
        }


def classify(
    roots,
    polynomial: LaurentPoly | None = None,
    *,
    on_circle_tol: float = 1e-10,
    pair_tol: float = 1e-8,
    precision_bits: int = 256,
) -> ZeroSet:
    """Build a ZeroSet: unit-circle roots, conformal pairs among the rest,
    negative-real flags, product of moduli, and the exact endpoint check.

    An off-circle root with no partner within pair_tol stays "unclassified"
    (reported via fully_classified; not an error).
    """
    roots = tuple(roots)
    n = len(roots)
    with mpmath.workprec(precision_bits + 32):
        mods = [abs(r.value) for r in roots]
        kinds = ["unclassified"] * n
        partners: list = [None] * n
        real_neg = [False] * n
        for i, r in enumerate(roots):
            if abs(mods[i] - 1) < on_circle_tol:
                kinds[i] = "on_circle"
            if abs(r.value.imag) < on_circle_tol and r.value.real < 0:
                real_neg[i] = True
        for i in range(n):
            if kinds[i] != "unclassified":
                continue
            target = 1 / mpmath.conj(roots[i].value)
            best, best_d = None, None
            for j in range(n):
                if j == i or kinds[j] != "unclassified":
                    continue
                d = abs(roots[j].value - target)
                if best_d is None or d < best_d:
                    best, best_d = j, d
            if best is not None and best_d < pair_tol:
                kinds[i] = kinds[best] = "conformal_pair"
                partners[i], partners[best] = best, i
        product = mpmath.mpf(1)
        for r, m in zip(roots, mods):
            product *= m**r.multiplicity
        endpoint = False
        if polynomial is not None and not polynomial.is_zero:
            cs = polynomial.terms
            var_deg = polynomial.degree(polynomial.variables[0])
            var_val = polynomial.valuation(polynomial.variables[0])
            endpoint = abs(cs[(var_deg,)]) == abs(cs[(var_val,)])
        classes = tuple(
            RootClass(kind=k, partner=p, real_negative=rn)
            for k, p, rn in zip(kinds, partners, real_neg)
        )
        return ZeroSet(
            roots=roots,
            classes=classes,
            product_of_moduli=+product,
            exact_endpoint_check=endpoint,
            polynomial=polynomial,
            precision_bits=precision_bits,
        )


def zero_set(
    z,
    precision_bits: int = 256,
    *,
    on_circle_tol: float = 1e-10,
    pair_tol: float = 1e-8,
    max_iterations: int = 500,
) -> ZeroSet:
    """zero_polynomial -> find_roots -> classify, as one call."""
    poly = zero_polynomial(z)
    if poly.degree("q") < 1:
        return ZeroSet(
            roots=(),
            classes=(),
            product_of_moduli=mpmath.mpf(1),
            exact_endpoint_check=True,
            polynomial=poly,
            precision_bits=precision_bits,
        )
    roots = find_roots(poly, precision_bits, max_iterations=max_iterations)
    return classify(
        roots,
        poly,
        on_circle_tol=on_circle_tol,
        pair_tol=pair_tol,
        precision_bits=precision_bits,
    )


# ---------------------------------------------------------------------------
# plot artifacts
# ---------------------------------------------------------------------------

_CLASS_COLORS = {
    "on_circle": "#1f77b4",
    "conformal_pair": "#ff7f0e",
    "real_negative": "#d62728",
    "unclassified": "#7f7f7f",
}


def _fmt12(x) -> str:
    v = float(x)
    if v == 0:
        v = 0.0
    return f"{v:.12f}"


def emit_plot(zset: ZeroSet, format: str = "csv") -> bytes:
    """Deterministic artifact: CSV (re,im,modulus,class; one row per root
    counted with multiplicity) or a 600x600 SVG scatter with the unit circle
    drawn at radius 250 around the center."""
    if format == "csv":
        lines = ["re,im,modulus,class"]
        for r, c in zip(zset.roots, zset.classes):
            row = ",".join(
                (_fmt12(r.value.real), _fmt12(r.value.imag), _fmt12(abs(r.value)), c.label)
            )
            lines.extend([row] * r.multiplicity)
        return ("\n".join(lines) + "\n").encode("ascii")
    if format == "svg":
        parts = [
            '<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" '
            'viewBox="0 0 600 600">',
            '<rect width="600" height="600" fill="white"/>',
            '<line x1="0" y1="300" x2="600" y2="300" stroke="#dddddd" stroke-width="1"/>',
            '<line x1="300" y1="0" x2="300" y2="600" stroke="#dddddd" stroke-width="1"/>',
            '<circle cx="300" cy="300" r="250" fill="none" stroke="#888888" stroke-width="1"/>',
        ]
        for r, c in zip(zset.roots, zset.classes):
            cx = 300.0 + 250.0 * float(r.value.real)
            cy = 300.0 - 250.0 * float(r.value.imag)
            color = _CLASS_COLORS[c.label]
            parts.append(
                f'<circle cx="{_fmt12(cx)}" cy="{_fmt12(cy)}" r="3" fill="{color}"/>'
            )
        parts.append("</svg>")
        return ("\n".join(parts) + "\n").encode("ascii")
    raise ValueError(f"unknown plot format: {format!r}")
