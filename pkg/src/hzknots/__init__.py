"""Exact computer algebra for knot-family invariants: skein polynomials in
(v, z) and (a, q), generating-function transforms in (q, lam) with basis
factorization over (1 - lam*q^k) / (1 + lam*q^k), exact expansion and residue
reports, and certified high-precision root sets of the associated zero
polynomials.

All arithmetic is exact (arbitrary-precision rationals) except root finding,
which carries per-root error certificates at a configurable bit precision.
"""

from .algebra import (
    LaurentPoly,
    ParseError,
    RationalFunc,
    XSeries,
    parse_poly,
    rat,
    rat_str,
)
from .analysis import (
    ExpansionReport,
    ResidueReport,
    SymmetryReport,
    a2_closed_form,
    expand_at_1,
    lambda2_partial_residue_check,
    lambda_residues,
    q_pole_structure_check,
    symmetry_checks,
)
from .families import (
    FamilyError,
    FamilyId,
    Knot,
    crossing_number,
    format_family_id,
    in_printed_range,
    k_min,
    parse_family_id,
)
from .homfly import (
    HomflyPair,
    evaluate_unnormalized,
    homfly,
    jones,
    jones_torus_recursion,
    set_sign_convention,
    sign_convention,
    torus_explicit,
    unnormalized_aq,
)
from .hz import (
    FactoredForm,
    FactorizationError,
    HZError,
    HZFunction,
    closed_form,
    factorize,
    family_hz_closed,
    hz,
    hz_from_table,
    hz_transform,
    lambda_series_coefficients,
    torus_hz_closed,
)
from .verify import SuiteReport, available_suites, run_all, run_suite
from .zeros import (
    ConvergenceError,
    RootRecord,
    ZeroSet,
    classify,
    emit_plot,
    find_roots,
    zero_polynomial,
    zero_set,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # algebra
    "LaurentPoly",
    "RationalFunc",
    "XSeries",
    "ParseError",
    "parse_poly",
    "rat",
    "rat_str",
    # families
    "FamilyError",
    "FamilyId",
    "Knot",
    "crossing_number",
    "format_family_id",
    "in_printed_range",
    "k_min",
    "parse_family_id",
    # skein polynomials
    "HomflyPair",
    "homfly",
    "jones",
    "jones_torus_recursion",
    "torus_explicit",
    "unnormalized_aq",
    "evaluate_unnormalized",
    "set_sign_convention",
    "sign_convention",
    # transforms
    "HZError",
    "FactorizationError",
    "HZFunction",
    "FactoredForm",
    "hz",
    "hz_transform",
    "hz_from_table",
    "closed_form",
    "torus_hz_closed",
    "family_hz_closed",
    "factorize",
    "lambda_series_coefficients",
    # analysis
    "ExpansionReport",
    "ResidueReport",
    "SymmetryReport",
    "expand_at_1",
    "a2_closed_form",
    "lambda_residues",
    "lambda2_partial_residue_check",
    "symmetry_checks",
    "q_pole_structure_check",
    # zeros
    "ConvergenceError",
    "RootRecord",
    "ZeroSet",
    "zero_polynomial",
    "find_roots",
    "classify",
    "zero_set",
    "emit_plot",
    # verification
    "SuiteReport",
    "available_suites",
    "run_suite",
    "run_all",
]
