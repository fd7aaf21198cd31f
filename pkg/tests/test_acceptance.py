"""End-to-end acceptance battery. Each test covers one numbered criterion
at full parameter ranges and prints a single PASS/FAIL line with timing."""

from time import perf_counter

from hzknots.verify import (
    _check_a2_identities,
    _check_census,
    _check_family_endpoints,
    _check_family_printed,
    _check_jones_cross,
    _check_lambda2_split,
    _check_negative_real_pair,
    _check_pretzel_circle,
    _check_real_pair_threshold,
    _check_residue_identities,
    _check_series_consistency,
    _check_symmetries,
    _check_torus_circle,
    _check_torus_oracle,
)


def _report(number, description, checks, budget=None):
    start = perf_counter()
    details = []
    try:
        for check in checks:
            details.append(check(quick=False))
    except AssertionError as e:
        print(f"CRITERION {number} FAIL: {description} ({e})")
        raise
    elapsed = perf_counter() - start
    detail = "; ".join(d for d in details if d)
    print(f"CRITERION {number} PASS: {description} ({detail}; {elapsed:.2f}s)")
    if budget is not None:
        assert elapsed < budget, (
            f"criterion {number} exceeded its {budget}s budget: {elapsed:.2f}s"
        )


def test_criterion_1_torus_transforms_match_summed_series():
    _report(
        1,
        "torus closed forms equal the summed series, coprime m<=4, n<=9",
        [_check_torus_oracle],
        budget=30.0,
    )


def test_criterion_2_family_closed_forms_match_pipeline():
    _report(
        2,
        "printed family transforms equal the pipeline, k through 12",
        [_check_family_printed],
        budget=120.0,
    )


def test_criterion_3_factorizability_census():
    _report(
        3,
        "full factorization exactly on the torus and odd-pretzel members",
        [_check_census],
    )


def test_criterion_4_expansion_coefficients():
    _report(
        4,
        "leading expansion coefficients match closed forms; odd terms vanish",
        [_check_a2_identities],
    )


def test_criterion_5_residue_identities():
    _report(
        5,
        "lam-residues sum to one, minus one at infinity, split checks pass",
        [_check_residue_identities, _check_lambda2_split],
    )


def test_criterion_6_functional_symmetries():
    _report(
        6,
        "inversion and negated-inversion symmetries with specializations",
        [_check_symmetries],
    )


def test_criterion_7_zero_locus():
    _report(
        7,
        "256-bit root finding: unit-circle location and pair structure",
        [
            _check_torus_circle,
            _check_pretzel_circle,
            _check_family_endpoints,
            _check_negative_real_pair,
            _check_real_pair_threshold,
        ],
        budget=300.0,
    )


def test_criterion_8_jones_cross_check():
    _report(
        8,
        "Jones specialization agrees with its two-variable recursion",
        [_check_jones_cross],
    )


def test_criterion_9_series_reproduces_evaluations():
    _report(
        9,
        "lam-series coefficients reproduce the evaluated invariants, N 0..5",
        [_check_series_consistency],
    )
