"""Generating-function transform: closed forms against the summed series,
factored renders, the factorizability census, and table ingestion."""

import warnings

import pytest

from hzknots.families import FamilyId, Knot
from hzknots.homfly import evaluate_unnormalized, homfly, unnormalized_aq
from hzknots.hz import (
    FactorizationError,
    HZError,
    closed_form,
    factorize,
    hz,
    hz_from_table,
    lambda_series_coefficients,
    torus_hz_closed,
)
from hzknots.verify import (
    _check_census,
    _check_family_printed,
    _check_series_consistency,
    _check_torus_oracle,
)


def test_torus_closed_forms_match_summed_series_quick():
    _check_torus_oracle(quick=True)


def test_family_closed_forms_match_pipeline_quick():
    _check_family_printed(quick=True)


def test_factorizability_census_quick():
    _check_census(quick=True)


def test_series_reproduces_evaluations_quick():
    _check_series_consistency(quick=True)


def test_unknot_closed_form():
    ff = closed_form(Knot(FamilyId.UNKNOT))
    assert ff.render() == "lam / ((1 - lam*q^-1)*(1 - lam*q))"
    assert ff.fully_factorized
    assert torus_hz_closed(1, 1).render() == ff.render()


def test_trefoil_closed_form_golden():
    ff = closed_form(Knot(FamilyId.TORUS, (2, 3)))
    assert ff.render() == "lam*(1 - lam*q^9) / ((1 - lam*q)*(1 - lam*q^3)*(1 - lam*q^5))"
    assert ff.fully_factorized


def test_five_two_three_parameterizations_coincide():
    """The same five-crossing knot appears in three families; every route
    must give one identical transform."""
    expected = "lam*(1 - lam*q^13) / ((1 - lam*q)*(1 - lam*q^5)*(1 - lam*q^7))"
    members = [
        Knot(FamilyId.FAM_2K1_2, (1,)),
        Knot(FamilyId.FAM_2K2_3, (0,)),
        Knot(FamilyId.PRETZEL, (0,)),
    ]
    values = set()
    for kn in members:
        ff = closed_form(kn)
        assert ff.render() == expected
        assert ff.fully_factorized
        values.add(factorize(hz(kn)).render())
    assert values == {expected}


def test_eight_twenty_golden():
    ff = closed_form(Knot(FamilyId.PRETZEL, (1,)))
    assert ff.render() == (
        "lam*(1 - lam*q^-3)*(1 - lam*q^11)"
        " / ((1 - lam*q^-1)*(1 - lam*q)*(1 - lam*q^3)*(1 - lam*q^5))"
    )
    assert ff.fully_factorized


def test_figure_eight_is_not_fully_factorized():
    ff = factorize(hz(Knot(FamilyId.FAM_2K_2, (1,))))
    assert not ff.fully_factorized
    assert "[" in ff.render()  # leftover bracketed cofactor


@pytest.mark.parametrize(
    "knot",
    [
        Knot(FamilyId.TORUS, (3, 5)),
        Knot(FamilyId.FAM_2K_2, (2,)),
        Knot(FamilyId.FAM_2K1_1_2, (2,)),
        Knot(FamilyId.APP_C, (3,)),
    ],
)
def test_factorize_round_trip(knot):
    z = hz(knot)
    ff = factorize(z)
    assert ff.to_rational() == z.value


def test_factorize_is_deterministic():
    z = hz(Knot(FamilyId.FAM_2K1_1_2, (2,)))
    assert factorize(z).render() == factorize(z).render()


def test_table_ingestion_matches_pipeline():
    kn = Knot(FamilyId.TORUS, (2, 3))
    text = homfly(kn).normalized.render()
    assert hz_from_table(text).value == hz(kn).value


def test_table_ingestion_is_order_insensitive():
    reference = hz(Knot(FamilyId.TORUS, (2, 3))).value
    shuffled = "1*v^2*z^2 + 2*v^2*z^0 - 1*v^4*z^0"
    assert hz_from_table(shuffled).value == reference


def test_table_ingestion_warns_on_odd_z_exponent():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        hz_from_table("1*v^2*z^1")
    assert any("odd z-exponent" in str(w.message) for w in caught)


def test_lambda_series_anchor_values():
    kn = Knot(FamilyId.TORUS, (2, 3))
    coeffs = lambda_series_coefficients(hz(kn), 4)
    rf = unnormalized_aq(kn)
    assert coeffs[0].is_zero
    for n in (1, 2, 3):
        assert coeffs[n] == evaluate_unnormalized(rf, n)


def test_error_hierarchy():
    assert issubclass(FactorizationError, HZError)
    assert issubclass(HZError, ArithmeticError)
