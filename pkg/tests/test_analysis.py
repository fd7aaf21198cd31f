"""Expansion coefficients at q -> 1, residue identities in lam, and the
functional-equation symmetry battery."""

from fractions import Fraction

import pytest

from hzknots.analysis import (
    a2_closed_form,
    expand_at_1,
    lambda2_partial_residue_check,
    lambda_residues,
    q_pole_structure_check,
    symmetry_checks,
)
from hzknots.families import FamilyId, Knot
from hzknots.hz import closed_form, hz
from hzknots.verify import (
    _check_a2_identities,
    _check_lambda2_split,
    _check_q_pole_structure,
    _check_residue_identities,
    _check_symmetries,
)


def test_a2_identities_quick():
    _check_a2_identities(quick=True)


def test_residue_identities_quick():
    _check_residue_identities(quick=True)


def test_lambda2_split_quick():
    _check_lambda2_split(quick=True)


def test_symmetries_quick():
    _check_symmetries(quick=True)


def test_q_pole_structure_quick():
    _check_q_pole_structure(quick=True)


@pytest.mark.parametrize(
    "knot,value",
    [
        (Knot(FamilyId.UNKNOT), Fraction(-1)),
        (Knot(FamilyId.FAM_2K_2, (1,)), Fraction(5, 3)),
        (Knot(FamilyId.PRETZEL, (0,)), Fraction(13, 35)),
        (Knot(FamilyId.TORUS, (2, 3)), Fraction(3, 5)),
    ],
)
def test_leading_coefficient_anchors(knot, value):
    rep = expand_at_1(hz(knot))
    assert rep.a_minus_2 == value
    assert rep.odd_coeff_max_abs == 0


def test_closed_form_coefficient_matches_expansion():
    for fam, ks in (
        (FamilyId.FAM_2K_2, (1, 2, 3)),
        (FamilyId.FAM_2K1_2, (1, 2, 3)),
        (FamilyId.FAM_2K2_3, (0, 1, 2)),
        (FamilyId.PRETZEL, (0, 1, 2)),
        (FamilyId.APP_C, (1, 2)),
    ):
        for k in ks:
            kn = Knot(fam, (k,))
            assert expand_at_1(hz(kn)).a_minus_2 == a2_closed_form(kn), (fam, k)


def test_expansion_window_is_even():
    rep = expand_at_1(hz(Knot(FamilyId.FAM_2K1_2, (2,))), order=11)
    assert all(e % 2 == 0 for e in rep.coeffs)
    assert min(rep.coeffs) == -2


def test_residue_report_torus_2_5():
    rr = lambda_residues(hz(Knot(FamilyId.TORUS, (2, 5))))
    assert [(loc.render(), order) for loc, order, _ in rr.poles] == [
        ("1*q^-3", 1),
        ("1*q^-5", 1),
        ("1*q^-7", 1),
    ]
    assert rr.finite_sum.render() == "1*q^0"
    assert rr.infinity_residue.render() == "-1*q^0"


def test_pole_count_matches_denominator_factors():
    ff = closed_form(Knot(FamilyId.PRETZEL, (1,)))
    rr = lambda_residues(hz(Knot(FamilyId.PRETZEL, (1,))))
    assert len(rr.poles) == sum(mult for _, _, mult in ff.den_factors)


def test_lambda2_partial_residue_split():
    for fam, k in (
        (FamilyId.PRETZEL, 0),
        (FamilyId.PRETZEL, 3),
        (FamilyId.FAM_2K2_3, 2),
    ):
        assert lambda2_partial_residue_check(Knot(fam, (k,)))


def test_symmetry_flags_with_specialization():
    sr = symmetry_checks(hz(Knot(FamilyId.FAM_2K1_2, (2,))))
    assert sr.inversion and sr.negated_inversion and sr.at_q_one
    assert sr.specialization is True
    assert sr.q_infinity_inverse_lam and sr.q_zero_lam
    assert sr.core_pass


def test_symmetry_specialization_absent_elsewhere():
    sr = symmetry_checks(hz(Knot(FamilyId.TORUS, (2, 3))))
    assert sr.specialization is None
    assert sr.core_pass


def test_q_limit_boundary():
    """The large/small q limits hold only from the third member on in the
    four-strand twisted family; before that the transform genuinely
    diverges from 1/lam."""
    for k, expected in ((1, False), (2, False), (3, True), (4, True)):
        sr = symmetry_checks(hz(Knot(FamilyId.FAM_2K1_1_2, (k,))))
        assert (sr.q_infinity_inverse_lam and sr.q_zero_lam) is expected, k
        assert sr.core_pass


def test_q_pole_structure_single_example():
    assert q_pole_structure_check(hz(Knot(FamilyId.TORUS, (3, 4))))


def test_report_json_keys():
    kn = Knot(FamilyId.PRETZEL, (0,))
    exp = expand_at_1(hz(kn)).to_json()
    assert set(exp) == {"family", "n_or_k", "coeffs", "odd_coeff_max_abs"}
    assert exp["coeffs"]["-2"] == "13/35"
    res = lambda_residues(hz(kn)).to_json()
    assert set(res) == {"poles", "finite_sum", "infinity_residue"}
    sym = symmetry_checks(hz(kn)).to_json()
    assert set(sym) == {
        "inversion",
        "negated_inversion",
        "at_q_one",
        "specialization",
        "q_infinity_inverse_lam",
        "q_zero_lam",
    }
