"""Link-invariant goldens, the crossing-switch relation, the explicit
closed form against the recursion, and the Jones specialization."""

from math import gcd

import pytest

from hzknots.families import FamilyError, FamilyId, Knot
from hzknots.homfly import (
    homfly,
    jones,
    jones_torus_recursion,
    set_sign_convention,
    torus2,
    torus_explicit,
    unnormalized_aq,
)
from hzknots.laurent import LaurentPoly

VZ = ("v", "z")
V = LaurentPoly.var("v", VZ)
Z = LaurentPoly.var("z", VZ)
VINV = LaurentPoly.monomial(VZ, (-1, 0))


def _knot(family, *params):
    return Knot(family, tuple(params))


def test_goldens_normalized():
    assert homfly(_knot(FamilyId.UNKNOT)).normalized == LaurentPoly.one(VZ)
    assert (
        homfly(_knot(FamilyId.TORUS, 2, 3)).normalized.render()
        == "-1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2"
    )
    assert (
        homfly(_knot(FamilyId.TORUS, 2, 5)).normalized.render()
        == "-2*v^6*z^0 - 1*v^6*z^2 + 3*v^4*z^0 + 4*v^4*z^2 + 1*v^4*z^4"
    )
    assert (
        homfly(_knot(FamilyId.FAM_2K_2, 1)).normalized.render()
        == "1*v^2*z^0 - 1*v^0*z^0 - 1*v^0*z^2 + 1*v^-2*z^0"
    )


def test_unknot_unnormalized_is_circle_factor():
    pair = homfly(_knot(FamilyId.UNKNOT))
    assert pair.unnormalized * Z == V - VINV


def test_crossing_switch_relation():
    for n in range(2, 16):
        lhs = VINV * torus2(n + 1) - V * torus2(n - 1)
        assert lhs == Z * torus2(n)


def test_explicit_matches_recursive():
    for m in (2, 3):
        for n in range(m + 1, 11):
            if gcd(m, n) != 1:
                continue
            kn = _knot(FamilyId.TORUS, m, n)
            assert unnormalized_aq(kn) == torus_explicit(m, n)


def test_transpose_symmetry():
    a = homfly(_knot(FamilyId.TORUS, 2, 3)).normalized
    b = homfly(_knot(FamilyId.TORUS, 3, 2)).normalized
    assert a == b
    for m, n in ((3, 4), (3, 5), (4, 5), (2, 7), (5, 7)):
        assert torus_explicit(m, n) == torus_explicit(n, m)


def test_jones_goldens():
    q = ("q",)
    assert jones(_knot(FamilyId.UNKNOT)) == LaurentPoly.one(q)
    assert jones(_knot(FamilyId.TORUS, 2, 3)) == LaurentPoly(
        q, {(8,): -1, (6,): 1, (2,): 1}
    )
    assert jones(_knot(FamilyId.FAM_2K_2, 1)) == LaurentPoly(
        q, {(4,): 1, (2,): -1, (0,): 1, (-2,): -1, (-4,): 1}
    )


def test_jones_recursion_agrees():
    for m in (2, 3):
        for n in range(m + 1, 11):
            if gcd(m, n) != 1:
                continue
            kn = _knot(FamilyId.TORUS, (m, n)[0], (m, n)[1])
            assert jones(kn) == jones_torus_recursion(m, n), (m, n)


def test_sign_convention_flips_unnormalized_only():
    kn = _knot(FamilyId.TORUS, 2, 3)
    base = homfly(kn)
    set_sign_convention(-1)
    try:
        flipped = homfly(kn)
        assert flipped.normalized == base.normalized
        assert flipped.unnormalized == -base.unnormalized
    finally:
        set_sign_convention(1)
    assert homfly(kn).unnormalized == base.unnormalized


def test_connected_sum_multiplies():
    a = _knot(FamilyId.TORUS, 2, 3)
    b = _knot(FamilyId.FAM_2K_2, 1)
    conn = Knot(FamilyId.COMPOSE_SUM, children=(a, b))
    assert homfly(conn).normalized == homfly(a).normalized * homfly(b).normalized


def test_disjoint_union_circle_factor():
    a = _knot(FamilyId.TORUS, 2, 3)
    b = _knot(FamilyId.TORUS, 2, 5)
    disj = Knot(FamilyId.COMPOSE_DISJOINT, children=(a, b))
    expected = homfly(a).normalized * homfly(b).normalized * (VINV - V)
    assert homfly(disj).normalized * Z == expected


@pytest.mark.parametrize(
    "family,params",
    [
        (FamilyId.TORUS, (0, 5)),
        (FamilyId.TORUS, (2,)),
        (FamilyId.FAM_2K_2, ()),
        (FamilyId.PRETZEL, (-1,)),
        (FamilyId.APP_A, (0,)),
    ],
)
def test_invalid_parameters_rejected(family, params):
    with pytest.raises(FamilyError):
        homfly(Knot(family, params))
