"""High-precision root finding: polynomial extraction, Aberth iteration
accuracy, unit-circle classification, and plot artifacts."""

import pytest
from mpmath import exp, fabs, mp, mpf, pi

from hzknots.families import FamilyId, Knot
from hzknots.hz import hz
from hzknots.laurent import LaurentPoly
from hzknots.verify import (
    _check_family_endpoints,
    _check_negative_real_pair,
    _check_no_real_roots,
    _check_pretzel_circle,
    _check_real_pair_threshold,
    _check_root_certificates,
    _check_torus_circle,
)
from hzknots.zeros import (
    ConvergenceError,
    classify,
    emit_plot,
    find_roots,
    zero_polynomial,
    zero_set,
)

Q = ("q",)


def test_torus_circle_quick():
    _check_torus_circle(quick=True)


def test_pretzel_circle_quick():
    _check_pretzel_circle(quick=True)


def test_family_endpoints_quick():
    _check_family_endpoints(quick=True)


def test_negative_real_pair_quick():
    _check_negative_real_pair(quick=True)


def test_real_pair_threshold_quick():
    _check_real_pair_threshold(quick=True)


def test_no_real_roots_quick():
    _check_no_real_roots(quick=True)


def test_root_certificates_quick():
    _check_root_certificates(quick=True)


def test_zero_polynomial_goldens():
    cases = {
        (FamilyId.UNKNOT, ()): "1*q^0",
        (FamilyId.TORUS, (2, 3)): "1*q^6 + 1*q^3 + 1*q^0",
        (FamilyId.FAM_2K_2, (1,)): "1*q^6 + 1*q^5 + 1*q^3 + 1*q^1 + 1*q^0",
        (FamilyId.FAM_2K2_3, (0,)): " + ".join(f"1*q^{e}" for e in range(12, -1, -1)),
    }
    for (fam, params), expected in cases.items():
        assert zero_polynomial(hz(Knot(fam, params))).render() == expected


def test_zero_polynomial_degree_tracks_crossing_number():
    # pretzel members carry a degree-phi cyclotomic-style zero polynomial
    p = zero_polynomial(hz(Knot(FamilyId.PRETZEL, (6,))))
    assert p.render().startswith("1*q^20")


def test_roots_of_unity_to_high_precision():
    p = LaurentPoly(Q, {(9,): 1, (0,): -1})
    roots = find_roots(p, precision_bits=256)
    assert len(roots) == 9
    with mp.workprec(300):
        targets = [exp(2j * pi * mpf(k) / 9) for k in range(9)]
        for r in roots:
            assert min(fabs(r.value - t) for t in targets) < mpf("1e-70")


def test_multiple_root_is_folded():
    cube = (LaurentPoly(Q, {(0,): 1, (1,): -1})) ** 3
    roots = find_roots(cube)
    assert len(roots) == 1
    assert roots[0].multiplicity == 3
    assert fabs(roots[0].value - 1) < mpf("1e-70")


@pytest.mark.parametrize(
    "poly,message",
    [
        (LaurentPoly(("v", "z"), {(1, 0): 1}), "univariate"),
        (LaurentPoly(Q, {(0,): 1}), "degree"),
        (LaurentPoly(Q, {(1,): 1}), "nonzero constant term"),
    ],
)
def test_find_roots_rejects(poly, message):
    with pytest.raises(ValueError, match=message):
        find_roots(poly)


def test_iteration_cap_raises():
    p = LaurentPoly(Q, {(40,): 1, (0,): -1})
    with pytest.raises(ConvergenceError):
        find_roots(p, max_iterations=1)


def test_figure_eight_negative_real_pair():
    zs = zero_set(hz(Knot(FamilyId.FAM_2K_2, (1,))))
    negatives = [i for i, cls in enumerate(zs.classes) if cls.real_negative]
    assert len(negatives) == 2
    values = sorted(zs.roots[i].value.real for i in negatives)
    assert fabs(values[0] + mpf("1.50613567955")) < mpf("1e-9")
    assert fabs(values[1] + mpf("0.663950807072")) < mpf("1e-9")
    # the two real roots are mutual partners and multiply to 1
    i, j = negatives
    assert zs.classes[i].partner == j and zs.classes[j].partner == i
    assert zs.roots[i].value.real * zs.roots[j].value.real == pytest.approx(1.0)
    assert {zs.to_json()["roots"][i]["class"] for i in negatives} == {"real_negative"}
    assert zs.fully_classified and zs.exact_endpoint_check


def test_torus_roots_all_on_circle():
    zs = zero_set(hz(Knot(FamilyId.TORUS, (2, 5))))
    assert zs.count == 8
    assert all(cls.kind == "on_circle" for cls in zs.classes)
    assert zs.exact_endpoint_check and zs.fully_classified
    for rec in zs.roots:
        assert fabs(fabs(rec.value) - 1) < mpf("1e-20")


def test_zero_set_json_shape():
    zs = zero_set(hz(Knot(FamilyId.TORUS, (2, 3))))
    j = zs.to_json()
    assert set(j) == {
        "count",
        "roots",
        "product_of_moduli",
        "exact_endpoint_check",
        "fully_classified",
        "precision_bits",
    }
    assert j["count"] == 6 and len(j["roots"]) == 6
    assert set(j["roots"][0]) == {
        "re",
        "im",
        "modulus",
        "class",
        "partner",
        "real_negative",
        "multiplicity",
        "residual",
        "error_radius",
    }


def test_plot_artifacts():
    zs = zero_set(hz(Knot(FamilyId.TORUS, (2, 5))))
    csv = emit_plot(zs, "csv")
    lines = csv.decode().splitlines()
    assert lines[0] == "re,im,modulus,class"
    assert len(lines) - 1 == zs.count
    assert emit_plot(zs, "csv") == csv
    svg = emit_plot(zs, "svg")
    text = svg.decode()
    assert text.startswith("<svg") or "<svg xmlns=" in text
    assert 'width="600"' in text and 'r="250"' in text
    assert emit_plot(zs, "svg") == svg
    with pytest.raises(ValueError, match="unknown plot format"):
        emit_plot(zs, "png")


def test_csv_repeats_multiple_roots():
    cube = (LaurentPoly(Q, {(0,): 1, (1,): -1})) ** 3
    zs = classify(find_roots(cube), cube)
    assert zs.count == 3
    assert len(emit_plot(zs, "csv").decode().splitlines()) == 4


def test_residual_certificates():
    p = zero_polynomial(hz(Knot(FamilyId.PRETZEL, (4,))))
    for rec in find_roots(p, precision_bits=256):
        assert rec.residual < mpf(2) ** -64
        assert rec.error_radius < mpf(2) ** -64
