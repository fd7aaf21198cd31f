"""Command-line interface: exit codes, text goldens, JSON payloads
validated against the packaged schemas, environment overrides, and
artifact emission."""

import json
from importlib import resources

import jsonschema
import pytest

import hzknots.cli as cli
from hzknots.cli import main
from hzknots.hz import HZError


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def _schema(name):
    text = resources.files("hzknots").joinpath(f"schemas/{name}.json").read_text()
    return json.loads(text)


def _validated(capsys, argv, schema_name):
    code, out, _ = run(capsys, argv + ["--format", "json"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, _schema(schema_name))
    return payload


def test_homfly_text_golden(capsys):
    code, out, _ = run(capsys, ["homfly", "torus:2,3"])
    assert code == 0
    assert "-1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2" in out


def test_homfly_json_schema(capsys):
    payload = _validated(capsys, ["homfly", "torus:2,3"], "homfly")
    assert payload["normalized"] == "-1*v^4*z^0 + 2*v^2*z^0 + 1*v^2*z^2"


def test_hz_check_factorized(capsys):
    code, out, _ = run(capsys, ["hz", "pretzel:k=0", "--check-factorized"])
    assert code == 0
    assert "fully_factorized: true" in out
    assert "lam*(1 - lam*q^13) / ((1 - lam*q)*(1 - lam*q^5)*(1 - lam*q^7))" in out


def test_hz_not_factorized(capsys):
    code, out, _ = run(capsys, ["hz", "fam:2k2:k=1", "--check-factorized"])
    assert code == 0
    assert "fully_factorized: false" in out


def test_hz_closed_form_pipeline_match(capsys):
    payload = _validated(
        capsys, ["hz", "torus:3,4", "--closed-form", "--pipeline"], "hz"
    )
    assert payload["match"] is True


def test_expand_anchor(capsys):
    code, out, _ = run(capsys, ["expand", "pretzel:k=0"])
    assert code == 0
    assert "a[-2] = 13/35" in out
    payload = _validated(capsys, ["expand", "pretzel:k=0"], "expand")
    assert payload["coeffs"]["-2"] == "13/35"
    assert payload["odd_coeff_max_abs"] == "0"


def test_residues_identities(capsys):
    code, out, _ = run(capsys, ["residues", "torus:2,5"])
    assert code == 0
    assert "finite_sum: 1*q^0" in out
    assert "infinity_residue: -1*q^0" in out
    _validated(capsys, ["residues", "torus:2,5"], "residues")


def test_zeros_json_schema_and_determinism(capsys):
    payload = _validated(capsys, ["zeros", "torus:2,5"], "zeros")
    assert payload["count"] == 8
    assert payload["exact_endpoint_check"] is True
    code1, out1, _ = run(capsys, ["zeros", "torus:2,5"])
    code2, out2, _ = run(capsys, ["zeros", "torus:2,5"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_zeros_artifacts(capsys, tmp_path):
    csv_path = tmp_path / "roots.csv"
    svg_path = tmp_path / "roots.svg"
    code, out, _ = run(
        capsys,
        ["zeros", "torus:2,5", "--csv", str(csv_path), "--svg", str(svg_path)],
    )
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0] == "re,im,modulus,class"
    assert len(lines) == 9
    assert svg_path.read_text().lstrip().startswith("<svg")


def test_verify_quick_suite(capsys):
    payload = _validated(capsys, ["verify", "algebra", "--quick"], "verify")
    assert payload["passed"] is True
    code, out, _ = run(capsys, ["verify", "algebra", "--quick"])
    assert code == 0
    assert "0 failed" in out


def test_ingest_mixed_file(capsys, tmp_path):
    table = tmp_path / "table.txt"
    table.write_text(
        "# comment line\n"
        "3_1 : -1*v^4 + 2*v^2 + 1*v^2*z^2\n"
        "junk line without separator\n"
        "4_1 : 1*v^2 - 1 - 1*z^2 + 1*v^-2\n"
    )
    payload = _validated(capsys, ["ingest", str(table)], "ingest")
    rows = payload["rows"]
    assert [r["ok"] for r in rows] == [True, False, True]
    assert rows[0]["fully_factorized"] is True
    assert rows[2]["fully_factorized"] is False
    assert "line 3" in rows[1]["error"]


def test_ingest_strict_stops_and_fails(capsys, tmp_path):
    table = tmp_path / "table.txt"
    table.write_text(
        "3_1 : -1*v^4 + 2*v^2 + 1*v^2*z^2\n"
        "junk line\n"
        "4_1 : 1*v^2 - 1 - 1*z^2 + 1*v^-2\n"
    )
    code, out, _ = run(capsys, ["ingest", str(table), "--strict", "--format", "json"])
    assert code == 2
    rows = json.loads(out)["rows"]
    assert len(rows) == 2 and rows[-1]["ok"] is False


def test_ingest_missing_file(capsys):
    code, _, err = run(capsys, ["ingest", "/nonexistent/table.txt"])
    assert code == 2
    assert "error" in err.lower()


@pytest.mark.parametrize(
    "argv",
    [
        ["homfly", "nonsense:1"],
        ["homfly", "torus:0,5"],
        ["hz", "fam:2k2:k=0"],
        ["homfly", "torus:2,3", "--precision", "32"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc_info:
        code = main(argv)
        # reached only when argparse did not abort
        raise SystemExit(code)
    assert exc_info.value.code == 2


def test_missing_command_exits_2(capsys):
    with pytest.raises(SystemExit) as exc_info:
        main([])
    assert exc_info.value.code == 2


def test_extrapolation_window(capsys):
    code, out, _ = run(capsys, ["hz", "fam:2k2:k=0", "--extrapolate"])
    assert code == 0


def test_sign_flag_flips_transform(capsys):
    _, out1, _ = run(capsys, ["hz", "torus:2,3", "--format", "json"])
    _, out2, _ = run(capsys, ["hz", "torus:2,3", "--sign", "-1", "--format", "json"])
    v1 = json.loads(out1)["value"]
    v2 = json.loads(out2)["value"]
    assert v1 != v2


def test_env_precision(capsys, monkeypatch):
    monkeypatch.setenv("HZKNOTS_PRECISION", "128")
    payload = _validated(capsys, ["zeros", "torus:2,3"], "zeros")
    assert payload["precision_bits"] == 128


def test_env_strict(capsys, monkeypatch, tmp_path):
    table = tmp_path / "table.txt"
    table.write_text("junk line\n")
    monkeypatch.setenv("HZKNOTS_STRICT", "1")
    code, _, _ = run(capsys, ["ingest", str(table)])
    assert code == 2


def test_convergence_failure_exits_4(capsys):
    code, _, err = run(capsys, ["zeros", "pretzel:k=6", "--max-iterations", "1"])
    assert code == 4
    assert "no convergence" in err


def test_identity_failure_exits_3(capsys, monkeypatch):
    def boom(*args, **kwargs):
        raise HZError("forced failure")

    monkeypatch.setattr(cli, "closed_form", boom)
    code, _, err = run(capsys, ["hz", "torus:2,3", "--closed-form"])
    assert code == 3
    assert "forced failure" in err


def test_verify_failure_exits_3(capsys, monkeypatch):
    from hzknots.verify import CheckResult, SuiteReport

    failing = SuiteReport(
        suite="algebra",
        checks=(CheckResult(name="ring laws", passed=False, detail="boom", seconds=0.0),),
        seconds=0.0,
    )
    monkeypatch.setattr(cli, "run_suite", lambda suite, quick: failing)
    code, out, _ = run(capsys, ["verify", "algebra", "--quick"])
    assert code == 3
    assert "FAIL" in out
