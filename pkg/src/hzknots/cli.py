"""Command-line surface: family addressing, transform computation, analytic
reports, zero-locus artifacts, table ingestion, and verification suites.

Exit codes: 0 success; 2 parse or usage error; 3 identity-check failure;
4 numerical non-convergence.  Every command takes ``--format {text,json}``
and is deterministic given its arguments and configuration: identical bytes
out.  Configuration flags fall back to the environment variables
``HZKNOTS_PRECISION`` and ``HZKNOTS_STRICT``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .analysis import expand_at_1, lambda_residues
from .families import FamilyError, FamilyId, format_family_id, parse_family_id
from .homfly import homfly, set_sign_convention
from .hz import HZError, closed_form, factorize, hz, hz_from_table
from .polyexpr import ParseError
from .verify import available_suites, run_all, run_suite
from .zeros import ConvergenceError, emit_plot, zero_set

__all__ = ["RunConfig", "main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IDENTITY = 3
EXIT_NUMERIC = 4


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration shared by all commands."""

    precision_bits: int = 256
    order: int = 12
    strict: bool = False
    sign: int = 1
    on_circle_tol: float = 1e-10
    pair_tol: float = 1e-8
    max_iterations: int = 500
    out_format: str = "text"
    workers: int = 4
    extrapolate: bool = False
    csv_path: str | None = None
    svg_path: str | None = None

    def __post_init__(self):
        if self.precision_bits < 64:
            raise ValueError("precision must be at least 64 bits")
        if self.order < 2:
            raise ValueError("expansion order must be at least 2")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")
        if self.out_format not in ("text", "json"):
            raise ValueError("format must be text or json")


def _env_precision() -> int:
    raw = os.environ.get("HZKNOTS_PRECISION", "").strip()
    return int(raw) if raw else 256


def _env_strict() -> bool:
    return os.environ.get("HZKNOTS_STRICT", "").strip().lower() in ("1", "true", "yes", "on")


def _emit(payload: dict, lines: list, cfg: RunConfig) -> None:
    if cfg.out_format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


# ---- commands ----


def _cmd_homfly(args, cfg: RunConfig) -> int:
    knot = parse_family_id(args.family_id, extrapolate=cfg.extrapolate)
    pair = homfly(knot)
    payload = {
        "command": "homfly",
        "family": format_family_id(knot),
        "normalized": pair.normalized.render(),
        "unnormalized": pair.unnormalized.render(),
    }
    _emit(
        payload,
        [
            f"family: {payload['family']}",
            f"normalized: {payload['normalized']}",
            f"unnormalized: {payload['unnormalized']}",
        ],
        cfg,
    )
    return EXIT_OK


def _cmd_hz(args, cfg: RunConfig) -> int:
    knot = parse_family_id(args.family_id, extrapolate=cfg.extrapolate)
    use_closed = args.closed_form
    use_pipeline = args.pipeline or not args.closed_form
    zp = hz(knot) if use_pipeline else None
    zc = closed_form(knot, extrapolate=cfg.extrapolate) if use_closed else None
    payload = {"command": "hz", "family": format_family_id(knot)}
    lines = [f"family: {payload['family']}"]
    code = EXIT_OK

    value = zp.value if zp is not None else zc.to_rational()
    payload["value"] = value.render()
    lines.append(f"value: {payload['value']}")
    if zc is not None:
        payload["closed_form"] = zc.render()
        lines.append(f"closed_form: {payload['closed_form']}")
    if zp is not None and zc is not None:
        match = zp.value == zc.to_rational()
        payload["match"] = match
        lines.append(f"match: {str(match).lower()}")
        if not match and cfg.strict:
            code = EXIT_IDENTITY
    if args.check_factorized:
        form = factorize(zp if zp is not None else zc.to_rational())
        payload["fully_factorized"] = form.fully_factorized
        payload["factored"] = form.render()
        lines.append(f"fully_factorized: {str(form.fully_factorized).lower()}")
        lines.append(f"factored: {payload['factored']}")
    _emit(payload, lines, cfg)
    return code


def _cmd_expand(args, cfg: RunConfig) -> int:
    knot = parse_family_id(args.family_id, extrapolate=cfg.extrapolate)
    rep = expand_at_1(hz(knot), order=cfg.order)
    body = rep.to_json()
    body["family"] = format_family_id(knot)
    payload = {"command": "expand", **body}
    lines = [f"family: {payload['family']}"]
    for e in sorted(rep.coeffs):
        lines.append(f"a[{e}] = {body['coeffs'][str(e)]}")
    lines.append(f"odd_coeff_max_abs: {body['odd_coeff_max_abs']}")
    _emit(payload, lines, cfg)
    return EXIT_OK


def _cmd_residues(args, cfg: RunConfig) -> int:
    knot = parse_family_id(args.family_id, extrapolate=cfg.extrapolate)
    rep = lambda_residues(hz(knot))
    payload = {"command": "residues", "family": format_family_id(knot), **rep.to_json()}
    lines = [f"family: {payload['family']}"]
    for pole in payload["poles"]:
        lines.append(
            f"pole at lam = {pole['location']} (order {pole['order']}): "
            f"residue {pole['residue']}"
        )
    lines.append(f"finite_sum: {payload['finite_sum']}")
    lines.append(f"infinity_residue: {payload['infinity_residue']}")
    _emit(payload, lines, cfg)
    return EXIT_OK


def _zeros_input(knot):
    """Prefer the closed factored form (exact and fast); fall back to the
    pipeline transform for shapes without one."""
    try:
        return closed_form(knot)
    except FamilyError:
        return hz(knot)


def _cmd_zeros(args, cfg: RunConfig) -> int:
    knot = parse_family_id(args.family_id, extrapolate=cfg.extrapolate)
    zs = zero_set(
        _zeros_input(knot),
        precision_bits=cfg.precision_bits,
        on_circle_tol=cfg.on_circle_tol,
        pair_tol=cfg.pair_tol,
        max_iterations=cfg.max_iterations,
    )
    payload = {"command": "zeros", "family": format_family_id(knot), **zs.to_json()}
    counts = {}
    for c in zs.classes:
        counts[c.label] = counts.get(c.label, 0) + 1
    lines = [
        f"family: {payload['family']}",
        f"roots: {zs.count} ({len(zs.roots)} distinct)",
        f"exact_endpoint_check: {str(zs.exact_endpoint_check).lower()}",
        f"product_of_moduli: {payload['product_of_moduli']}",
        f"classes: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())) if counts else "classes: none",
        f"negative_real_pairs: {len(zs.real_negative_pairs())}",
    ]
    for target, fmt in ((cfg.csv_path, "csv"), (cfg.svg_path, "svg")):
        if target:
            Path(target).write_bytes(emit_plot(zs, fmt))
            payload[fmt] = target
            lines.append(f"{fmt}: {target}")
    _emit(payload, lines, cfg)
    return EXIT_OK


def _ingest_row(entry) -> dict:
    line_no, name, expr, error = entry
    if error is not None:
        return {"line": line_no, "name": name, "ok": False, "error": error}
    try:
        z = hz_from_table(expr)
        form = factorize(z)
    except (ParseError, HZError, ArithmeticError, ValueError) as e:
        return {"line": line_no, "name": name, "ok": False, "error": f"line {line_no}: {e}"}
    return {
        "line": line_no,
        "name": name,
        "ok": True,
        "fully_factorized": form.fully_factorized,
        "hz": form.render(),
    }


def _cmd_ingest(args, cfg: RunConfig) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    entries = []
    for line_no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, expr = line.partition(":")
        if not sep or not name.strip() or not expr.strip():
            entries.append(
                (line_no, name.strip() or line, None, f"line {line_no}: expected 'name : polynomial'")
            )
        else:
            entries.append((line_no, name.strip(), expr.strip(), None))
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        rows = list(pool.map(_ingest_row, entries))
    if cfg.strict:
        # stop at the first failing line instead of continuing
        cut = next((i for i, r in enumerate(rows) if not r["ok"]), None)
        if cut is not None:
            rows = rows[: cut + 1]
    payload = {"command": "ingest", "rows": rows}
    lines = []
    for r in rows:
        if r["ok"]:
            lines.append(
                f"{r['name']}: fully_factorized={str(r['fully_factorized']).lower()} {r['hz']}"
            )
        else:
            lines.append(f"{r['name']}: error: {r['error']}")
    _emit(payload, lines, cfg)
    if any(not r["ok"] for r in rows) and cfg.strict:
        return EXIT_USAGE
    return EXIT_OK


def _cmd_verify(args, cfg: RunConfig) -> int:
    if args.suite == "all":
        reports = run_all(quick=args.quick)
    else:
        reports = (run_suite(args.suite, quick=args.quick),)
    passed = all(r.passed for r in reports)
    payload = {
        "command": "verify",
        "quick": args.quick,
        "passed": passed,
        "suites": [r.to_json() for r in reports],
    }
    lines = []
    for rep in reports:
        for c in rep.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{rep.suite:10s} {c.name:28s} {mark}  {c.detail}")
    total = sum(len(r.checks) for r in reports)
    failed = sum(1 for r in reports for c in r.checks if not c.passed)
    seconds = sum(r.seconds for r in reports)
    lines.append(f"{total} checks, {failed} failed, {seconds:.1f}s")
    _emit(payload, lines, cfg)
    return EXIT_OK if passed else EXIT_IDENTITY


# ---- argument parsing ----


def _positive_bits(text: str) -> int:
    value = int(text)
    if value < 64:
        raise argparse.ArgumentTypeError("precision must be at least 64 bits")
    return value


def _order_arg(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError("expansion order must be at least 2")
    return value


def _workers_arg(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("workers must be at least 1")
    return value


def _add_common(sp, with_family: bool = True):
    if with_family:
        sp.add_argument("family_id", help="family id, e.g. torus:2,3 or pretzel:k=0")
    sp.add_argument("--format", choices=("text", "json"), default="text", dest="out_format")
    sp.add_argument("--sign", type=int, choices=(1, -1), default=1,
                    help="global sign convention for the unnormalized polynomial")
    sp.add_argument("--strict", action="store_true", default=_env_strict(),
                    help="treat identity mismatches and bad rows as fatal")
    sp.add_argument("--extrapolate", action="store_true",
                    help="allow parameters outside the printed family range")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hzknots",
        description="Exact transforms of torus and twisted knot families: "
        "polynomials, factorizations, expansions, residues, and zero sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("homfly", help="normalized and unnormalized polynomial of a family member")
    _add_common(p)
    p.set_defaults(func=_cmd_homfly)

    p = sub.add_parser("hz", help="transform of a family member")
    _add_common(p)
    p.add_argument("--closed-form", action="store_true", help="use the printed closed form")
    p.add_argument("--pipeline", action="store_true", help="use the computed route")
    p.add_argument("--check-factorized", action="store_true",
                   help="report the basis factorization verdict")
    p.set_defaults(func=_cmd_hz)

    p = sub.add_parser("expand", help="expansion of the transform at q=1, lam=1")
    _add_common(p)
    p.add_argument("--order", type=_order_arg, default=12, help="highest expansion order")
    p.set_defaults(func=_cmd_expand)

    p = sub.add_parser("residues", help="lam-residue report of the transform")
    _add_common(p)
    p.set_defaults(func=_cmd_residues)

    p = sub.add_parser("zeros", help="certified roots of the zero polynomial at lam=1")
    _add_common(p)
    p.add_argument("--precision", type=_positive_bits, default=_env_precision(),
                   dest="precision_bits", help="working precision in bits")
    p.add_argument("--on-circle-tol", type=float, default=1e-10)
    p.add_argument("--pair-tol", type=float, default=1e-8)
    p.add_argument("--max-iterations", type=int, default=500)
    p.add_argument("--csv", dest="csv_path", help="write the root table as CSV")
    p.add_argument("--svg", dest="svg_path", help="write the root plot as SVG")
    p.set_defaults(func=_cmd_zeros)

    p = sub.add_parser("ingest", help="batch transform report for a 'name : polynomial' table")
    _add_common(p, with_family=False)
    p.add_argument("path", help="input file of 'name : polynomial' lines")
    p.add_argument("--workers", type=_workers_arg, default=4, help="worker pool size")
    p.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("verify", help="run the library verification suites")
    _add_common(p, with_family=False)
    p.add_argument("suite", nargs="?", default="all", choices=available_suites())
    p.add_argument("--quick", action="store_true", help="restrict parameter ranges")
    p.set_defaults(func=_cmd_verify)

    return parser


def _config_from(args) -> RunConfig:
    return RunConfig(
        precision_bits=getattr(args, "precision_bits", _env_precision()),
        order=getattr(args, "order", 12),
        strict=args.strict,
        sign=args.sign,
        on_circle_tol=getattr(args, "on_circle_tol", 1e-10),
        pair_tol=getattr(args, "pair_tol", 1e-8),
        max_iterations=getattr(args, "max_iterations", 500),
        out_format=args.out_format,
        workers=getattr(args, "workers", 4),
        extrapolate=getattr(args, "extrapolate", False),
        csv_path=getattr(args, "csv_path", None),
        svg_path=getattr(args, "svg_path", None),
    )


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    set_sign_convention(cfg.sign)
    try:
        return args.func(args, cfg)
    except (FamilyError, ParseError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except HZError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IDENTITY
    finally:
        set_sign_convention(1)


if __name__ == "__main__":
    sys.exit(main())
