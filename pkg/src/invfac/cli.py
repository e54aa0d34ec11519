"""Command-line interface: evaluation, identity verification, exact tables,
and sequence transforms, with machine-readable output for CI.

Exit codes (stable contract): 0 success/pass, 1 verification failure,
2 usage or domain error, 3 unknown key.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import catalog as cat
from . import verify as verify_mod
from .engine import DEFAULT_MAX_TERMS, DEFAULT_TOL, DomainError, EvalResult, eval_asymptotic
from .exact import bernoulli, cauchy_first, cauchy_second, euler_poly_at_zero, stirling1_row, stirling2_row
from .transforms import (
    SequenceParseError,
    asymptotic_from_factorial,
    format_sequence,
    inverse_stirling_transform,
    parse_sequence,
    stirling_transform,
)

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

_ASYM_KEYS = ("beta_asym", "trigamma_asym", "incgamma_asym")

_INT_PARAMS = {"k", "p", "m"}
_RATIONAL_PARAMS = {"a", "w", "x"}


def _env_float(name: str, default: float) -> float:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return float(raw)
    except ValueError:
        raise SystemExit(f"invalid {name}: {raw!r}")


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"invalid {name}: {raw!r}")


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _param_str(v) -> str:
    return str(v)


def _parse_kv(pairs: list[str]) -> dict[str, str]:
    out = {}
    for item in pairs:
        if "=" not in item:
            raise ValueError(f"expected key=value, got {item!r}")
        key, _, val = item.partition("=")
        out[key.strip()] = val.strip()
    return out


def _render_eval(name: str, params: dict, res: EvalResult, fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(
            {
                "name": name,
                "params": {k: _param_str(v) for k, v in params.items()},
                "value": res.value,
                "terms_used": res.terms_used,
                "error_estimate": res.error_estimate,
                "converged": res.converged,
            }
        )
    if fmt == "csv":
        head = "name,params,value,terms_used,error_estimate,converged"
        p = ";".join(f"{k}={_param_str(v)}" for k, v in sorted(params.items()))
        return f"{head}\n{name},{p},{res.value!r},{res.terms_used},{res.error_estimate!r},{res.converged}"
    lines = [
        f"name           : {name}",
    ]
    for k, v in sorted(params.items()):
        lines.append(f"  {k:<13}: {_param_str(v)}")
    lines += [
        f"value          : {res.value!r}",
        f"terms_used     : {res.terms_used}",
        f"error_estimate : {res.error_estimate:.3e}",
        f"converged      : {res.converged}",
    ]
    return "\n".join(lines)


def _cmd_eval(args) -> int:
    try:
        kv = _parse_kv(args.params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    name = args.name
    known = cat.catalog_keys() + list(_ASYM_KEYS)
    if name not in known:
        print(f"error: unknown name {name!r}; valid keys: {', '.join(known)}", file=sys.stderr)
        return EXIT_UNKNOWN

    # flags win over key=value positionals
    merged: dict[str, str] = dict(kv)
    for key in ("z", "k", "a", "p", "w", "m", "x"):
        val = getattr(args, key, None)
        if val is not None:
            merged[key] = val

    z = None
    if "z" in merged:
        try:
            z = float(Fraction(merged.pop("z")))
        except (ValueError, ZeroDivisionError):
            print(f"error: invalid z", file=sys.stderr)
            return EXIT_USAGE

    params: dict = {}
    try:
        for key, raw in merged.items():
            if key in _INT_PARAMS:
                params[key] = int(raw)
            elif key in _RATIONAL_PARAMS:
                params[key] = Fraction(raw)
            else:
                print(f"error: unknown parameter {key!r}", file=sys.stderr)
                return EXIT_USAGE
    except (ValueError, ZeroDivisionError):
        print(f"error: invalid value for parameter {key!r}: {raw!r}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if name in _ASYM_KEYS:
            if z is None:
                print("error: asymptotic evaluation needs z", file=sys.stderr)
                return EXIT_USAGE
            if name == "beta_asym":
                series = cat.beta_asymptotic()
            elif name == "trigamma_asym":
                series = cat.trigamma_asymptotic()
            else:
                series = cat.incgamma_asymptotic(params.get("x", Fraction(1)))
            res = eval_asymptotic(series, z)
        else:
            rep = cat.get_representation(name)
            bound = rep.bind(**params)
            res = bound.evaluate(z, tol=args.tol, max_terms=args.max_terms)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    show = dict(params)
    if z is not None:
        show["z"] = z
    print(_render_eval(name, show, res, args.format))
    return EXIT_OK


def _render_report(report: verify_mod.VerifyReport, fmt: str) -> str:
    if fmt == "json":
        return _json_dumps(
            {
                "entries": [
                    {
                        "name": e.name,
                        "lhs": e.lhs,
                        "rhs": e.rhs,
                        "diff": e.diff,
                        "tol": e.tol,
                        "pass": e.passed,
                    }
                    for e in report.entries
                ],
                "overall_pass": report.overall_pass,
            }
        )
    if fmt == "csv":
        rows = ["name,lhs,rhs,diff,tol,pass"]
        for e in report.entries:
            rows.append(f"{e.name},{e.lhs!r},{e.rhs!r},{e.diff!r},{e.tol!r},{e.passed}")
        rows.append(f"overall,,,,,{report.overall_pass}")
        return "\n".join(rows)
    width = max((len(e.name) for e in report.entries), default=10)
    lines = []
    for e in report.entries:
        mark = "PASS" if e.passed else "FAIL"
        lines.append(f"{mark}  {e.name:<{width}}  diff={e.diff:.3e}  tol={e.tol:.3e}")
    lines.append(f"overall: {'PASS' if report.overall_pass else 'FAIL'}")
    return "\n".join(lines)


def _cmd_verify(args) -> int:
    report = verify_mod.run_verify(args.filter, args.tol_scale)
    print(_render_report(report, args.format))
    return EXIT_OK if report.overall_pass else EXIT_VERIFY_FAIL


_TABLES = {
    "stirling1": lambda n: list(stirling1_row(n)),
    "stirling2": lambda n: list(stirling2_row(n)),
    "bernoulli": bernoulli,
    "cauchy1": cauchy_first,
    "cauchy2": cauchy_second,
    "euler0": euler_poly_at_zero,
    "binet": cat.binet_coefficient,
}


def _cmd_table(args) -> int:
    try:
        kv = _parse_kv(args.params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    kind = args.kind
    if kind not in _TABLES:
        print(f"error: unknown table {kind!r}; valid: {', '.join(sorted(_TABLES))}", file=sys.stderr)
        return EXIT_UNKNOWN
    rows = args.rows
    if "rows" in kv:
        try:
            rows = int(kv["rows"])
        except ValueError:
            print("error: rows must be an integer", file=sys.stderr)
            return EXIT_USAGE
    if rows is None:
        rows = 10
    if not (1 <= rows <= 200):
        print("error: rows must be between 1 and 200", file=sys.stderr)
        return EXIT_USAGE

    fn = _TABLES[kind]
    triangular = kind in ("stirling1", "stirling2")
    if args.format == "json":
        if triangular:
            data = [[str(v) for v in fn(n)] for n in range(rows)]
        else:
            data = [str(fn(n)) for n in range(rows)]
        print(_json_dumps({"kind": kind, "rows": data}))
        return EXIT_OK
    if args.format == "csv":
        lines = []
        if triangular:
            lines.append("n,k,value")
            for n in range(rows):
                for k, v in enumerate(fn(n)):
                    lines.append(f"{n},{k},{v}")
        else:
            lines.append("n,value")
            for n in range(rows):
                lines.append(f"{n},{fn(n)}")
        print("\n".join(lines))
        return EXIT_OK
    for n in range(rows):
        if triangular:
            print(f"{n}: " + ", ".join(str(v) for v in fn(n)))
        else:
            print(f"{n}: {fn(n)}")
    return EXIT_OK


_DIRECTIONS = {
    "forward": stirling_transform,
    "inverse": inverse_stirling_transform,
    "to_asymptotic": asymptotic_from_factorial,
}


def _cmd_transform(args) -> int:
    if args.direction not in _DIRECTIONS:
        print(f"error: unknown direction {args.direction!r}", file=sys.stderr)
        return EXIT_UNKNOWN
    try:
        if args.infile == "-":
            text = sys.stdin.read()
        else:
            with open(args.infile, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.infile!r}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        seq = parse_sequence(text)
    except SequenceParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out = _DIRECTIONS[args.direction](seq)
    print(format_sequence(out, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    tol_default = _env_float("INVFAC_TOL", DEFAULT_TOL)
    max_terms_default = _env_int("INVFAC_MAX_TERMS", DEFAULT_MAX_TERMS)

    ap = argparse.ArgumentParser(
        prog="invfac",
        description="Stirling-number combinatorics and inverse factorial series evaluation",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate a catalog or asymptotic entry")
    pe.add_argument("name")
    pe.add_argument("params", nargs="*", help="key=value parameter bindings")
    pe.add_argument("--z", dest="z")
    pe.add_argument("--x", dest="x")
    pe.add_argument("--k", dest="k")
    pe.add_argument("--a", dest="a")
    pe.add_argument("--p", dest="p")
    pe.add_argument("--w", dest="w")
    pe.add_argument("--m", dest="m")
    pe.add_argument("--tol", type=float, default=tol_default)
    pe.add_argument("--max-terms", type=int, default=max_terms_default)
    pe.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pe.set_defaults(func=_cmd_eval)

    pv = sub.add_parser("verify", help="run the identity verification battery")
    pv.add_argument("--filter", default=None)
    pv.add_argument("--tol-scale", type=float, default=1.0)
    pv.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pv.set_defaults(func=_cmd_verify)

    pt = sub.add_parser("table", help="print exact number tables")
    pt.add_argument("kind")
    pt.add_argument("params", nargs="*", help="rows=N")
    pt.add_argument("--rows", type=int, default=None)
    pt.add_argument("--format", choices=("text", "json", "csv"), default="text")
    pt.set_defaults(func=_cmd_table)

    px = sub.add_parser("transform", help="transform a coefficient sequence file")
    px.add_argument("--in", dest="infile", required=True)
    px.add_argument("--direction", choices=tuple(_DIRECTIONS), required=True)
    px.add_argument("--format", choices=("text", "json", "csv"), default="text")
    px.set_defaults(func=_cmd_transform)

    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors, which matches the contract
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
