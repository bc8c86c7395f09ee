"""Command line interface: a thin client over the in-process HTTP service.

Every command builds a request model, posts it to the service through an
in-process ASGI transport, and formats the response.  Exit codes: 0 on
success, 1 on computation errors, 2 on usage errors.  All numeric output in
json/csv uses 10 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Dict, List, Optional, Sequence

import warnings

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from fastapi.testclient import TestClient

from .bounds import BOUND_KINDS
from .service import app
from .suites import SUITE_NAMES

_USAGE_EXIT = 2
_FAILURE_EXIT = 1

_CSV_HEADER = "p,n,R,method,value,applicable,delta_star"


def _client() -> TestClient:
    return TestClient(app, raise_server_exceptions=False)


def _sig10(x: Any) -> Any:
    """Round floats to 10 significant digits for deterministic output."""
    if isinstance(x, bool):
        return x
    if isinstance(x, float):
        if math.isnan(x) or math.isinf(x):
            return x
        return float("%.10g" % x)
    if isinstance(x, dict):
        return {k: _sig10(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_sig10(v) for v in x]
    return x


def _num(x: Optional[float]) -> str:
    # Non-finite values arrive as null in the service's JSON payloads.
    if x is None:
        return "nan"
    return "%.10g" % x


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _post(path: str, payload: Dict[str, Any]) -> Dict[str, Any]:
    with _client() as client:
        response = client.post(path, json=payload)
    if response.status_code == 200:
        return response.json()
    try:
        detail = response.json().get("detail", response.text)
    except ValueError:
        detail = response.text
    print(f"error: {detail}", file=sys.stderr)
    raise SystemExit(
        _USAGE_EXIT if response.status_code == 422 else _FAILURE_EXIT
    )


def _record_csv_row(rec: Dict[str, Any]) -> str:
    delta_star = rec.get("meta", {}).get("delta_star")
    return ",".join(
        [
            _num(rec["p"]),
            str(rec["n"]),
            _num(rec["R"]),
            rec["method"],
            _num(rec["value"]),
            "true" if rec["applicable"] else "false",
            _num(delta_star) if delta_star is not None else "",
        ]
    )


def _format_records(records: List[Dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        payload = [_sig10(r) for r in records]
        if len(payload) == 1:
            return json.dumps(payload[0], indent=2) + "\n"
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        lines = [_CSV_HEADER]
        lines += [_record_csv_row(r) for r in records]
        return "\n".join(lines) + "\n"
    lines = []
    for r in records:
        tag = "" if r["applicable"] else "  (not applicable)"
        lines.append(
            f"{r['method']}(p={_num(r['p'])}, n={r['n']}, R={_num(r['R'])})"
            f" = {_num(r['value'])}{tag}"
        )
    return "\n".join(lines) + "\n"


def _domain_payload(args: argparse.Namespace) -> Dict[str, Any]:
    return {
        "p": args.p,
        "n": args.n,
        "radius": args.radius,
        "volume": args.volume,
    }


def _cmd_bound(args: argparse.Namespace) -> int:
    payload = _domain_payload(args)
    payload.update({"method": args.method, "delta": args.delta})
    record = _post("/bound", payload)
    _emit(_format_records([record], args.format), args.out)
    return 0


def _parse_p_range(spec: str) -> Dict[str, float]:
    parts = spec.split(":")
    if len(parts) != 3:
        raise _usage_error(f"--p-range must be a:b:step, got {spec!r}")
    try:
        a, b, step = (float(x) for x in parts)
    except ValueError:
        raise _usage_error(f"--p-range must be numeric a:b:step, got {spec!r}")
    return {"p_start": a, "p_stop": b, "p_step": step}


def _usage_error(message: str) -> SystemExit:
    print(f"error: {message}", file=sys.stderr)
    return SystemExit(_USAGE_EXIT)


def _cmd_sweep(args: argparse.Namespace) -> int:
    payload = _parse_p_range(args.p_range)
    try:
        n_list = [int(x) for x in args.n_list.split(",") if x]
    except ValueError:
        raise _usage_error(f"--n-list must be comma-separated integers, got {args.n_list!r}")
    methods = [m for m in args.methods.split(",") if m]
    if not methods:
        raise _usage_error("--methods must name at least one bound kind")
    payload.update({"n_list": n_list, "methods": methods, "radius": args.radius})
    response = _post("/sweep", payload)
    _emit(_format_records(response["rows"], args.format), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    response = _post("/verify", {"suite": args.suite, "tol": args.tol})
    reports = response["reports"]
    if args.format == "json":
        text = json.dumps(_sig10(reports), indent=2) + "\n"
    else:
        lines = []
        for r in reports:
            status = "PASS" if r["passed"] else "FAIL"
            lines.append(
                f"{status} {r['case_name']}: ratio={_num(r['ratio'])} "
                f"tol={_num(r['tolerance'])}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0 if response["all_passed"] else _FAILURE_EXIT


def _cmd_eig(args: argparse.Namespace) -> int:
    payload = _domain_payload(args)
    payload.update({"grid": args.grid, "tol": args.tol, "max_iter": args.max_iter})
    record = _post("/eig", payload)
    _emit(_format_records([record], args.format), args.out)
    return 0


def _crossover_text(results: List[Dict[str, Any]], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_sig10(results if len(results) > 1 else results[0]), indent=2) + "\n"
    if fmt == "csv":
        lines = ["n,kind,p_star,residual,bracket_lo,bracket_hi,applicable"]
        for r in results:
            lines.append(
                ",".join(
                    [
                        str(r["n"]),
                        r["kind"],
                        _num(r["p_star"]),
                        _num(r["residual"]),
                        _num(r["bracket"][0]),
                        _num(r["bracket"][1]),
                        "true" if r["applicable"] else "false",
                    ]
                )
            )
        return "\n".join(lines) + "\n"
    lines = []
    for r in results:
        if r["applicable"]:
            lines.append(f"{r['kind']}(n={r['n']}) = {_num(r['p_star'])}")
        else:
            lines.append(f"{r['kind']}(n={r['n']}) not applicable")
    return "\n".join(lines) + "\n"


def _cmd_compare(args: argparse.Namespace) -> int:
    response = _post("/compare", {"which": args.which, "n": args.n})
    _emit(_crossover_text(response["results"], args.format), args.out)
    return 0


def _cmd_tables(args: argparse.Namespace) -> int:
    response = _post("/tables", {"which": args.which, "grid": args.grid})
    if args.which == 1:
        _emit(_crossover_text(response["crossovers"], args.format), args.out)
        return 0
    rows = response["rows"]
    if args.format == "json":
        text = json.dumps(_sig10(rows), indent=2) + "\n"
    elif args.format == "csv":
        cols = [
            "double_singular",
            "double_singular_printed",
            "numeric",
            "numeric_printed",
        ]
        lines = ["p,n," + ",".join(cols) + ",ordering"]
        for r in rows:
            lines.append(
                ",".join(
                    [_num(r["p"]), str(r["n"])]
                    + [_num(r["values"].get(c, math.nan)) for c in cols]
                    + [r["ordering"]]
                )
            )
        text = "\n".join(lines) + "\n"
    else:
        lines = []
        for r in rows:
            lines.append(
                f"p={_num(r['p'])} n={r['n']}: "
                f"bound={_num(r['values']['double_singular'])} "
                f"(printed {_num(r['values']['double_singular_printed'])}), "
                f"numeric={_num(r['values'].get('numeric', math.nan))} "
                f"(printed {_num(r['values']['numeric_printed'])})"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _add_shared_flags(sub: argparse.ArgumentParser, domain: bool = True) -> None:
    if domain:
        sub.add_argument("--p", type=float, required=True, help="exponent p > 1")
        sub.add_argument("--n", type=int, required=True, help="dimension n >= 2")
        group = sub.add_mutually_exclusive_group(required=True)
        group.add_argument("--radius", type=float, help="ball radius R")
        group.add_argument(
            "--volume",
            type=float,
            help="domain volume; reduced to the ball of equal volume",
        )
    sub.add_argument(
        "--format",
        choices=("json", "csv", "human"),
        default="json",
        help="output format (default json)",
    )
    sub.add_argument("--out", help="write output to this path instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plb",
        description="Lower bounds for the first Dirichlet p-Laplacian eigenvalue "
        "and verification of the underlying Hardy inequalities.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    bound = commands.add_parser("bound", help="compute one lower bound")
    _add_shared_flags(bound)
    bound.add_argument(
        "--method",
        required=True,
        help=f"bound kind, one of: {', '.join(BOUND_KINDS)}",
    )
    bound.add_argument("--delta", type=float, help="delta for method family_point")
    bound.set_defaults(handler=_cmd_bound)

    sweep = commands.add_parser("sweep", help="bound values over a (p, n) grid")
    sweep.add_argument("--p-range", required=True, help="p range as a:b:step")
    sweep.add_argument("--n-list", required=True, help="comma-separated dimensions")
    sweep.add_argument("--methods", required=True, help="comma-separated bound kinds")
    sweep.add_argument("--radius", type=float, default=1.0, help="ball radius (default 1)")
    _add_shared_flags(sweep, domain=False)
    sweep.set_defaults(handler=_cmd_sweep, format_default="csv")

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    verify.add_argument("--tol", type=float, help="tolerance override for every case")
    _add_shared_flags(verify, domain=False)
    verify.set_defaults(handler=_cmd_verify)

    eig = commands.add_parser("eig", help="inverse-power eigenvalue solve")
    _add_shared_flags(eig)
    eig.add_argument("--grid", type=int, default=2048, help="radial cells (default 2048)")
    eig.add_argument("--tol", type=float, default=1e-8, help="relative tolerance (default 1e-8)")
    eig.add_argument("--max-iter", type=int, default=500, help="iteration cap (default 500)")
    eig.set_defaults(handler=_cmd_eig)

    compare = commands.add_parser("compare", help="crossover points between bounds")
    compare.add_argument(
        "--which", choices=("p0n", "p1n", "p3n", "table1"), required=True
    )
    compare.add_argument("--n", type=int, required=True, help="dimension n")
    _add_shared_flags(compare, domain=False)
    compare.set_defaults(handler=_cmd_compare)

    tables = commands.add_parser("tables", help="reproduce the summary tables")
    tables.add_argument("--which", type=int, choices=(1, 2), required=True)
    tables.add_argument("--grid", type=int, default=2048, help="solver grid (default 2048)")
    _add_shared_flags(tables, domain=False)
    tables.set_defaults(handler=_cmd_tables)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except SystemExit as exc:
        return int(exc.code or 0)


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
