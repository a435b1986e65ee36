"""Command-line front end.

    eulersum verify [--tol X] [--filter PREFIX] [--output text|json]
                    [--no-parallel]
    eulersum eval NAME PARAMS...
    eulersum list

verify exits 0 only when every case passed; any failure or error gives 1,
bad arguments give 2. Reports go to stdout (text or schema-stable JSON),
diagnostics to stderr. Numbers print with shortest round-trip precision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import eulersums
from .constants import zeta
from .registry import VerificationReport, builtin_registry, inject_failure, run_suite
from .specfun import polylog

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulersum",
        description="Verify the package's Euler-sum and polylogarithm identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the identity verification suite")
    verify.add_argument(
        "--tol",
        type=float,
        default=None,
        metavar="X",
        help="loosen every numeric tolerance to at least X (default: per-case)",
    )
    verify.add_argument(
        "--filter",
        default=None,
        metavar="PREFIX",
        help="only run cases whose id starts with PREFIX",
    )
    verify.add_argument(
        "--output",
        choices=("text", "json"),
        default="text",
        help="report format (default: text)",
    )
    verify.add_argument(
        "--no-parallel",
        action="store_true",
        help="run cases sequentially",
    )
    verify.add_argument(
        "--inject-failure",
        default=None,
        metavar="ID",
        help=argparse.SUPPRESS,  # negative control for exit-code tests
    )

    evaluate = sub.add_parser("eval", help="evaluate a named quantity")
    evaluate.add_argument(
        "name",
        choices=("zeta", "polylog", "hsum", "gp", "integral"),
        help="zeta s | polylog s x | hsum m q | gp p | integral q",
    )
    evaluate.add_argument("params", nargs="*", help="numeric parameters")

    sub.add_parser("list", help="list the identity registry")
    return parser


def _format_number(value: object) -> str:
    if isinstance(value, float):
        return repr(value)  # shortest round-trip representation
    return str(value)


def _print_text_report(report: VerificationReport) -> None:
    for case in report.cases:
        line = f"{case.id:32s} {case.status:5s}"
        if case.status == "error":
            line += f"  {case.message}"
        elif case.abs_residual is not None:
            line += (
                f"  abs={case.abs_residual:.3e}"
                f"  rel={case.rel_residual:.3e}"
                f"  tol={case.tol:.1e}"
                f"  {case.elapsed_ms:9.2f} ms"
            )
        if case.status == "fail":
            line += (
                f"  lhs={_format_number(case.lhs_value)}"
                f"  rhs={_format_number(case.rhs_value)}"
            )
        print(line)
    s = report.summary
    print(
        f"summary: {s['total']} cases, {s['passed']} passed, "
        f"{s['failed']} failed, {s['errored']} errored "
        f"({report.suite_elapsed_ms:.0f} ms)"
    )


def _cmd_verify(args: argparse.Namespace) -> int:
    cases = builtin_registry()
    if args.inject_failure is not None:
        try:
            cases = inject_failure(cases, args.inject_failure)
        except KeyError as exc:
            print(f"eulersum: {exc.args[0]}", file=sys.stderr)
            return 2
    report = run_suite(
        id_prefix=args.filter,
        tol_override=args.tol,
        parallel=not args.no_parallel,
        cases=cases,
    )
    if args.output == "json":
        print(json.dumps(report.as_dict(), indent=2, allow_nan=False))
    else:
        _print_text_report(report)
    failed = report.summary["failed"] + report.summary["errored"]
    return 0 if failed == 0 else 1


def _cmd_eval(args: argparse.Namespace) -> int:
    name, params = args.name, args.params

    def want(count: int) -> list[str]:
        if len(params) != count:
            raise ValueError(
                f"'{name}' expects {count} parameter(s), got {len(params)}"
            )
        return params

    try:
        if name == "zeta":
            (s,) = want(1)
            value = zeta(int(s))
        elif name == "polylog":
            s, x = want(2)
            value = polylog(int(s), float(x))
        elif name == "hsum":
            m, q = want(2)
            value = eulersums.sum_series(eulersums.EulerSumSpec(int(m), int(q)))
        elif name == "gp":
            (p,) = want(1)
            value = eulersums.sum_gp_closed_form(int(p))
        else:  # integral
            (q,) = want(1)
            value = eulersums.sum_via_integral(int(q))
    except ValueError as exc:
        print(f"eulersum: eval {name}: {exc}", file=sys.stderr)
        return 2
    print(_format_number(value))
    return 0


def _cmd_list() -> int:
    for case in sorted(builtin_registry(), key=lambda c: c.id):
        print(f"{case.id:32s} {case.description}  [{case.source}]")
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            code = _cmd_verify(args)
        elif args.command == "eval":
            code = _cmd_eval(args)
        else:
            code = _cmd_list()
        sys.stdout.flush()
        return code
    except BrokenPipeError:
        # downstream pager/`head` closed the pipe; suppress the shutdown noise
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0


if __name__ == "__main__":
    sys.exit(main())
