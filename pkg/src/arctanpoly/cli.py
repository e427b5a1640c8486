"""Command-line surface: builders, derivative evaluation, verification suites,
series tables, pi approximation, root listings and the classical bridges.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import mpmath

from . import calculus, checks, connections, families, series
from .exact import format_rational, parse_rational
from .families import BuildMethod, SequenceKind, UnsupportedPairError
from .highprec import to_mpf, workprec
from .poly import Polynomial

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _decimal(value, digits: int = 12) -> str:
    with workprec(96):
        return mpmath.nstr(to_mpf(Fraction(value)), digits)


def _parse_poly_arg(text: str) -> Polynomial:
    try:
        return Polynomial([parse_rational(c) for c in text.split(",")])
    except ValueError as exc:
        raise ValueError(f"bad coefficient list {text!r}: {exc}") from exc


def _cmd_poly(args) -> int:
    kind = SequenceKind(args.kind)
    method = BuildMethod(args.method) if args.method else None
    p = families.build(kind, args.n, method)
    used = method or families.DEFAULT_METHOD[kind]
    if args.format == "json":
        print(
            json.dumps(
                {
                    "kind": kind.value,
                    "n": args.n,
                    "method": used.value,
                    "coeffs": p.coefficient_strings(),
                }
            )
        )
    else:
        print(p.pretty())
    return EXIT_OK


def _cmd_deriv(args) -> int:
    x = parse_rational(args.x)
    if args.func == "arctan":
        value = calculus.arctan_nth_derivative(args.n, x)
    else:
        value = calculus.artanh_nth_derivative(args.n, x)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "func": args.func,
                    "n": args.n,
                    "x": format_rational(x),
                    "exact": format_rational(value),
                    "decimal": _decimal(value),
                }
            )
        )
    else:
        print(format_rational(value))
    return EXIT_OK


def _cmd_verify(args) -> int:
    rows = checks.run_suite(args.suite, args.max_n, args.hessenberg_cap)
    failures = [r for r in rows if not r.passed]
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "suite": r.suite,
                        "check": r.check,
                        "n": r.n,
                        "passed": r.passed,
                        "detail": r.detail,
                    }
                    for r in rows
                ]
            )
        )
    elif args.format == "csv":
        print("suite,check,n,passed,detail")
        for r in rows:
            n_text = "" if r.n is None else str(r.n)
            print(f"{r.suite},{r.check},{n_text},{'pass' if r.passed else 'FAIL'},{r.detail}")
    else:
        groups: dict[tuple[str, str], list[checks.CheckRow]] = {}
        for r in rows:
            groups.setdefault((r.suite, r.check), []).append(r)
        for (suite, check), members in groups.items():
            ns = [m.n for m in members if m.n is not None]
            span = f" n={min(ns)}..{max(ns)}" if ns else ""
            ok = all(m.passed for m in members)
            status = "ok" if ok else "FAIL"
            print(f"[{suite}] {check}{span}: {status}")
        for r in failures:
            where = "" if r.n is None else f" at n={r.n}"
            print(f"FAILED: [{r.suite}] {r.check}{where} {r.detail}")
        print(f"{len(rows) - len(failures)}/{len(rows)} checks passed")
    return EXIT_VERIFY_FAILED if failures else EXIT_OK


def _cmd_series(args) -> int:
    kind = series.SeriesKind.EULER if args.kind == "euler" else series.SeriesKind.BETA_EXPANSION
    report = series.partial_sum(kind, parse_rational(args.x), args.terms)
    if args.format == "csv":
        sys.stdout.write(report.csv())
    elif args.format == "json":
        print(
            json.dumps(
                {
                    "kind": kind.value,
                    "x": format_rational(report.x),
                    "target": report.target,
                    "slow_convergence": report.slow_convergence,
                    "rows": [
                        {
                            "n": r.n,
                            "term": format_rational(r.term),
                            "partial_sum": format_rational(r.partial_sum),
                            "abs_error": r.abs_error,
                        }
                        for r in report.rows
                    ],
                }
            )
        )
    else:
        if report.slow_convergence:
            print("warning: |x| > 4, expect slow convergence")
        print(f"target arctan({format_rational(report.x)}) = {report.target!r}")
        for r in report.rows:
            print(
                f"n={r.n:<4d} partial_sum={format_rational(r.partial_sum)} "
                f"abs_error={r.abs_error:.3e}"
            )
    return EXIT_OK


def _cmd_pi(args) -> int:
    kind = series.SeriesKind.EULER if args.method == "euler" else series.SeriesKind.BETA_EXPANSION
    value, terms = series.pi_approx(kind, args.tol)
    print(f"{value:.10f} ({terms} terms)")
    return EXIT_OK


def _cmd_roots(args) -> int:
    kind = SequenceKind(args.kind)
    rs = calculus.roots(kind, args.n, args.precision)
    with workprec(args.precision):
        for record in rs.roots:
            mark = "certified" if record.certified else "NOT CERTIFIED"
            print(f"k={record.index}: {record.closed_form} = {mpmath.nstr(record.value, 20)} [{mark}]")
    return EXIT_OK if rs.all_certified else EXIT_VERIFY_FAILED


def _cmd_connect(args) -> int:
    if args.what == "tan":
        ratio = connections.tan_multiple(args.n)
        print(f"({ratio.numerator.pretty()}) / ({ratio.denominator.pretty()})  [{ratio.parity} n]")
        return EXIT_OK
    if args.what in ("fibonacci", "lucas"):
        h = _parse_poly_arg(args.h)
        fn = connections.fibonacci_poly if args.what == "fibonacci" else connections.lucas_poly
        method = (
            connections.FibonacciMethod(args.method)
            if args.method
            else connections.FibonacciMethod.RECURRENCE_ORACLE
        )
        print(fn(args.n, h, method).pretty())
        return EXIT_OK
    family = (
        connections.GraphFamily.PATH if args.what == "matching-path" else connections.GraphFamily.CYCLE
    )
    graph = connections.GraphKind(family, args.n)
    method = (
        connections.MatchingMethod(args.method)
        if args.method
        else connections.MatchingMethod.ENUMERATION
    )
    print(connections.matching_poly(graph, method).pretty())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arctanpoly",
        description="Exact polynomial families from the derivatives of arctan.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="build one family member")
    p_poly.add_argument("--kind", required=True, choices=[k.value for k in SequenceKind])
    p_poly.add_argument("--n", required=True, type=int)
    p_poly.add_argument("--method", choices=[m.value for m in BuildMethod])
    p_poly.add_argument("--format", default="text", choices=["text", "json"])
    p_poly.set_defaults(handler=_cmd_poly)

    p_deriv = sub.add_parser("deriv", help="evaluate a high-order derivative exactly")
    p_deriv.add_argument("--func", required=True, choices=["arctan", "artanh"])
    p_deriv.add_argument("--n", required=True, type=int)
    p_deriv.add_argument("--x", required=True)
    p_deriv.add_argument("--format", default="text", choices=["text", "json"])
    p_deriv.set_defaults(handler=_cmd_deriv)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "--suite", default="all", choices=("all",) + checks.SUITE_NAMES
    )
    p_verify.add_argument("--max-n", dest="max_n", type=int, default=50)
    p_verify.add_argument(
        "--hessenberg-cap",
        dest="hessenberg_cap",
        type=int,
        default=checks.HESSENBERG_CAP,
        help="raise the exact charpoly verification cap",
    )
    p_verify.add_argument("--format", default="text", choices=["text", "json", "csv"])
    p_verify.set_defaults(handler=_cmd_verify)

    p_series = sub.add_parser("series", help="partial sums of an arctan series")
    p_series.add_argument("--kind", required=True, choices=["euler", "beta"])
    p_series.add_argument("--x", required=True)
    p_series.add_argument("--terms", required=True, type=int)
    p_series.add_argument("--format", default="text", choices=["text", "csv", "json"])
    p_series.set_defaults(handler=_cmd_series)

    p_pi = sub.add_parser("pi", help="approximate pi from a series at x = 1")
    p_pi.add_argument("--method", required=True, choices=["euler", "beta"])
    p_pi.add_argument("--tol", required=True, type=float)
    p_pi.set_defaults(handler=_cmd_pi)

    p_roots = sub.add_parser("roots", help="closed-form zeros with certificates")
    p_roots.add_argument("--kind", required=True, choices=["beta", "alpha"])
    p_roots.add_argument("--n", required=True, type=int)
    p_roots.add_argument("--precision", type=int, default=128)
    p_roots.set_defaults(handler=_cmd_roots)

    p_connect = sub.add_parser("connect", help="classical polynomial bridges")
    p_connect.add_argument(
        "--what",
        required=True,
        choices=["tan", "fibonacci", "lucas", "matching-path", "matching-cycle"],
    )
    p_connect.add_argument("--n", required=True, type=int)
    p_connect.add_argument("--h", default="0,1", help="argument polynomial, ascending coefficients")
    p_connect.add_argument("--method", help="construction to use (delegate-specific)")
    p_connect.set_defaults(handler=_cmd_connect)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (
        UnsupportedPairError,
        calculus.PoleError,
        connections.SizeLimitError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
