"""Named verification suites over every identity the library materializes.

Each suite yields deterministic (check, n, passed, detail) rows; the CLI
maps any failure to a nonzero exit code.  Default caps follow the module
contracts: exact Hessenberg work stops at 12 (Bernoulli numerators grow
fast), matching enumeration at 14, root certification at 50.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import calculus, connections, hessenberg, series
from .chebyshev import alpha_from_chebyshev, beta_from_chebyshev
from .families import (
    BuildMethod,
    SequenceKind,
    build_sequence,
    cross_validate,
    verify_egf,
    verify_ogf,
)
from .highprec import to_mpf, workprec
from .poly import Polynomial

SUITE_NAMES = ("identities", "cross", "connections", "hessenberg", "series")
HESSENBERG_CAP = 12
ENUMERATION_CAP = 14
ROOT_CAP = 50
GF_ORDER = 40
GF_POINTS = (Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3))
RANDOM_SEED = 987654321


@dataclass(frozen=True)
class CheckRow:
    suite: str
    check: str
    n: int | None
    passed: bool
    detail: str = ""


def _row(suite, check, n, passed, detail=""):
    return CheckRow(suite, check, n, bool(passed), detail if not passed else detail)


def suite_identities(max_n: int) -> list[CheckRow]:
    rows = []
    betas = build_sequence(SequenceKind.BETA, max_n + 1, BuildMethod.RECURRENCE)
    alphas = build_sequence(SequenceKind.ALPHA, max_n + 1, BuildMethod.RECURRENCE)
    ps = build_sequence(SequenceKind.P, max_n, BuildMethod.DERIVATIVE_RECURRENCE)
    x_poly = Polynomial.x()
    one_plus_sq = Polynomial((1, 0, 1))
    shells = [Polynomial.one()]  # (1+x^2)^j
    for _ in range(max_n):
        shells.append(shells[-1] * one_plus_sq)
    fact = 1

    for n in range(max_n + 1):
        beta_n, alpha_n = betas[n], alphas[n]
        flip_beta = Polynomial([(-1) ** k * c for k, c in enumerate(beta_n.coefficients)])
        flip_alpha = Polynomial([(-1) ** k * c for k, c in enumerate(alpha_n.coefficients)])
        sign = -1 if n % 2 else 1
        rows.append(_row("identities", "parity[beta]", n, flip_beta == sign * beta_n))
        rows.append(_row("identities", "parity[alpha]", n, flip_alpha == sign * alpha_n))

        if n:
            fact *= n
        rows.append(_row("identities", "p-from-beta", n, ps[n] == fact * flip_beta))

        lead_ok = (
            beta_n.leading_coefficient == n + 1
            and alpha_n.leading_coefficient == 1
            and beta_n.degree == n
            and alpha_n.degree == n
        )
        rows.append(_row("identities", "degree-and-leading", n, lead_ok))
        sparsity = all(
            beta_n.coefficient(k) == 0 and alpha_n.coefficient(k) == 0
            for k in range(n + 1)
            if (n - k) % 2
        )
        rows.append(_row("identities", "alternating-zeros", n, sparsity))

        rows.append(
            _row("identities", "ode[beta]", n, not calculus.ode_residual(SequenceKind.BETA, n))
        )
        rows.append(
            _row("identities", "ode[alpha]", n, not calculus.ode_residual(SequenceKind.ALPHA, n))
        )

        if n >= 1:
            rows.append(
                _row(
                    "identities",
                    "derivative[beta]",
                    n,
                    beta_n.differentiate() == (n + 1) * betas[n - 1],
                )
            )
            rows.append(
                _row(
                    "identities",
                    "derivative[alpha]",
                    n,
                    alpha_n.differentiate() == n * alphas[n - 1],
                )
            )
            rows.append(
                _row(
                    "identities",
                    "interchange[alpha-from-beta]",
                    n,
                    alpha_n == beta_n - x_poly * betas[n - 1],
                )
            )
            rows.append(
                _row(
                    "identities",
                    "interchange[beta-from-alpha]",
                    n,
                    beta_n
                    == x_poly * one_plus_sq * alphas[n - 1] - Polynomial((-1, 0, 1)) * alpha_n,
                )
            )
            turan_beta = beta_n * beta_n - betas[n - 1] * betas[n + 1] == shells[n]
            turan_alpha = alpha_n * alpha_n - alphas[n - 1] * alphas[n + 1] == shells[n - 1]
            rows.append(_row("identities", "turan[beta]", n, turan_beta))
            rows.append(_row("identities", "turan[alpha]", n, turan_alpha))

        rows.append(
            _row("identities", "chebyshev-bridge[beta]", n, beta_from_chebyshev(n) == beta_n)
        )
        rows.append(
            _row("identities", "chebyshev-bridge[alpha]", n, alpha_from_chebyshev(n) == alpha_n)
        )

    for x in GF_POINTS:
        for kind in (SequenceKind.BETA, SequenceKind.ALPHA):
            rows.append(
                _row(
                    "identities",
                    f"ogf[{kind.value}](x={x})",
                    None,
                    verify_ogf(kind, x, GF_ORDER),
                )
            )
            rows.append(
                _row(
                    "identities",
                    f"egf[{kind.value}](x={x})",
                    None,
                    verify_egf(kind, x, GF_ORDER),
                )
            )

    for kind in (SequenceKind.BETA, SequenceKind.ALPHA):
        for n in range(1, min(max_n, ROOT_CAP) + 1):
            rs = calculus.roots(kind, n)
            rows.append(_row("identities", f"roots[{kind.value}]", n, rs.all_certified))
    return rows


def suite_cross(max_n: int) -> list[CheckRow]:
    rows = []
    for kind in SequenceKind:
        report = cross_validate(kind, max_n)
        for n, ma, mb, equal in report.rows:
            rows.append(
                _row(
                    "cross",
                    f"{kind.value}[{ma.value}=={mb.value}]",
                    n,
                    equal,
                    "" if equal else "polynomials differ",
                )
            )
    return rows


def suite_hessenberg(max_n: int, cap: int = HESSENBERG_CAP) -> list[CheckRow]:
    rows = []
    top = min(max_n, cap)
    spot = {(1, 1): Fraction(1, 3), (3, 3): Fraction(2, 15), (5, 5): Fraction(16, 63)}
    for (n, j), expected in spot.items():
        rows.append(
            _row("hessenberg", f"bracket({n},{j})", n, hessenberg.bracket(n, j) == expected)
        )
    for n in range(2, 41):
        ok = all(hessenberg.bracket(n, j) == 0 for j in range(2, n + 1, 2))
        rows.append(_row("hessenberg", "bracket-even-offsets-vanish", n, ok))
    betas = build_sequence(SequenceKind.BETA, top, BuildMethod.RECURRENCE)
    for n in range(1, top + 1):
        matrix = hessenberg.build_H(n)
        cp = hessenberg.charpoly(matrix)
        rows.append(
            _row(
                "hessenberg",
                "charpoly-is-monic-family",
                n,
                cp == hessenberg.monic_reference(n) and cp == betas[n].scale(Fraction(1, n + 1)),
            )
        )
        trace = sum(matrix.entries[i][i] for i in range(n))
        rows.append(_row("hessenberg", "trace-zero", n, trace == 0))
    for n in range(1, min(top, 8) + 1):
        rows.append(_row("hessenberg", "eigenvalues-are-cot-nodes", n, hessenberg.eigen_check(n)))
    return rows


def suite_series(max_n: int) -> list[CheckRow]:
    rows = []
    for kind, term_cap in ((series.SeriesKind.EULER, 45), (series.SeriesKind.BETA_EXPANSION, 90)):
        value, used = series.pi_approx(kind, 1e-10)
        ok = abs(value - 3.14159265358979323846) < 1e-10 and used <= term_cap
        rows.append(
            _row("series", f"pi[{kind.value}]", None, ok, f"{value:.12f} in {used} terms")
        )
    for x in (Fraction(1, 5), Fraction(1, 2), Fraction(1)):
        for kind in series.SeriesKind:
            report = series.partial_sum(kind, x, 80)
            rows.append(
                _row(
                    "series",
                    f"converges[{kind.value}](x={x})",
                    None,
                    report.final_error < 1e-10,
                    f"final error {report.final_error:.3e}",
                )
            )
            errors = [row.abs_error for row in report.rows]
            if kind is series.SeriesKind.EULER:
                # positive terms at x > 0: the measured error itself decays
                ok = all(errors[n + 1] <= errors[n] for n in range(5, len(errors) - 1))
                rows.append(_row("series", f"monotone-error[{kind.value}](x={x})", None, ok))
            else:
                # sign blocks make the pointwise error oscillate; what decays
                # monotonically is the proven envelope q^(n+2)/(sqrt(1+x^2)(1-q))
                with workprec(256):
                    q = abs(to_mpf(x)) / mpmath.sqrt(1 + to_mpf(x) ** 2)
                    envelope_ok = all(
                        errors[n]
                        <= q ** (n + 2) / (mpmath.sqrt(1 + to_mpf(x) ** 2) * (1 - q))
                        for n in range(len(errors))
                    )
                rows.append(
                    _row("series", f"error-envelope[{kind.value}](x={x})", None, envelope_ok)
                )
    return rows


def suite_connections(max_n: int) -> list[CheckRow]:
    rows = []
    x = Polynomial.x()
    arguments = (x, 2 * x, Polynomial((1, 0, 1)))
    for h in arguments:
        for n in range(1, 13):
            fib_ok = connections.fibonacci_poly(
                n, h, connections.FibonacciMethod.RECURRENCE_ORACLE
            ) == connections.fibonacci_poly(n, h, connections.FibonacciMethod.CLOSED_FORM)
            luc_ok = connections.lucas_poly(
                n, h, connections.FibonacciMethod.RECURRENCE_ORACLE
            ) == connections.lucas_poly(n, h, connections.FibonacciMethod.CLOSED_FORM)
            rows.append(_row("connections", f"fibonacci-methods[h={h.pretty()}]", n, fib_ok))
            rows.append(_row("connections", f"lucas-methods[h={h.pretty()}]", n, luc_ok))
    fib_numbers = [
        connections.fibonacci_poly(n, x).evaluate(Fraction(1)) for n in range(1, 7)
    ]
    rows.append(
        _row("connections", "fibonacci-numbers", None, fib_numbers == [1, 1, 2, 3, 5, 8])
    )
    lucas_numbers = [connections.lucas_poly(n, x).evaluate(Fraction(1)) for n in range(1, 6)]
    rows.append(_row("connections", "lucas-numbers", None, lucas_numbers == [1, 3, 4, 7, 11]))

    cap = min(max_n, ENUMERATION_CAP)
    for family, start in ((connections.GraphFamily.PATH, 1), (connections.GraphFamily.CYCLE, 3)):
        for n in range(start, cap + 1):
            graph = connections.GraphKind(family, n)
            built = [
                connections.matching_poly(graph, method)
                for method in connections.MatchingMethod
            ]
            ok = built[0] == built[1] == built[2]
            rows.append(_row("connections", f"matching[{family.value}]", n, ok))

    rng = random.Random(RANDOM_SEED)
    points = [Fraction(rng.randint(-999, 999), 1000) for _ in range(20)]
    with workprec(128):
        for n in range(1, min(max_n, 30) + 1):
            ratio = connections.tan_multiple(n)
            ok = True
            for pt in points:
                den = ratio.denominator.evaluate(pt)
                if abs(den) <= Fraction(1, 1000):
                    continue
                exact = to_mpf(Fraction(ratio.numerator.evaluate(pt))) / to_mpf(Fraction(den))
                direct = mpmath.tan(n * mpmath.atan(to_mpf(pt)))
                if abs(exact - direct) > mpmath.mpf("1e-10"):
                    ok = False
                    break
            rows.append(_row("connections", "tan-multiple-spot", n, ok))

    betas = build_sequence(SequenceKind.BETA, min(max_n, 30), BuildMethod.RECURRENCE)
    alphas = build_sequence(SequenceKind.ALPHA, min(max_n, 30), BuildMethod.RECURRENCE)
    one_plus_sq = Polynomial((1, 0, 1))
    for n in range(1, min(max_n, 30) + 1):
        if n % 2 == 0:
            # x - (1+x^2) alpha_{n-1}/alpha_n  ==  -beta_{n-1}/alpha_n
            ok = x * alphas[n] - one_plus_sq * alphas[n - 1] == -betas[n - 1]
        else:
            # beta_n/beta_{n-1} - x  ==  alpha_n/beta_{n-1}
            ok = betas[n] - x * betas[n - 1] == alphas[n]
        rows.append(_row("connections", "tan-alternative-form", n, ok))
    return rows


def run_suite(name: str, max_n: int, hessenberg_cap: int = HESSENBERG_CAP) -> list[CheckRow]:
    if name == "all":
        rows = []
        for suite in SUITE_NAMES:
            rows.extend(run_suite(suite, max_n, hessenberg_cap))
        return rows
    if name == "identities":
        return suite_identities(max_n)
    if name == "cross":
        return suite_cross(max_n)
    if name == "connections":
        return suite_connections(max_n)
    if name == "hessenberg":
        return suite_hessenberg(max_n, hessenberg_cap)
    if name == "series":
        return suite_series(max_n)
    raise ValueError(f"unknown suite: {name}")
