"""High-order derivatives of arctan/artanh, root sets, and ODE checks.

The n-th derivative of arctan is P_{n-1}(x) / (1+x^2)^n with P as built by
the family module, so derivative values here are exact rationals.  The
float route through Chebyshev polynomials of the second kind,

    d^n/dx^n arctan(x) = (n-1)!/(1+x^2)^((n+1)/2) * U_{n-1}(-x/sqrt(1+x^2)),

is kept as an independent numeric cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath

from . import families
from .families import BuildMethod, SequenceKind
from .highprec import (
    DEFAULT_PRECISION,
    RootCheck,
    certify_simple_root,
    cot_node,
    mpf_to_fraction,
    to_mpf,
    workprec,
)
from .poly import Polynomial


class PoleError(ValueError):
    """Evaluation requested at a pole of the function."""


def arctan_nth_derivative(n: int, x: Fraction) -> Fraction:
    """Exact value of the n-th derivative of arctan at a rational point."""
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    x = Fraction(x)
    numerator = families.build(SequenceKind.P, n - 1, BuildMethod.EXPLICIT).evaluate(x)
    return Fraction(numerator) / (1 + x * x) ** n


def artanh_nth_derivative(n: int, x: Fraction) -> Fraction:
    """Exact n-th derivative of artanh: (n-1)!/(2(1-x^2)^n) ((x+1)^n - (x-1)^n)."""
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    x = Fraction(x)
    if x == 1 or x == -1:
        raise PoleError("artanh derivatives have poles at x = 1 and x = -1")
    diff = (x + 1) ** n - (x - 1) ** n
    return Fraction(factorial(n - 1)) * diff / (2 * (1 - x * x) ** n)


def chebyshev_derivative_form(n: int, x: Fraction, precision_bits: int = DEFAULT_PRECISION):
    """The same arctan derivative through the U_{n-1} closed form, as an mpf."""
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    with workprec(precision_bits):
        t = to_mpf(Fraction(x))
        s = mpmath.sqrt(1 + t * t)
        z = -t / s
        u_prev, u_cur = mpmath.mpf(1), 2 * z
        if n - 1 == 0:
            u = u_prev
        else:
            for _ in range(n - 2):
                u_prev, u_cur = u_cur, 2 * z * u_cur - u_prev
            u = u_cur
        return mpmath.factorial(n - 1) / s ** (n + 1) * u


def finite_difference_derivative(
    n: int,
    x: Fraction,
    step_exponent: int = 10,
    precision_bits: int = 256,
):
    """Independent numeric estimate of the n-th arctan derivative.

    Central binomial stencil with step h = 2**-step_exponent plus one
    Richardson extrapolation step (combining h and h/2 kills the h^2 term).
    Well-conditioned for small orders; intended as a sanity oracle up to
    n = 5.
    """
    if n < 1:
        raise ValueError("derivative order must be >= 1")
    with workprec(precision_bits):
        x0 = to_mpf(Fraction(x))

        def central(h):
            acc = mpmath.mpf(0)
            for j in range(n + 1):
                offset = mpmath.mpf(n) / 2 - j
                sample = mpmath.atan(x0 + offset * h)
                acc += (-1) ** j * mpmath.binomial(n, j) * sample
            return acc / h**n

        h = mpmath.mpf(2) ** (-step_exponent)
        coarse = central(h)
        fine = central(h / 2)
        return (4 * fine - coarse) / 3


@dataclass(frozen=True)
class RootRecord:
    """One certified zero: index, closed form, numeric value, certificate."""

    index: int
    closed_form: str
    value: object  # mpf
    check: RootCheck

    @property
    def certified(self) -> bool:
        return self.check.certified


@dataclass(frozen=True)
class RootSet:
    kind: SequenceKind
    n: int
    roots: tuple[RootRecord, ...]

    @property
    def all_certified(self) -> bool:
        return all(r.certified for r in self.roots)


def roots(
    kind: SequenceKind,
    n: int,
    precision_bits: int = DEFAULT_PRECISION,
    tolerance: float = 1e-9,
) -> RootSet:
    """All n real zeros in closed form, certified against the exact polynomial.

    beta_n vanishes at cot(k*pi/(n+1)) and alpha_n at cot((2k-1)*pi/(2n)),
    k = 1..n; both lists are strictly decreasing in k.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if kind not in (SequenceKind.BETA, SequenceKind.ALPHA):
        raise ValueError("root sets are defined for the beta and alpha families")
    p = families.build(kind, n, BuildMethod.RECURRENCE)
    dp = p.differentiate()
    records = []
    with workprec(precision_bits):
        for k in range(1, n + 1):
            if kind is SequenceKind.BETA:
                closed = f"cot({k}*pi/{n + 1})"
                value = cot_node(k, n + 1)
            else:
                closed = f"cot({2 * k - 1}*pi/{2 * n})"
                value = cot_node(2 * k - 1, 2 * n)
            check = certify_simple_root(p, value, tolerance, derivative=dp)
            records.append(RootRecord(k, closed, value, check))
    return RootSet(kind, n, tuple(records))


def sign_changes_between_roots(kind: SequenceKind, n: int, precision_bits: int = DEFAULT_PRECISION) -> bool:
    """Exact-arithmetic bracketing of the closed-form zeros.

    Converts each numeric root to the exact rational it denotes at working
    precision, evaluates the polynomial exactly at midpoints between
    consecutive roots (and outside the extremes), and requires strictly
    alternating signs, which pins one simple real root per interval.
    """
    rs = roots(kind, n, precision_bits)
    points = [mpf_to_fraction(r.value) for r in rs.roots]  # decreasing
    probes = [points[0] + 1]
    for a, b in zip(points, points[1:]):
        probes.append((a + b) / 2)
    probes.append(points[-1] - 1)
    p = families.build(kind, n, BuildMethod.RECURRENCE)
    signs = []
    for t in probes:
        v = p.evaluate(t)
        if v == 0:
            return False
        signs.append(v > 0)
    return all(sa != sb for sa, sb in zip(signs, signs[1:]))


def ode_residual(kind: SequenceKind, n: int) -> Polynomial:
    """Residual of the second-order ODE each family satisfies; must be zero.

    beta:  (1+x^2) y'' - 2 n x y' + n(n+1) y
    alpha: (1+x^2) y'' - 2 (n-1) x y' + n(n-1) y
    """
    if kind not in (SequenceKind.BETA, SequenceKind.ALPHA):
        raise ValueError("the ODE applies to the beta and alpha families")
    p = families.build(kind, n, BuildMethod.RECURRENCE)
    dp = p.differentiate()
    ddp = dp.differentiate()
    one_plus_sq = Polynomial((1, 0, 1))
    x_poly = Polynomial.x()
    if kind is SequenceKind.BETA:
        return one_plus_sq * ddp - (2 * n) * (x_poly * dp) + (n * (n + 1)) * p
    return one_plus_sq * ddp - (2 * (n - 1)) * (x_poly * dp) + (n * (n - 1)) * p


def derivative_identity_check(kind: SequenceKind, n: int) -> bool:
    """d/dx beta_n = (n+1) beta_{n-1};  d/dx alpha_n = n alpha_{n-1}."""
    if n < 1:
        raise ValueError("n must be positive")
    if kind not in (SequenceKind.BETA, SequenceKind.ALPHA):
        raise ValueError("defined for the beta and alpha families")
    cur, prev = families.build_sequence(kind, n, BuildMethod.RECURRENCE)[-1:-3:-1]
    factor = n + 1 if kind is SequenceKind.BETA else n
    return cur.differentiate() == factor * prev
