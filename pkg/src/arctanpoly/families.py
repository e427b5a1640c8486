"""Builders for the polynomial families attached to the derivatives of arctan.

Four families are materialized, all with exact coefficients:

* beta_n  = Im((x+i)**(n+1)), degree n, leading coefficient n+1;
* alpha_n = Re((x+i)**n), the companion family, monic for n >= 1;
* P_n     = (-1)**n * n! * Im((x+i)**(n+1)) = n! * beta_n(-x), the numerator
  of the n-th arctan derivative once divided by (1+x^2)**(n+1);
* pi_n    = beta_n / (n+1), the monic normalization whose zeros are
  cot(k*pi/(n+1)).

Every family can be built by several independent routes (three-term
recurrence, explicit binomial sums, complex powers, 2x2 matrix powers,
tridiagonal determinant expansion, Bernoulli-weighted monic recurrences,
terminating hypergeometric sums, derivative recursions) and the routes are
cross-checked coefficient by coefficient.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial

from .exact import bernoulli
from .poly import Polynomial, _canon, _trim


class SequenceKind(Enum):
    BETA = "beta"
    ALPHA = "alpha"
    P = "p"
    MONIC_PI = "pi"


class BuildMethod(Enum):
    RECURRENCE = "recurrence"
    EXPLICIT = "explicit"
    COMPLEX_POWER = "complex-power"
    MATRIX_POWER = "matrix-power"
    DETERMINANT = "determinant"
    MONIC_BERNOULLI = "monic-bernoulli"
    HYPERGEOMETRIC = "hypergeometric"
    DERIVATIVE_RECURRENCE = "derivative-recurrence"


SUPPORTED_METHODS: dict[SequenceKind, frozenset[BuildMethod]] = {
    SequenceKind.BETA: frozenset(
        m for m in BuildMethod if m is not BuildMethod.MONIC_BERNOULLI
    ),
    SequenceKind.ALPHA: frozenset(
        m for m in BuildMethod if m is not BuildMethod.DERIVATIVE_RECURRENCE
    ),
    SequenceKind.P: frozenset(
        {BuildMethod.EXPLICIT, BuildMethod.DERIVATIVE_RECURRENCE, BuildMethod.COMPLEX_POWER}
    ),
    # pi_n is built either from its own Bernoulli-weighted recurrence or as
    # the quotient beta_n/(n+1) on top of the beta recurrence.
    SequenceKind.MONIC_PI: frozenset({BuildMethod.MONIC_BERNOULLI, BuildMethod.RECURRENCE}),
}

DEFAULT_METHOD: dict[SequenceKind, BuildMethod] = {
    SequenceKind.BETA: BuildMethod.RECURRENCE,
    SequenceKind.ALPHA: BuildMethod.RECURRENCE,
    SequenceKind.P: BuildMethod.EXPLICIT,
    SequenceKind.MONIC_PI: BuildMethod.MONIC_BERNOULLI,
}


class UnsupportedPairError(ValueError):
    """Raised when a (kind, method) combination has no defined construction."""


# ---------------------------------------------------------------------------
# raw coefficient-list helpers (ascending degree, ints preferred)
# ---------------------------------------------------------------------------

def _wrap(raw: list) -> Polynomial:
    return Polynomial._raw(_trim([_canon(c) for c in raw]))


def _three_term_step(cur: list, prev: list) -> list:
    # next = 2x*cur - (1+x^2)*prev
    out = [0] * (len(cur) + 1)
    for i, c in enumerate(cur):
        out[i + 1] += 2 * c
    for i, c in enumerate(prev):
        out[i] -= c
        out[i + 2] -= c
    return out


def _rmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return out


def _radd_scaled(acc: list, term: list, factor) -> list:
    if len(acc) < len(term):
        acc = acc + [0] * (len(term) - len(acc))
    for i, c in enumerate(term):
        if c:
            acc[i] += factor * c
    return acc


# ---------------------------------------------------------------------------
# per-n builders
# ---------------------------------------------------------------------------

def _beta_explicit(n: int) -> list:
    out = [0] * (n + 1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = (-1) ** k * comb(n + 1, 2 * k + 1)
    return out


def _alpha_explicit(n: int) -> list:
    out = [0] * (n + 1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = (-1) ** k * comb(n, 2 * k)
    return out


def _p_explicit(n: int) -> list:
    fac = factorial(n)
    out = [0] * (n + 1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = (-1) ** (n + k) * fac * comb(n + 1, 2 * k + 1)
    return out


def _beta_hypergeometric(n: int) -> list:
    # (n+1) x^n 2F1(-n/2, (1-n)/2; 3/2; -1/x^2); the sum terminates at
    # k = floor(n/2) and each term lands on the x^(n-2k) coefficient.
    return _hypergeometric_family(n, Fraction(3, 2), n + 1)


def _alpha_hypergeometric(n: int) -> list:
    return _hypergeometric_family(n, Fraction(1, 2), 1)


def _hypergeometric_family(n: int, c: Fraction, lead: int) -> list:
    a = Fraction(-n, 2)
    b = Fraction(1 - n, 2)
    out = [Fraction(0)] * (n + 1)
    term = Fraction(1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = lead * (-1) ** k * term
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1))
    return out


def _complex_pair_pow(m: int) -> tuple[list, list]:
    """(re, im) coefficient lists of (x + i)**m, by binary powering."""
    result = ([1], [])
    square = ([0, 1], [1])  # x + i
    while m:
        if m & 1:
            ra, ia = result
            rb, ib = square
            result = (
                _radd_scaled(_rmul(ra, rb), _rmul(ia, ib), -1),
                _radd_scaled(_rmul(ra, ib), _rmul(ia, rb), 1),
            )
        m >>= 1
        if m:
            rb, ib = square
            square = (
                _radd_scaled(_rmul(rb, rb), _rmul(ib, ib), -1),
                _radd_scaled(_rmul(rb, ib), _rmul(ib, rb), 1),
            )
    return result


_M_STEP = (([], [-1, 0, -1]), ([1], [0, 2]))  # [[0, -(1+x^2)], [1, 2x]]


def _m2mul(p, q):
    (a, b), (c, d) = p
    (e, f), (g, h) = q
    return (
        (_radd_scaled(_rmul(a, e), _rmul(b, g), 1), _radd_scaled(_rmul(a, f), _rmul(b, h), 1)),
        (_radd_scaled(_rmul(c, e), _rmul(d, g), 1), _radd_scaled(_rmul(c, f), _rmul(d, h), 1)),
    )


def _matrix_pow(n: int):
    result = (([1], []), ([], [1]))
    square = _M_STEP
    while n:
        if n & 1:
            result = _m2mul(result, square)
        n >>= 1
        if n:
            square = _m2mul(square, square)
    return result


def _family_from_matrix_power(n: int, row1) -> list:
    # (1, r(x)) . M^n . (1, 0)^T  =  M^n[0][0] + r(x) * M^n[1][0]
    mp = _matrix_pow(n)
    return _radd_scaled(list(mp[0][0]), _rmul(row1, mp[1][0]), 1)


def _ze_bracket(n: int, j: int) -> Fraction:
    return Fraction(2 ** (j + 1), j + 1) * comb(n, j) * abs(bernoulli(j + 1))


def _alpha_ze_coeff(n: int, j: int) -> Fraction:
    p = 2 ** (j + 1)
    return Fraction(p * (p - 1), j + 1) * comb(n, j) * abs(bernoulli(j + 1))


# ---------------------------------------------------------------------------
# full-prefix sequence generators
# ---------------------------------------------------------------------------

def _seq_three_term(n_max: int, first: list) -> list[list]:
    seq = [[1]]
    if n_max >= 1:
        seq.append(first)
    for n in range(1, n_max):
        seq.append(_three_term_step(seq[n], seq[n - 1]))
    return seq


def _seq_determinant(n_max: int, first_diagonal: list) -> list[list]:
    # Cofactor expansion of the n x n tridiagonal determinant with diagonal
    # 2x (first entry `first_diagonal`), superdiagonal -(1+x^2) and
    # subdiagonal -1: D_k = 2x D_{k-1} - (1+x^2) D_{k-2}, D_0 = 1.
    return _seq_three_term(n_max, first_diagonal)


def _seq_complex_power(n_max: int, part: str, power_shift: int) -> list[list]:
    seq = []
    re, im = ([1], []) if power_shift == 0 else ([0, 1], [1])
    for _ in range(n_max + 1):
        seq.append(list(re if part == "re" else im))
        re, im = (
            _radd_scaled([0] + re, im, -1),  # x*re - im
            _radd_scaled([0] + im, re, 1),  # x*im + re
        )
    return seq


def _seq_matrix_power(n_max: int, row1: list) -> list[list]:
    seq = []
    mp = (([1], []), ([], [1]))
    for _ in range(n_max + 1):
        seq.append(_radd_scaled(list(mp[0][0]), _rmul(row1, mp[1][0]), 1))
        mp = _m2mul(mp, _M_STEP)
    return seq


def _seq_monic_bernoulli(n_max: int, coeff) -> list[list]:
    seq = [[Fraction(1)]]
    for n in range(n_max):
        nxt = [0] + list(seq[n])
        for j in range(1, n + 1, 2):  # even offsets vanish with B_{odd>=3} = 0
            nxt = _radd_scaled(nxt, seq[n - j], -coeff(n, j))
        seq.append(nxt)
    return seq


def _seq_p_derivative_recurrence(n_max: int) -> list[list]:
    # P_0 = 1, P_{n+1} = (1+x^2) P_n' - 2(n+1) x P_n
    seq = [[1]]
    for n in range(n_max):
        cur = seq[n]
        d = [i * cur[i] for i in range(1, len(cur))]
        nxt = _radd_scaled(list(d), [0, 0] + d, 1)
        nxt = _radd_scaled(nxt, [0] + cur, -2 * (n + 1))
        seq.append(nxt)
    return seq


def _seq_beta_derivative_recurrence(n_max: int) -> list[list]:
    # beta_{n+1} = 2x beta_n - (1+x^2) beta_n' / (n+1)
    seq = [[1]]
    for n in range(n_max):
        cur = seq[n]
        d = [i * cur[i] for i in range(1, len(cur))]
        nxt = [0] + [2 * c for c in cur]
        inv = Fraction(1, n + 1)
        nxt = _radd_scaled(nxt, d, -inv)
        nxt = _radd_scaled(nxt, [0, 0] + d, -inv)
        seq.append(nxt)
    return seq


_SEQUENCE_BUILDERS = {
    (SequenceKind.BETA, BuildMethod.RECURRENCE): lambda n: _seq_three_term(n, [0, 2]),
    (SequenceKind.ALPHA, BuildMethod.RECURRENCE): lambda n: _seq_three_term(n, [0, 1]),
    (SequenceKind.BETA, BuildMethod.DETERMINANT): lambda n: _seq_determinant(n, [0, 2]),
    (SequenceKind.ALPHA, BuildMethod.DETERMINANT): lambda n: _seq_determinant(n, [0, 1]),
    (SequenceKind.BETA, BuildMethod.EXPLICIT): lambda n: [_beta_explicit(k) for k in range(n + 1)],
    (SequenceKind.ALPHA, BuildMethod.EXPLICIT): lambda n: [_alpha_explicit(k) for k in range(n + 1)],
    (SequenceKind.P, BuildMethod.EXPLICIT): lambda n: [_p_explicit(k) for k in range(n + 1)],
    (SequenceKind.BETA, BuildMethod.HYPERGEOMETRIC): lambda n: [
        _beta_hypergeometric(k) for k in range(n + 1)
    ],
    (SequenceKind.ALPHA, BuildMethod.HYPERGEOMETRIC): lambda n: [
        _alpha_hypergeometric(k) for k in range(n + 1)
    ],
    (SequenceKind.BETA, BuildMethod.COMPLEX_POWER): lambda n: _seq_complex_power(n, "im", 1),
    (SequenceKind.ALPHA, BuildMethod.COMPLEX_POWER): lambda n: _seq_complex_power(n, "re", 0),
    (SequenceKind.P, BuildMethod.COMPLEX_POWER): lambda n: [
        [(-1) ** k * factorial(k) * c for c in raw]
        for k, raw in enumerate(_seq_complex_power(n, "im", 1))
    ],
    (SequenceKind.BETA, BuildMethod.MATRIX_POWER): lambda n: _seq_matrix_power(n, [0, 2]),
    (SequenceKind.ALPHA, BuildMethod.MATRIX_POWER): lambda n: _seq_matrix_power(n, [0, 1]),
    (SequenceKind.MONIC_PI, BuildMethod.MONIC_BERNOULLI): lambda n: _seq_monic_bernoulli(
        n, _ze_bracket
    ),
    (SequenceKind.ALPHA, BuildMethod.MONIC_BERNOULLI): lambda n: _seq_monic_bernoulli(
        n, _alpha_ze_coeff
    ),
    (SequenceKind.P, BuildMethod.DERIVATIVE_RECURRENCE): _seq_p_derivative_recurrence,
    (SequenceKind.BETA, BuildMethod.DERIVATIVE_RECURRENCE): _seq_beta_derivative_recurrence,
    (SequenceKind.MONIC_PI, BuildMethod.RECURRENCE): lambda n: [
        [Fraction(c, k + 1) for c in raw]
        for k, raw in enumerate(_seq_three_term(n, [0, 2]))
    ],
}

# Prefix caches for the recurrence-style builders; extension happens under a
# lock and appends only finished polynomials, so shared reads are safe.
_CACHED_METHODS = frozenset(
    {
        BuildMethod.RECURRENCE,
        BuildMethod.DETERMINANT,
        BuildMethod.MONIC_BERNOULLI,
        BuildMethod.DERIVATIVE_RECURRENCE,
    }
)
_prefix_cache: dict[tuple[SequenceKind, BuildMethod], list[Polynomial]] = {}
_prefix_lock = threading.Lock()


def _check_pair(kind: SequenceKind, method: BuildMethod) -> None:
    if method not in SUPPORTED_METHODS[kind]:
        raise UnsupportedPairError(f"no {method.value} construction for kind {kind.value}")


def build_sequence(
    kind: SequenceKind, n_max: int, method: BuildMethod | None = None
) -> list[Polynomial]:
    """Members 0..n_max of the family, all built by the same method."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    method = method or DEFAULT_METHOD[kind]
    _check_pair(kind, method)
    if method not in _CACHED_METHODS:
        return [_wrap(raw) for raw in _SEQUENCE_BUILDERS[(kind, method)](n_max)]
    key = (kind, method)
    cached = _prefix_cache.get(key)
    if cached is None or len(cached) <= n_max:
        with _prefix_lock:
            cached = _prefix_cache.get(key)
            if cached is None or len(cached) <= n_max:
                _prefix_cache[key] = [
                    _wrap(raw) for raw in _SEQUENCE_BUILDERS[key](n_max)
                ]
            cached = _prefix_cache[key]
    return cached[: n_max + 1]


def build(kind: SequenceKind, n: int, method: BuildMethod | None = None) -> Polynomial:
    """Exact member n of the family by the requested construction.

    Single-shot complex- and matrix-power requests use binary powering; the
    recurrence-style methods materialize (and cache) the prefix 0..n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    method = method or DEFAULT_METHOD[kind]
    _check_pair(kind, method)
    if method is BuildMethod.EXPLICIT:
        raw = {
            SequenceKind.BETA: _beta_explicit,
            SequenceKind.ALPHA: _alpha_explicit,
            SequenceKind.P: _p_explicit,
        }[kind](n)
        return _wrap(raw)
    if method is BuildMethod.HYPERGEOMETRIC:
        raw = (_beta_hypergeometric if kind is SequenceKind.BETA else _alpha_hypergeometric)(n)
        return _wrap(raw)
    if method is BuildMethod.COMPLEX_POWER:
        if kind is SequenceKind.ALPHA:
            return _wrap(_complex_pair_pow(n)[0])
        im = _complex_pair_pow(n + 1)[1]
        if kind is SequenceKind.P:
            sign_fac = (-1) ** n * factorial(n)
            return _wrap([sign_fac * c for c in im])
        return _wrap(im)
    if method is BuildMethod.MATRIX_POWER:
        row1 = [0, 2] if kind is SequenceKind.BETA else [0, 1]
        return _wrap(_family_from_matrix_power(n, row1))
    return build_sequence(kind, n, method)[n]


# ---------------------------------------------------------------------------
# cross-validation
# ---------------------------------------------------------------------------

@dataclass
class CrossValidationReport:
    """Pairwise equality results of all supported methods for one family."""

    kind: SequenceKind
    n_max: int
    rows: list[tuple[int, BuildMethod, BuildMethod, bool]]

    @property
    def passed(self) -> bool:
        return all(row[3] for row in self.rows)

    @property
    def failure(self) -> tuple[int, BuildMethod, BuildMethod, bool] | None:
        for row in self.rows:
            if not row[3]:
                return row
        return None

    def summary(self) -> str:
        if self.passed:
            return (
                f"{self.kind.value}: {len(self.rows)} pairwise checks up to "
                f"n={self.n_max}, all equal"
            )
        n, ma, mb, _ = self.failure
        return f"{self.kind.value}: MISMATCH at n={n} between {ma.value} and {mb.value}"


def cross_validate(kind: SequenceKind, n_max: int) -> CrossValidationReport:
    """Compare every supported method pair for members 0..n_max.

    Stops at the first mismatch and reports it rather than raising.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    methods = [m for m in BuildMethod if m in SUPPORTED_METHODS[kind]]
    sequences = {m: build_sequence(kind, n_max, m) for m in methods}
    rows: list[tuple[int, BuildMethod, BuildMethod, bool]] = []
    for n in range(n_max + 1):
        for i, ma in enumerate(methods):
            for mb in methods[i + 1 :]:
                equal = sequences[ma][n] == sequences[mb][n]
                rows.append((n, ma, mb, equal))
                if not equal:
                    return CrossValidationReport(kind, n_max, rows)
    return CrossValidationReport(kind, n_max, rows)


# ---------------------------------------------------------------------------
# generating-function verification by series truncation
# ---------------------------------------------------------------------------

def family_values(kind: SequenceKind, x: Fraction, count: int) -> list[Fraction]:
    """Values member_n(x) for n < count via the three-term value recurrence."""
    if kind not in (SequenceKind.BETA, SequenceKind.ALPHA):
        raise ValueError("value recurrence is defined for the beta and alpha families")
    out = [Fraction(1)]
    if count > 1:
        out.append(Fraction(2 * x if kind is SequenceKind.BETA else x))
    lead = 2 * x
    tail = 1 + x * x
    for _ in range(2, count):
        out.append(lead * out[-1] - tail * out[-2])
    return out[:count]


def _series_divide(num: list, den: list, order: int) -> list[Fraction]:
    inv0 = Fraction(1) / den[0]
    out: list[Fraction] = []
    for k in range(order):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc * inv0)
    return out


def _series_multiply(a: list, b: list, order: int) -> list[Fraction]:
    out = [Fraction(0)] * order
    for i, c in enumerate(a[:order]):
        if c:
            for j, d in enumerate(b[: order - i]):
                if d:
                    out[i + j] += c * d
    return out


def verify_ogf(kind: SequenceKind, x: Fraction, order: int) -> bool:
    """Expand the closed rational generating function as a z-series and
    compare coefficient k with member_k(x), for all k < order.

    beta:  1 / (1 - 2xz + (1+x^2) z^2)
    alpha: (1 - xz) / (1 - 2xz + (1+x^2) z^2)
    """
    if order < 1:
        raise ValueError("order must be positive")
    den = [Fraction(1), Fraction(-2 * x), Fraction(1 + x * x)]
    num = [Fraction(1)] if kind is SequenceKind.BETA else [Fraction(1), Fraction(-x)]
    coeffs = _series_divide(num, den, order)
    return coeffs == family_values(kind, x, order)


def verify_egf(kind: SequenceKind, x: Fraction, order: int) -> bool:
    """Multiply truncated exact Taylor series per the closed forms

    beta:  (cos z + x sin z) e^{xz}        alpha: cos(z) e^{xz}

    and compare n! times the z^n coefficient with member_n(x), n < order.
    """
    if order < 1:
        raise ValueError("order must be positive")
    inv_fact = [Fraction(1)]
    for k in range(1, order):
        inv_fact.append(inv_fact[-1] / k)
    cos_z = [((-1) ** (k // 2)) * inv_fact[k] if k % 2 == 0 else Fraction(0) for k in range(order)]
    sin_z = [((-1) ** (k // 2)) * inv_fact[k] if k % 2 == 1 else Fraction(0) for k in range(order)]
    exp_xz = [x**k * inv_fact[k] for k in range(order)]
    trig = cos_z if kind is SequenceKind.ALPHA else [c + x * s for c, s in zip(cos_z, sin_z)]
    prod = _series_multiply(trig, exp_xz, order)
    values = family_values(kind, x, order)
    fact = 1
    for n in range(order):
        if n:
            fact *= n
        if prod[n] * fact != values[n]:
            return False
    return True
