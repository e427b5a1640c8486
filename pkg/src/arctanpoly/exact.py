"""Exact scalar arithmetic: rational parsing, Gaussian integers, Bernoulli numbers.

Rationals are plain ``fractions.Fraction`` values; that type already keeps
gcd(|num|, den) = 1 with a positive denominator after every operation, which
is exactly the canonical form used throughout this package.
"""
from __future__ import annotations

import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

Rational = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/[1-9]\d*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or an integer literal into an exact Fraction.

    Decimal notation is rejected on purpose: command-line values must never
    round-trip through floats.
    """
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r} (expected p or p/q)")
    return Fraction(text)


def format_rational(value) -> str:
    """Canonical text form: "p/q" with q > 0, or "p" when q = 1."""
    num, den = value.numerator, value.denominator
    return str(num) if den == 1 else f"{num}/{den}"


@dataclass(frozen=True)
class GaussianInt:
    """Exact complex integer a + b*i."""

    re: int
    im: int

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"


GAUSSIAN_ONE = GaussianInt(1, 0)


def gaussian_pow(base: GaussianInt, n: int) -> GaussianInt:
    """Exact (a + b*i)**n by binary exponentiation, n >= 0."""
    if n < 0:
        raise ValueError("exponent must be non-negative")
    result = GAUSSIAN_ONE
    square = base
    while n:
        if n & 1:
            result = result * square
        n >>= 1
        if n:
            square = square * square
    return result


# Bernoulli numbers, defined by the recurrence sum_{k=0}^{n} C(n+1, k) B_k = 0
# for n >= 1 with B_0 = 1.  This fixes B_1 = -1/2; downstream formulas only
# ever consume |B_m| for even m (odd ones beyond B_1 vanish), so the sign
# convention at index 1 never matters here.
_bernoulli_cache: list[Fraction] = [Fraction(1)]
_bernoulli_lock = threading.Lock()


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n under the defining recurrence convention.

    Values are computed on demand and cached; extension happens under a lock
    and appends only finished entries, so concurrent readers never observe a
    partially-written value.
    """
    if n < 0:
        raise ValueError("index must be non-negative")
    if n < len(_bernoulli_cache):
        return _bernoulli_cache[n]
    with _bernoulli_lock:
        while len(_bernoulli_cache) <= n:
            m = len(_bernoulli_cache)
            acc = Fraction(0)
            for k in range(m):
                acc += comb(m + 1, k) * _bernoulli_cache[k]
            _bernoulli_cache.append(-acc / (m + 1))
    return _bernoulli_cache[n]


def bernoulli_table(n: int) -> tuple[Fraction, ...]:
    """B_0..B_n as an immutable snapshot."""
    bernoulli(n)
    return tuple(_bernoulli_cache[: n + 1])
