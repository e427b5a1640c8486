"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored ascending by degree with trailing zeros trimmed; the
zero polynomial stores nothing.  Integral coefficients are kept as plain
ints (a Fraction with denominator 1 is converted down), which keeps the
representation canonical and makes the integer-coefficient families cheap.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import format_rational

NEG_INF = float("-inf")


def _canon(value):
    if type(value) is int:
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, int):
        return int(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def _trim(coeffs: list) -> list:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class Polynomial:
    """Immutable exact polynomial; all operations return new values."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        self._coeffs = tuple(_trim([_canon(c) for c in coefficients]))

    @classmethod
    def _raw(cls, trimmed: list) -> "Polynomial":
        # internal fast path: caller guarantees canonical, trimmed coefficients
        p = object.__new__(cls)
        p._coeffs = tuple(trimmed)
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw([])

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw([1])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls._raw([0, 1])

    @classmethod
    def monomial(cls, degree: int, coefficient=1) -> "Polynomial":
        c = _canon(coefficient)
        if c == 0:
            return cls.zero()
        return cls._raw([0] * degree + [c])

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    @property
    def degree(self):
        """Degree as an int; the zero polynomial reports -inf."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    @property
    def leading_coefficient(self):
        return self._coeffs[-1] if self._coeffs else 0

    def coefficient(self, k: int):
        """Coefficient of x**k (zero beyond the stored range)."""
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                other = Polynomial((other,))
            else:
                return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._raw(_trim([_canon(c) for c in out]))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw([-c for c in self._coeffs])

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial.zero()
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return Polynomial._raw(_trim([_canon(c) for c in out]))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, factor) -> "Polynomial":
        if factor == 0:
            return Polynomial.zero()
        return Polynomial._raw([_canon(factor * c) for c in self._coeffs])

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.one()
        square = self
        while n:
            if n & 1:
                result = result * square
            n >>= 1
            if n:
                square = square * square
        return result

    def differentiate(self) -> "Polynomial":
        c = self._coeffs
        return Polynomial._raw(_trim([i * c[i] for i in range(1, len(c))]))

    def evaluate(self, x):
        """Exact value at a rational point, by Horner."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Exact substitution self(inner(x)), Horner in the polynomial ring."""
        acc = Polynomial.zero()
        for c in reversed(self._coeffs):
            acc = acc * inner + Polynomial((c,))
        return acc

    def coefficient_strings(self) -> list[str]:
        """Ascending canonical rational strings, the serialization form."""
        return [format_rational(Fraction(c)) for c in self._coeffs]

    def pretty(self) -> str:
        """Human form, descending degree: "6x^5 - 20x^3 + 6x"."""
        if not self._coeffs:
            return "0"
        parts = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if k == 0:
                body = format_rational(Fraction(mag))
            else:
                xpart = "x" if k == 1 else f"x^{k}"
                body = xpart if mag == 1 else f"{format_rational(Fraction(mag))}{xpart}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self.pretty()})"
