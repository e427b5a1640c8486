"""High-precision float helpers on top of mpmath.

Everything irrational in this package (cot nodes, reference arctan values,
root certificates) runs through here, under explicit working precisions so
the exact-arithmetic modules never touch machine floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

DEFAULT_PRECISION = 128  # bits

workprec = mpmath.workprec


def to_mpf(value):
    """int or Fraction to mpf under the current working precision."""
    num, den = value.numerator, value.denominator
    return mpmath.mpf(num) if den == 1 else mpmath.mpf(num) / den


def mpf_to_fraction(value) -> Fraction:
    """Exact rational value of an mpf (every finite mpf is dyadic)."""
    sign, man, exp, _ = mpmath.mpf(value)._mpf_
    if man == 0 and exp != 0:
        raise ValueError("cannot convert a non-finite value to a fraction")
    signed = -man if sign else man
    return Fraction(signed) * Fraction(2) ** exp


def eval_poly(poly, t):
    """Horner evaluation of an exact polynomial at an mpf point."""
    acc = mpmath.mpf(0)
    for c in reversed(poly.coefficients):
        acc = acc * t + to_mpf(Fraction(c))
    return acc


def cot_node(k: int, m: int):
    """cot(k*pi/m) under the current working precision."""
    return mpmath.cot(mpmath.pi * k / m)


def atan_reference(x: Fraction, precision_bits: int = 256):
    """Reference arctan of an exact rational, as an mpf."""
    with workprec(precision_bits):
        return mpmath.atan(to_mpf(x))


@dataclass(frozen=True)
class RootCheck:
    """Simple-root certificate at a numeric point.

    ``residual`` is |p(r)| and ``slope`` is |p'(r)|.  The point certifies
    when residual <= tolerance * max(1, slope) and slope > tolerance: family
    coefficients grow fast with the degree, so the raw residual at a
    finite-precision approximation of a true root scales with the local
    slope and only the slope-relative residual is meaningful.
    """

    residual: float
    slope: float
    certified: bool


def certify_simple_root(
    poly,
    value,
    tolerance: float = 1e-9,
    derivative=None,
) -> RootCheck:
    """Certify ``value`` (an mpf under the current precision) as a simple root."""
    dp = derivative if derivative is not None else poly.differentiate()
    residual = abs(eval_poly(poly, value))
    slope = abs(eval_poly(dp, value))
    ok = bool(residual <= tolerance * max(1, slope) and slope > tolerance)
    return RootCheck(float(residual), float(slope), ok)
