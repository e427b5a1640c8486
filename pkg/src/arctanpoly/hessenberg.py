"""Hessenberg companion matrix of the monic family pi_n = beta_n/(n+1).

Any monic sequence with degrees rising by one satisfies an extended
recurrence p_{n+1} = x p_n - sum_j [n over j] p_{n-j}; stacking the bracket
coefficients upward in each column above a unit subdiagonal yields a matrix
whose leading principal characteristic polynomials are exactly the p_n.
For pi_n the brackets are Bernoulli-weighted:

    [n over j] = 2^(j+1)/(j+1) * C(n, j) * |B_{j+1}|   (j >= 1),
    [n over 0] = 0,

so every even offset j >= 2 vanishes along with the odd Bernoulli numbers,
the trace is zero, and the eigenvalues are cot(k*pi/(n+1)).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import families
from .exact import bernoulli, format_rational
from .families import BuildMethod, SequenceKind
from .highprec import DEFAULT_PRECISION, certify_simple_root, cot_node, workprec
from .poly import Polynomial


def bracket(n: int, j: int) -> Fraction:
    """Bracket coefficient [n over j] of the monic recurrence, exact."""
    if not 0 <= j <= n:
        raise ValueError("need 0 <= j <= n")
    if j == 0:
        return Fraction(0)
    return Fraction(2 ** (j + 1), j + 1) * comb(n, j) * abs(bernoulli(j + 1))


@dataclass(frozen=True)
class RationalMatrix:
    """Dense exact matrix, constrained to the shape charpoly exploits:
    zero below the first subdiagonal and ones on it."""

    entries: tuple[tuple, ...]

    def __post_init__(self):
        n = len(self.entries)
        for row in self.entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(n):
                if i == j + 1 and self.entries[i][j] != 1:
                    raise ValueError("subdiagonal entries must be 1")
                if i > j + 1 and self.entries[i][j] != 0:
                    raise ValueError("entries below the subdiagonal must be 0")

    @property
    def n(self) -> int:
        return len(self.entries)

    def json(self) -> str:
        rows = [[format_rational(Fraction(v)) for v in row] for row in self.entries]
        return json.dumps({"n": self.n, "entries": rows})


def build_H(n: int) -> RationalMatrix:
    """The n x n companion matrix: column k carries [k over 0..k] upward
    from the diagonal, with a unit subdiagonal below."""
    if n < 1:
        raise ValueError("n must be positive")
    entries = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for i in range(j + 1):
            entries[i][j] = bracket(j, j - i)
        if j + 1 < n:
            entries[j + 1][j] = Fraction(1)
    return RationalMatrix(tuple(tuple(row) for row in entries))


def charpoly(matrix: RationalMatrix) -> Polynomial:
    """Exact det(xI - M) through the leading-principal recurrence.

    With a unit subdiagonal, the determinant of the k x k leading block of
    xI - M expands along its last column into

        p_k = (x - M[k-1][k-1]) p_{k-1} - sum_{i>=2} M[k-i][k-1] p_{k-i},

    which is O(n^2) ring operations and never leaves exact arithmetic.
    """
    n = matrix.n
    ps = [Polynomial.one()]
    x_poly = Polynomial.x()
    for k in range(1, n + 1):
        acc = (x_poly - matrix.entries[k - 1][k - 1]) * ps[k - 1]
        for i in range(2, k + 1):
            coeff = matrix.entries[k - i][k - 1]
            if coeff:
                acc = acc - coeff * ps[k - i]
        ps.append(acc)
    return ps[n]


def eigen_check(
    n: int,
    precision_bits: int = DEFAULT_PRECISION,
    tolerance: float = 1e-9,
) -> bool:
    """True iff every cot(k*pi/(n+1)) certifies as a simple eigenvalue,
    i.e. a simple root of charpoly(H_n)."""
    p = charpoly(build_H(n))
    dp = p.differentiate()
    with workprec(precision_bits):
        for k in range(1, n + 1):
            check = certify_simple_root(p, cot_node(k, n + 1), tolerance, derivative=dp)
            if not check.certified:
                return False
    return True


def monic_reference(n: int) -> Polynomial:
    """pi_n built independently of the matrix, for cross-checks."""
    return families.build(SequenceKind.MONIC_PI, n, BuildMethod.MONIC_BERNOULLI)
