"""Bracket coefficients, the companion matrix, and its characteristic polynomial."""
import json
from fractions import Fraction

import pytest

from arctanpoly.families import BuildMethod, SequenceKind, build
from arctanpoly.hessenberg import (
    RationalMatrix,
    bracket,
    build_H,
    charpoly,
    eigen_check,
)
from arctanpoly.poly import Polynomial


def test_bracket_examples():
    assert bracket(1, 1) == Fraction(1, 3)
    assert bracket(3, 3) == Fraction(2, 15)
    assert bracket(5, 5) == Fraction(16, 63)
    assert bracket(4, 2) == 0
    assert bracket(7, 0) == 0


def test_bracket_even_offsets_vanish():
    for n in range(41):
        for j in range(2, n + 1, 2):
            assert bracket(n, j) == 0


def test_bracket_bounds():
    with pytest.raises(ValueError):
        bracket(3, 4)
    with pytest.raises(ValueError):
        bracket(3, -1)


def test_build_h_examples():
    h2 = build_H(2)
    assert h2.entries == ((Fraction(0), Fraction(1, 3)), (Fraction(1), Fraction(0)))
    h1 = build_H(1)
    assert h1.entries == ((Fraction(0),),)
    h4 = build_H(4)
    assert h4.entries[0] == (Fraction(0), Fraction(1, 3), Fraction(0), Fraction(2, 15))


def test_matrix_shape_validation():
    with pytest.raises(ValueError):
        RationalMatrix(((Fraction(0), Fraction(1)),))  # not square
    with pytest.raises(ValueError):
        RationalMatrix(((Fraction(0), Fraction(1)), (Fraction(2), Fraction(0))))  # bad subdiag
    with pytest.raises(ValueError):
        RationalMatrix(
            (
                (Fraction(0), Fraction(1), Fraction(0)),
                (Fraction(1), Fraction(0), Fraction(1)),
                (Fraction(5), Fraction(1), Fraction(0)),  # nonzero below subdiagonal
            )
        )


def test_charpoly_examples():
    assert charpoly(build_H(2)) == Polynomial((Fraction(-1, 3), 0, 1))
    assert charpoly(build_H(1)) == Polynomial.x()
    assert charpoly(build_H(4)) == Polynomial((Fraction(1, 5), 0, -2, 0, 1))


def test_charpoly_by_direct_determinant_expansion():
    # independent oracle: cofactor expansion of det(xI - H) over Fractions
    def det(rows):
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = Polynomial.zero()
        for j in range(n):
            if not rows[0][j]:
                continue
            minor = [[row[col] for col in range(n) if col != j] for row in rows[1:]]
            total = total + (-1) ** j * (rows[0][j] * det(minor))
        return total

    for n in range(1, 7):
        h = build_H(n)
        x_minus = [
            [
                Polynomial.x() - h.entries[i][j] if i == j else Polynomial((-h.entries[i][j],))
                for j in range(n)
            ]
            for i in range(n)
        ]
        assert det(x_minus) == charpoly(h)


def test_charpoly_is_monic_normalized_family():
    for n in range(1, 13):
        cp = charpoly(build_H(n))
        assert cp == build(SequenceKind.MONIC_PI, n, BuildMethod.MONIC_BERNOULLI)
        beta_n = build(SequenceKind.BETA, n, BuildMethod.RECURRENCE)
        assert cp == beta_n.scale(Fraction(1, n + 1))
        assert cp.leading_coefficient == 1


def test_trace_is_zero():
    for n in range(1, 13):
        h = build_H(n)
        assert sum(h.entries[i][i] for i in range(n)) == 0


def test_eigen_check_examples():
    assert eigen_check(1)
    assert eigen_check(2)
    assert eigen_check(8)


def test_matrix_json_round_trip():
    h2 = build_H(2)
    payload = json.loads(h2.json())
    assert payload == {"n": 2, "entries": [["0", "1/3"], ["1", "0"]]}
