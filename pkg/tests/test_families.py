"""Family builders, cross-method agreement, and generating functions."""
from fractions import Fraction
from math import factorial

import pytest

from arctanpoly.exact import GaussianInt, gaussian_pow
from arctanpoly.families import (
    BuildMethod,
    SequenceKind,
    UnsupportedPairError,
    build,
    build_sequence,
    cross_validate,
    family_values,
    verify_egf,
    verify_ogf,
)
from arctanpoly.poly import Polynomial

BETA_TABLE = [
    Polynomial((1,)),
    Polynomial((0, 2)),
    Polynomial((-1, 0, 3)),
    Polynomial((0, -4, 0, 4)),
    Polynomial((1, 0, -10, 0, 5)),
    Polynomial((0, 6, 0, -20, 0, 6)),
]

ALPHA_TABLE = [
    Polynomial((1,)),
    Polynomial((0, 1)),
    Polynomial((-1, 0, 1)),
    Polynomial((0, -3, 0, 1)),
    Polynomial((1, 0, -6, 0, 1)),
    Polynomial((0, 5, 0, -10, 0, 1)),
]


def test_first_six_members_match_reference_tables():
    for n in range(6):
        assert build(SequenceKind.BETA, n) == BETA_TABLE[n]
        assert build(SequenceKind.ALPHA, n) == ALPHA_TABLE[n]


def test_build_examples():
    assert build(SequenceKind.BETA, 2, BuildMethod.RECURRENCE) == Polynomial((-1, 0, 3))
    assert build(SequenceKind.BETA, 5, BuildMethod.EXPLICIT) == Polynomial((0, 6, 0, -20, 0, 6))
    assert build(SequenceKind.ALPHA, 4, BuildMethod.COMPLEX_POWER) == Polynomial((1, 0, -6, 0, 1))
    # P_2 = 2! * beta_2(-x)
    assert build(SequenceKind.P, 2, BuildMethod.DERIVATIVE_RECURRENCE) == Polynomial((-2, 0, 6))
    # pi_3 = beta_3 / 4
    assert build(SequenceKind.MONIC_PI, 3, BuildMethod.MONIC_BERNOULLI) == Polynomial((0, -1, 0, 1))
    assert build(SequenceKind.ALPHA, 2, BuildMethod.MONIC_BERNOULLI) == Polynomial((-1, 0, 1))


@pytest.mark.parametrize("method", list(BuildMethod))
def test_beta_zero_is_one_for_every_supported_method(method):
    if method is BuildMethod.MONIC_BERNOULLI:
        pytest.skip("no Bernoulli-recurrence route for the beta family")
    assert build(SequenceKind.BETA, 0, method) == Polynomial.one()


def test_unsupported_pairs_raise():
    with pytest.raises(UnsupportedPairError):
        build(SequenceKind.BETA, 3, BuildMethod.MONIC_BERNOULLI)
    with pytest.raises(UnsupportedPairError):
        build(SequenceKind.ALPHA, 3, BuildMethod.DERIVATIVE_RECURRENCE)
    with pytest.raises(UnsupportedPairError):
        build(SequenceKind.P, 3, BuildMethod.MATRIX_POWER)
    with pytest.raises(UnsupportedPairError):
        build(SequenceKind.MONIC_PI, 3, BuildMethod.EXPLICIT)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        build(SequenceKind.BETA, -1)


def test_cross_validation_all_methods_agree():
    for kind in (SequenceKind.BETA, SequenceKind.ALPHA, SequenceKind.P, SequenceKind.MONIC_PI):
        report = cross_validate(kind, 30)
        assert report.passed, report.summary()


def test_cross_validation_trivial_size():
    report = cross_validate(SequenceKind.P, 0)
    assert report.passed
    assert build(SequenceKind.P, 0, BuildMethod.DERIVATIVE_RECURRENCE) == Polynomial.one()


def test_single_builds_match_sequence_builds():
    for kind, methods in (
        (SequenceKind.BETA, BuildMethod),
        (SequenceKind.ALPHA, BuildMethod),
    ):
        for method in methods:
            try:
                seq = build_sequence(kind, 12, method)
            except UnsupportedPairError:
                continue
            for n in (0, 1, 7, 12):
                assert build(kind, n, method) == seq[n]


def test_values_match_gaussian_integer_powers():
    # beta_n(a) = Im((a+i)^(n+1)) and alpha_n(a) = Re((a+i)^n) for integers a
    for a in (-3, -1, 0, 2, 5):
        base = GaussianInt(a, 1)
        for n in range(25):
            beta_n = build(SequenceKind.BETA, n)
            alpha_n = build(SequenceKind.ALPHA, n)
            assert beta_n.evaluate(a) == gaussian_pow(base, n + 1).im
            assert alpha_n.evaluate(a) == gaussian_pow(base, n).re


def test_leading_coefficients_and_degrees():
    for n in range(40):
        assert build(SequenceKind.BETA, n).leading_coefficient == n + 1
        assert build(SequenceKind.ALPHA, n).leading_coefficient == 1
        assert build(SequenceKind.MONIC_PI, n).leading_coefficient == 1
        p_n = build(SequenceKind.P, n)
        assert p_n.leading_coefficient == (-1) ** n * factorial(n + 1)
        assert p_n.degree == n


def test_parity_symmetry():
    for n in range(40):
        for kind in (SequenceKind.BETA, SequenceKind.ALPHA):
            p = build(kind, n)
            flipped = Polynomial([(-1) ** k * c for k, c in enumerate(p.coefficients)])
            assert flipped == (-1) ** n * p


def test_p_is_factorial_times_reflected_beta():
    for n in range(30):
        beta = build(SequenceKind.BETA, n)
        reflected = Polynomial([(-1) ** k * c for k, c in enumerate(beta.coefficients)])
        assert build(SequenceKind.P, n, BuildMethod.COMPLEX_POWER) == factorial(n) * reflected


def test_interchange_identities():
    x = Polynomial.x()
    shell = Polynomial((1, 0, 1))
    for n in range(1, 40):
        alpha_n = build(SequenceKind.ALPHA, n)
        beta_n = build(SequenceKind.BETA, n)
        beta_prev = build(SequenceKind.BETA, n - 1)
        alpha_prev = build(SequenceKind.ALPHA, n - 1)
        assert alpha_n == beta_n - x * beta_prev
        assert beta_n == x * shell * alpha_prev - Polynomial((-1, 0, 1)) * alpha_n


def test_turan_identities():
    shell = Polynomial((1, 0, 1))
    for n in range(1, 30):
        beta = [build(SequenceKind.BETA, k) for k in (n - 1, n, n + 1)]
        alpha = [build(SequenceKind.ALPHA, k) for k in (n - 1, n, n + 1)]
        assert beta[1] * beta[1] - beta[0] * beta[2] == shell**n
        assert alpha[1] * alpha[1] - alpha[0] * alpha[2] == shell ** (n - 1)


def test_alternating_zero_coefficients():
    for n in range(40):
        beta = build(SequenceKind.BETA, n)
        for k in range(n + 1):
            if (n - k) % 2:
                assert beta.coefficient(k) == 0


def test_family_values_match_polynomials():
    x = Fraction(3, 7)
    betas = family_values(SequenceKind.BETA, x, 20)
    alphas = family_values(SequenceKind.ALPHA, x, 20)
    for n in range(20):
        assert betas[n] == build(SequenceKind.BETA, n).evaluate(x)
        assert alphas[n] == build(SequenceKind.ALPHA, n).evaluate(x)


def test_ogf_examples():
    assert verify_ogf(SequenceKind.BETA, Fraction(1), 5)
    assert family_values(SequenceKind.BETA, Fraction(1), 5) == [1, 2, 2, 0, -4]
    assert verify_ogf(SequenceKind.ALPHA, Fraction(0), 4)
    assert family_values(SequenceKind.ALPHA, Fraction(0), 4) == [1, 0, -1, 0]
    assert verify_ogf(SequenceKind.BETA, Fraction(0), 4)
    assert family_values(SequenceKind.BETA, Fraction(0), 4) == [1, 0, -1, 0]


def test_egf_examples():
    assert verify_egf(SequenceKind.BETA, Fraction(0), 6)
    assert verify_egf(SequenceKind.ALPHA, Fraction(0), 6)
    assert verify_egf(SequenceKind.BETA, Fraction(1), 5)


@pytest.mark.parametrize("x", [Fraction(0), Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(3)])
@pytest.mark.parametrize("kind", [SequenceKind.BETA, SequenceKind.ALPHA])
def test_generating_functions_at_reference_points(kind, x):
    assert verify_ogf(kind, x, 40)
    assert verify_egf(kind, x, 40)


def test_bernoulli_index_one_never_consumed(monkeypatch):
    # the Bernoulli-weighted recurrences only ever need |B_m| for m >= 2,
    # so the sign convention at index 1 cannot leak into any result
    import arctanpoly.families as fam
    import arctanpoly.hessenberg as hes
    from arctanpoly.exact import bernoulli as real_bernoulli

    requested = []

    def spy(n):
        requested.append(n)
        return real_bernoulli(n)

    monkeypatch.setattr(fam, "bernoulli", spy)
    monkeypatch.setattr(hes, "bernoulli", spy)
    fam._SEQUENCE_BUILDERS[(SequenceKind.MONIC_PI, BuildMethod.MONIC_BERNOULLI)](15)
    fam._SEQUENCE_BUILDERS[(SequenceKind.ALPHA, BuildMethod.MONIC_BERNOULLI)](15)
    hes.build_H(10)
    assert requested and 1 not in requested
    assert all(m % 2 == 0 or m >= 3 for m in requested)
