"""How the families are Chebyshev polynomials after clearing a square root.

beta_n(x) = (1+x^2)^(n/2) U_n(x/sqrt(1+x^2)) and the same statement holds
for alpha_n with T_n.  The half powers cancel because U_n and T_n only
carry every other monomial, so the bridge is exact polynomial algebra.
A tridiagonal determinant identity makes the connection concrete.
"""
from fractions import Fraction

from arctanpoly import (
    ChebyshevKind,
    SequenceKind,
    alpha_from_chebyshev,
    beta_from_chebyshev,
    build,
    chebyshev,
    tridiag_det,
    trig_spot_check,
)
from arctanpoly.poly import Polynomial

print("=" * 72)
print("CHEBYSHEV POLYNOMIALS OF BOTH KINDS")
print("=" * 72)
for n in range(6):
    t = chebyshev(ChebyshevKind.FIRST_KIND, n)
    u = chebyshev(ChebyshevKind.SECOND_KIND, n)
    print(f"  T_{n} = {t.pretty():<28s} U_{n} = {u.pretty()}")

print()
print("=" * 72)
print("BRIDGES INTO THE FAMILIES")
print("=" * 72)
for n in range(7):
    bridged = beta_from_chebyshev(n)
    direct = build(SequenceKind.BETA, n)
    print(f"  beta_{n}: bridge {bridged.pretty():<30s} equal to direct: {bridged == direct}")
for n in range(7):
    bridged = alpha_from_chebyshev(n)
    direct = build(SequenceKind.ALPHA, n)
    print(f"  alpha_{n}: bridge {bridged.pretty():<29s} equal to direct: {bridged == direct}")

print()
print("=" * 72)
print("TRIDIAGONAL DETERMINANTS")
print("=" * 72)
print("""
The n x n tridiagonal determinant with diagonal b, superdiagonal c and
subdiagonal a equals s^n U_n(b/(2s)) whenever ac = s^2:""")
for a, b, c, n in ((1, Fraction(3), 4, 2), (1, Fraction(2), 1, 3), (4, Fraction(-5, 2), 9, 4)):
    det = tridiag_det(Fraction(a), b, Fraction(c), n)
    s = int((a * c) ** 0.5)
    u = chebyshev(ChebyshevKind.SECOND_KIND, n).evaluate(b / (2 * s))
    print(f"  (a={a}, b={b}, c={c}, n={n}): det = {det},  s^n U_n(b/2s) = {Fraction(s) ** n * u}")

print("""
Run in the polynomial ring with (a, b, c) = (-1, 2x, -(1+x^2)) the same
recurrence reproduces beta_n:""")
det = tridiag_det(Polynomial((-1,)), Polynomial((0, 2)), Polynomial((-1, 0, -1)), 5)
print(f"  5x5 determinant: {det.pretty()}")
print(f"  beta_5:          {build(SequenceKind.BETA, 5).pretty()}")

print("\n  cot nodes annihilate beta_n (numeric spot checks):")
for n, k in ((2, 1), (3, 2), (4, 4), (12, 5)):
    print(f"    beta_{n}(cot({k}*pi/{n + 1})) ~ 0: {trig_spot_check(n, k)}")
