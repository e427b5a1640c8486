"""tan multiples, Fibonacci and Lucas polynomials, matching polynomials.

tan(n arctan x) is a ratio of family members split by the parity of n;
Fibonacci/Lucas polynomials in any polynomial argument admit binomial
closed forms; matching polynomials of paths and cycles are Chebyshev
polynomials in x/2 and get triple-checked against brute-force enumeration
of independent edge sets.
"""
from fractions import Fraction

from arctanpoly import (
    FibonacciMethod,
    GraphFamily,
    GraphKind,
    MatchingMethod,
    fibonacci_poly,
    lucas_poly,
    matching_poly,
    tan_multiple,
)
from arctanpoly.exact import format_rational
from arctanpoly.poly import Polynomial

X = Polynomial.x()

print("=" * 72)
print("tan(n arctan x) AS EXACT RATIOS")
print("=" * 72)
for n in range(1, 7):
    ratio = tan_multiple(n)
    print(f"  n={n} ({ratio.parity:>4s}):  ({ratio.numerator.pretty()}) / ({ratio.denominator.pretty()})")
print("""
  Spot values: tan(3 arctan 1) = tan(3pi/4) = -1, and the n = 2 ratio has
  a pole at x = 1 exactly where tan(pi/2) blows up:""")
print(f"  tan_multiple(3).evaluate(1) = {format_rational(tan_multiple(3).evaluate(Fraction(1)))}")
print(f"  tan_multiple(2) denominator at 1 = {tan_multiple(2).denominator.evaluate(Fraction(1))}")

print()
print("=" * 72)
print("FIBONACCI AND LUCAS POLYNOMIALS, TWO WAYS")
print("=" * 72)
for n in range(1, 8):
    rec = fibonacci_poly(n, X, FibonacciMethod.RECURRENCE_ORACLE)
    closed = fibonacci_poly(n, X, FibonacciMethod.CLOSED_FORM)
    print(f"  F_{n}(x) = {rec.pretty():<22s} closed form agrees: {rec == closed}")
print()
for n in range(1, 8):
    rec = lucas_poly(n, X, FibonacciMethod.RECURRENCE_ORACLE)
    closed = lucas_poly(n, X, FibonacciMethod.CLOSED_FORM)
    print(f"  L_{n}(x) = {rec.pretty():<22s} closed form agrees: {rec == closed}")
fib_at_one = [fibonacci_poly(n, X).evaluate(Fraction(1)) for n in range(1, 9)]
lucas_at_one = [lucas_poly(n, X).evaluate(Fraction(1)) for n in range(1, 9)]
print(f"\n  F_n(1) = {fib_at_one}  (Fibonacci numbers)")
print(f"  L_n(1) = {lucas_at_one}  (Lucas numbers)")
print("  with a polynomial argument h = x^2 + 1:")
print(f"  F_4(h) = {fibonacci_poly(4, Polynomial((1, 0, 1))).pretty()}")

print()
print("=" * 72)
print("MATCHING POLYNOMIALS OF PATHS AND CYCLES")
print("=" * 72)
print("  three routes: enumeration of matchings, binomial closed form,")
print("  and U_n(x/2) (paths) or 2T_n(x/2) (cycles):\n")
for family, start in ((GraphFamily.PATH, 1), (GraphFamily.CYCLE, 3)):
    for n in range(start, start + 5):
        graph = GraphKind(family, n)
        enum = matching_poly(graph, MatchingMethod.ENUMERATION)
        closed = matching_poly(graph, MatchingMethod.CLOSED_FORM)
        transform = matching_poly(graph, MatchingMethod.CHEBYSHEV_TRANSFORM)
        tag = f"{family.value}-{n}"
        print(f"  M[{tag:>8s}] = {enum.pretty():<28s} all three agree: {enum == closed == transform}")
