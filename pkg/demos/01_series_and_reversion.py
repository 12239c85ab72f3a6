#!/usr/bin/env python3
"""Truncated series arithmetic and compositional inversion, exactly.

Builds a handful of series over exact rationals, inverts them, and shows
that composing a function with its inverse returns the identity with zero
error: the coefficient recursion never touches floating point.
"""

from fractions import Fraction

from bifold import TruncatedSeries, geometric_series

F = Fraction

print("= exact series arithmetic =")
one = TruncatedSeries.one(8)
geo = one / TruncatedSeries.exact([1, -1] + [0] * 7)
print("1/(1-z)      :", [str(c) for c in geo.coeffs])
print("log(1/(1-z)) :", [str(c) for c in geo.log1().coeffs])
print("sqrt(1+z)    :",
      [str(c) for c in TruncatedSeries.exact([1, 1] + [0] * 6)
       .pow(F(1, 2)).coeffs])

print()
print("= reversion =")
f = TruncatedSeries.exact([0, 1, F(3, 7), F(-2, 5), F(1, 3), F(1, 2)])
g = f.revert()
print("f  :", [str(c) for c in f.coeffs])
print("g  :", [str(c) for c in g.coeffs])
print("f(g):", [str(c) for c in f.compose(g).coeffs], "  <- identity, exactly")
print("g(f):", [str(c) for c in g.compose(f).coeffs])

print()
print("= numeric evaluation =")
value = geometric_series(30).eval(0.5)
print(f"sum of 0.5^n to order 30 = {value.real:.12f} (closed form 2, "
      f"truncation gap {abs(value - 2):.2e})")
