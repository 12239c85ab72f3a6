#!/usr/bin/env python3
"""Coefficient-bound tables and their lambda = 1 reductions.

Tabulates the closed-form bounds on |a_{m+1}| and |a_{2m+1}| for both
classes over a small parameter grid, then verifies -- in exact rational
arithmetic on squared quantities, so no square roots are compared -- that
setting lambda = 1 reproduces the classical special-case formulas.
"""

from fractions import Fraction

from bifold import bound_alpha, bound_beta, verify_reductions

F = Fraction

print("arg-type bounds:")
print(f"{'m':>2} {'alpha':>6} {'lambda':>7} {'B1':>10} {'B2':>10}")
for m in (1, 2, 3):
    for alpha in (F(1, 2), F(1)):
        for lam in (F(1, 2), F(1)):
            b1, b2 = bound_alpha(m, alpha, lam)
            print(f"{m:>2} {str(alpha):>6} {str(lam):>7} {b1:>10.6f} "
                  f"{b2:>10.6f}")

print()
print("re-type bounds:")
print(f"{'m':>2} {'beta':>6} {'lambda':>7} {'B1':>10} {'B2':>10}")
for m in (1, 2, 3):
    for beta in (F(0), F(1, 2)):
        for lam in (F(1, 2), F(1)):
            b1, b2 = bound_beta(m, beta, lam)
            print(f"{m:>2} {str(beta):>6} {str(lam):>7} {b1:>10.6f} "
                  f"{b2:>10.6f}")

print()
rows = verify_reductions(range(1, 6),
                         [F(k, 5) for k in range(1, 6)],
                         [F(k, 5) for k in range(5)])
exact = sum(1 for r in rows if r["b1_sq_match"] and r["b2_match"])
print(f"lambda = 1 reduction identities: {exact}/{len(rows)} cells exact")
onefold = [r for r in rows if r["m"] == 1]
print(f"one-fold special cases:          "
      f"{sum(1 for r in onefold if r['onefold_match'])}/{len(onefold)} exact")
print()
b1, b2 = bound_alpha(1, 1, 1)
print(f"corner value check: B1 = {b1:.12f} (sqrt 2), B2 = {b2}")
