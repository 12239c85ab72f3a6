#!/usr/bin/env python3
"""Sampling the Caratheodory class and checking its coefficient inequalities.

Finite Herglotz mixtures (convex combinations of Moebius kernels with
unimodular atoms) are positive-real-part functions by construction, so the
classical inequalities |p_n| <= 2 and |p_2 - p_1^2/2| <= 2 - |p_1|^2/2 must
hold for every sample; watching them hold validates the expansion code.
Single atoms sit on the equality case.
"""

from bifold import check_lemma1, sample

print(f"{'seed':>4} {'atoms':>5} {'m':>2}  {'|p_m|':>8} {'|p_2m|':>8} "
      f"{'|p_3m|':>8}  {'second lhs':>10} {'<=':>2} {'rhs':>8}  ok")
print("-" * 70)
for seed in range(12):
    atoms = 1 + seed % 5
    m = 1 + seed % 3
    fn = sample(seed, atoms, m)
    rep = check_lemma1(fn, depth=3)
    mags = [mag for _, mag, _ in rep.magnitudes]
    print(f"{seed:>4} {atoms:>5} {m:>2}  {mags[0]:>8.5f} {mags[1]:>8.5f} "
          f"{mags[2]:>8.5f}  {rep.second_lhs:>10.5f} {'<=':>2} "
          f"{rep.second_rhs:>8.5f}  {'yes' if rep.ok else 'NO'}")

print()
single = sample(99, 1, 1)
print(f"single atom: |p_1| = {abs(single.coefficient(1)):.15f} "
      "(the extremal value 2)")

grid_min = min(single.eval(0.9 * complex(1, k / 7)).real
               for k in range(-7, 8))
print(f"positive real part spot check: min Re p on a few points = "
      f"{grid_min:.4f} > 0")
