#!/usr/bin/env python3
"""How close does sampled data get to the coefficient bounds?

Seeded sweeps solve the coefficient system for thousands of constrained
pairs per parameter cell.  Samples that satisfy the full (overdetermined)
system -- the realizability filter -- must respect the class bounds; for
everything else only the coarser linear ceiling 4*lambda*t/(m(1+lambda))
applies.  The achieved/bound ratios quantify how much slack the bounds
leave; no attainability is claimed.  A hill climber then pushes |a_{m+1}|
toward the ceiling by moving atoms around.
"""

from bifold import hill_climb, sweep_cell

print("sweep (2000 samples + 25 constructed realizable pairs per cell):")
print(f"{'kind':>5} {'m':>2} {'lam':>5}  {'filtered max/B1':>15} "
      f"{'unfiltered max':>14} {'ceiling':>8} {'ok':>3}")
for kind, param in (("alpha", 1.0), ("beta", 0.0)):
    for m in (1, 2):
        for lam in (0.5, 1.0):
            rec = sweep_cell(kind, m, param, lam, 2000, seed="demo/sweep",
                             realizable=25)
            print(f"{kind:>5} {m:>2} {lam:>5}  "
                  f"{rec.ratio_a_m1:>15.4f} "
                  f"{rec.max_a_m1_unfiltered:>14.4f} "
                  f"{rec.ceiling:>8.4f} "
                  f"{'yes' if rec.ceiling_ok else 'NO':>3}")

print()
print("hill climb of |a_(m+1)| from a scattered start (alpha=1, lambda=1):")
for iterations in (0, 50, 200, 500):
    rec = hill_climb("alpha", 1, 1.0, 1.0, seed="demo/climb",
                     iterations=iterations)
    print(f"  {iterations:>4} iterations: best {rec.best_value:.6f} "
          f"of ceiling {rec.ceiling} "
          f"(ratio {rec.ceiling_ratio:.4f}, accepted {rec.accepted})")
