#!/usr/bin/env python3
"""Disk-sampled membership of catalog functions in the two classes.

The functional Phi(f) = (zf'/f + (zf'/f)^(1/lambda))/2 is evaluated on a
polar grid for a function and for its truncated inverse.  Margins are
compared against a geometric tail estimate of the truncation error, so a
verdict is only "pass" or "fail" when the data clears the noise floor; a
margin inside it stays "inconclusive".

z/(1-z) maps the disk onto a half-plane with Re(zf'/f) > 1/2, so re-type
membership flips between beta = 0.4 and beta = 0.6.
"""

from fractions import Fraction

from bifold import ClassSpec, check_membership, catalog

geo = catalog("geometric", 1, 240)

print("f = z/(1-z), re-type condition at lambda = 1:")
for beta in (Fraction(2, 5), Fraction(1, 2), Fraction(3, 5)):
    report = check_membership(geo, ClassSpec("re", beta=beta))
    f_side, g_side = report.f_report, report.g_report
    print(f"  beta = {str(beta):>4}: {report.verdict:>12}   "
          f"f-margin {f_side.worst_margin:+.4f} @ {f_side.witness:.3f}, "
          f"g-margin {g_side.worst_margin:+.4f}")

print()
print("arg-type condition on the same function:")
for alpha in (1, Fraction(1, 2), Fraction(3, 10)):
    report = check_membership(geo, ClassSpec("arg", alpha=alpha))
    print(f"  alpha = {str(alpha):>4}: {report.verdict:>12}   "
          f"worst margin {report.f_report.worst_margin:+.4f}")

print()
print("a deliberately coarse inverse truncation -> inconclusive, not pass:")
report = check_membership(catalog("geometric", 1, 60),
                          ClassSpec("re", beta=Fraction(11, 20)), g_order=8)
side = report.g_report
print(f"  margin {side.worst_margin:+.4f} vs tail estimate "
      f"{side.tail:.4f} -> {side.verdict}")
