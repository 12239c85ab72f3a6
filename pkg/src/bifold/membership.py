"""Class-membership functionals and disk-sampled membership checks.

Both function classes are carved out by the same functional

    Phi(f)(z) = (1/2) * ( z f'(z)/f(z) + (z f'(z)/f(z))^(1/lambda) ),

an arg-type condition |arg Phi| < alpha*pi/2 or a re-type condition
Re Phi > beta, imposed on f and on its inverse g.  On the series side the
fractional power is computed through log/exp around the constant term 1
(which is Phi(0) and keeps the principal branch well defined near the
origin); at lambda = 1 the two summands coincide and Phi is exactly
z f'/f.

Membership is *sampled*, not certified: the functional is evaluated on a
polar grid for f and for the truncated reversion g.  Because g only exists
as a truncated series, its grid radius is capped and every margin is
weighed against a crude geometric tail estimate of the truncation error;
margins inside the noise floor yield the verdict "inconclusive" rather
than pass or fail.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .series import EXACT, TruncatedSeries

__all__ = [
    "ClassSpec",
    "phi",
    "arg_margin",
    "re_margin",
    "check_membership",
    "MembershipReport",
    "SideReport",
    "tail_estimate",
    "DEFAULT_RADII",
    "G_SIDE_RADIUS_CAP",
]

DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95)
DEFAULT_ANGLES = 720
G_SIDE_RADIUS_CAP = 0.7


@dataclass(frozen=True)
class ClassSpec:
    """Parameters of one membership condition.

    kind "arg": |arg Phi| < alpha*pi/2 with 0 < alpha <= 1.
    kind "re":  Re Phi > beta with 0 <= beta < 1.
    Both take 0 < lambda <= 1; lambda = 1 reduces Phi to z f'/f.
    """

    kind: str
    m: int = 1
    lam: object = 1
    alpha: object = None
    beta: object = None

    def __post_init__(self):
        if self.kind not in ("arg", "re"):
            raise ValueError(f"kind must be 'arg' or 're', got {self.kind!r}")
        if self.m < 1:
            raise ValueError("fold order m must be >= 1")
        if not 0 < self.lam <= 1:
            raise ValueError(f"lambda must lie in (0, 1], got {self.lam!r}")
        if self.kind == "arg":
            if self.alpha is None or not 0 < self.alpha <= 1:
                raise ValueError(f"arg-type needs alpha in (0, 1], "
                                 f"got {self.alpha!r}")
        else:
            if self.beta is None or not 0 <= self.beta < 1:
                raise ValueError(f"re-type needs beta in [0, 1), "
                                 f"got {self.beta!r}")

    @property
    def param(self):
        return self.alpha if self.kind == "arg" else self.beta

    def describe(self) -> str:
        name = "alpha" if self.kind == "arg" else "beta"
        return f"{self.kind}-type(m={self.m}, {name}={self.param}, lambda={self.lam})"


def phi(f: TruncatedSeries, lam) -> TruncatedSeries:
    """Series of the membership functional of a normalized f.

    Constant term 1; for an m-fold f only exponents divisible by m appear.
    With rational lam on the exact backend the result is exact.
    """
    if not f.is_normalized():
        raise ValueError("the membership functional needs a normalized series")
    if not 0 < lam <= 1:
        raise ValueError(f"lambda must lie in (0, 1], got {lam!r}")
    ratio = f.derivative().shift_up(1) / f  # z f'/f, constant term 1
    if lam == 1:
        return ratio
    if f.backend == EXACT:
        exponent = 1 / Fraction(lam)
        half = Fraction(1, 2)
    else:
        exponent = 1.0 / float(lam)
        half = 0.5
    return (ratio + ratio.pow(exponent)) * half


def arg_margin(value, spec: ClassSpec) -> float:
    """alpha*pi/2 - |arg value|, principal branch in (-pi, pi]."""
    if value == 0:
        return float("-inf")  # argument undefined: report as violated
    return float(spec.alpha) * math.pi / 2 - abs(cmath.phase(complex(value)))


def re_margin(value, spec: ClassSpec) -> float:
    """Re value - beta."""
    return complex(value).real - float(spec.beta)


def tail_estimate(series: TruncatedSeries, radius: float, window=6) -> float:
    """Crude geometric extrapolation of the truncation error at |z| = radius.

    Looks at the trailing ``window`` coefficient magnitudes, takes the
    largest ratio of consecutive nonzero ones as the growth rate rho, and
    bounds the tail by |c_N| r^N * q/(1-q) with q = rho*r.  Infinite when
    the extrapolated terms do not decay.  Identically zero series tails
    are zero.
    """
    coeffs = [abs(complex(c)) for c in series.coeffs]
    n = series.order
    last = coeffs[max(0, n + 1 - window):]
    top = max(last)
    if top == 0.0:
        return 0.0
    ratios = [b / a for a, b in zip(last, last[1:]) if a > 0 and b > 0]
    rho = max(ratios) if ratios else 1.0
    rho = max(rho, 1e-3)
    q = rho * radius
    if q >= 1.0:
        return float("inf")
    lead = max(c * radius ** (n - (len(last) - 1 - i))
               for i, c in enumerate(last))
    return lead * q / (1.0 - q)


@dataclass
class SideReport:
    """Grid outcome for one side (f itself or its truncated inverse g)."""

    side: str
    verdict: str  # pass | fail | inconclusive
    worst_margin: float
    witness: complex  # location of the worst margin
    witness_value: complex  # Phi at the witness
    radii: tuple
    tail: float  # tail estimate at the worst-margin radius
    nonpositive_ratio_points: int  # samples where Re(z f'/f) <= 0


@dataclass
class MembershipReport:
    spec: ClassSpec
    f_report: SideReport
    g_report: SideReport
    order: int

    @property
    def verdict(self) -> str:
        sides = (self.f_report.verdict, self.g_report.verdict)
        if "fail" in sides:
            return "fail"
        if "inconclusive" in sides:
            return "inconclusive"
        return "pass"


def _margins(values, spec):
    if spec.kind == "arg":
        out = np.pi / 2 * float(spec.alpha) - np.abs(np.angle(values))
        out = np.where(values == 0, -np.inf, out)
        return out
    return values.real - float(spec.beta)


def _scan_side(side, phi_series, ratio_series, spec, radii, angles):
    worst = math.inf
    worst_point = 0j
    worst_value = 0j
    worst_tail = 0.0
    flagged = 0
    all_clear = True
    for r in radii:
        theta = 2.0 * np.pi * np.arange(angles) / angles
        points = r * np.exp(1j * theta)
        values = phi_series.eval_many(points)
        margins = _margins(values, spec)
        flagged += int(np.count_nonzero(
            ratio_series.eval_many(points).real <= 0))
        tail = tail_estimate(phi_series, r)
        idx = int(np.argmin(margins))
        local = float(margins[idx])
        if local < worst:
            worst = local
            worst_point = complex(points[idx])
            worst_value = complex(values[idx])
            worst_tail = tail
        if not np.all(margins > tail):
            all_clear = False
    if worst < -worst_tail:
        verdict = "fail"  # a definite witness: below zero by more than noise
    elif all_clear:
        verdict = "pass"
    else:
        verdict = "inconclusive"
    return SideReport(side=side, verdict=verdict, worst_margin=worst,
                      witness=worst_point, witness_value=worst_value,
                      radii=tuple(radii), tail=worst_tail,
                      nonpositive_ratio_points=flagged)


def check_membership(f, spec: ClassSpec, radii=DEFAULT_RADII,
                     angles=DEFAULT_ANGLES, order=None,
                     g_order=32) -> MembershipReport:
    """Sample the membership condition for f and its truncated inverse.

    ``f`` is a normalized TruncatedSeries on either backend or an object
    with a ``to_series`` method.  Passing ``order`` above f's own order
    zero-pads the coefficients, which is only sound when f really is the
    polynomial its truncation shows.

    The inverse side runs on radii capped at 0.7 and at a moderate
    truncation (``g_order``): reversion amplifies cancellation, so high
    float orders are noise, while the capped radius makes modest orders
    accurate.  When f is exact the reversion itself is done exactly.
    Every margin is compared against the geometric tail estimate; margins
    inside the estimate give "inconclusive".
    """
    if hasattr(f, "to_series"):
        f = f.to_series(order)
    if order is not None and order > f.order:
        zero = Fraction(0) if f.backend == EXACT else 0j
        f = TruncatedSeries(list(f.coeffs) + [zero] * (order - f.order),
                            backend=f.backend)
    if not f.is_normalized():
        raise ValueError("membership checks need a normalized function")
    if spec.m > 1:
        for n in range(2, f.order + 1):
            if (n - 1) % spec.m != 0 and f.coeffs[n] != 0:
                raise ValueError(f"series is not {spec.m}-fold symmetric")
    g = f.truncate(min(f.order, g_order)).revert().to_float()
    f = f.to_float()
    ratio_f = f.derivative().shift_up(1) / f
    phi_f = phi(f, spec.lam)
    ratio_g = g.derivative().shift_up(1) / g
    phi_g = phi(g, spec.lam)
    g_radii = sorted({min(r, G_SIDE_RADIUS_CAP) for r in radii})
    f_report = _scan_side("f", phi_f, ratio_f, spec, tuple(radii), angles)
    g_report = _scan_side("g", phi_g, ratio_g, spec, tuple(g_radii), angles)
    return MembershipReport(spec=spec, f_report=f_report, g_report=g_report,
                            order=f.order)
