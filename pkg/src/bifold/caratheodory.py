"""Positive-real-part functions built from finite Herglotz atom mixtures.

A function here is a convex combination of Moebius kernels,

    p(z) = sum_j  w_j * (1 + zeta_j z^m) / (1 - zeta_j z^m),

with nonnegative weights summing to 1 and unimodular points zeta_j.  Such a
mixture always has p(0) = 1 and positive real part on the unit disk, so the
classical coefficient inequalities (|p_n| <= 2 and the sharpened bound on
p_2 - p_1^2/2) hold by construction; checking them validates the series
machinery rather than the sampler.  The expansion has nonzero coefficients
only at exponents divisible by the fold order m, with p_{km} = 2 sum_j w_j
zeta_j^k.

The empty atom set denotes the constant function p = 1 (the limit of the
uniform measure on the circle, which no finite mixture reaches).

Two backends: float atoms (complex points on the circle), and exact atoms
with Fraction weights and rational unimodular points (1 - t^2 + 2ti)/(1 + t^2)
so that every expansion coefficient is an exact QComplex.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .series import EXACT, FLOAT, QComplex, TruncatedSeries

__all__ = [
    "CaratheodoryFunction",
    "unimodular_exact",
    "sample",
    "sample_exact",
    "constrained_pair",
    "check_lemma1",
    "Lemma1Report",
    "zero_moment_base",
    "with_moments",
    "solve_linear_exact",
]


def unimodular_exact(t) -> QComplex:
    """Rational point on the unit circle from the tangent-half parameter t."""
    t = Fraction(t)
    d = 1 + t * t
    return QComplex((1 - t * t) / d, 2 * t / d)


class CaratheodoryFunction:
    """Finite Herglotz mixture with fold order m."""

    __slots__ = ("atoms", "fold", "backend")

    def __init__(self, atoms, fold=1, backend=None):
        atoms = tuple((w, z) for (w, z) in atoms)
        if fold < 1:
            raise ValueError("fold order must be a positive integer")
        if backend is None:
            backend = EXACT if all(
                isinstance(w, (int, Fraction)) and isinstance(z, QComplex)
                for (w, z) in atoms) else FLOAT
        if backend == EXACT:
            atoms = tuple((Fraction(w), z) for (w, z) in atoms)
            for w, z in atoms:
                if not isinstance(z, QComplex) or z.abs2() != 1:
                    raise ValueError("exact atoms need exact unimodular points")
                if w < 0:
                    raise ValueError("atom weights must be nonnegative")
            if atoms and sum(w for w, _ in atoms) != 1:
                raise ValueError("atom weights must sum to 1")
        else:
            atoms = tuple((float(w), complex(z)) for (w, z) in atoms)
            for w, z in atoms:
                if w < -1e-15:
                    raise ValueError("atom weights must be nonnegative")
                if abs(abs(z) - 1.0) > 1e-12:
                    raise ValueError("atom points must be unimodular")
            if atoms and abs(sum(w for w, _ in atoms) - 1.0) > 1e-12:
                raise ValueError("atom weights must sum to 1")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "fold", int(fold))
        object.__setattr__(self, "backend", backend)

    def __setattr__(self, name, value):
        raise AttributeError("CaratheodoryFunction is immutable")

    @classmethod
    def constant_one(cls, fold=1, backend=EXACT):
        """p = 1: every coefficient zero."""
        return cls((), fold=fold, backend=backend)

    def coefficient(self, k):
        """p_{km} = 2 sum_j w_j zeta_j^k (the k-th atom moment, doubled)."""
        if k < 1:
            raise IndexError("coefficient index must be >= 1")
        if self.backend == EXACT:
            acc = QComplex(0)
            for w, z in self.atoms:
                acc = acc + w * z ** k
            return acc + acc
        acc = 0j
        for w, z in self.atoms:
            acc += w * _powi(z, k)
        return acc + acc

    def moments(self, depth):
        """[p_m, p_2m, ..., p_{depth*m}]."""
        return [self.coefficient(k) for k in range(1, depth + 1)]

    def expand(self, order) -> TruncatedSeries:
        """Series 1 + p_m z^m + p_2m z^2m + ... truncated at ``order``."""
        m = self.fold
        entries = {0: QComplex(1) if self.backend == EXACT else 1 + 0j}
        for k in range(1, order // m + 1):
            entries[k * m] = self.coefficient(k)
        return TruncatedSeries.from_dict(entries, order, backend=self.backend)

    def eval(self, z) -> complex:
        """Pointwise value sum_j w_j (1 + zeta z^m)/(1 - zeta z^m)."""
        zm = complex(z) ** self.fold
        acc = 0j
        for w, zeta in self.atoms:
            u = complex(zeta) * zm
            acc += complex(w) * (1 + u) / (1 - u)
        if not self.atoms:
            return 1 + 0j
        return acc

    def reflect(self):
        """Atom map zeta -> -zeta (negates odd moments exactly)."""
        return CaratheodoryFunction(
            tuple((w, -z) for (w, z) in self.atoms),
            fold=self.fold, backend=self.backend)

    def __repr__(self):
        return (f"CaratheodoryFunction({len(self.atoms)} atoms, "
                f"fold={self.fold}, backend={self.backend!r})")


def _powi(z: complex, k: int) -> complex:
    """Iterated multiplication: keeps sign symmetries bit-exact in floats."""
    acc = 1 + 0j
    for _ in range(k):
        acc *= z
    return acc


# ----------------------------------------------------------------------
# sampling


def sample(seed, atom_count, m=1) -> CaratheodoryFunction:
    """Seeded float sample: simplex weights, uniform circle points."""
    if atom_count < 1:
        raise ValueError("atom count must be >= 1")
    rng = random.Random(seed)
    raw = [rng.expovariate(1.0) for _ in range(atom_count)]
    total = sum(raw)
    weights = [r / total for r in raw]
    points = [cmath.exp(2j * cmath.pi * rng.random())
              for _ in range(atom_count)]
    return CaratheodoryFunction(zip(weights, points), fold=m, backend=FLOAT)


def sample_exact(seed, atom_count, m=1, t_range=24) -> CaratheodoryFunction:
    """Seeded exact sample: rational weights, rational unimodular points."""
    if atom_count < 1:
        raise ValueError("atom count must be >= 1")
    rng = random.Random(seed)
    raw = [rng.randint(1, 60) for _ in range(atom_count)]
    total = sum(raw)
    weights = [Fraction(r, total) for r in raw]
    points = [unimodular_exact(Fraction(rng.randint(-t_range, t_range),
                                        rng.randint(1, t_range)))
              for _ in range(atom_count)]
    return CaratheodoryFunction(zip(weights, points), fold=m, backend=EXACT)


# ----------------------------------------------------------------------
# exact linear algebra (small systems)


def solve_linear_exact(matrix, rhs):
    """Gaussian elimination over Fractions; raises on singular systems."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(v)]
         for row, v in zip(matrix, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular linear system")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _solve_linear_float(matrix, rhs):
    import numpy as np

    try:
        sol = np.linalg.solve(np.asarray(matrix, dtype=float),
                              np.asarray(rhs, dtype=float))
    except np.linalg.LinAlgError:
        raise ZeroDivisionError("singular linear system")
    return [float(x) for x in sol]


# ----------------------------------------------------------------------
# constrained pairs: p_m = -q_m


def _subseed(seed, *tags) -> str:
    """String sub-seed: random.Random hashes strings stably (sha512)."""
    return "/".join([repr(seed), *map(str, tags)])


def _tail_atoms(rng, count, s, backend):
    """Self-cancelling pairs ((s*u/2, xi), (s*u/2, -xi)) of total weight s.

    Each pair contributes zero to the first atom moment.  Summed first and
    pairwise-adjacent, the cancellation is exact even in floats: the
    accumulator returns to exactly 0.0 after every pair.
    """
    if backend == EXACT:
        raw = [Fraction(rng.randint(1, 60)) for _ in range(count)]
        total = sum(raw)
        points = [unimodular_exact(Fraction(rng.randint(-24, 24),
                                            rng.randint(1, 24)))
                  for _ in range(count)]
        half = [s * u / (2 * total) for u in raw]
    else:
        raw = [rng.expovariate(1.0) for _ in range(count)]
        total = sum(raw)
        points = [cmath.exp(2j * cmath.pi * rng.random())
                  for _ in range(count)]
        half = [s * u / (2 * total) for u in raw]
    atoms = []
    for h, xi in zip(half, points):
        atoms.append((h, xi))
        atoms.append((h, -xi))
    return atoms


def constrained_pair(seed, m, atom_count=3, backend=FLOAT, tail_pairs=None):
    """A seeded (p, q) pair whose first coefficients cancel: p_m = -q_m.

    The two functions share an antisymmetric core: identical weights with
    points zeta on the p side and -zeta on the q side, which negates the
    first atom moment termwise (sign flips are exact in both backends, so
    the constraint holds with zero residual, floats included).  Each side
    additionally carries its own self-cancelling tail pairs, which add
    nothing to the first moment but decouple the second ones, so p_2m and
    q_2m stay independent and the pair ensemble is not artificially thin.
    """
    if atom_count < 1:
        raise ValueError("atom count must be >= 1")
    if tail_pairs is None:
        tail_pairs = max(1, atom_count // 2)
    rng = random.Random(_subseed(seed, m, backend, "pair"))
    if backend == EXACT:
        s = Fraction(rng.randint(1, 3), 4)  # tail weight share
        raw = [Fraction(rng.randint(1, 60)) for _ in range(atom_count)]
        total = sum(raw)
        core_weights = [(1 - s) * r / total for r in raw]
        core_points = [unimodular_exact(Fraction(rng.randint(-24, 24),
                                                 rng.randint(1, 24)))
                       for _ in range(atom_count)]
    else:
        s = rng.randint(1, 3) / 4.0
        raw = [rng.expovariate(1.0) for _ in range(atom_count)]
        total = sum(raw)
        core_weights = [(1 - s) * r / total for r in raw]
        core_points = [cmath.exp(2j * cmath.pi * rng.random())
                       for _ in range(atom_count)]
    p_atoms = _tail_atoms(rng, tail_pairs, s, backend)
    q_atoms = _tail_atoms(rng, tail_pairs, s, backend)
    for w, zeta in zip(core_weights, core_points):
        p_atoms.append((w, zeta))
        q_atoms.append((w, -zeta))
    p = CaratheodoryFunction(p_atoms, fold=m, backend=backend)
    q = CaratheodoryFunction(q_atoms, fold=m, backend=backend)
    return p, q


# ----------------------------------------------------------------------
# coefficient inequalities


@dataclass
class Lemma1Report:
    """Outcome of the classical coefficient inequalities for one function."""

    fold: int
    magnitudes: list = field(default_factory=list)  # (k, |p_km|, ok)
    second_lhs: float = 0.0
    second_rhs: float = 0.0
    second_ok: bool = True
    tolerance: float = 1e-12

    @property
    def ok(self) -> bool:
        return self.second_ok and all(ok for (_, _, ok) in self.magnitudes)

    @property
    def violations(self):
        out = [(k, mag) for (k, mag, ok) in self.magnitudes if not ok]
        if not self.second_ok:
            out.append(("second", self.second_lhs - self.second_rhs))
        return out


def check_lemma1(p: CaratheodoryFunction, depth=2,
                 tolerance=1e-12) -> Lemma1Report:
    """Check |p_{km}| <= 2 for k <= depth and the second-coefficient bound.

    The second inequality compares |p_{2m} - p_m^2/2| against 2 - |p_m|^2/2,
    i.e. it is applied to the first two nonzero coefficients of the m-fold
    expansion.  On the exact backend the comparisons are exact (squared
    forms); on floats they carry ``tolerance``.  A violation is reported,
    not raised.
    """
    if depth < 2:
        raise ValueError("the second inequality needs depth >= 2")
    report = Lemma1Report(fold=p.fold, tolerance=tolerance)
    moments = p.moments(depth)
    exact = p.backend == EXACT
    for k, value in enumerate(moments, start=1):
        if exact:
            ok = value.abs2() <= 4
        else:
            ok = abs(value) <= 2 + tolerance
        report.magnitudes.append((k, abs(value), ok))
    p1, p2 = moments[0], moments[1]
    diff = p2 - p1 * p1 / 2
    if exact:
        rhs = 2 - p1.abs2() / 2
        report.second_ok = rhs >= 0 and diff.abs2() <= rhs * rhs
        report.second_lhs = abs(diff)
        report.second_rhs = float(rhs)
    else:
        rhs = 2 - abs(p1) ** 2 / 2
        report.second_lhs = abs(diff)
        report.second_rhs = rhs
        report.second_ok = abs(diff) <= rhs + tolerance
    return report


# ----------------------------------------------------------------------
# a fixed exact mixture with vanishing first and second moments


_BASE_POINTS = (
    QComplex(1, 0),
    QComplex(0, 1),
    QComplex(-1, 0),
    QComplex(0, -1),
    QComplex(Fraction(3, 5), Fraction(4, 5)),
    QComplex(Fraction(3, 5), Fraction(-4, 5)),
)

_BASE_WEIGHTS = (
    Fraction(24, 192),
    Fraction(32, 192),
    Fraction(54, 192),
    Fraction(32, 192),
    Fraction(25, 192),
    Fraction(25, 192),
)


def zero_moment_base(fold=1, backend=EXACT) -> CaratheodoryFunction:
    """Six-atom mixture whose first and second atom moments vanish exactly.

    Useful as a neutral carrier: mixing any sample with it scales the first
    two expansion coefficients without leaving the class.
    """
    if backend == EXACT:
        atoms = tuple(zip(_BASE_WEIGHTS, _BASE_POINTS))
    else:
        atoms = tuple((float(w), complex(z))
                      for w, z in zip(_BASE_WEIGHTS, _BASE_POINTS))
    return CaratheodoryFunction(atoms, fold=fold, backend=backend)


def with_moments(c1, c2, fold=1, backend=EXACT) -> CaratheodoryFunction:
    """Mixture on the six fixed base points with prescribed atom moments.

    Finds weights w = base + delta with sum(delta) = 0, sum(delta*zeta) = c1
    and sum(delta*zeta^2) = c2 (so the expansion has p_m = 2*c1 and
    p_2m = 2*c2).  The 5x5 linear system is solved exactly on the exact
    backend.  Raises ValueError when a weight would leave [0, 1]; callers
    shrink the targets and retry.
    """
    if backend == EXACT:
        c1 = c1 if isinstance(c1, QComplex) else QComplex(c1)
        c2 = c2 if isinstance(c2, QComplex) else QComplex(c2)
        pts = _BASE_POINTS
        matrix = [[Fraction(1)] * 5,
                  [p.re for p in pts[:5]],
                  [p.im for p in pts[:5]],
                  [(p * p).re for p in pts[:5]],
                  [(p * p).im for p in pts[:5]]]
        rhs = [Fraction(0), c1.re, c1.im, c2.re, c2.im]
        delta = solve_linear_exact(matrix, rhs) + [Fraction(0)]
        weights = [w + d for w, d in zip(_BASE_WEIGHTS, delta)]
        if any(w < 0 for w in weights):
            raise ValueError("prescribed moments leave the weight simplex")
        return CaratheodoryFunction(zip(weights, pts), fold=fold,
                                    backend=EXACT)
    c1, c2 = complex(c1), complex(c2)
    pts = [complex(p) for p in _BASE_POINTS]
    matrix = [[1.0] * 5,
              [p.real for p in pts[:5]],
              [p.imag for p in pts[:5]],
              [(p * p).real for p in pts[:5]],
              [(p * p).imag for p in pts[:5]]]
    rhs = [0.0, c1.real, c1.imag, c2.real, c2.imag]
    delta = _solve_linear_float(matrix, rhs) + [0.0]
    weights = [float(w) + d for w, d in zip(_BASE_WEIGHTS, delta)]
    if any(w < 0 for w in weights):
        raise ValueError("prescribed moments leave the weight simplex")
    return CaratheodoryFunction(zip(weights, pts), fold=fold, backend=FLOAT)
