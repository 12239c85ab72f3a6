import random
import time
from fractions import Fraction

import pytest

from bifold.mfold import MFoldFunction


def random_mfold(rng, m, depth=3, span=9):
    coeffs = [Fraction(rng.randint(-span, span), rng.randint(1, span))
              for _ in range(depth)]
    return MFoldFunction(m, coeffs)


@pytest.fixture(scope="session")
def inversion_ensemble():
    """(m, function, series, reverted series) for m in 1..6, 100 draws each.

    Shared by the inversion-identity and closed-form acceptance criteria so
    the reversion work is done once.  ``elapsed`` is the build time.
    """
    t0 = time.perf_counter()
    data = []
    for m in range(1, 7):
        rng = random.Random(f"ensemble/inversion/{m}")
        for _ in range(100):
            fn = random_mfold(rng, m)
            f = fn.to_series(3 * m + 2)
            g = f.revert()
            data.append((m, fn, f, g))
    return data, time.perf_counter() - t0
