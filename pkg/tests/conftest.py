import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from superheis.algebra import HeisenbergSpec
from superheis.scalar import GaussRational

EVEN_GRID = [(m, n) for m in range(5) for n in range(6) if m + n]
ODD_GRID = list(range(1, 7))


def all_specs():
    return ([HeisenbergSpec.even_center(m, n) for m, n in EVEN_GRID]
            + [HeisenbergSpec.odd_center(n) for n in ODD_GRID])


small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussRational, small_fractions, small_fractions)


def gaussian_matrix(rng, rows, cols, rank=None, bound=3):
    """Random matrix over Q(i), optionally of rank at most ``rank``."""
    def entry():
        return GaussRational(Fraction(rng.randint(-bound, bound), rng.randint(1, 3)), rng.randint(-bound, bound))

    if rank is None:
        return [[entry() for _ in range(cols)] for _ in range(rows)]
    left = [[entry() for _ in range(rank)] for _ in range(rows)]
    right = [[entry() for _ in range(cols)] for _ in range(rank)]
    return [[sum((left[i][k] * right[k][j] for k in range(rank)), GaussRational()) for j in range(cols)]
            for i in range(rows)]


@pytest.fixture
def rng():
    return random.Random(1234)
