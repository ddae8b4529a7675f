import random

import pytest

from superheis.algebra import HeisenbergSpec
from superheis.degenerations import corrupt, random_degeneration, random_even_invertible
from superheis.graded import SuperDim, SuperMatrix
from superheis.representation import is_faithful, minimal_representations, verify_representation

from conftest import all_specs


@pytest.mark.parametrize("spec", all_specs()[::3], ids=str)
def test_degenerations_are_representations(spec):
    rng = random.Random(str(spec))
    reps = minimal_representations(spec)
    seen = set()
    for _ in range(15):
        d, what = random_degeneration(rng.choice(reps), rng)
        assert verify_representation(d).ok, what
        f = is_faithful(d)
        assert f == (not d.z_image.is_zero())
        seen.add(f)
    assert seen  # both outcomes usually appear; at least one does


def test_both_outcomes_occur():
    rng = random.Random(0)
    r = minimal_representations(HeisenbergSpec.even_center(1, 1))[0]
    outcomes = {is_faithful(random_degeneration(r, rng)[0]) for _ in range(40)}
    assert outcomes == {True, False}


@pytest.mark.parametrize("dim", [SuperDim(3, 1), SuperDim(0, 2), SuperDim(1, 0)])
def test_even_invertible(dim):
    p, q = random_even_invertible(dim, random.Random(3))
    assert p @ q == SuperMatrix.identity(dim)
    assert p.parity() == 0


def test_corrupt_breaks_homomorphism():
    r = minimal_representations(HeisenbergSpec.odd_center(2))[0]
    assert not verify_representation(corrupt(r)).ok
