import random

import pytest
from hypothesis import given, settings, strategies as st

from superheis.graded import (
    GradedVector, SuperDim, SuperMatrix, Subspace, direct_sum, flip_permutation, kernel, matrix_unit,
    parity_flip, rank, super_commutator,
)
from superheis.scalar import HALF, I, ONE, ZERO, GaussRational

from conftest import gaussian_matrix


def plain_mul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]


def random_homogeneous(rng, dim, parity, density=0.5):
    items = {}
    n = dim.total()
    for r in range(n):
        for c in range(n):
            if dim.parity(r) ^ dim.parity(c) == parity and rng.random() < density:
                items[(r, c)] = GaussRational(rng.randint(-3, 3), rng.randint(-2, 2))
    return SuperMatrix.from_sparse(dim, items)


dims = st.builds(SuperDim, st.integers(0, 3), st.integers(0, 3)).filter(lambda d: d.total() > 0)


@pytest.mark.parametrize("dim, r, c, parity", [
    (SuperDim(3, 1), 1, 3, 0),
    (SuperDim(1, 1), 1, 2, 1),
    (SuperDim(2, 0), 2, 1, 0),
])
def test_matrix_unit_parity(dim, r, c, parity):
    e = matrix_unit(dim, r, c)
    assert e.parity() == parity
    assert e.nonzero() == [(r - 1, c - 1, ONE)]


@pytest.mark.parametrize("r, c", [(0, 1), (1, 5), (4, 4)])
def test_matrix_unit_out_of_range(r, c):
    with pytest.raises(IndexError):
        matrix_unit(SuperDim(2, 1), r, c)


def test_commutator_examples():
    d = SuperDim(3, 1)
    assert super_commutator(matrix_unit(d, 1, 2), matrix_unit(d, 2, 3)) == matrix_unit(d, 1, 3)
    w = HALF * matrix_unit(d, 4, 3) + matrix_unit(d, 1, 4)
    assert super_commutator(w, w) == matrix_unit(d, 1, 3)
    assert super_commutator(matrix_unit(d, 1, 2), SuperMatrix.zero(d)).is_zero()


def test_commutator_errors():
    d = SuperDim(2, 1)
    mixed = matrix_unit(d, 1, 2) + matrix_unit(d, 1, 3)
    with pytest.raises(ValueError):
        super_commutator(mixed, matrix_unit(d, 1, 2))
    with pytest.raises(ValueError):
        super_commutator(matrix_unit(d, 1, 2), matrix_unit(SuperDim(3, 0), 1, 2))
    with pytest.raises(ValueError):
        super_commutator(matrix_unit(d, 1, 3), matrix_unit(d, 1, 2), px=0)


@settings(max_examples=50, deadline=None)
@given(dims, st.integers(0, 1), st.integers(0, 1), st.integers(0, 10 ** 6))
def test_commutator_parity_and_flip(dim, px, py, seed):
    rng = random.Random(seed)
    x, y = random_homogeneous(rng, dim, px), random_homogeneous(rng, dim, py)
    br = super_commutator(x, y, px, py)
    assert br.is_homogeneous((px + py) % 2)
    assert parity_flip(br) == super_commutator(parity_flip(x), parity_flip(y), px, py)


@settings(max_examples=30, deadline=None)
@given(dims, st.integers(0, 10 ** 6))
def test_odd_self_commutator_is_twice_square(dim, seed):
    x = random_homogeneous(random.Random(seed), dim, 1)
    assert super_commutator(x, x) == GaussRational(2) * (x @ x)


def test_flip_examples():
    d = SuperDim(3, 1)
    assert parity_flip(d) == SuperDim(1, 3)
    assert parity_flip(matrix_unit(d, 1, 3)) == matrix_unit(SuperDim(1, 3), 2, 4)


@settings(max_examples=30, deadline=None)
@given(dims, st.integers(0, 1), st.integers(0, 10 ** 6))
def test_flip_is_conjugation_and_involution(dim, parity, seed):
    x = random_homogeneous(random.Random(seed), dim, parity)
    p = flip_permutation(dim)
    pt = [list(col) for col in zip(*p.entries)]
    assert [list(r) for r in parity_flip(x).entries] == plain_mul(plain_mul(p.entries, x.entries), pt)
    assert parity_flip(parity_flip(x)) == x
    assert parity_flip(x).parity() == x.parity()
    v = GradedVector(dim, [GaussRational(k) for k in range(dim.total())])
    assert parity_flip(parity_flip(v)) == v


def test_kernel_examples():
    d = SuperDim(2, 1)
    assert kernel([GradedVector.zero(d)] * 4).dim() == 4
    assert kernel([GradedVector.basis_vector(d, k) for k in range(3)]).dim() == 0
    assert kernel([]).dim() == 0


@pytest.mark.parametrize("seed", range(15))
def test_kernel_rank_nullity(seed):
    rng = random.Random(seed)
    rows, cols = rng.randint(1, 6), rng.randint(1, 6)
    a = gaussian_matrix(rng, rows, cols, rank=rng.randint(0, min(rows, cols)))
    d = SuperDim(rows, 0)
    columns = [GradedVector(d, [a[i][j] for i in range(rows)]) for j in range(cols)]
    ker = kernel(columns)
    assert ker.dim() + rank(columns) == cols
    for v in ker.basis:
        assert all(sum((a[i][j] * v.coords[j] for j in range(cols)), ZERO) == 0 for i in range(rows))


def test_kernel_graded_basis():
    # columns: e0 -> e0, e1 -> e0, e2 (odd) -> 0 ; kernel spanned by e0 - e1 and e2
    d = SuperDim(2, 1)
    cols = [GradedVector.basis_vector(d, 0), GradedVector.basis_vector(d, 0), GradedVector.zero(d)]
    ker = kernel(cols, d)
    assert ker.is_homogeneous_basis() and ker.superdim() == SuperDim(1, 1)


def test_rank_examples():
    d = SuperDim(2, 0)
    e1, e2 = GradedVector.basis_vector(d, 0), GradedVector.basis_vector(d, 1)
    assert rank([e1, e2, e1 + e2]) == 2
    assert rank([]) == 0


def test_vector_parity():
    d = SuperDim(2, 2)
    assert GradedVector.basis_vector(d, 1).parity() == 0
    assert GradedVector.basis_vector(d, 3).parity() == 1
    mixed = GradedVector.basis_vector(d, 0) + GradedVector.basis_vector(d, 2)
    assert mixed.parity() is None
    assert mixed.even_part() + mixed.odd_part() == mixed


def test_subspace():
    d = SuperDim(2, 2)
    e = [GradedVector.basis_vector(d, k) for k in range(4)]
    with pytest.raises(ValueError):
        Subspace(d, [e[0], e[0]])
    s = Subspace.span(d, [e[0] + e[2], e[0] - e[2], e[0]])
    assert s.dim() == 2 and s.is_graded() and s.superdim() == SuperDim(1, 1)
    assert s.graded_basis().is_homogeneous_basis()
    t = Subspace(d, [e[0] + e[2]])
    assert not t.is_graded()
    with pytest.raises(ValueError):
        t.superdim()
    assert s.contains_subspace(t) and not t.contains_subspace(s)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_contains_subspace_coordinate_fast_path_matches_rank(seed):
    rng = random.Random(seed)
    d = SuperDim(3, 2)
    picks = rng.sample(range(5), rng.randint(1, 4))
    coord = Subspace(d, [GradedVector.basis_vector(d, k) * GaussRational(rng.choice([1, -2, 3])) for k in picks])
    vecs = [GradedVector(d, [GaussRational(rng.randint(-1, 1)) if rng.random() < 0.5 else ZERO for _ in range(5)])
            for _ in range(rng.randint(1, 3))]
    other = Subspace.span(d, vecs)
    expected = not other.basis or rank(coord.basis + other.basis) == coord.dim()
    assert coord.contains_subspace(other) == expected


def test_direct_sum_blocks():
    a = matrix_unit(SuperDim(1, 1), 1, 2)
    b = matrix_unit(SuperDim(1, 1), 2, 1)
    s = direct_sum(a, b)
    assert s.dim == SuperDim(2, 2)
    assert {(r, c) for r, c, _ in s.nonzero()} == {(0, 2), (3, 1)}
    assert s.parity() == 1


def test_supermatrix_json_and_blocks():
    d = SuperDim(2, 1)
    m = matrix_unit(d, 1, 3) + I * matrix_unit(d, 2, 2)
    assert SuperMatrix.from_json(m.to_json()) == m
    assert m.block(0, 1) == [[ONE], [ZERO]]
    with pytest.raises(ValueError):
        SuperMatrix.from_json({"even": 1, "odd": 0})
    with pytest.raises(ValueError):
        SuperMatrix(d, [[ONE]])
