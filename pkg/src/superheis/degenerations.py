"""Random representations derived from a given one.

Each step keeps the homomorphism property: precomposition with a scaling
endomorphism of the algebra (which kills ``z`` when the scale is 0),
conjugation by a random even invertible matrix, and direct sums with
abelian or zero modules.  Used to exercise faithfulness tests on modules
that are not built from closed formulas.
"""

from superheis.graded import SuperDim, SuperMatrix
from superheis.representation import (
    Representation, abelian_representation, conjugate, direct_sum_rep, scaling_automorphism,
    twist, zero_representation,
)
from superheis.scalar import GaussRational, ONE


def _nonzero_scalar(rng, bound=3):
    while True:
        x = GaussRational.from_gaussian_int(rng.randint(-bound, bound), rng.randint(-1, 1))
        if x:
            return x


def random_twist(r, rng, kill_probability=0.3):
    spec = r.algebra.spec
    t = GaussRational.from_gaussian_int(0) if rng.random() < kill_probability else _nonzero_scalar(rng)
    k = spec.m if spec.is_even_center else spec.n
    alphas = [_nonzero_scalar(rng) for _ in range(k)]
    return twist(r, scaling_automorphism(spec, t, alphas)), "twist(t=%s)" % t


def random_even_invertible(dim, rng):
    """``(p, p_inv)`` with ``p = shear * diagonal``, the shear inside one block."""
    n = dim.total()
    diag = [_nonzero_scalar(rng, 2) for _ in range(n)]
    d = SuperMatrix.from_sparse(dim, {(k, k): v for k, v in enumerate(diag)})
    d_inv = SuperMatrix.from_sparse(dim, {(k, k): v.inv() for k, v in enumerate(diag)})
    blocks = [b for b in (range(dim.even), range(dim.even, n)) if len(b) > 1]
    if not blocks:
        return d, d_inv
    blk = rng.choice(blocks)
    i, j = rng.sample(list(blk), 2)
    c = _nonzero_scalar(rng)
    eye = {(k, k): ONE for k in range(n)}
    shear = SuperMatrix.from_sparse(dim, {**eye, (i, j): c})
    shear_inv = SuperMatrix.from_sparse(dim, {**eye, (i, j): -c})
    return shear @ d, d_inv @ shear_inv


def random_conjugate(r, rng):
    p, p_inv = random_even_invertible(r.module_dim, rng)
    return conjugate(r, p, p_inv), "conjugate"


def random_abelian(g, rng, max_dim=2):
    dim = SuperDim(rng.randint(0, max_dim), rng.randint(0, max_dim))
    if dim.total() == 0:
        dim = SuperDim(1, 0)
    vals = {}
    for k, p in enumerate(g.parities):
        if p == 0 and k != g.center_index and rng.random() < 0.5:
            vals[k] = [GaussRational.from_gaussian_int(rng.randint(-2, 2)) for _ in range(dim.total())]
    return abelian_representation(g, dim, vals)


def random_sum(r, rng):
    if rng.random() < 0.5:
        return direct_sum_rep(r, random_abelian(r.algebra, rng)), "plus abelian"
    dim = SuperDim(rng.randint(0, 1), rng.randint(0, 1))
    return direct_sum_rep(r, zero_representation(r.algebra, dim)), "plus zero %s" % dim


_STEPS = (random_twist, random_conjugate, random_sum)


def random_degeneration(r, rng, max_steps=3):
    """A random representation obtained from ``r``; returns ``(rep, description)``."""
    if rng.random() < 0.05:
        dim = SuperDim(rng.randint(1, 3), rng.randint(0, 2))
        return zero_representation(r.algebra, dim), "zero %s" % dim
    steps = []
    for _ in range(rng.randint(1, max_steps)):
        r, what = rng.choice(_STEPS)(r, rng)
        steps.append(what)
    return r, " . ".join(steps)


def corrupt(r, label=None, factor=2):
    """Copy of ``r`` with one image scaled, breaking the homomorphism property."""
    g = r.algebra
    k = g.center_index if label is None else g.index(label)
    imgs = list(r.images)
    imgs[k] = GaussRational.coerce(factor) * imgs[k]
    return Representation(g, r.module_dim, imgs)
