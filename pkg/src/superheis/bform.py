"""The bilinear form ``[x, y] = B(x, y) z`` on a complement of the center,
abelian subalgebras avoiding ``z``, and isotropic subspaces.
"""

from dataclasses import dataclass
from math import gcd, lcm

from superheis import elimination
from superheis.algebra import bracket
from superheis.graded import GradedVector, Subspace, rank
from superheis.scalar import GaussRational, I, ZERO


def zeta(spec):
    """Largest dimension of an abelian subalgebra not containing the center."""
    if spec.is_even_center:
        return spec.m + spec.n // 2
    return spec.n


def canonical_complement(g):
    """Span of every basis element except ``z``."""
    return Subspace(g.superdim, [g.basis_vector(k) for k in range(g.dim()) if k != g.center_index], check=False)


def _bvalue(g, x, y):
    br = bracket(g, x, y)
    c = g.center_index
    if any(v for k, v in enumerate(br.coords) if k != c):
        raise ValueError("bracket leaves the center; not a Heisenberg superalgebra")
    return br.coords[c]


@dataclass
class BForm:
    algebra: object
    complement: Subspace      # homogeneous basis, even vectors first
    gram: list                # gram[i][j] = B(basis_i, basis_j)
    nondegenerate: bool
    even_nondegenerate: bool
    odd_nondegenerate: bool

    def __post_init__(self):
        g = self.algebra
        c = g.center_index
        # brackets of a Heisenberg algebra land in F z: B is read off the z-coefficients
        central = all(set(row) == {c} for row in g.structure.values())
        self._zterms = [(i, j, row[c]) for (i, j), row in g.structure.items()] if central else None

    def __call__(self, x, y):
        if self._zterms is None:
            return _bvalue(self.algebra, x, y)
        if x.dim != self.algebra.superdim or y.dim != self.algebra.superdim:
            raise ValueError("vectors must live in %s" % self.algebra.superdim)
        xs, ys = x.coords, y.coords
        acc = ZERO
        for i, j, c in self._zterms:
            a = xs[i]
            if a:
                b = ys[j]
                if b:
                    acc = acc + a * b * c
        return acc

    def even_count(self):
        return sum(1 for v in self.complement.basis if v.parity() == 0)


def b_form(g, complement=None):
    """Gram matrix of B on a graded complement ``k`` with ``g = k + F z``."""
    if complement is None:
        complement = canonical_complement(g)
    if not complement.is_graded():
        raise ValueError("complement must be a graded subspace")
    if complement.contains(g.z):
        raise ValueError("complement contains z")
    if complement.dim() != g.dim() - 1 or rank(complement.basis + [g.z]) != g.dim():
        raise ValueError("complement and F z do not span the algebra")
    basis = complement.basis if complement.is_homogeneous_basis() else complement.graded_basis().basis
    basis = [v for v in basis if v.parity() == 0] + [v for v in basis if v.parity() == 1]
    comp = Subspace(g.superdim, basis, check=False)
    gram = [[_bvalue(g, x, y) for y in basis] for x in basis]
    n = len(basis)
    e = sum(1 for v in basis if v.parity() == 0)

    def full_rank(rows, cols):
        return elimination.rank(rows, cols) == len(rows)

    nondeg = full_rank(gram, n) if n else True
    ev = [row[:e] for row in gram[:e]]
    od = [row[e:] for row in gram[e:]]
    return BForm(g, comp, gram, nondeg,
                 full_rank(ev, e) if e else True,
                 full_rank(od, n - e) if n - e else True)


def is_isotropic(b, s):
    """True iff B vanishes on ``s x s``; ``s`` must lie in the complement."""
    if not b.complement.contains_subspace(s):
        raise ValueError("subspace is not contained in the complement")
    vs = s.basis
    # with a homogeneous basis B(y, x) = -(-1)^{|x||y|} B(x, y), so one order suffices
    both = not s.is_homogeneous_basis()
    for a, x in enumerate(vs):
        for y in vs[a:]:
            if b(x, y) or (both and b(y, x)):
                return False
    return True


def is_abelian_excluding_center(g, s):
    """All brackets of basis vectors of ``s`` vanish and ``z`` is not in ``s``."""
    vs = s.basis
    for a, x in enumerate(vs):
        for y in vs[a:]:
            if not bracket(g, x, y).is_zero() or not bracket(g, y, x).is_zero():
                return False
    return not s.contains(g.z)


def abelian_witness(spec, target=None, g=None):
    """Explicit abelian subalgebra avoiding ``z`` with super-dimension ``target``.

    ``h_{m,n}``: ``u_1..u_a`` and ``w_{2k-1} + i w_{2k}`` for ``k = 1..b``
    with ``target = (a, b)``, ``a <= m``, ``b <= n // 2``.
    ``h_n``: ``v_1..v_a, w_{a+1}..w_{a+b}`` with ``a + b <= n``.
    Default target is the largest one, of dimension ``zeta(spec)``.
    """
    from superheis.algebra import make_heisenberg
    from superheis.graded import SuperDim

    if g is None:
        g = make_heisenberg(spec)
    m, n = spec.m, spec.n
    if target is None:
        target = SuperDim(m, n // 2) if spec.is_even_center else SuperDim(n, 0)
    a, b = target.even, target.odd
    vecs = []
    if spec.is_even_center:
        if a > m or b > n // 2:
            raise ValueError("target %s not admissible for %s (max (%d|%d))" % (target, spec, m, n // 2))
        vecs += [g.basis_vector("u%d" % i) for i in range(1, a + 1)]
        for k in range(1, b + 1):
            vecs.append(g.basis_vector("w%d" % (2 * k - 1)) + I * g.basis_vector("w%d" % (2 * k)))
    else:
        if a + b > n:
            raise ValueError("target %s not admissible for %s (need even + odd <= %d)" % (target, spec, n))
        vecs += [g.basis_vector("v%d" % i) for i in range(1, a + 1)]
        vecs += [g.basis_vector("w%d" % i) for i in range(a + 1, a + b + 1)]
    return Subspace(g.superdim, vecs)


def maximal_targets(spec):
    """Super-dimensions of the largest abelian subalgebras avoiding ``z``."""
    from superheis.graded import SuperDim

    if spec.is_even_center:
        return [SuperDim(spec.m, spec.n // 2)]
    return [SuperDim(i, spec.n - i) for i in range(spec.n + 1)]


# -- random isotropic subspaces ------------------------------------------

# The walk runs on Gaussian integers stored as (re, im) pairs.  Only spans
# matter, so every vector may be rescaled freely and no division is needed.

def _gmul(x, y):
    return x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0]


def _gsub(x, y):
    return x[0] - y[0], x[1] - y[1]


def _gdot(u, v):
    re = im = 0
    for x, y in zip(u, v):
        if (x[0] or x[1]) and (y[0] or y[1]):
            re += x[0] * y[0] - x[1] * y[1]
            im += x[0] * y[1] + x[1] * y[0]
    return re, im


def _gcomb(coeffs, vecs, k):
    """``sum c_j vecs_j`` for Gaussian-integer coefficients."""
    re, im = [0] * k, [0] * k
    for (cr, ci), v in zip(coeffs, vecs):
        if not (cr or ci):
            continue
        for t, (vr, vi) in enumerate(v):
            if vr or vi:
                re[t] += cr * vr - ci * vi
                im[t] += cr * vi + ci * vr
    return list(zip(re, im))


def _integral(rows):
    """Gaussian-integer pairs of a GaussRational matrix scaled by a common denominator."""
    den = 1
    for row in rows:
        for x in row:
            den = lcm(den, x._d)
    return [[(x._a * (den // x._d), x._b * (den // x._d)) for x in row] for row in rows]


def _int_nullspace(rows, k):
    """Gaussian-integer basis of the null space of Gaussian-integer ``rows``."""
    if not rows:
        return [[(1, 0) if s == t else (0, 0) for s in range(k)] for t in range(k)]
    re = [[x[0] for x in r] for r in rows]
    im = [[x[1] for x in r] for r in rows]
    pivots, d = elimination.ff_rref_ints(re, im, k)
    # rows are now d * (reduced rows), so d e_f - sum_k row_k[f] e_{pivot_k} solves A x = 0
    basis = []
    for f in sorted(set(range(k)) - set(pivots)):
        v = [(0, 0)] * k
        v[f] = d
        for r, pc in enumerate(pivots):
            v[pc] = (-re[r][f], -im[r][f])
        basis.append(v)
    return basis


def _residue(echelon, y):
    """``y`` reduced against ``(pivot, row)`` pairs; nonzero iff ``y`` is independent of them."""
    for pc, row in echelon:
        c = y[pc]
        if c[0] or c[1]:
            d = row[pc]
            y = [_gsub(_gmul(d, a), _gmul(c, b)) for a, b in zip(y, row)]
    return y


def _reduce(v):
    g = 0
    for a, b in v:
        g = gcd(g, a, b)
    return [(a // g, b // g) for a, b in v] if g > 1 else v


def _isotropic_frame(gram, idx):
    """Standard totally isotropic vectors ``e_a + i e_b`` of a symmetric block.

    Works for blocks whose gram restricted to ``idx`` is diagonal with
    equal entries, the case of the odd block of ``h_{m,n}``.
    """
    frame = []
    for t in range(0, len(idx) - 1, 2):
        p, q = idx[t], idx[t + 1]
        if gram[p][p] != gram[q][q] or gram[p][q] or gram[q][p]:
            raise ValueError("symmetric block not in standard diagonal form")
        v = [(0, 0)] * len(idx)
        v[t] = (1, 0)
        v[t + 1] = (0, 1)
        frame.append(v)
    return frame


def _random_reflections(block_gram, rng, count, bound=2):
    """Random isometry of a symmetric block: rational reflection vectors ``v`` with ``B(v, v) != 0``."""
    k = len(block_gram)
    refl = []
    while len(refl) < count:
        v = [rng.randint(-bound, bound) for _ in range(k)]
        gv = [sum(block_gram[s][t][0] * v[t] for t in range(k)) for s in range(k)]
        q = sum(a * b for a, b in zip(v, gv))
        if q:
            refl.append((gv, v, q))
    return refl


def _reflect(x, refl):
    # x -> q x - 2 B(x, v) v, a multiple of the reflection of x in v
    for gv, v, q in refl:
        tr = sum(a[0] * c for a, c in zip(x, gv))
        ti = sum(a[1] * c for a, c in zip(x, gv))
        if tr or ti:
            x = [(q * a - 2 * tr * c, q * b - 2 * ti * c) for (a, b), c in zip(x, v)]
    return x


def _sampler_setup(b):
    """Pools of candidate directions per block and their constant Gram matrices.

    A symmetric nonzero block gets the standard isotropic frame, every other
    block its coordinate vectors.  Random isometries of a block preserve the
    Gram matrices, so these are computed once per form.
    """
    cached = getattr(b, "_sampler", None)
    if cached is not None:
        return cached
    gram = b.gram
    n = len(gram)
    igram = _integral(gram)
    e = b.even_count()
    blocks = {p: idx for p, idx in ((0, list(range(e))), (1, list(range(e, n)))) if idx}
    pools, block_gram = {}, {}
    for p, idx in blocks.items():
        symmetric_nonzero = any(gram[i][j] for i in idx for j in idx) and all(
            gram[i][j] == gram[j][i] for i in idx for j in idx)
        if symmetric_nonzero:
            pools[p] = _isotropic_frame(gram, idx)
            block_gram[p] = [[igram[i][j] for j in idx] for i in idx]
        else:
            pools[p] = [[(1, 0) if s == t else (0, 0) for s in range(len(idx))] for t in range(len(idx))]
    pool_gram = {}
    for p in pools:
        for q in pools:
            cross = [[igram[i][j] for j in blocks[q]] for i in blocks[p]]
            pool_gram[p, q] = [[_gdot(x, [_gdot(row, y) for row in cross]) for y in pools[q]]
                               for x in pools[p]]
    comp = b.complement
    sparse_basis = [[(k, w) for k, w in enumerate(bv.coords) if w] for bv in comp.basis]
    b._sampler = (blocks, pools, block_gram, pool_gram, sparse_basis)
    return b._sampler


def random_isotropic_subspace(b, rng, stop_probability=0.15, reflections=3):
    """Random graded B-isotropic subspace of the complement, by greedy extension.

    Each step picks a block (even or odd) at random and draws a random vector
    from the B-orthogonal complement of the accepted vectors inside that block,
    accepting it when it is isotropic and new.  For a block on which B is
    symmetric and nonzero, candidates are drawn from a random isometric image
    of the standard isotropic frame, since a random vector is almost never
    isotropic there.  The walk stops when no block can grow or, at each step,
    with ``stop_probability``.

    The walk runs in pool coordinates; the isometry is applied to the
    accepted vectors at the end.
    """
    blocks, pools, block_gram, pool_gram, sparse_basis = _sampler_setup(b)
    accepted = []
    # per block: constraint rows B(a, pool_t) and an echelon form of the accepted pool coefficients
    rows = {p: [] for p in pools}
    chosen = {p: [] for p in pools}
    open_blocks = sorted(pools)
    while open_blocks:
        if accepted and rng.random() < stop_probability:
            break
        p = rng.choice(open_blocks)
        k = len(pools[p])
        sols = _int_nullspace(rows[p], k)
        # accepted vectors of this block already satisfy the constraints
        if len(sols) == len(chosen[p]):
            open_blocks.remove(p)
            continue
        for _ in range(8):
            coeffs = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in sols]
            y = _gcomb(coeffs, sols, k)
            res = _residue(chosen[p], y)
            pivot = next((t for t, (a, c) in enumerate(res) if a or c), None)
            if pivot is None:
                continue
            # covector of y against every pool: B(x, pool_q[t]) = sum_s y_s G_pq[s][t]
            cov = {q: [_gdot(y, col) for col in zip(*pool_gram[p, q])] for q in pools}
            if any(_gdot(cov[p], y)):
                continue
            y = _reduce(y)
            accepted.append((p, y))
            chosen[p].append((pivot, _reduce(res)))
            for q in pools:
                rows[q].append(_reduce(cov[q]))
            break

    refl = {p: _random_reflections(g, rng, reflections) for p, g in block_gram.items()}
    comp = b.complement
    vecs = []
    for p, y in accepted:
        x = _gcomb(y, pools[p], len(blocks[p]))
        if p in refl:
            x = _reduce(_reflect(x, refl[p]))
        # block coordinates -> complement coordinates -> algebra coordinates
        coords = [ZERO] * comp.ambient.total()
        for (xr, xi), i in zip(x, blocks[p]):
            if xr or xi:
                c = GaussRational.from_gaussian_int(xr, xi)
                for k, w in sparse_basis[i]:
                    coords[k] = coords[k] + c * w
        vecs.append(GradedVector._make(comp.ambient, tuple(coords)))
    return Subspace(comp.ambient, vecs, check=False)
