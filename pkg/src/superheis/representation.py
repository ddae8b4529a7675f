"""Representations of Lie superalgebras by supermatrices.

Holds the explicit minimal faithful representations of ``h_{m,n}`` and
``h_n``, the homomorphism and faithfulness checks, the analysis of the
orbit map ``x -> x v0`` and the parity flip of modules.
"""

import json
from dataclasses import dataclass, field

from superheis.algebra import LieSuperalgebra, HeisenbergSpec, make_heisenberg, bracket, sign
from superheis.bform import zeta
from superheis.graded import (
    GradedVector, SuperDim, SuperMatrix, Subspace, kernel, matrix_unit, parity_flip, rank,
    independent_subset, direct_sum,
)
from superheis.scalar import GaussRational, HALF, I, ONE, ZERO


class Representation:
    """One SuperMatrix per basis element of ``algebra``, acting on ``module_dim``."""

    def __init__(self, algebra, module_dim, images):
        images = tuple(images)
        if len(images) != algebra.dim():
            raise ValueError("need %d images, got %d" % (algebra.dim(), len(images)))
        for m in images:
            if m.dim != module_dim:
                raise ValueError("image of dimension %s on module %s" % (m.dim, module_dim))
        self.algebra = algebra
        self.module_dim = module_dim
        self.images = images

    def image(self, label_or_index):
        k = label_or_index if isinstance(label_or_index, int) else self.algebra.index(label_or_index)
        return self.images[k]

    def image_of(self, x):
        """Matrix of a general element by linear extension over coordinates."""
        if x.dim != self.algebra.superdim:
            raise ValueError("element not in %s" % self.algebra.superdim)
        items = {}
        for k, a in enumerate(x.coords):
            if a:
                for r, c, v in self.images[k].nonzero():
                    items[(r, c)] = items.get((r, c), ZERO) + a * v
        return SuperMatrix.from_sparse(self.module_dim, items)

    @property
    def z_image(self):
        return self.images[self.algebra.center_index]

    def __repr__(self):
        return "<Representation of %r on %s>" % (self.algebra, self.module_dim)

    def to_json(self):
        return {
            "algebra": self.algebra.to_json(),
            "module": self.module_dim.to_json(),
            "images": {name: m.to_json() for name, m in zip(self.algebra.basis_names, self.images)},
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or not {"algebra", "module", "images"} <= set(obj):
            raise ValueError("representation file needs 'algebra', 'module' and 'images'")
        g = LieSuperalgebra.from_json(obj["algebra"])
        mod = SuperDim.from_json(obj["module"])
        imgs = obj["images"]
        if not isinstance(imgs, dict) or set(imgs) != set(g.basis_names):
            raise ValueError("images must be keyed by exactly the basis labels")
        return cls(g, mod, [SuperMatrix.from_json(imgs[name]) for name in g.basis_names])

    def dumps(self):
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))


# -- checks ----------------------------------------------------------------

@dataclass
class VerificationReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def __str__(self):
        if self.ok:
            return "representation ok"
        return "representation violations:\n  " + "\n  ".join(self.violations)


def verify_representation(r, limit=50):
    """Parity of every image and ``rho([x, y]) = [rho(x), rho(y)]`` on all ordered basis pairs."""
    rep = VerificationReport()
    g = r.algebra
    names, par = g.basis_names, g.parities
    for k, m in enumerate(r.images):
        if not m.is_homogeneous(par[k]):
            rep.violations.append("parity: image of %s is not %s" % (names[k], "odd" if par[k] else "even"))
    n = g.dim()
    products = {}
    for i in range(n):
        xi = r.images[i]
        for j in range(n):
            xj = r.images[j]
            if xi.is_zero() or xj.is_zero():
                lhs = SuperMatrix.zero(r.module_dim)
            else:
                a = products.get((i, j))
                if a is None:
                    a = products[(i, j)] = xi @ xj
                b = products.get((j, i))
                if b is None:
                    b = products[(j, i)] = xj @ xi
                lhs = a + b if (par[i] and par[j]) else a - b
            items = {}
            for t, c in g.bracket_basis(i, j).items():
                for rr, cc, v in r.images[t].nonzero():
                    items[(rr, cc)] = items.get((rr, cc), ZERO) + c * v
            rhs = SuperMatrix.from_sparse(r.module_dim, items)
            if lhs != rhs:
                if len(rep.violations) < limit:
                    rep.violations.append("homomorphism: pair (%s, %s)" % (names[i], names[j]))
    return rep


def faithful_kernel(r):
    """Kernel of ``x -> rho(x)`` as a graded subspace of the algebra."""
    return kernel([m.flatten() for m in r.images], r.algebra.superdim)


def is_faithful(r, cross_check=True):
    """Trivial kernel, computed by elimination.

    With ``cross_check`` the answer is compared with ``rho(z) != 0``, which
    is equivalent for a representation of a nilpotent superalgebra with
    one-dimensional center; a disagreement raises ValueError.
    """
    faithful = faithful_kernel(r).dim() == 0
    if cross_check and faithful != (not r.z_image.is_zero()):
        raise ValueError("kernel test and central-element test disagree; not a representation?")
    return faithful


# -- constructions -----------------------------------------------------------

def _ceil_half(n):
    return (n + 1) // 2


def build_pi_even_center(m, n):
    """Faithful representation of ``h_{m,n}`` on ``F^{m+2 | ceil(n/2)}``."""
    spec = HeisenbergSpec.even_center(m, n)
    g = make_heisenberg(spec)
    mod = SuperDim(m + 2, _ceil_half(n))
    e = lambda r, c: matrix_unit(mod, r, c)  # noqa: E731
    imgs = {}
    for i in range(1, m + 1):
        imgs["u%d" % i] = e(1, i + 1)
        imgs["v%d" % i] = e(i + 1, m + 2)
    imgs["z"] = e(1, m + 2)
    for k in range(1, _ceil_half(n) + 1):
        imgs["w%d" % (2 * k - 1)] = HALF * e(m + 2 + k, m + 2) + e(1, m + 2 + k)
        if 2 * k <= n:
            imgs["w%d" % (2 * k)] = (HALF * I) * e(m + 2 + k, m + 2) - I * e(1, m + 2 + k)
    return Representation(g, mod, [imgs[b] for b in g.basis_names])


def build_pi_even_center_flipped(m, n):
    """Faithful representation of ``h_{m,n}`` on ``F^{ceil(n/2) | m+2}``."""
    spec = HeisenbergSpec.even_center(m, n)
    g = make_heisenberg(spec)
    h = _ceil_half(n)
    mod = SuperDim(h, m + 2)
    e = lambda r, c: matrix_unit(mod, r, c)  # noqa: E731
    imgs = {}
    for i in range(1, m + 1):
        imgs["u%d" % i] = e(h + 1, h + 2 + i)
        imgs["v%d" % i] = e(h + 2 + i, h + 2)
    imgs["z"] = e(h + 1, h + 2)
    for k in range(1, h + 1):
        imgs["w%d" % (2 * k - 1)] = HALF * e(k, h + 2) + e(h + 1, k)
        if 2 * k <= n:
            imgs["w%d" % (2 * k)] = (HALF * I) * e(k, h + 2) - I * e(h + 1, k)
    return Representation(g, mod, [imgs[b] for b in g.basis_names])


def build_pi_odd_center(n, r=None):
    """Faithful representation of ``h_n`` on ``F^{r+1 | n-r+1}``, ``0 <= r <= n`` (default ``r = n``)."""
    spec = HeisenbergSpec.odd_center(n)
    if r is None:
        r = n
    if not 0 <= r <= n:
        raise ValueError("r must lie in 0..%d, got %r" % (n, r))
    g = make_heisenberg(spec)
    mod = SuperDim(r + 1, n - r + 1)
    e = lambda a, b: matrix_unit(mod, a, b)  # noqa: E731
    imgs = {"z": e(1, n + 2)}
    for i in range(1, n + 1):
        if i <= r:
            imgs["v%d" % i] = e(1, i + 1)
            imgs["w%d" % i] = e(i + 1, n + 2)
        else:
            imgs["v%d" % i] = -e(i + 1, n + 2)
            imgs["w%d" % i] = e(1, i + 1)
    return Representation(g, mod, [imgs[b] for b in g.basis_names])


def minimal_representations(spec):
    """Every explicit minimal faithful representation of ``spec``."""
    if spec.is_even_center:
        return [build_pi_even_center(spec.m, spec.n), build_pi_even_center_flipped(spec.m, spec.n)]
    return [build_pi_odd_center(spec.n, r) for r in range(spec.n + 1)]


# -- the orbit map x -> x v0 ---------------------------------------------------

def canonical_v0(r):
    """Coordinate vector ``e_c`` for the first column ``c`` where ``rho(z)`` is nonzero."""
    nz = r.z_image.nonzero()
    if not nz:
        raise ValueError("z acts trivially; no v0 with z v0 != 0")
    col = min(c for _, c, _ in nz)
    return GradedVector.basis_vector(r.module_dim, col)


@dataclass
class RhoAnalysis:
    v0: GradedVector
    a: Subspace            # kernel of x -> x v0, in algebra coordinates
    b: Subspace            # image, in module coordinates
    a_prime: Subspace      # graded complement of a containing z
    zeta: object           # int, or None when the algebra carries no Heisenberg parameters
    abelian: bool          # a is abelian and avoids z
    complement_ok: bool    # a + a' = g directly, z in a', a' graded subalgebra
    independent: bool      # {x v0 : x in basis of a'} independent
    rank_nullity: bool     # dim a + dim b = dim g
    v0_outside_image: object  # bool when dim a == zeta, else None
    orbit_rank: int = 0       # rank of {v0} and {x v0 : x in basis of a'}

    @property
    def ok(self):
        return (self.abelian and self.complement_ok and self.independent and self.rank_nullity
                and self.v0_outside_image is not False)


def rho_analysis(r, v0):
    """Kernel ``a`` and image ``b`` of ``x -> x v0`` with the certificates
    that ``a`` is abelian and avoids ``z``, that a graded complement ``a'``
    containing ``z`` exists with ``{x v0}`` independent over a basis of it,
    and, when ``dim a == zeta``, that ``v0`` is not in ``b``.
    """
    g = r.algebra
    if v0.dim != r.module_dim:
        raise ValueError("v0 must live in the module %s" % r.module_dim)
    if v0.is_zero() or not v0.is_homogeneous():
        raise ValueError("v0 must be nonzero and homogeneous")
    if (r.z_image @ v0).is_zero():
        raise ValueError("z v0 = 0; choose v0 with z v0 != 0")

    cols = [m @ v0 for m in r.images]
    a = kernel(cols, g.superdim)
    if a.dim() and not a.is_homogeneous_basis():
        a = a.graded_basis()
    b = Subspace.span(r.module_dim, [c for c in cols if not c.is_zero()])

    # a' : z, then basis vectors of g independent of a + a'
    chosen = [g.z]
    for k in range(g.dim()):
        if k == g.center_index:
            continue
        ek = g.basis_vector(k)
        if rank(a.basis + chosen + [ek]) == a.dim() + len(chosen) + 1:
            chosen.append(ek)
    a_prime = Subspace(g.superdim, chosen, check=False)

    abelian = not a.contains(g.z) and all(
        bracket(g, x, y).is_zero() for i, x in enumerate(a.basis) for y in a.basis[i:])
    closed = all(a_prime.contains(bracket(g, x, y)) for i, x in enumerate(chosen) for y in chosen[i:])
    complement_ok = (rank(a.basis + chosen) == g.dim() and a.dim() + a_prime.dim() == g.dim()
                     and a_prime.contains(g.z) and a_prime.is_graded() and closed)
    orbit = [r.image_of(x) @ v0 for x in chosen]
    independent = rank(orbit) == len(orbit)
    rank_nullity = a.dim() + b.dim() == g.dim()

    zt = zeta(g.spec) if g.spec is not None else None
    outside = None
    if zt is not None and a.dim() == zt:
        outside = not b.contains(v0)
    return RhoAnalysis(v0, a, b, a_prime, zt, abelian, complement_ok, independent, rank_nullity, outside,
                       rank([v0] + orbit))


# -- parity flip and even part -------------------------------------------------

def flip_module(r):
    """The same action on the parity-flipped module (blocks exchanged, odd block first)."""
    return Representation(r.algebra, parity_flip(r.module_dim), [parity_flip(m) for m in r.images])


@dataclass
class EvenRestriction:
    block: int            # 0: V_even, 1: V_odd
    module_dim: int
    is_representation: bool
    faithful: bool
    bound: int            # m + 2, minimal faithful dimension of the Heisenberg Lie algebra h_m
    bound_ok: object      # dim >= bound when faithful, else None


def restrict_to_even_part(r, block=0):
    """Action of the even part ``span(u, v, z)`` of ``h_{m,n}`` on one block of the module.

    The even elements preserve each block, so each block is a module over the
    Heisenberg Lie algebra ``h_m``.
    """
    g = r.algebra
    if g.spec is None or not g.spec.is_even_center:
        raise ValueError("even-part restriction is defined for the even-center family")
    m = g.spec.m
    even = [k for k, p in enumerate(g.parities) if p == 0]
    size = r.module_dim.even if block == 0 else r.module_dim.odd
    bdim = SuperDim(size, 0)
    blk = {k: SuperMatrix(bdim, r.images[k].block(block, block)) for k in even}
    ok = True
    for i in even:
        for j in even:
            lhs = blk[i] @ blk[j] - blk[j] @ blk[i]
            rhs = SuperMatrix.zero(bdim)
            for t, c in g.bracket_basis(i, j).items():
                rhs = rhs + c * blk[t]
            if lhs != rhs:
                ok = False
    ker = kernel([blk[k].flatten() for k in even])
    faithful = ker.dim() == 0
    bound = m + 2
    return EvenRestriction(block, size, ok, faithful, bound, (size >= bound) if faithful else None)


# -- building blocks for randomized representations ---------------------------

def twist(r, scales):
    """``rho o phi`` for the diagonal map ``phi(x_k) = scales[k] x_k`` of the algebra."""
    return Representation(r.algebra, r.module_dim,
                          [GaussRational.coerce(s) * m for s, m in zip(scales, r.images)])


def conjugate(r, p, p_inv):
    """``p rho(x) p^-1`` for an even invertible ``p``."""
    return Representation(r.algebra, r.module_dim, [p @ m @ p_inv for m in r.images])


def direct_sum_rep(r1, r2):
    if r1.algebra is not r2.algebra:
        raise ValueError("direct sum needs a common algebra")
    return Representation(r1.algebra, SuperDim(r1.module_dim.even + r2.module_dim.even,
                                                r1.module_dim.odd + r2.module_dim.odd),
                          [direct_sum(a, b) for a, b in zip(r1.images, r2.images)])


def zero_representation(g, module_dim):
    z = SuperMatrix.zero(module_dim)
    return Representation(g, module_dim, [z] * g.dim())


def scaling_automorphism(spec, t, alphas):
    """Diagonal endomorphism scalars of the canonical basis.

    ``h_{m,n}``: ``u_i -> alpha_i u_i``, ``v_i -> t^2/alpha_i v_i``,
    ``z -> t^2 z``, ``w_j -> t w_j``.  ``h_n``: ``v_i -> alpha_i v_i``,
    ``w_i -> t/alpha_i w_i``, ``z -> t z``.  An automorphism for ``t != 0``
    and a non-injective homomorphism killing ``z`` for ``t == 0``.
    """
    t = GaussRational.coerce(t)
    alphas = [GaussRational.coerce(a) for a in alphas]
    if spec.is_even_center:
        m, n = spec.m, spec.n
        t2 = t * t
        return alphas[:m] + [t2 / a for a in alphas[:m]] + [t2] + [t] * n
    n = spec.n
    return alphas[:n] + [t] + [t / a for a in alphas[:n]]


def abelian_representation(g, module_dim, diag_values):
    """Even basis elements except ``z`` act by the given diagonal matrices, everything else by 0.

    ``diag_values[k]`` is a list of ``module_dim.total()`` scalars for each
    even non-central basis index ``k``.  Diagonal matrices commute, and
    ``[g, g] = F z`` acts by zero, so this is a representation.
    """
    zero = SuperMatrix.zero(module_dim)
    imgs = []
    for k, p in enumerate(g.parities):
        if p == 0 and k != g.center_index and k in diag_values:
            imgs.append(SuperMatrix.from_sparse(module_dim, {(t, t): v for t, v in enumerate(diag_values[k])}))
        else:
            imgs.append(zero)
    return Representation(g, module_dim, imgs)
