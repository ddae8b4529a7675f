"""Z2-graded vector spaces and supermatrices over Q(i).

Convention: the even block comes first.  A space of super-dimension
``(p|q)`` has coordinates ``0..p-1`` even and ``p..p+q-1`` odd.  Python
indices are 0-based everywhere except :func:`matrix_unit`, which takes
the 1-based ``(r, c)`` of the usual ``e_{r,c}`` notation.
"""

from dataclasses import dataclass

from superheis import elimination
from superheis.scalar import GaussRational, ZERO, ONE

_coerce = GaussRational.coerce


@dataclass(frozen=True, order=True)
class SuperDim:
    even: int
    odd: int

    def __post_init__(self):
        if self.even < 0 or self.odd < 0:
            raise ValueError("negative super-dimension %r" % (self,))

    def total(self):
        return self.even + self.odd

    def parity(self, index):
        """Parity of the 0-based coordinate ``index``."""
        if not 0 <= index < self.even + self.odd:
            raise IndexError(index)
        return 0 if index < self.even else 1

    def parities(self):
        return (0,) * self.even + (1,) * self.odd

    def __str__(self):
        return "(%d|%d)" % (self.even, self.odd)

    def to_json(self):
        return {"even": self.even, "odd": self.odd}

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or not isinstance(obj.get("even"), int) or not isinstance(obj.get("odd"), int):
            raise ValueError("bad super-dimension %r" % (obj,))
        return cls(obj["even"], obj["odd"])


class GradedVector:
    __slots__ = ("dim", "coords")

    def __init__(self, dim, coords):
        coords = tuple(_coerce(x) for x in coords)
        if len(coords) != dim.total():
            raise ValueError("expected %d coordinates, got %d" % (dim.total(), len(coords)))
        self.dim = dim
        self.coords = coords

    @classmethod
    def _make(cls, dim, coords):
        obj = object.__new__(cls)
        obj.dim = dim
        obj.coords = coords
        return obj

    @classmethod
    def zero(cls, dim):
        return cls._make(dim, (ZERO,) * dim.total())

    @classmethod
    def basis_vector(cls, dim, index):
        c = [ZERO] * dim.total()
        c[index] = ONE
        return cls._make(dim, tuple(c))

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def __iter__(self):
        return iter(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def support(self):
        return [k for k, x in enumerate(self.coords) if x]

    def parity(self):
        """0 or 1 for a nonzero homogeneous vector, 0 for zero, None if inhomogeneous."""
        sup = self.support()
        if not sup:
            return 0
        p = self.dim.even
        if sup[-1] < p:
            return 0
        if sup[0] >= p:
            return 1
        return None

    def is_homogeneous(self):
        return self.parity() is not None

    def even_part(self):
        p = self.dim.even
        return GradedVector._make(self.dim, self.coords[:p] + (ZERO,) * self.dim.odd)

    def odd_part(self):
        p = self.dim.even
        return GradedVector._make(self.dim, (ZERO,) * p + self.coords[p:])

    def _check(self, other):
        if not isinstance(other, GradedVector):
            return False
        if other.dim != self.dim:
            raise ValueError("dimension mismatch %s vs %s" % (self.dim, other.dim))
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return GradedVector._make(self.dim, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return GradedVector._make(self.dim, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return GradedVector._make(self.dim, tuple(-a for a in self.coords))

    def __mul__(self, s):
        if isinstance(s, (GradedVector, SuperMatrix)):
            return NotImplemented
        s = _coerce(s)
        return GradedVector._make(self.dim, tuple(s * a for a in self.coords))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedVector):
            return NotImplemented
        return self.dim == other.dim and self.coords == other.coords

    def __hash__(self):
        return hash((self.dim, self.coords))

    def __repr__(self):
        return "GradedVector(%s, [%s])" % (self.dim, ", ".join(str(x) for x in self.coords))


class SuperMatrix:
    """Square matrix over Q(i) on a space of super-dimension ``dim``.

    Entries are stored densely; products skip zero entries because the
    matrices met here are mostly matrix units.
    """

    __slots__ = ("dim", "entries", "_nz")

    def __init__(self, dim, entries):
        n = dim.total()
        rows = tuple(tuple(_coerce(x) for x in row) for row in entries)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ValueError("entries must be %d x %d" % (n, n))
        self.dim = dim
        self.entries = rows
        self._nz = None

    @classmethod
    def _make(cls, dim, rows):
        obj = object.__new__(cls)
        obj.dim = dim
        obj.entries = rows
        obj._nz = None
        return obj

    @classmethod
    def zero(cls, dim):
        n = dim.total()
        row = (ZERO,) * n
        return cls._make(dim, (row,) * n)

    @classmethod
    def identity(cls, dim):
        return cls.from_sparse(dim, {(k, k): ONE for k in range(dim.total())})

    @classmethod
    def from_sparse(cls, dim, items):
        """Build from a ``{(row, col): value}`` mapping with 0-based indices."""
        n = dim.total()
        rows = [[ZERO] * n for _ in range(n)]
        for (r, c), v in items.items():
            if not (0 <= r < n and 0 <= c < n):
                raise IndexError((r, c))
            rows[r][c] = rows[r][c] + _coerce(v)
        return cls._make(dim, tuple(tuple(row) for row in rows))

    def nonzero(self):
        """List of ``(row, col, value)`` for the nonzero entries, row-major."""
        if self._nz is None:
            self._nz = [(r, c, x) for r, row in enumerate(self.entries) for c, x in enumerate(row) if x]
        return self._nz

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def is_zero(self):
        return not self.nonzero()

    def parity(self):
        """0 or 1 when homogeneous (0 for the zero matrix), else None."""
        p = self.dim.even
        seen = set()
        for r, c, _ in self.nonzero():
            seen.add((r >= p) ^ (c >= p))
            if len(seen) > 1:
                return None
        return int(seen.pop()) if seen else 0

    def is_homogeneous(self, parity=None):
        if parity is None:
            return self.parity() is not None
        p = self.dim.even
        return all(((r >= p) ^ (c >= p)) == parity for r, c, _ in self.nonzero())

    def block(self, row_part, col_part):
        """Sub-block between parts (0 even, 1 odd) as a list of rows."""
        p, n = self.dim.even, self.dim.total()
        rs = range(0, p) if row_part == 0 else range(p, n)
        cs = range(0, p) if col_part == 0 else range(p, n)
        return [[self.entries[r][c] for c in cs] for r in rs]

    def _same(self, other):
        if other.dim != self.dim:
            raise ValueError("dimension mismatch %s vs %s" % (self.dim, other.dim))

    def __add__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._same(other)
        return SuperMatrix._make(self.dim, tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def __sub__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._same(other)
        return SuperMatrix._make(self.dim, tuple(
            tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)))

    def __neg__(self):
        return SuperMatrix._make(self.dim, tuple(tuple(-a for a in row) for row in self.entries))

    def __mul__(self, s):
        if isinstance(s, (SuperMatrix, GradedVector)):
            return NotImplemented
        s = _coerce(s)
        if not s:
            return SuperMatrix.zero(self.dim)
        return SuperMatrix._make(self.dim, tuple(tuple(s * a for a in row) for row in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, GradedVector):
            if other.dim != self.dim:
                raise ValueError("dimension mismatch %s vs %s" % (self.dim, other.dim))
            out = [ZERO] * self.dim.total()
            v = other.coords
            for r, c, x in self.nonzero():
                y = v[c]
                if y:
                    out[r] = out[r] + x * y
            return GradedVector._make(self.dim, tuple(out))
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        self._same(other)
        by_row = {}
        for k, c, y in other.nonzero():
            by_row.setdefault(k, []).append((c, y))
        acc = {}
        for r, k, x in self.nonzero():
            for c, y in by_row.get(k, ()):
                key = (r, c)
                acc[key] = acc[key] + x * y if key in acc else x * y
        n = self.dim.total()
        rows = [[ZERO] * n for _ in range(n)]
        for (r, c), v in acc.items():
            rows[r][c] = v
        return SuperMatrix._make(self.dim, tuple(tuple(row) for row in rows))

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return self.dim == other.dim and self.entries == other.entries

    def __hash__(self):
        return hash((self.dim, self.entries))

    def flatten(self):
        return GradedVector._make(SuperDim(self.dim.total() ** 2, 0), tuple(x for row in self.entries for x in row))

    def __repr__(self):
        terms = ", ".join("(%d,%d): %s" % (r + 1, c + 1, x) for r, c, x in self.nonzero())
        return "SuperMatrix(%s, {%s})" % (self.dim, terms)

    def to_json(self):
        return {
            "even": self.dim.even,
            "odd": self.dim.odd,
            "entries": [[x.to_json() for x in row] for row in self.entries],
        }

    @classmethod
    def from_json(cls, obj):
        if not isinstance(obj, dict) or "entries" not in obj:
            raise ValueError("supermatrix must be an object with 'even', 'odd', 'entries'")
        dim = SuperDim.from_json({"even": obj.get("even"), "odd": obj.get("odd")})
        entries = obj["entries"]
        if not isinstance(entries, list) or not all(isinstance(row, list) for row in entries):
            raise ValueError("'entries' must be a list of rows")
        return cls(dim, [[GaussRational.from_json(x) for x in row] for row in entries])


def matrix_unit(dim, r, c):
    """``e_{r,c}`` with 1-based ``r, c``."""
    n = dim.total()
    if not (1 <= r <= n and 1 <= c <= n):
        raise IndexError("matrix unit (%d, %d) outside 1..%d" % (r, c, n))
    return SuperMatrix.from_sparse(dim, {(r - 1, c - 1): ONE})


def super_commutator(x, y, px=None, py=None):
    """``xy - (-1)^{|x||y|} yx`` for homogeneous ``x, y``.

    Parities may be given explicitly; otherwise they are inferred and an
    inhomogeneous argument raises ValueError.
    """
    if x.dim != y.dim:
        raise ValueError("dimension mismatch %s vs %s" % (x.dim, y.dim))
    if px is None:
        px = x.parity()
    elif not x.is_homogeneous(px):
        raise ValueError("first argument is not homogeneous of parity %d" % px)
    if py is None:
        py = y.parity()
    elif not y.is_homogeneous(py):
        raise ValueError("second argument is not homogeneous of parity %d" % py)
    if px is None or py is None:
        raise ValueError("super commutator needs homogeneous arguments")
    xy, yx = x @ y, y @ x
    if px and py:
        return xy + yx
    return xy - yx


def direct_sum(x, y):
    """Block sum on ``(p1+p2 | q1+q2)``, even blocks first."""
    p1, q1 = x.dim.even, x.dim.odd
    p2, q2 = y.dim.even, y.dim.odd
    dim = SuperDim(p1 + p2, q1 + q2)

    def place1(k):
        return k if k < p1 else p2 + k

    def place2(k):
        return p1 + k if k < p2 else p1 + q1 + k

    items = {(place1(r), place1(c)): v for r, c, v in x.nonzero()}
    items.update({(place2(r), place2(c)): v for r, c, v in y.nonzero()})
    return SuperMatrix.from_sparse(dim, items)


# -- parity flip -----------------------------------------------------------

def _flip_index(dim, k):
    return dim.odd + k if k < dim.even else k - dim.even


def parity_flip(obj):
    """Exchange even and odd blocks of a SuperDim, GradedVector or SuperMatrix.

    The former odd block comes first afterwards.  Matrix parities are
    unchanged, since every row and column parity flips.
    """
    if isinstance(obj, SuperDim):
        return SuperDim(obj.odd, obj.even)
    if isinstance(obj, GradedVector):
        new = [ZERO] * obj.dim.total()
        for k, x in enumerate(obj.coords):
            new[_flip_index(obj.dim, k)] = x
        return GradedVector._make(SuperDim(obj.dim.odd, obj.dim.even), tuple(new))
    if isinstance(obj, SuperMatrix):
        d = obj.dim
        items = {(_flip_index(d, r), _flip_index(d, c)): x for r, c, x in obj.nonzero()}
        return SuperMatrix.from_sparse(SuperDim(d.odd, d.even), items)
    raise TypeError("cannot parity-flip %r" % (obj,))


def flip_permutation(dim):
    """Permutation matrix ``P`` with ``parity_flip(m) == P m P^-1`` (as plain matrices)."""
    new = SuperDim(dim.odd, dim.even)
    return SuperMatrix.from_sparse(new, {(_flip_index(dim, k), k): ONE for k in range(dim.total())})


# -- subspaces, rank, kernel ---------------------------------------------

def rank(vectors):
    """Exact rank of a list of GradedVectors."""
    vectors = list(vectors)
    if not vectors:
        return 0
    n = len(vectors[0])
    return elimination.rank([v.coords for v in vectors], n)


def independent_subset(vectors):
    """Indices of a maximal independent subset, greedily from the left."""
    vectors = list(vectors)
    if not vectors:
        return []
    n = len(vectors[0])
    # pivots of the transposed matrix pick out independent columns
    rows = [[v.coords[i] for v in vectors] for i in range(n)]
    _, pivots = elimination.rref(rows, len(vectors))
    return pivots


class Subspace:
    """Span of linearly independent GradedVectors in a space of super-dimension ``ambient``."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient, basis, check=True):
        basis = list(basis)
        for v in basis:
            if v.dim != ambient:
                raise ValueError("basis vector of dimension %s in ambient %s" % (v.dim, ambient))
        if check and rank(basis) != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        self.ambient = ambient
        self.basis = basis

    @classmethod
    def span(cls, ambient, vectors):
        """Subspace spanned by arbitrary vectors (dependent ones are dropped)."""
        vectors = list(vectors)
        keep = independent_subset(vectors)
        return cls(ambient, [vectors[k] for k in keep], check=False)

    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def contains(self, v):
        if not self.basis:
            return v.is_zero()
        return rank(self.basis + [v]) == len(self.basis)

    def contains_subspace(self, other):
        if not other.basis:
            return True
        support = self._coordinate_support()
        if support is not None:
            return all(not c for v in other.basis for k, c in enumerate(v.coords) if k not in support)
        return rank(self.basis + other.basis) == len(self.basis)

    def _coordinate_support(self):
        """Coordinates spanned when every basis vector is a multiple of a distinct unit vector, else None."""
        support = set()
        for v in self.basis:
            sup = v.support()
            if len(sup) != 1 or sup[0] in support:
                return None
            support.add(sup[0])
        return support

    def is_graded(self):
        ev = [v.even_part() for v in self.basis]
        od = [v.odd_part() for v in self.basis]
        return rank(ev) + rank(od) == len(self.basis)

    def superdim(self):
        """Super-dimension of a graded subspace; ValueError otherwise."""
        ev = rank([v.even_part() for v in self.basis])
        od = rank([v.odd_part() for v in self.basis])
        if ev + od != len(self.basis):
            raise ValueError("subspace is not graded")
        return SuperDim(ev, od)

    def graded_basis(self):
        """Homogeneous basis, even vectors first; ValueError if not graded."""
        ev = [v.even_part() for v in self.basis]
        od = [v.odd_part() for v in self.basis]
        ke, ko = independent_subset(ev), independent_subset(od)
        if len(ke) + len(ko) != len(self.basis):
            raise ValueError("subspace is not graded")
        return Subspace(self.ambient, [ev[k] for k in ke] + [od[k] for k in ko], check=False)

    def is_homogeneous_basis(self):
        return all(v.is_homogeneous() for v in self.basis)

    def __repr__(self):
        return "Subspace(%s, dim=%d)" % (self.ambient, len(self.basis))


def kernel(map_columns, domain=None):
    """Null space of the linear map whose ``j``-th column is ``map_columns[j]``.

    ``domain`` is the super-dimension of the source (default: purely even of
    size ``len(map_columns)``).  A graded kernel is returned with a
    homogeneous basis.
    """
    cols = list(map_columns)
    k = len(cols)
    if domain is None:
        domain = SuperDim(k, 0)
    if domain.total() != k:
        raise ValueError("domain %s does not match %d columns" % (domain, k))
    if k == 0:
        return Subspace(domain, [], check=False)
    n = len(cols[0])
    if any(len(c) != n for c in cols):
        raise ValueError("columns of unequal length")
    rows = [[c.coords[i] for c in cols] for i in range(n)]
    null = elimination.nullspace(rows, k)
    sub = Subspace(domain, [GradedVector._make(domain, tuple(v)) for v in null], check=False)
    if sub.basis and not sub.is_homogeneous_basis() and sub.is_graded():
        sub = sub.graded_basis()
    return sub
