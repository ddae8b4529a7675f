"""Lie superalgebras given by structure constants, and the two Heisenberg families.

``h_{m,n}`` (even center) has basis ``u_1..u_m, v_1..v_m, z | w_1..w_n`` with
``[u_i, v_i] = z = [w_j, w_j]``; ``h_n`` (odd center) has basis
``v_1..v_n | z, w_1..w_n`` with ``[v_i, w_i] = z``.  Remaining brackets
follow from super skew-symmetry or vanish.
"""

import enum
from dataclasses import dataclass, field

from superheis.graded import GradedVector, SuperDim, Subspace, kernel, rank
from superheis.scalar import GaussRational, ONE, ZERO


class Family(enum.Enum):
    EVEN_CENTER = "hmn"
    ODD_CENTER = "hn"


@dataclass(frozen=True)
class HeisenbergSpec:
    """Parameters of ``h_{m,n}`` (``Family.EVEN_CENTER``) or ``h_n`` (``Family.ODD_CENTER``, ``m`` unused)."""

    family: Family
    m: int = 0
    n: int = 0

    def __post_init__(self):
        fam = self.family
        if isinstance(fam, str):
            fam = Family(fam)
            object.__setattr__(self, "family", fam)
        if not isinstance(self.m, int) or not isinstance(self.n, int):
            raise ValueError("m and n must be integers")
        if self.m < 0 or self.n < 0:
            raise ValueError("m and n must be non-negative")
        if fam is Family.EVEN_CENTER:
            if self.m + self.n < 1:
                raise ValueError("h_{0,0} is abelian; need m + n >= 1")
        else:
            if self.m != 0:
                raise ValueError("odd-center family takes only n")
            if self.n < 1:
                raise ValueError("h_0 is degenerate; need n >= 1")

    @classmethod
    def even_center(cls, m, n):
        return cls(Family.EVEN_CENTER, m, n)

    @classmethod
    def odd_center(cls, n):
        return cls(Family.ODD_CENTER, 0, n)

    @property
    def is_even_center(self):
        return self.family is Family.EVEN_CENTER

    def dim(self):
        if self.is_even_center:
            return 2 * self.m + 1 + self.n
        return 2 * self.n + 1

    def superdim(self):
        if self.is_even_center:
            return SuperDim(2 * self.m + 1, self.n)
        return SuperDim(self.n, self.n + 1)

    def name(self):
        if self.is_even_center:
            return "h_{%d,%d}" % (self.m, self.n)
        return "h_%d" % self.n

    def __str__(self):
        return self.name()

    def to_json(self):
        if self.is_even_center:
            return {"family": "hmn", "m": self.m, "n": self.n}
        return {"family": "hn", "n": self.n}

    @classmethod
    def from_json(cls, obj):
        fam = Family(obj["family"])
        if fam is Family.EVEN_CENTER:
            return cls(fam, obj["m"], obj["n"])
        return cls(fam, 0, obj["n"])


def sign(p, q):
    return -1 if (p and q) else 1


class LieSuperalgebra:
    """Homogeneous basis with parities and sparse structure constants.

    ``structure[(i, j)]`` maps ``k`` to ``c[i][j][k]`` with
    ``[x_i, x_j] = sum_k c[i][j][k] x_k``.  Basis order must put the even
    elements first so coordinates match the graded convention.  Nothing is
    validated here; see :func:`check_axioms`.
    """

    def __init__(self, basis_names, parities, structure, center_index, spec=None):
        self.basis_names = tuple(basis_names)
        self.parities = tuple(parities)
        if len(self.basis_names) != len(self.parities):
            raise ValueError("one parity per basis element required")
        if list(self.parities) != sorted(self.parities):
            raise ValueError("even basis elements must come first")
        self.structure = {}
        for key, row in structure.items():
            row = {k: GaussRational.coerce(c) for k, c in row.items()}
            row = {k: c for k, c in row.items() if c}
            if row:
                self.structure[key] = row
        self.center_index = center_index
        self.spec = spec
        self._index = {name: k for k, name in enumerate(self.basis_names)}
        self.superdim = SuperDim(self.parities.count(0), self.parities.count(1))

    def dim(self):
        return len(self.basis_names)

    def index(self, label):
        return self._index[label]

    def basis_vector(self, label_or_index):
        k = label_or_index if isinstance(label_or_index, int) else self._index[label_or_index]
        return GradedVector.basis_vector(self.superdim, k)

    def vector(self, coeffs):
        """Element from a ``{label: scalar}`` mapping."""
        c = [ZERO] * self.dim()
        for label, x in coeffs.items():
            c[self._index[label]] = GaussRational.coerce(x)
        return GradedVector(self.superdim, c)

    @property
    def z(self):
        return self.basis_vector(self.center_index)

    def structure_tensor(self):
        """Dense ``c[i][j][k]``."""
        n = self.dim()
        t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), row in self.structure.items():
            for k, c in row.items():
                t[i][j][k] = c
        return t

    def bracket_basis(self, i, j):
        """Sparse ``{k: c}`` for ``[x_i, x_j]``."""
        return self.structure.get((i, j), {})

    def __repr__(self):
        name = self.spec.name() if self.spec else "LieSuperalgebra"
        return "<%s dim=%s>" % (name, self.superdim)

    def to_json(self):
        obj = {
            "basis": [{"label": b, "parity": p} for b, p in zip(self.basis_names, self.parities)],
            "structure": [[i, j, k, c.to_json()] for (i, j), row in sorted(self.structure.items())
                          for k, c in sorted(row.items())],
            "center": self.center_index,
        }
        if self.spec is not None:
            obj["heisenberg"] = self.spec.to_json()
        return obj

    @classmethod
    def from_json(cls, obj):
        try:
            names = [b["label"] for b in obj["basis"]]
            parities = [b["parity"] for b in obj["basis"]]
            structure = {}
            for i, j, k, c in obj["structure"]:
                structure.setdefault((i, j), {})[k] = GaussRational.from_json(c)
            center = obj["center"]
            spec = HeisenbergSpec.from_json(obj["heisenberg"]) if "heisenberg" in obj else None
        except (KeyError, TypeError) as exc:
            raise ValueError("malformed algebra: %s" % exc) from exc
        n = len(names)
        if any(p not in (0, 1) for p in parities) or not (isinstance(center, int) and 0 <= center < n):
            raise ValueError("malformed algebra: bad parity or center index")
        for (i, j), row in structure.items():
            if not all(isinstance(t, int) and 0 <= t < n for t in (i, j, *row)):
                raise ValueError("malformed algebra: structure index out of range")
        return cls(names, parities, structure, center, spec)


def make_heisenberg(spec):
    """Canonical basis and brackets of ``h_{m,n}`` or ``h_n``."""
    m, n = spec.m, spec.n
    structure = {}

    def put(i, j, k, c):
        structure.setdefault((i, j), {})[k] = c

    if spec.is_even_center:
        names = ["u%d" % i for i in range(1, m + 1)] + ["v%d" % i for i in range(1, m + 1)] + ["z"]
        names += ["w%d" % j for j in range(1, n + 1)]
        parities = [0] * (2 * m + 1) + [1] * n
        z = 2 * m
        for i in range(m):
            put(i, m + i, z, ONE)
            put(m + i, i, z, -ONE)
        for j in range(n):
            w = z + 1 + j
            put(w, w, z, ONE)
    else:
        names = ["v%d" % i for i in range(1, n + 1)] + ["z"] + ["w%d" % i for i in range(1, n + 1)]
        parities = [0] * n + [1] * (n + 1)
        z = n
        for i in range(n):
            w = n + 1 + i
            put(i, w, z, ONE)
            put(w, i, z, -ONE)
    return LieSuperalgebra(names, parities, structure, z, spec)


def bracket(g, x, y):
    """Bilinear extension of the structure constants."""
    if x.dim != g.superdim or y.dim != g.superdim:
        raise ValueError("vectors must live in %s" % g.superdim)
    out = [ZERO] * g.dim()
    xs = [(i, a) for i, a in enumerate(x.coords) if a]
    ys = [(j, b) for j, b in enumerate(y.coords) if b]
    st = g.structure
    for i, a in xs:
        for j, b in ys:
            row = st.get((i, j))
            if row:
                ab = a * b
                for k, c in row.items():
                    out[k] = out[k] + ab * c
    return GradedVector._make(g.superdim, tuple(out))


def _bracket_sparse(g, i, vec):
    # [x_i, sum_k vec[k] x_k] for sparse vec
    out = {}
    for k, a in vec.items():
        for t, c in g.structure.get((i, k), {}).items():
            out[t] = out.get(t, ZERO) + a * c
    return {t: c for t, c in out.items() if c}


def _scaled_add(acc, vec, s):
    for k, a in vec.items():
        acc[k] = acc.get(k, ZERO) + (a if s == 1 else -a)


@dataclass
class AxiomReport:
    violations: list = field(default_factory=list)
    center_dim: int = 0
    center_is_z: bool = False
    two_step_nilpotent: bool = False

    @property
    def ok(self):
        return not self.violations

    @property
    def first_violation(self):
        return self.violations[0] if self.violations else None

    def __str__(self):
        if self.ok:
            return "axioms ok (center dim %d, two-step nilpotent)" % self.center_dim
        return "axiom violations:\n  " + "\n  ".join(self.violations)


def check_axioms(g, limit=20):
    """Exhaustive check of super skew-symmetry, bracket parity, super Jacobi,
    centrality of z, two-step nilpotency and ``center == F z``.

    At most ``limit`` violations per kind are recorded.
    """
    rep = AxiomReport()
    n, par, names = g.dim(), g.parities, g.basis_names
    st = g.structure

    counts = {}

    def note(kind, msg):
        counts[kind] = counts.get(kind, 0) + 1
        if counts[kind] <= limit:
            rep.violations.append("%s: %s" % (kind, msg))

    for i in range(n):
        for j in range(n):
            a = st.get((i, j), {})
            b = st.get((j, i), {})
            s = sign(par[i], par[j])
            for k in set(a) | set(b):
                if a.get(k, ZERO) != -s * b.get(k, ZERO):
                    note("super skew-symmetry", "[%s,%s] vs [%s,%s] at %s" % (names[i], names[j], names[j], names[i], names[k]))
            for k in a:
                if par[k] != (par[i] + par[j]) % 2:
                    note("bracket parity", "[%s,%s] has a %s component" % (names[i], names[j], names[k]))

    c = g.center_index
    for j in range(n):
        if st.get((c, j)) or st.get((j, c)):
            note("center", "[%s,%s] != 0" % (names[c], names[j]))

    # (-1)^{|a||c|}[a,[b,c]] + (-1)^{|b||a|}[b,[c,a]] + (-1)^{|c||b|}[c,[a,b]] = 0
    for a in range(n):
        for b in range(n):
            bc_ab = st.get((a, b), {})
            for cc in range(n):
                acc = {}
                _scaled_add(acc, _bracket_sparse(g, a, st.get((b, cc), {})), sign(par[a], par[cc]))
                _scaled_add(acc, _bracket_sparse(g, b, st.get((cc, a), {})), sign(par[b], par[a]))
                _scaled_add(acc, _bracket_sparse(g, cc, bc_ab), sign(par[cc], par[b]))
                if any(acc.values()):
                    note("super Jacobi", "triple (%s,%s,%s)" % (names[a], names[b], names[cc]))

    derived_nonzero = bool(st)
    nil2 = True
    for (i, j), row in st.items():
        for t in range(n):
            if _bracket_sparse(g, t, row):
                nil2 = False
                note("two-step nilpotency", "[%s,[%s,%s]] != 0" % (names[t], names[i], names[j]))
                break
    rep.two_step_nilpotent = nil2 and derived_nonzero
    if not derived_nonzero:
        note("two-step nilpotency", "algebra is abelian")

    # center = kernel of x -> ([x, b_0], ..., [x, b_{n-1}])
    cols = []
    for i in range(n):
        coords = []
        for j in range(n):
            row = st.get((i, j), {})
            coords.extend(row.get(k, ZERO) for k in range(n))
        cols.append(GradedVector._make(SuperDim(n * n, 0), tuple(coords)))
    center = kernel(cols, g.superdim) if n else Subspace(g.superdim, [])
    rep.center_dim = center.dim()
    rep.center_is_z = center.dim() == 1 and center.contains(g.z)
    if not rep.center_is_z:
        note("center", "center has dimension %d%s" % (
            center.dim(), "" if center.contains(g.z) else " and does not contain %s" % names[c]))
    return rep


def derived_algebra_rank(g):
    """``dim [g, g]``."""
    vecs = []
    for row in g.structure.values():
        c = [ZERO] * g.dim()
        for k, x in row.items():
            c[k] = x
        vecs.append(GradedVector._make(g.superdim, tuple(c)))
    return rank(vecs)
