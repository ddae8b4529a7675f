"""LaTeX block matrix of a generic algebra element under a representation.

The generic element is ``sum_k s_k x_k`` with one symbol per basis element.
Each matrix entry is a linear form in the symbols; conjugate pairs of odd
coordinates are abbreviated ``d_{i,j} = d_i - sqrt(-1) d_j`` and
``\\overline{d}_{i,j} = (d_i + sqrt(-1) d_j) / 2``.  Zero cells are left empty.
"""

from superheis.scalar import GaussRational, HALF, I, ONE

_HALF_I = HALF * I
_MINUS_I = -I


def symbol_names(g):
    """``(letter, index)`` for each basis element; index is None for ``z``."""
    spec = g.spec
    if spec is not None and spec.is_even_center:
        letters = {"u": "a", "v": "b", "z": "c", "w": "d"}
    elif spec is not None:
        letters = {"v": "a", "z": "c", "w": "b"}
    else:
        return [("x", k + 1) for k in range(g.dim())]
    out = []
    for name in g.basis_names:
        head, tail = name[0], name[1:]
        out.append((letters[head], int(tail)) if tail else (letters[head], None))
    return out


def symbolic_matrix(r):
    """``entries[row][col]`` as ``{basis_index: coefficient}``."""
    n = r.module_dim.total()
    entries = [[{} for _ in range(n)] for _ in range(n)]
    for k, m in enumerate(r.images):
        for row, col, v in m.nonzero():
            cell = entries[row][col]
            cell[k] = cell.get(k, 0) + v
    return [[{k: c for k, c in cell.items() if c} for cell in row] for row in entries]


def _frac(q):
    if q.denominator == 1:
        return str(q.numerator)
    sgn = "-" if q < 0 else ""
    return "%s\\frac{%d}{%d}" % (sgn, abs(q.numerator), q.denominator)


def scalar_latex(x):
    x = GaussRational.coerce(x)
    re, im = x.re, x.im
    if im == 0:
        return _frac(re)
    if im.denominator == 1:
        num = {1: "", -1: "-"}.get(im.numerator, str(im.numerator))
        ims = num + "\\sqrt{-1}"
    else:
        sgn = "-" if im < 0 else ""
        num = "" if abs(im.numerator) == 1 else str(abs(im.numerator))
        ims = "%s\\frac{%s\\sqrt{-1}}{%d}" % (sgn, num, im.denominator)
    if re == 0:
        return ims
    sep = "" if ims.startswith("-") else "+"
    return "(%s%s%s)" % (_frac(re), sep, ims)


def _sym(names, k):
    letter, idx = names[k]
    return letter if idx is None else "%s_{%d}" % (letter, idx)


def _term(coef, sym):
    if coef == ONE:
        return sym
    if coef == -ONE:
        return "-" + sym
    return scalar_latex(coef) + sym


def cell_latex(cell, names):
    if not cell:
        return ""
    if len(cell) == 2:
        k1, k2 = sorted(cell)
        (l1, i1), (l2, i2) = names[k1], names[k2]
        if l1 == l2 and i1 is not None and i2 == i1 + 1:
            c1, c2 = cell[k1], cell[k2]
            if c1 == ONE and c2 == _MINUS_I:
                return "%s_{%d,%d}" % (l1, i1, i2)
            if c1 == HALF and c2 == _HALF_I:
                return "\\overline{%s}_{%d,%d}" % (l1, i1, i2)
    parts = [_term(cell[k], _sym(names, k)) for k in sorted(cell)]
    out = parts[0]
    for p in parts[1:]:
        out += p if p.startswith("-") else "+" + p
    return out


def to_latex(r):
    """``pmatrix`` of the generic element; deterministic output."""
    names = symbol_names(r.algebra)
    rows = ["&".join(cell_latex(c, names) for c in row) for row in symbolic_matrix(r)]
    return "\\begin{pmatrix}\n" + "\\\\\n".join(rows) + "\n\\end{pmatrix}\n"


def instantiate(r, values):
    """Matrix of ``sum_k values[k] x_k``: the symbolic matrix at concrete coefficients."""
    from superheis.graded import GradedVector

    x = GradedVector(r.algebra.superdim, [GaussRational.coerce(v) for v in values])
    return r.image_of(x)

