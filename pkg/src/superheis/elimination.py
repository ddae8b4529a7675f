"""Exact rank and null space over Q(i) by fraction-free elimination.

Rows of GaussRational are scaled to Gaussian-integer rows (row scaling does not
change rank or null space), then reduced by ``ff_rref``.  The compiled
backend is used when it was built and ``SUPERHEIS_PURE_PYTHON`` is unset;
on 64-bit overflow it falls back to the pure-Python backend for that call.
"""

import os
from math import lcm

from superheis import _elim_py
from superheis.scalar import GaussRational

_compiled = None
if not os.environ.get("SUPERHEIS_PURE_PYTHON"):
    try:
        from superheis import _elim_c as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_active = BACKEND


def available_backends():
    return ["python"] + (["cython"] if _compiled is not None else [])


def set_backend(name):
    """Select ``"python"`` or ``"cython"`` for subsequent calls; returns the previous choice."""
    global _active
    if name not in available_backends():
        raise ValueError("backend %r not available (have %s)" % (name, available_backends()))
    previous, _active = _active, name
    return previous


def get_backend():
    return _active


def ff_rref_ints(re, im, ncols, backend=None):
    """Dispatch ``ff_rref`` on Gaussian-integer rows; see ``_elim_py.ff_rref``."""
    backend = backend or _active
    if backend == "cython" and _compiled is not None:
        try:
            return _compiled.ff_rref(re, im, ncols)
        except OverflowError:
            pass
    return _elim_py.ff_rref(re, im, ncols)


def to_gaussian_int_rows(rows):
    """Scale each row of GaussRational to Gaussian integers; all-zero rows are dropped."""
    re, im = [], []
    for row in rows:
        if not any(row):
            continue
        den = 1
        for x in row:
            if x._d != 1:
                den = lcm(den, x._d)
        re.append([x._a * (den // x._d) for x in row])
        im.append([x._b * (den // x._d) for x in row])
    return re, im


def rref(rows, ncols, backend=None):
    """Exact reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)`` with reduced rows as
    GaussRational lists (only the ``rank`` nonzero rows).
    """
    re, im = to_gaussian_int_rows(rows)
    pivots, (dr, di) = ff_rref_ints(re, im, ncols, backend)
    dinv = GaussRational.from_gaussian_int(dr, di).inv()
    out = []
    for k in range(len(pivots)):
        out.append([GaussRational.from_gaussian_int(a, b) * dinv for a, b in zip(re[k], im[k])])
    return out, pivots


def rank(rows, ncols, backend=None):
    re, im = to_gaussian_int_rows(rows)
    if not re:
        return 0
    pivots, _ = ff_rref_ints(re, im, ncols, backend)
    return len(pivots)


def nullspace(rows, ncols, backend=None):
    """Basis of ``{x : A x = 0}`` for ``A`` given by ``rows``.

    Each basis vector has a 1 in its free column and zeros in the other
    free columns.
    """
    re, im = to_gaussian_int_rows(rows)
    if not re:
        pivots, dr, di = [], 1, 0
    else:
        pivots, (dr, di) = ff_rref_ints(re, im, ncols, backend)
    pivot_set = set(pivots)
    dinv = GaussRational.from_gaussian_int(dr, di).inv()
    basis = []
    zero = GaussRational.from_gaussian_int(0)
    one = GaussRational.from_gaussian_int(1)
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [zero] * ncols
        v[f] = one
        for k, pc in enumerate(pivots):
            a, b = re[k][f], im[k][f]
            if a or b:
                v[pc] = GaussRational.from_gaussian_int(-a, -b) * dinv
        basis.append(v)
    return basis
