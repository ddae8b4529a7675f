"""Fraction-free Gauss-Jordan elimination over the Gaussian integers.

Pure-Python reference backend.  The compiled module ``_elim_c`` exposes the
same function with the same contract.

A matrix is passed as two equally shaped lists of int rows holding the real
and imaginary parts.  Every update

    A[k][j] <- (p * A[k][j] - A[k][c] * A[r][j]) / prev

is an exact division in Z[i] (entries stay minors of the input), so no
fractions appear.  On return every pivot entry equals the last pivot ``d``
and dividing by ``d`` gives the reduced row echelon form.
"""


def _div_exact(nr, ni, dr, di):
    n = dr * dr + di * di
    qr, rr = divmod(nr * dr + ni * di, n)
    qi, ri = divmod(ni * dr - nr * di, n)
    if rr or ri:
        raise ArithmeticError("inexact Gaussian integer division")
    return qr, qi


def ff_rref(re, im, ncols):
    """Reduce ``re + i*im`` in place.

    Returns ``(pivot_columns, (d_re, d_im))``.  Rows past the rank end up zero.
    """
    nrows = len(re)
    prev_r, prev_i = 1, 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not (re[p][c] or im[p][c]):
            p += 1
        if p == nrows:
            continue
        if p != r:
            re[p], re[r] = re[r], re[p]
            im[p], im[r] = im[r], im[p]
        pr, pi = re[r][c], im[r][c]
        Rr, Ri = re[r], im[r]
        unit_prev = prev_r == 1 and prev_i == 0
        for k in range(nrows):
            if k == r:
                continue
            Kr, Ki = re[k], im[k]
            fr, fi = Kr[c], Ki[c]
            if not (fr or fi):
                # row only rescales by p / prev
                if not any(Kr) and not any(Ki):
                    continue
                for j in range(ncols):
                    xr, xi = Kr[j], Ki[j]
                    if xr or xi:
                        tr = pr * xr - pi * xi
                        ti = pr * xi + pi * xr
                        if not unit_prev:
                            tr, ti = _div_exact(tr, ti, prev_r, prev_i)
                        Kr[j], Ki[j] = tr, ti
                continue
            for j in range(ncols):
                xr, xi = Kr[j], Ki[j]
                yr, yi = Rr[j], Ri[j]
                tr = pr * xr - pi * xi - (fr * yr - fi * yi)
                ti = pr * xi + pi * xr - (fr * yi + fi * yr)
                if not unit_prev and (tr or ti):
                    tr, ti = _div_exact(tr, ti, prev_r, prev_i)
                Kr[j], Ki[j] = tr, ti
        prev_r, prev_i = pr, pi
        pivots.append(c)
        r += 1
    return pivots, (prev_r, prev_i)
