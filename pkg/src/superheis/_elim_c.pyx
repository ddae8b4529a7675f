# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled fraction-free Gauss-Jordan over Z[i] on 64-bit words.

Same contract as ``_elim_py.ff_rref``.  Any intermediate that does not fit
in a signed 64-bit integer raises OverflowError; the caller then reruns the
pure-Python backend on the untouched input.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    bint __builtin_mul_overflow(long long a, long long b, long long *r) nogil
    bint __builtin_add_overflow(long long a, long long b, long long *r) nogil
    bint __builtin_sub_overflow(long long a, long long b, long long *r) nogil


cdef int _cmul(long long ar, long long ai, long long br, long long bi,
               long long *outr, long long *outi) nogil:
    cdef long long t1, t2, t3, t4
    if __builtin_mul_overflow(ar, br, &t1): return 1
    if __builtin_mul_overflow(ai, bi, &t2): return 1
    if __builtin_mul_overflow(ar, bi, &t3): return 1
    if __builtin_mul_overflow(ai, br, &t4): return 1
    if __builtin_sub_overflow(t1, t2, outr): return 1
    if __builtin_add_overflow(t3, t4, outi): return 1
    return 0


cdef int _cdiv_exact(long long nr, long long ni, long long dr, long long di,
                     long long *outr, long long *outi) nogil:
    # returns 1 on overflow, 2 on inexact division
    cdef long long n, t1, t2, sr, si
    if __builtin_mul_overflow(dr, dr, &t1): return 1
    if __builtin_mul_overflow(di, di, &t2): return 1
    if __builtin_add_overflow(t1, t2, &n): return 1
    if _cmul(nr, ni, dr, -di, &sr, &si): return 1
    if sr % n != 0 or si % n != 0: return 2
    outr[0] = sr // n
    outi[0] = si // n
    return 0


def ff_rref(list re, list im, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(re)
    cdef Py_ssize_t size = nrows * ncols
    cdef long long *R
    cdef long long *M
    cdef Py_ssize_t i, j, k, c, r, p
    cdef long long prev_r = 1, prev_i = 0, pr, pi, fr, fi, xr, xi, yr, yi
    cdef long long ar, ai, br, bi, tr, ti
    cdef int status = 0
    cdef bint unit_prev, nonzero

    if size == 0:
        return [], (1, 0)
    R = <long long *> malloc(size * sizeof(long long))
    M = <long long *> malloc(size * sizeof(long long))
    if R == NULL or M == NULL:
        free(R)
        free(M)
        raise MemoryError()
    pivots = []
    try:
        for i in range(nrows):
            rowr = re[i]
            rowi = im[i]
            for j in range(ncols):
                R[i * ncols + j] = rowr[j]
                M[i * ncols + j] = rowi[j]

        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            p = r
            while p < nrows and R[p * ncols + c] == 0 and M[p * ncols + c] == 0:
                p += 1
            if p == nrows:
                continue
            if p != r:
                for j in range(ncols):
                    R[p * ncols + j], R[r * ncols + j] = R[r * ncols + j], R[p * ncols + j]
                    M[p * ncols + j], M[r * ncols + j] = M[r * ncols + j], M[p * ncols + j]
            pr = R[r * ncols + c]
            pi = M[r * ncols + c]
            unit_prev = prev_r == 1 and prev_i == 0
            with nogil:
                for k in range(nrows):
                    if k == r:
                        continue
                    fr = R[k * ncols + c]
                    fi = M[k * ncols + c]
                    for j in range(ncols):
                        xr = R[k * ncols + j]
                        xi = M[k * ncols + j]
                        yr = R[r * ncols + j]
                        yi = M[r * ncols + j]
                        if xr == 0 and xi == 0 and ((fr == 0 and fi == 0) or (yr == 0 and yi == 0)):
                            continue
                        if _cmul(pr, pi, xr, xi, &ar, &ai):
                            status = 1
                            break
                        if _cmul(fr, fi, yr, yi, &br, &bi):
                            status = 1
                            break
                        if __builtin_sub_overflow(ar, br, &tr) or __builtin_sub_overflow(ai, bi, &ti):
                            status = 1
                            break
                        if not unit_prev and (tr != 0 or ti != 0):
                            status = _cdiv_exact(tr, ti, prev_r, prev_i, &tr, &ti)
                            if status:
                                break
                        R[k * ncols + j] = tr
                        M[k * ncols + j] = ti
                    if status:
                        break
            if status == 1:
                raise OverflowError("64-bit overflow in fraction-free elimination")
            if status == 2:
                raise ArithmeticError("inexact Gaussian integer division")
            prev_r = pr
            prev_i = pi
            pivots.append(c)
            r += 1

        for i in range(nrows):
            rowr = re[i]
            rowi = im[i]
            for j in range(ncols):
                rowr[j] = R[i * ncols + j]
                rowi[j] = M[i * ncols + j]
    finally:
        free(R)
        free(M)
    return pivots, (prev_r, prev_i)
