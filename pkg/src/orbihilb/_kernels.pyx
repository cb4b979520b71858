# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: int64 convolution and lattice enumeration."""

from libc.math cimport sqrt, ceil, floor
from libc.stdlib cimport malloc, free

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef long long i64

cdef i64 LIMIT = (<i64>1) << 62


def _fits(xs):
    cdef object hi = 0
    for x in xs:
        if type(x) is not int:
            return None
        if x > hi:
            hi = x
        elif -x > hi:
            hi = -x
    return hi


def convolve(xa, xb, size):
    """Truncated Cauchy product; int64 fast path, Python objects otherwise."""
    ma = _fits(xa)
    mb = _fits(xb)
    cdef Py_ssize_t n = size
    if ma is None or mb is None or ma * mb * (min(len(xa), len(xb), n) + 1) >= LIMIT:
        return _convolve_obj(xa, xb, size)
    cdef Py_ssize_t la = min(len(xa), n), lb = min(len(xb), n)
    cdef cnp.ndarray[i64, ndim=1] a = np.asarray(xa[:la], dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] b = np.asarray(xb[:lb], dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] out = np.zeros(n, dtype=np.int64)
    cdef Py_ssize_t i, j, lim
    cdef i64 x
    for i in range(la):
        x = a[i]
        if x == 0:
            continue
        lim = lb if lb < n - i else n - i
        for j in range(lim):
            out[i + j] += x * b[j]
    return [int(v) for v in out]


def _convolve_obj(xa, xb, size):
    out = [0] * size
    nb = min(len(xb), size)
    for i, x in enumerate(xa[:size]):
        if not x:
            continue
        for j in range(min(nb, size - i)):
            y = xb[j]
            if y:
                out[i + j] += x * y
    return out


def theta_counts(cartan, lin, k, order, diag, mu, shift, bound):
    """Iterative version of ``_kernels_py.theta_counts``; see its docstring."""
    cdef int n = len(lin)
    cdef i64 K = k
    cdef i64 T = order
    cdef cnp.ndarray[i64, ndim=1] counts = np.zeros(order + 1, dtype=np.int64)
    if n == 0:
        counts[0] = 1
        return [int(v) for v in counts]

    cdef cnp.ndarray[i64, ndim=2] C = np.asarray(cartan, dtype=np.int64)
    cdef cnp.ndarray[i64, ndim=1] L = np.asarray(lin, dtype=np.int64)
    cdef cnp.ndarray[double, ndim=1] D = np.asarray(diag, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=2] MU = np.asarray(mu, dtype=np.float64)
    cdef cnp.ndarray[double, ndim=1] S = np.asarray(shift, dtype=np.float64)

    cdef i64 *m = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *hi = <i64 *> malloc(n * sizeof(i64))
    cdef i64 *part = <i64 *> malloc((n + 1) * sizeof(i64))
    cdef i64 *lincoef = <i64 *> malloc(n * sizeof(i64))
    cdef double *y = <double *> malloc(n * sizeof(double))
    cdef double *ctr = <double *> malloc(n * sizeof(double))
    cdef double *rem = <double *> malloc((n + 1) * sizeof(double))
    cdef int i, j
    cdef double c, r, t
    cdef i64 cross, e, mi, lo, top, a
    cdef bint descend

    try:
        for j in range(n):
            m[j] = 0
            y[j] = 0.0
        rem[n] = bound
        part[n] = 0
        i = n - 1
        descend = True
        while True:
            if descend:
                # set up the range for coordinate i
                c = 0.0
                cross = 0
                for j in range(i + 1, n):
                    c -= MU[i, j] * y[j]
                    cross += C[i, j] * m[j]
                ctr[i] = c
                r = rem[i + 1] / D[i]
                if r < 0.0:
                    r = 0.0
                r = sqrt(r)
                r += 1e-7 * (1.0 + r)
                lo = <i64> ceil(c - S[i] - r)
                top = <i64> floor(c - S[i] + r)
                lincoef[i] = L[i] + K * cross
                if i == 0:
                    a = lincoef[0]
                    for mi in range(lo, top + 1):
                        e = part[1] + mi * (a + K * mi)
                        if e <= T:
                            if e < 0:
                                raise AssertionError("negative exponent in theta enumeration")
                            counts[e] += 1
                    descend = False
                    i = 1
                    if i >= n:
                        break
                    continue
                m[i] = lo - 1
                hi[i] = top
                descend = False
            # advance coordinate i
            m[i] += 1
            if m[i] > hi[i]:
                m[i] = 0
                y[i] = 0.0
                i += 1
                if i >= n:
                    break
                continue
            mi = m[i]
            y[i] = mi + S[i]
            t = y[i] - ctr[i]
            rem[i] = rem[i + 1] - D[i] * t * t
            part[i] = part[i + 1] + mi * (lincoef[i] + K * mi)
            i -= 1
            descend = True
    finally:
        free(m)
        free(hi)
        free(part)
        free(lincoef)
        free(y)
        free(ctr)
        free(rem)
    return [int(v) for v in counts]
