"""Pure-Python kernels.  Same signatures as the compiled ``_kernels`` module."""

from __future__ import annotations

import math


def convolve(xa, xb, size):
    """First ``size`` coefficients of the Cauchy product of two coefficient lists."""
    out = [0] * size
    nb = min(len(xb), size)
    for i, x in enumerate(xa[:size]):
        if not x:
            continue
        lim = min(nb, size - i)
        for j in range(lim):
            y = xb[j]
            if y:
                out[i + j] += x * y
    return out


def theta_counts(cartan, lin, k, order, diag, mu, shift, bound):
    """Count m in Z^n by the value of lin.m + k*(m^T C m)/2, for values <= order.

    ``diag``, ``mu`` describe C = U^T diag(D) U with U unit upper triangular
    (``mu[i][j]`` = U_ij for j > i); ``shift`` is the centre c with
    y = m + c, and the search region is y^T C y <= bound.  The floats only
    prune; each leaf value is evaluated exactly in integers.
    """
    n = len(lin)
    counts = [0] * (order + 1)
    m = [0] * n
    y = [0.0] * n

    def level(i, rem, partial):
        # centre of y_i given y_{i+1..n-1}
        ctr = 0.0
        cross = 0
        row_mu = mu[i]
        row_c = cartan[i]
        for j in range(i + 1, n):
            ctr -= row_mu[j] * y[j]
            cross += row_c[j] * m[j]
        r = math.sqrt(max(rem, 0.0) / diag[i])
        r += 1e-7 * (1.0 + r)
        lo = math.ceil(ctr - shift[i] - r)
        hi = math.floor(ctr - shift[i] + r)
        a = lin[i] + k * cross
        if i == 0:
            for mi in range(lo, hi + 1):
                e = partial + mi * (a + k * mi)
                if e <= order:
                    if e < 0:
                        raise AssertionError("negative exponent in theta enumeration")
                    counts[e] += 1
            return
        di = diag[i]
        for mi in range(lo, hi + 1):
            yi = mi + shift[i]
            t = yi - ctr
            m[i] = mi
            y[i] = yi
            level(i - 1, rem - di * t * t, partial + mi * (a + k * mi))
        m[i] = 0
        y[i] = 0.0

    if n:
        level(n - 1, bound, 0)
    else:
        counts[0] = 1
    return counts
