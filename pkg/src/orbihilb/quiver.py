"""Arithmetic of dimension vectors on the affine quiver.

A dimension vector v = (v_0, ..., v_n) decomposes as

    v = level_k * delta + (1/2)(m|m) delta + (0, m)

with m in the finite root lattice; the quiver variety attached to v with
framing w = (1, 0, ..., 0) has dimension 2 v_0 - <v, v>, which works out to
2 * level_k.  Zero-dimensional components are those with level_k = 0, one
for each m, of total length sum_i v_i dim(rho_i).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParityError
from .qseries import QSeries
from .root_data import RootSystem, affine_cartan


@dataclass(frozen=True)
class DeltaDecomposition:
    level_k: int
    m: tuple[int, ...]


def finite_pairing(rs: RootSystem, x, y) -> int:
    c = rs.cartan
    return sum(x[i] * c[i][j] * y[j] for i in range(rs.n) for j in range(rs.n))


def affine_pairing(rs: RootSystem, x, y) -> int:
    c = affine_cartan(rs)
    size = rs.n + 1
    return sum(x[i] * c[i][j] * y[j] for i in range(size) for j in range(size))


def decompose(rs: RootSystem, v) -> DeltaDecomposition:
    v = tuple(v)
    if len(v) != rs.n + 1:
        raise ValueError(f"dimension vector for {rs.name} needs {rs.n + 1} entries")
    delta = rs.delta
    m = tuple(v[i] - v[0] * delta[i] for i in range(1, rs.n + 1))
    norm = finite_pairing(rs, m, m)
    if norm % 2:
        raise ParityError(f"(m|m) = {norm} is odd")
    return DeltaDecomposition(v[0] - norm // 2, m)


def reconstruct(rs: RootSystem, dec: DeltaDecomposition) -> tuple[int, ...]:
    coeff = dec.level_k + finite_pairing(rs, dec.m, dec.m) // 2
    return tuple(coeff * rs.delta[i] + (dec.m[i - 1] if i else 0) for i in range(rs.n + 1))


def quiver_dimension(rs: RootSystem, v) -> int:
    """2 v.w - <v, v> with w = (1, 0, ..., 0)."""
    return 2 * v[0] - affine_pairing(rs, v, v)


def verify_dim_is_2k(rs: RootSystem, bound: int) -> bool:
    """dim M(v, w) == 2 level_k for every v in the cube [0, bound]^(n+1)."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    for v in itertools.product(range(bound + 1), repeat=rs.n + 1):
        dec = decompose(rs, v)
        if reconstruct(rs, dec) != v or quiver_dimension(rs, v) != 2 * dec.level_k:
            return False
    return True


def zero_dim_length(rs: RootSystem, m) -> int:
    """Length of the subscheme of the zero-dimensional component labelled by m."""
    half = finite_pairing(rs, m, m) // 2
    v = reconstruct(rs, DeltaDecomposition(0, tuple(m)))
    assert v[0] == half
    return sum(vi * di for vi, di in zip(v, rs.dims))


def _rational_ldl(rs: RootSystem):
    """C = U^T diag(D) U over Q, U unit upper triangular."""
    n = rs.n
    a = [[Fraction(x) for x in row] for row in rs.cartan]
    diag = []
    upper = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        di = a[i][i] - sum(upper[l][i] ** 2 * diag[l] for l in range(i))
        diag.append(di)
        upper[i][i] = Fraction(1)
        for j in range(i + 1, n):
            upper[i][j] = (a[i][j] - sum(upper[l][i] * upper[l][j] * diag[l] for l in range(i))) / di
    return diag, upper


def norm_ball(rs: RootSystem, max_norm, shift=None):
    """All m in Z^n with (m+s | m+s) <= max_norm, by exact rational enumeration.

    ``shift`` is a rational vector s (zero by default).
    """
    n = rs.n
    diag, upper = _rational_ldl(rs)
    s = [Fraction(x) for x in shift] if shift is not None else [Fraction(0)] * n
    m = [0] * n
    limit = Fraction(max_norm)

    def walk(i, rem):
        if i < 0:
            yield tuple(m)
            return
        # with x = m + s: (x|x) = sum_i D_i (x_i + sum_{j>i} U_ij x_j)^2
        centre = -s[i] - sum((upper[i][j] * (m[j] + s[j]) for j in range(i + 1, n)), Fraction(0))
        start = math.floor(centre)
        for direction in (0, 1):
            x = start + 1 if direction else start
            while True:
                used = diag[i] * (x - centre) ** 2
                if used > rem:
                    break
                m[i] = x
                yield from walk(i - 1, rem - used)
                x = x + 1 if direction else x - 1
        m[i] = 0

    yield from walk(n - 1, limit)


def _solve_cartan(rs: RootSystem, rhs) -> list[Fraction]:
    """C^-1 rhs over Q by forward and back substitution on the LDL factors."""
    diag, upper = _rational_ldl(rs)
    n = rs.n
    z = []
    for i in range(n):
        z.append(Fraction(rhs[i]) - sum((upper[l][i] * z[l] for l in range(i)), Fraction(0)))
    y = [z[i] / diag[i] for i in range(n)]
    x = [Fraction(0)] * n
    for i in reversed(range(n)):
        x[i] = y[i] - sum((upper[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
    return x


def norm_radius(rs: RootSystem, order: int) -> int:
    """Largest (m|m) a component of length <= order can have.

    length = (k/2)(m|m) + d.m and |d.m| <= sqrt(d^T C^-1 d) sqrt((m|m)).
    """
    d = list(rs.finite_dims)
    s = sum((a * b for a, b in zip(d, _solve_cartan(rs, d))), Fraction(0))
    root_s = math.sqrt(s)
    x = (root_s + math.sqrt(s + 2 * rs.k * order)) / rs.k
    return int(math.floor(x * x * (1 + 1e-9))) + 1


def length_ellipsoid(rs: RootSystem, order: int):
    """(s, R) with length(m) <= order  iff  (m+s | m+s) <= R.

    Completing the square in length = (k/2)(m|m) + d.m gives
    s = C^-1 d / k and R = 2 order / k + (s|s).
    """
    s = [x / rs.k for x in _solve_cartan(rs, rs.finite_dims)]
    ss = sum((s[i] * rs.cartan[i][j] * s[j] for i in range(rs.n) for j in range(rs.n)), Fraction(0))
    return s, Fraction(2 * order, rs.k) + ss


def zero_dim_support(rs: RootSystem, order: int, box: int | None = None) -> QSeries:
    """Sum of q^length over zero-dimensional components, exact to q^order.

    By default the lattice points of :func:`length_ellipsoid` are visited in
    exact arithmetic; with ``box`` the cube |m_i| <= box is used instead.
    Either way each length is recomputed from the dimension vector.
    """
    if box is None:
        shift, radius = length_ellipsoid(rs, order)
        points = norm_ball(rs, radius, shift)
    else:
        points = itertools.product(range(-box, box + 1), repeat=rs.n)
    counts = [0] * (order + 1)
    for m in points:
        length = zero_dim_length(rs, m)
        if length <= order:
            counts[length] += 1
    return QSeries.from_integer_coeffs(counts, order)
