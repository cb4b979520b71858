"""The rigid series as a theta sum over the root lattice.

For a root system of rank n with group order k and finite-node dimensions
d_1..d_n, the one-variable rigid series is

    R(q) = sum over m in Z^n of q^E(m),   E(m) = d.m + k * (m^T C m) / 2,

and the full orbifold series is R(q) times the Goettsche factor
prod_j (1 - q^(k j))^-(n+1).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import kernels
from .qseries import Q, QSeries, euler_product, qs_inverse, qs_mul
from .report import CheckReport
from .root_data import RootSystem, is_positive_definite


def half_norm(rs: RootSystem, m) -> int:
    """(m^T C m) / 2; C is even so this is an integer."""
    c = rs.cartan
    total = 0
    for i, mi in enumerate(m):
        if mi:
            total += mi * sum(c[i][j] * m[j] for j in range(rs.n))
    if total % 2:
        raise AssertionError(f"odd norm {total} for {rs.name}: Cartan matrix is not even")
    return total // 2


def lattice_exponent(rs: RootSystem, m) -> int:
    """E(m) = sum_i m_i dim(rho_i) + k (m^T C m)/2."""
    d = rs.finite_dims
    return sum(mi * di for mi, di in zip(m, d)) + rs.k * half_norm(rs, m)


@lru_cache(maxsize=None)
def lambda_min_certificate(rs: RootSystem) -> Fraction:
    """A rational lower bound for the smallest eigenvalue of C.

    Found numerically, then certified by checking that C - lambda*I is
    positive definite with exact leading minors.
    """
    lam = float(np.linalg.eigvalsh(np.array(rs.cartan, dtype=float)).min())
    guess = Fraction(lam * (1 - 1e-6)).limit_denominator(10**9)
    while True:
        shifted = [[Fraction(x) - (guess if i == j else 0) for j, x in enumerate(row)]
                   for i, row in enumerate(rs.cartan)]
        if guess > 0 and is_positive_definite(shifted):
            return guess
        guess /= 2


def box_radius(rs: RootSystem, order: int) -> int:
    """B such that every m with E(m) <= order has |m_i| <= B.

    From E(m) >= (k/2) lam |m|^2 - dmax sqrt(n) |m| with lam a certified
    lower bound on the spectrum of C.
    """
    lam = lambda_min_certificate(rs)
    a = Fraction(rs.k) * lam / 2
    b = max(rs.finite_dims) * math.sqrt(rs.n)
    # positive root of a r^2 - b r - order = 0, rounded outwards
    r = (b + math.sqrt(b * b + 4 * float(a) * order)) / (2 * float(a))
    return int(math.floor(r * (1 + 1e-9))) + 1


@lru_cache(maxsize=None)
def _ellipsoid_data(rs: RootSystem):
    c = np.array(rs.cartan, dtype=float)
    d = np.array(rs.finite_dims, dtype=float)
    upper = np.linalg.cholesky(c).T  # C = U^T U
    diag = np.diag(upper) ** 2
    mu = upper / np.diag(upper)[:, None]
    shift = np.linalg.solve(c, d) / rs.k
    offset = float(shift @ c @ shift)
    return diag.tolist(), mu.tolist(), shift.tolist(), offset


def rigid_counts(rs: RootSystem, order: int, impl=None) -> list[int]:
    """Coefficients r_0..r_order of the rigid series.

    Enumerates the ellipsoid (m + s)^T C (m + s) <= 2 order/k + s^T C s with
    s = C^-1 d / k, which is exactly the region E(m) <= order.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    diag, mu, shift, offset = _ellipsoid_data(rs)
    bound = 2.0 * order / rs.k + offset
    bound += 1e-9 * (1.0 + bound)
    impl = impl or kernels
    return impl.theta_counts(
        [list(r) for r in rs.cartan], list(rs.finite_dims), rs.k, order, diag, mu, shift, bound
    )


def rigid_counts_box(rs: RootSystem, order: int, box: int) -> list[int]:
    """Brute-force coefficients over the cube |m_i| <= box."""
    counts = [0] * (order + 1)
    for m in itertools.product(range(-box, box + 1), repeat=rs.n):
        e = lattice_exponent(rs, m)
        if 0 <= e <= order:
            counts[e] += 1
        elif e < 0:
            raise AssertionError(f"negative exponent {e} at m={m}")
    return counts


def rigid_series(rs: RootSystem, order: int, box: int | None = None) -> QSeries:
    """R(q) for the Kleinian orbifold of ``rs``, exact to q^order.

    With ``box`` the cube |m_i| <= box is enumerated directly instead of the
    ellipsoid; this is only complete when ``box >= box_radius(rs, order)``.
    """
    if box is None:
        counts = rigid_counts(rs, order)
    else:
        counts = rigid_counts_box(rs, order, box)
    return QSeries.from_integer_coeffs(counts, order)


def goettsche_factor(rs: RootSystem, order: int) -> QSeries:
    """Hilbert-scheme series of the minimal resolution at q^k: prod (1 - q^(kj))^-(n+1)."""
    return euler_product(rs.k, -(rs.n + 1), order)


def orbifold_series(rs: RootSystem, order: int, rigid: QSeries | None = None) -> QSeries:
    """Z(q) = Goettsche factor times R(q), exact to q^order."""
    if rigid is None:
        rigid = rigid_series(rs, order)
    return qs_mul(goettsche_factor(rs, order), rigid).truncate(Q * order)


def factorization_check(
    rs: RootSystem,
    order: int,
    orbifold: QSeries | None = None,
    rigid: QSeries | None = None,
) -> CheckReport:
    """Check R = Z / Z_res(q^k) exactly to q^order.

    ``orbifold`` defaults to the eta-product expression for Z, which is
    computed without the lattice sum, so the check is not circular.  The
    division is carried out with a series inverse.
    """
    if rigid is None:
        rigid = rigid_series(rs, order)
    if orbifold is None:
        from .catalog import catalog_entry, z_series_from_eta

        orbifold = z_series_from_eta(catalog_entry(rs), order)
    quotient = qs_mul(orbifold, qs_inverse(goettsche_factor(rs, order))).truncate(Q * order)
    return CheckReport.compare("factorization", quotient, rigid.truncate(Q * order),
                               root=rs.name, order=order)
