"""Eta-product expressions attached to each ADE root system.

For each root system with rank n and group order k two eta products are
recorded: ``z_eta`` for the orbifold series (so that q^(-1/24) Z(q) is its
expansion) and ``r_eta`` for the rigid series, r_eta = z_eta * eta(k tau)^(n+1).
Structural facts about r_eta (sum a_m = n, sum a_m/m = 0, sum m a_m =
(n+1)k - 1, level k) are asserted when an entry is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotInGamma0
from .eta import (
    INFINITY,
    EtaProduct,
    GammaElement,
    UnitRoot24,
    cusp_order,
    divisors,
    eta_product_expansion,
    is_holomorphic,
    kronecker_star,
    kronecker_substar,
    product_multiplier,
    weight,
)
from .qseries import Q, QSeries, qs_mul
from .report import CheckReport
from .rigid_theta import goettsche_factor, rigid_series
from .root_data import RootSystem


def _z_eta(rs: RootSystem) -> EtaProduct:
    n = rs.n
    if rs.kind == "A":
        return EtaProduct({1: -1})
    if rs.kind == "D":
        return EtaProduct([(2, 2), (4 * n - 8, 1), (1, -1), (4, -1), (2 * n - 4, -2)])
    return {
        6: EtaProduct({2: 2, 24: 1, 1: -1, 8: -2, 12: -1}),
        7: EtaProduct({2: 2, 48: 1, 1: -1, 12: -1, 16: -1, 24: -1}),
        8: EtaProduct({2: 2, 120: 1, 1: -1, 24: -1, 40: -1, 60: -1}),
    }[n]


@dataclass(frozen=True)
class DeltaCatalogEntry:
    rs: RootSystem
    z_eta: EtaProduct
    r_eta: EtaProduct

    @property
    def expected_weight(self) -> Fraction:
        return Fraction(self.rs.n, 2)

    @property
    def expected_level(self) -> int:
        return self.rs.k

    @property
    def expected_order_inf(self) -> Fraction:
        return Fraction((self.rs.n + 1) * self.rs.k - 1, 24)

    @property
    def expected_order_cusp1(self) -> Fraction:
        return Fraction(0)

    @property
    def prefactor24(self) -> int:
        """Exponent index of the prefactor q^(((n+1)k - 1)/24)."""
        return (self.rs.n + 1) * self.rs.k - 1


@lru_cache(maxsize=None)
def catalog_entry(rs: RootSystem) -> DeltaCatalogEntry:
    z = _z_eta(rs)
    r = z * EtaProduct({rs.k: rs.n + 1})
    n, k = rs.n, rs.k
    if r.sum_a != n or r.sum_a_over_m != 0 or r.sum_m_a != (n + 1) * k - 1:
        raise AssertionError(f"catalog entry for {rs.name} fails its structural checks: {r}")
    if r.level != k or z.sum_m_a != -1:
        raise AssertionError(f"catalog entry for {rs.name} has wrong level or Z prefactor")
    return DeltaCatalogEntry(rs, z, r)


def z_series_from_eta(entry: DeltaCatalogEntry, order: int) -> QSeries:
    """Z(q) from the eta expression, i.e. q^(1/24) times the expansion of z_eta."""
    return eta_product_expansion(entry.z_eta, order).shift(1).truncate(Q * order)


def verify_theta_eta_identity(rs: RootSystem, order: int, rigid: QSeries | None = None,
                              entry: DeltaCatalogEntry | None = None) -> CheckReport:
    """q^(((n+1)k-1)/24) R(q) against the expansion of r_eta, to q^order."""
    entry = entry or catalog_entry(rs)
    if rigid is None:
        rigid = rigid_series(rs, order)
    lhs = rigid.shift(entry.prefactor24)
    rhs = eta_product_expansion(entry.r_eta, order)
    return CheckReport.compare("theta-eta", lhs, rhs, root=rs.name, order=order)


def verify_z_identity(rs: RootSystem, order: int, rigid: QSeries | None = None) -> CheckReport:
    """q^(-1/24) Z(q) (theta route) against the expansion of z_eta."""
    entry = catalog_entry(rs)
    if rigid is None:
        rigid = rigid_series(rs, order)
    z = qs_mul(goettsche_factor(rs, order), rigid).truncate(Q * order)
    return CheckReport.compare("z-eta", z.shift(-1), eta_product_expansion(entry.z_eta, order),
                               root=rs.name, order=order)


@dataclass
class OrderProfile:
    root: str
    orders: list[tuple[object, Fraction]]
    ok: bool
    failures: list[str]

    def to_json_obj(self) -> dict:
        return {
            "check": "order-profile",
            "root": self.root,
            "ok": self.ok,
            "orders": [
                {"cusp": c, "order": {"num": str(o.numerator), "den": str(o.denominator)}}
                for c, o in self.orders
            ],
            "failures": self.failures,
        }


def verify_order_profile(rs: RootSystem) -> OrderProfile:
    """Orders of r_eta at 1/c for c | k and at infinity, checked against their expected shape."""
    entry = catalog_entry(rs)
    f = entry.r_eta
    failures = []
    rows: list[tuple[object, Fraction]] = []
    for c in divisors(rs.k):
        o = cusp_order(f, c)
        rows.append((c, o))
        if c == 1 and o != 0:
            failures.append(f"order at cusp 1 is {o}, expected 0")
        if c != 1 and not o > 0:
            failures.append(f"order at cusp 1/{c} is {o}, expected > 0")
        if rs.kind == "A" and o != Fraction(c * c - 1, 24):
            failures.append(f"order at cusp 1/{c} is {o}, closed form gives {Fraction(c * c - 1, 24)}")
    o_inf = cusp_order(f, INFINITY)
    rows.append((INFINITY, o_inf))
    if o_inf != entry.expected_order_inf:
        failures.append(f"order at infinity is {o_inf}, expected {entry.expected_order_inf}")
    hol = is_holomorphic(f, rs.k)
    if hol.status != "holomorphic":
        failures.append(f"holomorphy status {hol.status}, expected holomorphic")
    if weight(f) != entry.expected_weight:
        failures.append(f"weight {weight(f)}, expected {entry.expected_weight}")
    return OrderProfile(rs.name, rows, not failures, failures)


def chi_delta(rs: RootSystem, A: GammaElement) -> UnitRoot24:
    """Multiplier system of r_eta on Gamma_0(k), from the simplified closed form."""
    if A.c % rs.k:
        raise NotInGamma0(f"{A} is not in Gamma_0({rs.k})")
    entry = catalog_entry(rs)
    a, b, c, d = A.entries
    n, k = rs.n, rs.k
    sign = 1
    if c & 1:
        for m, am in entry.r_eta.pairs:
            sign *= kronecker_star(d, c // m) ** (am & 1)
        j = b * d * ((n + 1) * k - 1)
    else:
        for m, am in entry.r_eta.pairs:
            sign *= kronecker_substar(c // m, d) ** (am & 1)
        j = b * d * ((n + 1) * k - 1) + 3 * (d - 1) * n
    return UnitRoot24(j) * UnitRoot24.sign(sign)


def chi_consistency(rs: RootSystem, A: GammaElement) -> bool:
    """chi_delta(A) equals the general eta-product multiplier (which checks its own two routes)."""
    return chi_delta(rs, A) == product_multiplier(catalog_entry(rs).r_eta, A)


def appendix_rows() -> list[tuple[str, int, Fraction]]:
    """(type, c, ord) for r_eta of E6, E7, E8 at every divisor c of k."""
    from .root_data import make_root_system

    rows = []
    for n in (6, 7, 8):
        rs = make_root_system("E", n)
        f = catalog_entry(rs).r_eta
        for c in divisors(rs.k):
            rows.append((rs.name, c, cusp_order(f, c)))
    return rows


def appendix_csv() -> str:
    lines = ["type,c,order"]
    for name, c, o in appendix_rows():
        txt = str(o.numerator) if o.denominator == 1 else f"{o.numerator}/{o.denominator}"
        lines.append(f"{name},{c},{txt}")
    return "\n".join(lines) + "\n"
