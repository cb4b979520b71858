"""Rigid series of a global quotient [X/G] with ADE singular points.

Only the numerical data enters: the group order k and the root systems of
the singular points, whose group orders k_i must divide k.  The global
rigid series is the product of the local ones evaluated at q^(k/k_i); after
multiplying by q^(sum (k/k_i)((n_i+1)k_i - 1)/24) it is the expansion of an
eta product of level k.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import catalog_entry
from .errors import StabilizerNotDividing
from .eta import EtaProduct, Holomorphy, eta_product_expansion, is_holomorphic, rescale_level
from .qseries import Q, QSeries, qs_mul, qs_rescale
from .report import CheckReport
from .rigid_theta import rigid_series
from .root_data import RootSystem


@dataclass(frozen=True)
class GlobalOrbifold:
    k: int
    points: tuple[RootSystem, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        if self.k < 1:
            raise StabilizerNotDividing(f"group order must be positive, got {self.k}")
        for rs in self.points:
            if self.k % rs.k:
                raise StabilizerNotDividing(
                    f"stabilizer order {rs.k} of {rs.name} does not divide group order {self.k}"
                )


@dataclass(frozen=True)
class GlobalModularData:
    prefactor: Fraction  # power of q
    weight: Fraction
    level: int
    eta: EtaProduct
    holomorphy: Holomorphy

    @property
    def prefactor24(self) -> int:
        e = self.prefactor * Q
        assert e.denominator == 1
        return int(e)


def global_rigid_series(g: GlobalOrbifold, order: int) -> QSeries:
    out = QSeries.one(order)
    for rs in g.points:
        L = g.k // rs.k
        local = rigid_series(rs, -(-order // L))
        out = qs_mul(out, qs_rescale(local, L))
    return out.truncate(Q * order)


def global_modular_data(g: GlobalOrbifold) -> GlobalModularData:
    prefactor = Fraction(0)
    eta = EtaProduct()
    for rs in g.points:
        L = g.k // rs.k
        prefactor += Fraction(L * ((rs.n + 1) * rs.k - 1), 24)
        eta = eta * rescale_level(catalog_entry(rs).r_eta, L)
    weight = Fraction(sum(rs.n for rs in g.points), 2)
    hol = is_holomorphic(eta, g.k)
    if not hol.holomorphic:
        raise AssertionError(f"global eta product {eta} is not holomorphic for Gamma_0({g.k})")
    if eta.pairs and (g.k % eta.level or Fraction(eta.sum_m_a, 24) != prefactor):
        raise AssertionError("global eta product disagrees with the prefactor or level")
    return GlobalModularData(prefactor, weight, g.k, eta, hol)


def verify_global_identity(g: GlobalOrbifold, order: int) -> CheckReport:
    """q^prefactor * R_[X/G] against the expansion of the merged eta product."""
    data = global_modular_data(g)
    lhs = global_rigid_series(g, order).shift(data.prefactor24)
    rhs = eta_product_expansion(data.eta, order)
    return CheckReport.compare("global-eta", lhs, rhs, k=g.k,
                               points=[rs.name for rs in g.points], order=order)
