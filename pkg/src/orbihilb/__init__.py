"""Rigid orbifold Hilbert scheme series of ADE Kleinian orbifolds.

The rigid series of [C^2/G] is computed as a lattice theta sum and compared
exactly with its eta-product expression; cusp orders, weights and
multiplier systems of those eta products are computed exactly.
"""

__version__ = "0.1.0"

from .catalog import catalog_entry, chi_delta, verify_order_profile, verify_theta_eta_identity
from .eta import EtaProduct, GammaElement, UnitRoot24, cusp_order, eta_multiplier, product_multiplier
from .global_series import GlobalOrbifold, global_modular_data, global_rigid_series
from .kernels import BACKEND
from .qseries import QSeries, euler_product, qs_inverse, qs_mul, qs_rescale
from .rigid_theta import factorization_check, orbifold_series, rigid_series
from .root_data import RootSystem, affine_cartan, make_root_system, parse_root

__all__ = [
    "BACKEND",
    "EtaProduct",
    "GammaElement",
    "GlobalOrbifold",
    "QSeries",
    "RootSystem",
    "UnitRoot24",
    "affine_cartan",
    "catalog_entry",
    "chi_delta",
    "cusp_order",
    "eta_multiplier",
    "euler_product",
    "factorization_check",
    "global_modular_data",
    "global_rigid_series",
    "make_root_system",
    "orbifold_series",
    "parse_root",
    "product_multiplier",
    "qs_inverse",
    "qs_mul",
    "qs_rescale",
    "rigid_series",
    "verify_order_profile",
    "verify_theta_eta_identity",
]
