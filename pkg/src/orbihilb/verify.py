"""Per-root-system verification suite used by ``orbihilb verify``."""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from .catalog import (
    catalog_entry,
    chi_consistency,
    verify_order_profile,
    verify_theta_eta_identity,
    verify_z_identity,
)
from .eta import product_multiplier, random_gamma0, transformation_defect
from .partitions import verify_an_orbifold
from .quiver import verify_dim_is_2k, zero_dim_support
from .report import CheckReport
from .rigid_theta import factorization_check, orbifold_series, rigid_series
from .root_data import RootSystem, parse_root

CHECKS = (
    "theta-eta",
    "factorization",
    "z-eta",
    "order-profile",
    "dim-2k",
    "support",
    "chi-consistency",
    "transform",
    "an-oracle",
)

DIM_BOUNDS = {"A1": 6, "A2": 4, "A3": 3, "D4": 3, "E6": 2}


SUPPORT_BUDGET = 20000


def support_order(rigid, order: int, cap: int = 100, budget: int = SUPPORT_BUDGET) -> int:
    """Largest t <= min(order, cap) with at most ``budget`` components of length <= t.

    The component count is read off the theta series, so the exact
    enumeration stays a few seconds even for high-rank type A.
    """
    total = 0
    t = 0
    for power, c in enumerate(rigid.integer_coeffs(min(order, cap))):
        total += c
        if total > budget and power > 0:
            break
        t = power
    return t


def dim_bound(rs: RootSystem) -> int:
    return DIM_BOUNDS.get(rs.name, 2 if rs.n <= 8 else 1)


def sample_gamma0(rs: RootSystem, count: int, seed: int, **ranges):
    rng = random.Random(f"{seed}:{rs.name}")
    return [random_gamma0(rs.k, rng, **ranges) for _ in range(count)]


def check_chi(rs: RootSystem, samples: int, seed: int) -> CheckReport:
    bad = []
    for A in sample_gamma0(rs, samples, seed, c_range=50, d_range=10**4, shift_range=100):
        try:
            ok = chi_consistency(rs, A)
        except AssertionError as exc:  # the two general routes disagree
            ok = False
            bad.append({"matrix": str(A), "error": str(exc)})
            continue
        if not ok:
            bad.append({"matrix": str(A)})
    return CheckReport("chi-consistency", not bad, details={"root": rs.name, "samples": samples,
                                                           "failures": bad[:5]})


def check_transform(rs: RootSystem, samples: int, seed: int, tol: float = 1e-9,
                    tau: complex = 0.1 + 1.0j) -> CheckReport:
    f = catalog_entry(rs).r_eta
    worst_abs = worst_rel = 0.0
    bad = []
    for A in sample_gamma0(rs, samples, seed + 1, c_range=3, d_range=30, shift_range=5):
        defect, size, bound = transformation_defect(f, A, tau, product_multiplier(f, A))
        rel = defect / size if size else defect
        worst_abs = max(worst_abs, defect)
        worst_rel = max(worst_rel, rel)
        if defect >= tol or rel >= tol:
            bad.append(str(A))
    return CheckReport("transform", not bad, details={
        "root": rs.name, "samples": samples, "max_abs_defect": worst_abs,
        "max_rel_defect": worst_rel, "approximate": True, "failures": bad[:5],
    })


def run_checks(token: str, order: int = 200, samples: int = 1000, seed: int = 0,
               checks=CHECKS, tol: float = 1e-9, transform_samples: int = 20) -> dict:
    rs = parse_root(token)
    rigid = rigid_series(rs, order)
    reports: list = []
    for name in checks:
        if name == "theta-eta":
            reports.append(verify_theta_eta_identity(rs, order, rigid=rigid))
        elif name == "factorization":
            reports.append(factorization_check(rs, order, rigid=rigid))
        elif name == "z-eta":
            reports.append(verify_z_identity(rs, order, rigid=rigid))
        elif name == "order-profile":
            reports.append(verify_order_profile(rs))
        elif name == "dim-2k":
            b = dim_bound(rs)
            reports.append(CheckReport("dim-2k", verify_dim_is_2k(rs, b),
                                       details={"root": rs.name, "bound": b}))
        elif name == "support":
            t = support_order(rigid, order)
            reports.append(CheckReport.compare("support", rigid.truncate(24 * t),
                                               zero_dim_support(rs, t), root=rs.name, order=t))
        elif name == "chi-consistency":
            reports.append(check_chi(rs, samples, seed))
        elif name == "transform":
            reports.append(check_transform(rs, transform_samples, seed, tol))
        elif name == "an-oracle":
            if rs.kind == "A":
                t = min(order, 30)
                reports.append(verify_an_orbifold(rs.n, t, orbifold=orbifold_series(rs, t)))
        else:
            raise ValueError(f"unknown check {name!r}")
    objs = [r.to_json_obj() for r in reports]
    return {"root": rs.name, "ok": all(o["ok"] for o in objs), "checks": objs}


def run_sweep(tokens, jobs: int = 1, **kwargs) -> dict:
    """Run :func:`run_checks` over several root systems; results keep input order."""
    tokens = list(tokens)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(run_checks, t, **kwargs) for t in tokens]
            results = [f.result() for f in futures]
    else:
        results = [run_checks(t, **kwargs) for t in tokens]
    return {"ok": all(r["ok"] for r in results), "results": results}
