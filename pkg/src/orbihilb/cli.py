"""Command-line interface.

Exit status: 0 on success, 1 when a verification fails (a JSON or text
report describes the discrepancy), 2 on usage or input errors.

Defaults for truncation order, seed, sample count and tolerance come, in
increasing priority, from built-in values, the environment variables
``ORBIHILB_TRUNC`` / ``ORBIHILB_SEED``, a ``key = value`` config file given
with ``--config``, and finally the command-line flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .catalog import appendix_csv, appendix_rows, catalog_entry, chi_delta
from .errors import OrbiHilbError
from .eta import (
    INFINITY,
    EtaProduct,
    eta_multiplier,
    is_holomorphic,
    order_table,
    parse_matrix,
    product_multiplier,
    weight,
)
from .global_series import GlobalOrbifold, global_modular_data, global_rigid_series
from .partitions import partition_count, verify_an_orbifold
from .qseries import QSeries, format_exponent, format_plain, format_rational
from .quiver import verify_dim_is_2k, zero_dim_support
from .rigid_theta import goettsche_factor, orbifold_series, rigid_series
from .root_data import parse_root, standard_sweep
from .verify import CHECKS, run_sweep

BUILTIN = {"trunc": 200, "seed": 0, "samples": 1000, "tolerance": 1e-9}
FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    trunc: int
    seed: int
    samples: int
    tolerance: float
    fmt: str
    args: argparse.Namespace


def read_config_file(path: str) -> dict:
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.split("#", 1)[0].strip()
                if not line:
                    continue
                if "=" not in line:
                    raise UsageError(f"{path}:{lineno}: expected key = value")
                key, value = (s.strip() for s in line.split("=", 1))
                if key not in BUILTIN:
                    raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
                out[key] = value
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    return out


def resolve_config(args: argparse.Namespace) -> RunConfig:
    values: dict = dict(BUILTIN)
    env = {"trunc": os.environ.get("ORBIHILB_TRUNC"), "seed": os.environ.get("ORBIHILB_SEED")}
    values.update({k: v for k, v in env.items() if v is not None})
    if getattr(args, "config", None):
        values.update(read_config_file(args.config))
    for key in BUILTIN:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    try:
        trunc = int(values["trunc"])
        seed = int(values["seed"])
        samples = int(values["samples"])
        tol = float(values["tolerance"])
    except ValueError as exc:
        raise UsageError(f"bad configuration value: {exc}") from exc
    if trunc < 0:
        raise UsageError("truncation order must be non-negative")
    fmt = getattr(args, "format", None) or ("json" if args.command == "verify" else "plain")
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r}")
    return RunConfig(args.command, trunc, seed, samples, tol, fmt, args)


# -- rendering --------------------------------------------------------------


def _rat_obj(x) -> dict:
    f = Fraction(x)
    return {"num": str(f.numerator), "den": str(f.denominator)}


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def render_series(s: QSeries, fmt: str) -> str:
    if fmt == "json":
        return s.to_json()
    if fmt == "csv":
        lines = ["exponent,coefficient"]
        lines += [f"{format_exponent(e)},{format_rational(c)}" for e, c in s.terms()]
        return "\n".join(lines)
    return format_plain(s)


def render_orders(rows, fmt: str) -> str:
    if fmt == "json":
        return _dump([{"cusp": c if c == INFINITY else c, "order": _rat_obj(o)} for c, o in rows])
    if fmt == "csv":
        return "\n".join(["cusp,order"] + [f"{c},{format_rational(o)}" for c, o in rows])
    return "\n".join(f"1/{c}: {format_rational(o)}" if c != INFINITY else f"inf: {format_rational(o)}"
                     for c, o in rows)


# -- commands ---------------------------------------------------------------


def cmd_series(cfg: RunConfig) -> int:
    rs = parse_root(cfg.args.root)
    which = cfg.args.which
    if which == "rigid":
        s = rigid_series(rs, cfg.trunc)
    elif which == "orbifold":
        s = orbifold_series(rs, cfg.trunc)
    else:
        s = goettsche_factor(rs, cfg.trunc)
    print(render_series(s, cfg.fmt))
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    root = cfg.args.root
    tokens = [rs.name for rs in standard_sweep()] if root == "all" else [parse_root(root).name]
    checks = CHECKS
    if cfg.args.checks:
        checks = tuple(c.strip() for c in cfg.args.checks.split(","))
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)}")
    jobs = cfg.args.jobs or min(len(tokens), os.cpu_count() or 1)
    report = run_sweep(tokens, jobs=jobs, order=cfg.trunc, samples=cfg.samples,
                       seed=cfg.seed, checks=checks, tol=cfg.tolerance)
    if cfg.fmt != "plain":
        print(_dump(report))
    else:
        for res in report["results"]:
            for chk in res["checks"]:
                status = "PASS" if chk["ok"] else "FAIL"
                extra = ""
                if not chk["ok"] and "first_discrepancy" in chk:
                    fd = chk["first_discrepancy"]
                    extra = f" at q^{fd['power']}: {fd['expected']} vs {fd['actual']}"
                print(f"{status} {res['root']} {chk['check']}{extra}")
    return 0 if report["ok"] else 1


def cmd_cusps(cfg: RunConfig) -> int:
    f = EtaProduct.parse(cfg.args.eta)
    N = cfg.args.level or f.level
    if cfg.args.all_divisors:
        rows = order_table(f, N)
    else:
        rows = [(INFINITY, order_table(f, N)[-1][1])]
    hol = is_holomorphic(f, N)
    if cfg.fmt == "json":
        print(_dump({"eta": str(f), "level": N, "weight": _rat_obj(weight(f)), "status": hol.status,
                     "orders": [{"cusp": c, "order": _rat_obj(o)} for c, o in rows]}))
    else:
        print(render_orders(rows, cfg.fmt))
        if cfg.fmt == "plain":
            print(f"status: {hol.status} for Gamma_0({N})")
    return 0


def cmd_multiplier(cfg: RunConfig) -> int:
    A = parse_matrix(cfg.args.matrix)
    if cfg.args.root:
        rs = parse_root(cfg.args.root)
        value = chi_delta(rs, A)
        label = f"chi_{rs.name}"
    elif cfg.args.eta:
        f = EtaProduct.parse(cfg.args.eta)
        value = product_multiplier(f, A)
        label = f"v_[{f}]"
    else:
        value = eta_multiplier(A)
        label = "v_eta"
    if cfg.fmt == "json":
        print(_dump({"matrix": list(A.entries), "multiplier": label, "j": value.j,
                     "value": {"root_of_unity": f"e({format_rational(Fraction(value.j, 24))})"}}))
    else:
        print(f"{label}({A}) = {value}")
    return 0


def cmd_quiver(cfg: RunConfig) -> int:
    rs = parse_root(cfg.args.root)
    out: dict = {"root": rs.name}
    ok = True
    if cfg.args.verify_dim:
        res = verify_dim_is_2k(rs, cfg.args.bound)
        out["dim_is_2k"] = {"bound": cfg.args.bound, "ok": res}
        ok &= res
    if cfg.args.support:
        s = zero_dim_support(rs, cfg.trunc)
        same = s.agrees_with(rigid_series(rs, cfg.trunc))
        out["support"] = {"series": s.to_json_obj(), "matches_rigid_series": same}
        ok &= same
    if not (cfg.args.verify_dim or cfg.args.support):
        raise UsageError("quiver needs --verify-dim and/or --support")
    out["ok"] = ok
    if cfg.fmt == "json":
        print(_dump(out))
    else:
        if "dim_is_2k" in out:
            print(f"dim = 2k on [0,{cfg.args.bound}]^{rs.n + 1}: {'PASS' if out['dim_is_2k']['ok'] else 'FAIL'}")
        if "support" in out:
            print(format_plain(zero_dim_support(rs, cfg.trunc)))
            print(f"matches rigid series: {'PASS' if out['support']['matches_rigid_series'] else 'FAIL'}")
    return 0 if ok else 1


def cmd_global(cfg: RunConfig) -> int:
    tokens = [t for t in (cfg.args.points or "").split(",") if t.strip()]
    g = GlobalOrbifold(cfg.args.group_order, tuple(parse_root(t) for t in tokens))
    data = global_modular_data(g)
    s = global_rigid_series(g, cfg.trunc)
    if cfg.fmt == "json":
        print(_dump({
            "group_order": g.k,
            "points": [rs.name for rs in g.points],
            "series": s.to_json_obj(),
            "prefactor": _rat_obj(data.prefactor),
            "weight": _rat_obj(data.weight),
            "level": data.level,
            "eta": str(data.eta),
            "status": data.holomorphy.status,
            "orders": [{"cusp": c, "order": _rat_obj(o)} for c, o in data.holomorphy.orders],
        }))
    else:
        print(render_series(s, cfg.fmt))
        if cfg.fmt == "plain":
            print(f"prefactor q^{format_rational(data.prefactor)}, weight {format_rational(data.weight)}, "
                  f"level {data.level}, eta {data.eta or '1'} ({data.holomorphy.status})")
    return 0


def cmd_table_appendix(cfg: RunConfig) -> int:
    if cfg.fmt == "json":
        print(_dump([{"type": t, "cusp": c, "order": _rat_obj(o)} for t, c, o in appendix_rows()]))
    elif cfg.fmt == "csv":
        sys.stdout.write(appendix_csv())
    else:
        for t, c, o in appendix_rows():
            print(f"{t}  1/{c}  {format_rational(o)}")
    return 0


def cmd_oracle(cfg: RunConfig) -> int:
    if not cfg.args.partitions:
        raise UsageError("oracle needs --partitions")
    upto = cfg.args.up_to
    counts = [partition_count(m, exhaustive=True) for m in range(upto + 1)]
    ok = True
    checks = []
    for n in cfg.args.check_an or []:
        rep = verify_an_orbifold(n, upto, exhaustive=True)
        checks.append(rep.to_json_obj())
        ok &= rep.ok
    if cfg.fmt == "json":
        print(_dump({"partitions": counts, "checks": checks, "ok": ok}))
    elif cfg.fmt == "csv":
        print("\n".join(["m,p"] + [f"{m},{p}" for m, p in enumerate(counts)]))
    else:
        print(" ".join(str(p) for p in counts))
        for chk in checks:
            print(f"{'PASS' if chk['ok'] else 'FAIL'} {chk['root']} an-oracle")
    return 0 if ok else 1


def cmd_catalog(cfg: RunConfig) -> int:
    rs = parse_root(cfg.args.root)
    entry = catalog_entry(rs)
    show = [s.strip() for s in cfg.args.show.split(",")]
    out: dict = {"root": rs.name, "n": rs.n, "k": rs.k}
    for item in show:
        if item == "eta":
            out["z_eta"] = str(entry.z_eta)
            out["r_eta"] = str(entry.r_eta)
        elif item == "orders":
            out["orders"] = [{"cusp": c, "order": _rat_obj(o)} for c, o in order_table(entry.r_eta, rs.k)]
        elif item == "weight":
            out["weight"] = _rat_obj(weight(entry.r_eta))
        elif item == "dims":
            out["dims"] = list(rs.dims)
        else:
            raise UsageError(f"unknown catalog field {item!r}")
    if cfg.fmt == "json":
        print(_dump(out))
    else:
        for key, val in out.items():
            if key == "orders":
                print("orders:")
                print(render_orders(order_table(entry.r_eta, rs.k), "plain"))
            elif isinstance(val, dict):
                print(f"{key}: {val['num']}/{val['den']}" if val["den"] != "1" else f"{key}: {val['num']}")
            else:
                print(f"{key}: {val}")
    return 0


COMMANDS = {
    "series": cmd_series,
    "verify": cmd_verify,
    "cusps": cmd_cusps,
    "multiplier": cmd_multiplier,
    "quiver": cmd_quiver,
    "global": cmd_global,
    "table-appendix": cmd_table_appendix,
    "oracle": cmd_oracle,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--trunc", type=int, help="truncation order in integer powers of q")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--seed", type=int)
    common.add_argument("--samples", type=int, help="random group elements per root system")
    common.add_argument("--tolerance", type=float, help="numeric tolerance (default 1e-9)")
    common.add_argument("--config", help="key = value file with defaults")

    p = argparse.ArgumentParser(prog="orbihilb", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("series", parents=[common], help="expand a generating series")
    s.add_argument("--root", required=True)
    s.add_argument("--which", choices=("rigid", "orbifold", "goettsche"), default="rigid")

    s = sub.add_parser("verify", parents=[common], help="run the identity and modularity checks")
    s.add_argument("--root", default="all")
    s.add_argument("--checks", help=f"comma list from {', '.join(CHECKS)}")
    s.add_argument("--jobs", type=int, help="parallel workers (default: one per CPU)")

    s = sub.add_parser("cusps", parents=[common], help="cusp orders of an eta product")
    s.add_argument("--eta", required=True, help='exponent list like "1:-1,2:2"')
    s.add_argument("--level", type=int)
    s.add_argument("--all-divisors", action="store_true")

    s = sub.add_parser("multiplier", parents=[common], help="exact multiplier value")
    s.add_argument("--matrix", required=True, help="a,b,c,d")
    s.add_argument("--eta")
    s.add_argument("--root", help="evaluate chi for this root system instead")

    s = sub.add_parser("quiver", parents=[common], help="quiver dimension checks")
    s.add_argument("--root", required=True)
    s.add_argument("--verify-dim", action="store_true")
    s.add_argument("--bound", type=int, default=3)
    s.add_argument("--support", action="store_true")

    s = sub.add_parser("global", parents=[common], help="global rigid series")
    s.add_argument("--group-order", type=int, required=True)
    s.add_argument("--points", default="", help="comma list of root systems")

    sub.add_parser("table-appendix", parents=[common], help="orders of the type E eta products")

    s = sub.add_parser("oracle", parents=[common], help="partition enumeration oracle")
    s.add_argument("--partitions", action="store_true")
    s.add_argument("--up-to", type=int, default=30)
    s.add_argument("--check-an", type=int, action="append", metavar="N")

    s = sub.add_parser("catalog", parents=[common], help="eta-product data for a root system")
    s.add_argument("--root", required=True)
    s.add_argument("--show", default="eta,orders,weight")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return COMMANDS[args.command](cfg)
    except UsageError as exc:
        print(f"orbihilb: error: {exc}", file=sys.stderr)
        return 2
    except OrbiHilbError as exc:
        print(f"orbihilb: error: {exc.code}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
