"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Times ``theta_counts`` (the lattice enumeration behind the rigid series) and
``convolve`` (series multiplication) with both backends, checks that they
return identical results, and prints one row per case.
"""

from __future__ import annotations

import argparse
import random
import time

from orbihilb.kernels import compiled_impl, python_impl
from orbihilb.qseries import partition_numbers
from orbihilb.rigid_theta import rigid_counts
from orbihilb.root_data import parse_root

THETA_CASES = [("A3", 200), ("D6", 200), ("E8", 200), ("A7", 80)]
CONVOLVE_SIZES = [500, 2000]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="smaller cases")
    args = parser.parse_args(argv)
    if compiled_impl is None:
        print("compiled extension not built; only the Python backend is available")
        return 1
    theta = [(t, o // 4) for t, o in THETA_CASES] if args.quick else THETA_CASES
    sizes = [s // 4 for s in CONVOLVE_SIZES] if args.quick else CONVOLVE_SIZES

    print(f"{'kernel':<10} {'case':<22} {'python [s]':>11} {'compiled [s]':>13} {'speed-up':>9}")
    for token, order in theta:
        rs = parse_root(token)
        tp, rp = best_of(lambda: rigid_counts(rs, order, impl=python_impl), args.repeat)
        tc, rc = best_of(lambda: rigid_counts(rs, order, impl=compiled_impl), args.repeat)
        assert list(rp) == list(rc), f"backends disagree on {token}"
        print(f"{'theta':<10} {f'{token} to q^{order}':<22} {tp:>11.4f} {tc:>13.4f} {tp / tc:>8.1f}x")

    rng = random.Random(0)
    for size in sizes:
        small = [rng.randint(-1000, 1000) for _ in range(size)]
        big = partition_numbers(size - 1)  # coefficients far beyond 64 bits
        for label, a in (("int64", small), ("bignum", big)):
            tp, rp = best_of(lambda: python_impl.convolve(a, a, size), args.repeat)
            tc, rc = best_of(lambda: compiled_impl.convolve(a, a, size), args.repeat)
            assert list(rp) == list(rc), "backends disagree on convolve"
            print(f"{'convolve':<10} {f'{label}, n={size}':<22} {tp:>11.4f} {tc:>13.4f} {tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
