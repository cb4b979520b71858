"""Partition enumeration: a counting oracle for type A.

For cyclic groups the orbifold series is 1/prod(1 - q^j), so its
coefficients are partition numbers.  Here they are obtained by listing
partitions explicitly, with no generating-function machinery involved.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .qseries import QSeries
from .report import CheckReport


def partitions(m: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of m as weakly decreasing tuples, each exactly once."""
    if max_part is None:
        max_part = m
    if m == 0:
        yield ()
        return
    for first in range(min(m, max_part), 0, -1):
        for rest in partitions(m - first, first):
            yield (first,) + rest


def partition_count_exhaustive(m: int) -> int:
    if m < 0:
        raise ValueError("m must be non-negative")
    return sum(1 for _ in partitions(m))


@lru_cache(maxsize=None)
def _count(m: int, max_part: int) -> int:
    # same recursion as partitions(), counting instead of listing
    if m == 0:
        return 1
    return sum(_count(m - first, first) for first in range(min(m, max_part), 0, -1))


def partition_count(m: int, exhaustive: bool = False) -> int:
    """p(m) via the descending-parts recursion (memoized unless ``exhaustive``)."""
    if m < 0:
        raise ValueError("m must be non-negative")
    if exhaustive:
        return partition_count_exhaustive(m)
    return _count(m, m)


def verify_an_orbifold(n: int, order: int, exhaustive: bool = False,
                       orbifold: QSeries | None = None) -> CheckReport:
    """Orbifold series of A_n against p(0..order)."""
    if orbifold is None:
        from .rigid_theta import orbifold_series
        from .root_data import make_root_system

        orbifold = orbifold_series(make_root_system("A", n), order)
    expected = QSeries.from_integer_coeffs(
        [partition_count(m, exhaustive) for m in range(order + 1)], order
    )
    return CheckReport.compare("an-oracle", expected, orbifold, root=f"A{n}", order=order)
