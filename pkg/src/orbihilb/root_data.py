"""Simply-laced root systems of type A, D, E with their McKay data.

Node numbering follows Bourbaki for the finite nodes 1..n; the extending
(affine) node is index 0 and corresponds to the trivial representation.

* ``A_n``: chain 1-2-...-n, node 0 joined to 1 and n (a double bond when n = 1).
* ``D_n``: chain 1-2-...-(n-2), nodes n-1 and n hang off n-2, node 0 off 2.
* ``E_6``: chain 1-3-4-5-6, node 2 off 4, node 0 off 2.
* ``E_7``: chain 1-3-4-5-6-7, node 2 off 4, node 0 off 1.
* ``E_8``: chain 1-3-4-5-6-7-8, node 2 off 4, node 0 off 8.

The vector ``dims`` lists the dimensions of the irreducible representations
attached to the nodes (the affine marks).  These are data, and are checked
at construction against sum(dims**2) == |G| and C_affine . dims == 0.

Enumeration cost in :mod:`orbihilb.rigid_theta` grows quickly with the rank;
ranks up to about 64 are practical for modest truncation orders.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidRank, UnknownRootSystem

KINDS = ("A", "D", "E")


@dataclass(frozen=True)
class RootSystem:
    kind: str
    n: int
    k: int
    cartan: tuple[tuple[int, ...], ...]
    dims: tuple[int, ...]

    @property
    def name(self) -> str:
        return f"{self.kind}{self.n}"

    @property
    def delta(self) -> tuple[int, ...]:
        """Basic imaginary root of the affine system; equal to ``dims``."""
        return self.dims

    @property
    def finite_dims(self) -> tuple[int, ...]:
        return self.dims[1:]

    def __str__(self) -> str:
        return self.name


def _edges(kind: str, n: int) -> list[tuple[int, int]]:
    if kind == "A":
        if n == 1:
            return [(0, 1), (0, 1)]
        return [(i, i + 1) for i in range(1, n)] + [(0, 1), (0, n)]
    if kind == "D":
        chain = [(i, i + 1) for i in range(1, n - 2)]
        return chain + [(n - 2, n - 1), (n - 2, n), (0, 2)]
    spine = {6: [1, 3, 4, 5, 6], 7: [1, 3, 4, 5, 6, 7], 8: [1, 3, 4, 5, 6, 7, 8]}[n]
    affine = {6: 2, 7: 1, 8: 8}[n]
    edges = list(zip(spine, spine[1:]))
    return edges + [(2, 4), (0, affine)]


def _dims(kind: str, n: int) -> tuple[int, ...]:
    if kind == "A":
        return (1,) * (n + 1)
    if kind == "D":
        return (1, 1) + (2,) * (n - 3) + (1, 1)
    return {
        6: (1, 1, 2, 2, 3, 2, 1),
        7: (1, 2, 2, 3, 4, 3, 2, 1),
        8: (1, 2, 3, 4, 6, 5, 4, 3, 2),
    }[n]


def _group_order(kind: str, n: int) -> int:
    if kind == "A":
        return n + 1
    if kind == "D":
        return 4 * n - 8
    return {6: 24, 7: 48, 8: 120}[n]


def _affine_from_edges(n: int, edges: list[tuple[int, int]]) -> list[list[int]]:
    size = n + 1
    mat = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    for i, j in edges:
        mat[i][j] -= 1
        mat[j][i] -= 1
    return mat


def make_root_system(kind: str, n: int) -> RootSystem:
    """Build the root system of type ``kind`` and rank ``n``.

    ``kind`` is one of ``"A"``, ``"D"``, ``"E"`` (``"E6"`` etc. are also
    accepted when ``n`` agrees).
    """
    kind = kind.upper()
    if kind in ("E6", "E7", "E8"):
        if int(kind[1]) != n:
            raise InvalidRank(f"{kind} has rank {kind[1]}, got n={n}")
        kind = "E"
    if kind not in KINDS:
        raise UnknownRootSystem(f"unknown root system kind {kind!r}")
    if not isinstance(n, int) or isinstance(n, bool):
        raise InvalidRank(f"rank must be an integer, got {n!r}")
    if kind == "A" and n < 1:
        raise InvalidRank(f"A_n requires n >= 1, got {n}")
    if kind == "D" and n < 4:
        raise InvalidRank(f"D_n requires n >= 4, got {n}")
    if kind == "E" and n not in (6, 7, 8):
        raise InvalidRank(f"E_n requires n in {{6, 7, 8}}, got {n}")

    aff = _affine_from_edges(n, _edges(kind, n))
    cartan = tuple(tuple(row[1:]) for row in aff[1:])
    rs = RootSystem(kind=kind, n=n, k=_group_order(kind, n), cartan=cartan, dims=_dims(kind, n))
    _validate(rs)
    return rs


def affine_cartan(rs: RootSystem) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of the affine diagram, node 0 first."""
    return tuple(tuple(row) for row in _affine_from_edges(rs.n, _edges(rs.kind, rs.n)))


def leading_minors(mat) -> list[Fraction]:
    """Leading principal minors by exact Gaussian elimination."""
    a = [[Fraction(x) for x in row] for row in mat]
    size = len(a)
    minors = []
    det = Fraction(1)
    for p in range(size):
        pivot = a[p][p]
        if pivot == 0:
            # a zero pivot means the leading minor of this size vanishes;
            # later minors are not needed by callers that test definiteness
            minors.append(Fraction(0))
            return minors + [Fraction(0)] * (size - p - 1)
        det *= pivot
        minors.append(det)
        for r in range(p + 1, size):
            factor = a[r][p] / pivot
            if factor:
                for c in range(p, size):
                    a[r][c] -= factor * a[p][c]
    return minors


def is_positive_definite(mat) -> bool:
    return all(m > 0 for m in leading_minors(mat))


def _validate(rs: RootSystem) -> None:
    c = rs.cartan
    n = rs.n
    assert len(c) == n and all(len(row) == n for row in c)
    for i in range(n):
        assert c[i][i] == 2
        for j in range(n):
            assert c[i][j] == c[j][i]
            if i != j:
                assert c[i][j] in (0, -1)
    assert len(rs.dims) == n + 1 and rs.dims[0] == 1
    assert sum(x * x for x in rs.dims) == rs.k
    aff = affine_cartan(rs)
    assert all(sum(row[j] * rs.dims[j] for j in range(n + 1)) == 0 for row in aff)
    assert is_positive_definite(c)


_TOKEN = re.compile(r"^\s*([ADEade])\s*(\d+)\s*$")


def parse_root(token: str) -> RootSystem:
    """Parse tokens like ``"A3"``, ``"D5"``, ``"E8"``."""
    m = _TOKEN.match(token)
    if not m:
        raise UnknownRootSystem(f"unknown root system {token!r}")
    return make_root_system(m.group(1).upper(), int(m.group(2)))


def standard_sweep() -> list[RootSystem]:
    """A1..A10, D4..D8, E6, E7, E8."""
    out = [make_root_system("A", n) for n in range(1, 11)]
    out += [make_root_system("D", n) for n in range(4, 9)]
    out += [make_root_system("E", n) for n in (6, 7, 8)]
    return out
