"""Eta products: expansions, cusp orders, holomorphy, multiplier systems.

An eta product is f(tau) = prod_m eta(m tau)^(a_m).  Its level N is the lcm
of the m, its weight is sum(a_m)/2 and its order at the cusp 1/c of Gamma_0(N)
is (1/24) sum_m gcd(c, m)^2 a_m / m.

Multiplier values are exact 24th roots of unity (:class:`UnitRoot24`).  The
eta multiplier follows Petersson's formula with the extended Kronecker
symbols (c/d)^* and (c/d)_*; `eta_numeric` provides an independent
high-precision numeric check of the transformation law.
"""

from __future__ import annotations

import cmath
import math
import random
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import mpmath

from .errors import DomainError, NotInGamma0
from .qseries import QSeries, euler_product, qs_mul

INFINITY = "inf"


# -- 24th roots of unity -------------------------------------------------


@dataclass(frozen=True)
class UnitRoot24:
    """e(j/24) = exp(2 pi i j / 24), j taken mod 24."""

    j: int

    def __post_init__(self):
        object.__setattr__(self, "j", self.j % 24)

    @classmethod
    def sign(cls, s: int) -> "UnitRoot24":
        if s not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {s}")
        return cls(0 if s == 1 else 12)

    def __mul__(self, other: "UnitRoot24") -> "UnitRoot24":
        return UnitRoot24(self.j + other.j)

    def __pow__(self, p: int) -> "UnitRoot24":
        return UnitRoot24(self.j * p)

    def conjugate(self) -> "UnitRoot24":
        return UnitRoot24(-self.j)

    @property
    def value(self) -> complex:
        return cmath.exp(2j * cmath.pi * self.j / 24)

    def __str__(self) -> str:
        f = Fraction(self.j, 24)
        return f"e({f.numerator}/{f.denominator})" if self.j else "1"


ONE = UnitRoot24(0)


# -- SL(2, Z) -------------------------------------------------------------


@dataclass(frozen=True)
class GammaElement:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"matrix {self.entries} has determinant != 1")

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def in_gamma0(self, N: int) -> bool:
        return self.c % N == 0

    def __matmul__(self, o: "GammaElement") -> "GammaElement":
        return GammaElement(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )

    def act(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.c},{self.d})"


IDENTITY = GammaElement(1, 0, 0, 1)
T_MATRIX = GammaElement(1, 1, 0, 1)


def parse_matrix(text: str) -> GammaElement:
    parts = [int(x) for x in text.replace(";", ",").split(",")]
    if len(parts) != 4:
        raise DomainError(f"expected four integers a,b,c,d, got {text!r}")
    return GammaElement(*parts)


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    a0, a1, b0, b1 = 1, 0, 0, 1
    while y:
        q, r = divmod(x, y)
        x, y = y, r
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    return x, a0, b0


def random_gamma0(N: int, rng: random.Random, c_range: int = 4, d_range: int = 40,
                  shift_range: int = 6) -> GammaElement:
    """A random element of Gamma_0(N) with c in N*[-c_range, c_range]."""
    while True:
        c = N * rng.randint(-c_range, c_range)
        d = rng.randint(-d_range, d_range)
        if math.gcd(c, d) != 1:
            continue
        g, x, y = _ext_gcd(d, c)
        # x d + y c = g = +-1
        a, b = x * g, -y * g
        s = rng.randint(-shift_range, shift_range)
        return GammaElement(a + c * s, b + d * s, c, d)


# -- Kronecker symbols ------------------------------------------------------

_TAB2 = (0, 1, 0, -1, 0, -1, 0, 1)  # (2/n) indexed by n mod 8


def kronecker(a: int, b: int) -> int:
    """Kronecker symbol (a/b) for arbitrary integers a, b."""
    if b == 0:
        return 1 if a in (1, -1) else 0
    if not (a & 1) and not (b & 1):
        return 0
    v = 0
    while not (b & 1):
        b >>= 1
        v += 1
    k = _TAB2[a & 7] if v & 1 else 1
    if b < 0:
        b = -b
        if a < 0:
            k = -k
    while a:
        v = 0
        while not (a & 1):
            a >>= 1
            v += 1
        if v & 1:
            k *= _TAB2[b & 7]
        if a & b & 2:
            k = -k
        r = abs(a)
        a = b % r
        b = r
    return k if b == 1 else 0


def _check_pair(c: int, d: int) -> None:
    if d % 2 == 0:
        raise DomainError(f"extended symbol needs odd d, got d={d}")
    if math.gcd(c, d) != 1:
        raise DomainError(f"extended symbol needs gcd(c, d) = 1, got ({c}, {d})")


def kronecker_star(c: int, d: int) -> int:
    """(c/d)^* = (c/|d|); (0/1)^* = (0/-1)^* = 1."""
    _check_pair(c, d)
    if c == 0:
        return 1
    return kronecker(c, abs(d))


def kronecker_substar(c: int, d: int) -> int:
    """(c/d)_* = (c/|d|) (-1)^((sgn c - 1)(sgn d - 1)/4); (0/1)_* = 1, (0/-1)_* = -1."""
    _check_pair(c, d)
    if c == 0:
        return 1 if d == 1 else -1
    s = kronecker(c, abs(d))
    return -s if (c < 0 and d < 0) else s


def eta_multiplier(A: GammaElement) -> UnitRoot24:
    """Petersson's multiplier v_eta(A) of the Dedekind eta function."""
    a, b, c, d = A.entries
    if c & 1:
        sign = kronecker_star(d, c)
        j = (a + d) * c - b * d * (c * c - 1) - 3 * c
    else:
        sign = kronecker_substar(c, d)
        j = (a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d
    return UnitRoot24(j) * UnitRoot24.sign(sign)


# -- eta products -----------------------------------------------------------


@dataclass(frozen=True)
class EtaProduct:
    """prod_m eta(m tau)^(a_m), stored as sorted (m, a_m) pairs with a_m != 0."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, exps: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        merged: dict[int, int] = {}
        items = exps.items() if isinstance(exps, Mapping) else exps
        for m, a in items:
            m, a = int(m), int(a)
            if m <= 0:
                raise DomainError(f"eta product keys must be positive, got {m}")
            merged[m] = merged.get(m, 0) + a
        object.__setattr__(self, "pairs", tuple(sorted((m, a) for m, a in merged.items() if a)))

    @classmethod
    def parse(cls, text: str) -> "EtaProduct":
        """Parse ``"1:-1,2:2"``."""
        text = text.strip()
        if not text:
            return cls()
        pairs = []
        for item in text.split(","):
            mo = re.fullmatch(r"\s*(\d+)\s*:\s*([+-]?\d+)\s*", item)
            if not mo:
                raise DomainError(f"cannot parse eta factor {item!r}; expected m:a")
            pairs.append((int(mo.group(1)), int(mo.group(2))))
        return cls(pairs)

    @property
    def exps(self) -> dict[int, int]:
        return dict(self.pairs)

    def __str__(self) -> str:
        return ",".join(f"{m}:{a}" for m, a in self.pairs)

    def __mul__(self, other: "EtaProduct") -> "EtaProduct":
        return EtaProduct(list(self.pairs) + list(other.pairs))

    def __pow__(self, p: int) -> "EtaProduct":
        return EtaProduct([(m, a * p) for m, a in self.pairs])

    @property
    def level(self) -> int:
        return math.lcm(*(m for m, _ in self.pairs)) if self.pairs else 1

    @property
    def sum_a(self) -> int:
        return sum(a for _, a in self.pairs)

    @property
    def sum_m_a(self) -> int:
        return sum(m * a for m, a in self.pairs)

    @property
    def sum_a_over_m(self) -> Fraction:
        return sum((Fraction(a, m) for m, a in self.pairs), Fraction(0))


def weight(f: EtaProduct) -> Fraction:
    return Fraction(f.sum_a, 2)


def eta_expansion(m: int, order: int) -> QSeries:
    """eta(m tau) = q^(m/24) prod_j (1 - q^(m j)), exact to q^(m/24 + order)."""
    return euler_product(m, 1, order).shift(m)


def eta_product_expansion(f: EtaProduct, order: int) -> QSeries:
    """q-expansion of f; exact to ``order`` integer powers past the leading q^(sum m a_m / 24)."""
    out = QSeries.one(order)
    for m, a in f.pairs:
        out = qs_mul(out, euler_product(m, a, order))
    return out.shift(f.sum_m_a)


def cusp_order(f: EtaProduct, c) -> Fraction:
    """Order of f at the cusp 1/c, or at infinity for c == INFINITY."""
    if c == INFINITY:
        return Fraction(f.sum_m_a, 24)
    c = int(c)
    if c < 1:
        raise DomainError(f"cusp denominator must be positive, got {c}")
    return sum((Fraction(math.gcd(c, m) ** 2 * a, m) for m, a in f.pairs), Fraction(0)) / 24


def divisors(N: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(N) + 1) if N % d == 0]
    return sorted(set(small + [N // d for d in small]))


@dataclass(frozen=True)
class Holomorphy:
    status: str  # "holomorphic", "cuspidal" or "meromorphic"
    orders: tuple[tuple[object, Fraction], ...]  # ((c, ord), ..., ("inf", ord))

    @property
    def holomorphic(self) -> bool:
        return self.status in ("holomorphic", "cuspidal")

    @property
    def cuspidal(self) -> bool:
        return self.status == "cuspidal"

    def order_table(self) -> dict:
        return dict(self.orders)


def order_table(f: EtaProduct, N: int | None = None) -> list[tuple[object, Fraction]]:
    N = N or f.level
    rows: list[tuple[object, Fraction]] = [(c, cusp_order(f, c)) for c in divisors(N)]
    rows.append((INFINITY, cusp_order(f, INFINITY)))
    return rows


def is_holomorphic(f: EtaProduct, N: int | None = None) -> Holomorphy:
    """Holomorphy on Gamma_0(N) (default: the level) from the cusp orders at 1/c, c | N."""
    rows = order_table(f, N)
    values = [o for _, o in rows]
    if any(o < 0 for o in values):
        status = "meromorphic"
    elif all(o > 0 for o in values):
        status = "cuspidal"
    else:
        status = "holomorphic"
    return Holomorphy(status, tuple(rows))


def rescale_level(f: EtaProduct, L: int) -> EtaProduct:
    """f(L tau)."""
    if L < 1:
        raise DomainError(f"rescale factor must be positive, got {L}")
    return EtaProduct([(L * m, a) for m, a in f.pairs])


# -- multiplier of an eta product --------------------------------------------


def _require_gamma0(f: EtaProduct, A: GammaElement) -> None:
    if A.c % f.level:
        raise NotInGamma0(f"{A} is not in Gamma_0({f.level})")


def product_multiplier_petersson(f: EtaProduct, A: GammaElement) -> UnitRoot24:
    """prod_m v_eta(a, m b; c/m, d)^(a_m)."""
    _require_gamma0(f, A)
    out = ONE
    for m, am in f.pairs:
        out = out * eta_multiplier(GammaElement(A.a, m * A.b, A.c // m, A.d)) ** am
    return out


def product_multiplier_closed(f: EtaProduct, A: GammaElement) -> UnitRoot24:
    """Closed form in terms of sum a_m/m, sum m a_m and sum a_m."""
    _require_gamma0(f, A)
    a, b, c, d = A.entries
    s_over = f.sum_a_over_m
    if c & 1:
        sign = 1
        for m, am in f.pairs:
            sign *= kronecker_star(d, c // m) ** (am & 1)
        j = ((a + d) * c - b * d * c * c - 3 * c) * s_over + b * d * f.sum_m_a
    else:
        sign = 1
        for m, am in f.pairs:
            sign *= kronecker_substar(c // m, d) ** (am & 1)
        j = ((a + d) * c - b * d * c * c - 3 * c * d) * s_over + b * d * f.sum_m_a + 3 * (d - 1) * f.sum_a
    if Fraction(j).denominator != 1:
        raise AssertionError(f"non-integral phase {j} for {f} at {A}")
    return UnitRoot24(int(j)) * UnitRoot24.sign(sign)


def product_multiplier(f: EtaProduct, A: GammaElement) -> UnitRoot24:
    """v_f(A) for A in Gamma_0(level); computed two ways, which must agree."""
    p = product_multiplier_petersson(f, A)
    c = product_multiplier_closed(f, A)
    if p != c:
        raise AssertionError(f"multiplier routes disagree for {f} at {A}: {p} vs {c}")
    return p


# -- numerics --------------------------------------------------------------


NUMERIC_DPS = 60


def eta_numeric(tau, tol: float = 1e-40, dps: int = NUMERIC_DPS):
    """eta(tau) from the pentagonal series, with a bound on its error.

    eta(tau) = q^(1/24) sum_j (-1)^j q^(j(3j-1)/2).  The omitted terms have
    exponents >= P and total modulus at most 2 |q|^P / (1 - |q|).  Near a cusp
    the sum cancels heavily, so it is carried out with ``dps`` decimal digits
    and the rounding error (relative 10^(3-dps) per term) is added to the
    bound.  Returns mpmath numbers (value, bound).
    """
    with mpmath.workdps(dps):
        tau = mpmath.mpc(tau)
        if tau.imag <= 0:
            raise DomainError("tau must lie in the upper half-plane")
        r = mpmath.exp(-2 * mpmath.pi * tau.imag)
        step = 2j * mpmath.pi * tau
        total = mpmath.mpc(1)
        mass = mpmath.mpf(1)
        j = 1
        while True:
            p1 = j * (3 * j - 1) // 2
            p2 = j * (3 * j + 1) // 2
            tail = 2 * r ** p1 / (1 - r)
            if tail < tol:
                break
            t = mpmath.exp(step * p1) + mpmath.exp(step * p2)
            total += -t if j & 1 else t
            mass += 2 * r ** p1
            j += 1
        pref = mpmath.exp(step / 24)
        rounding = mass * mpmath.mpf(10) ** (3 - dps)
        return pref * total, abs(pref) * (tail + rounding)


def eta_product_numeric(f: EtaProduct, tau, tol: float = 1e-40, dps: int = NUMERIC_DPS):
    """f(tau) and a first-order bound on its absolute error (mpmath numbers)."""
    with mpmath.workdps(dps):
        tau = mpmath.mpc(tau)
        value = mpmath.mpc(1)
        rel = mpmath.mpf(0)
        for m, a in f.pairs:
            v, err = eta_numeric(m * tau, tol, dps)
            value *= v ** a
            rel += abs(a) * err / abs(v)
        return value, abs(value) * rel


def principal_power(z, w):
    """z^w = exp(w log z) with -pi <= arg z < pi.

    The branch only matters on the negative real axis (c = 0, d < 0); this is
    the choice under which (0/-1)_* = -1 in Petersson's formula is correct.
    """
    w = Fraction(w)
    z = mpmath.mpc(z)
    if w.denominator == 1:
        return z ** int(w)
    arg = -mpmath.pi if (z.imag == 0 and z.real < 0) else mpmath.arg(z)
    return mpmath.exp(mpmath.mpf(w.numerator) / w.denominator * mpmath.mpc(mpmath.log(abs(z)), arg))


def transformation_defect(f: EtaProduct, A: GammaElement, tau: complex,
                          multiplier: UnitRoot24 | None = None,
                          dps: int = NUMERIC_DPS) -> tuple[float, float, float]:
    """(|f(A tau) - chi(A)(c tau + d)^w f(tau)|, |f(A tau)|, error bound) as floats.

    ``multiplier`` defaults to :func:`product_multiplier`.  A tau is formed
    exactly from the (binary) value of tau, so the only error sources are
    the series tails and rounding, both of which enter the bound.
    """
    chi = multiplier if multiplier is not None else product_multiplier(f, A)
    with mpmath.workdps(dps):
        tau = mpmath.mpc(tau)
        image = (A.a * tau + A.b) / (A.c * tau + A.d)
        lhs, e1 = eta_product_numeric(f, image, dps=dps)
        base, e2 = eta_product_numeric(f, tau, dps=dps)
        root = mpmath.expjpi(mpmath.mpf(chi.j) / 12)
        factor = root * principal_power(A.c * tau + A.d, weight(f))
        rhs = factor * base
        return float(abs(lhs - rhs)), float(abs(lhs)), float(e1 + abs(factor) * e2)
