"""Truncated power series in q with exact rational coefficients.

Exponents live on the grid (1/24)Z: an *exponent index* ``e`` stands for
``q**(e/24)``.  A series is stored densely starting from its lowest term,
with a stride ``step`` (in exponent-index units) between consecutive slots,
so a series supported on integer powers of q costs one slot per power.

``trunc`` is an exponent index: every coefficient at ``e <= trunc`` is known
exactly (zero if not stored), everything above is unknown.

Coefficients are ``int`` whenever possible and :class:`fractions.Fraction`
otherwise.
"""

from __future__ import annotations

import cmath
import json
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping

from . import kernels
from .errors import ZeroLeadingTerm

Q = 24  # exponent indices per unit power of q


def _norm(x):
    if isinstance(x, Fraction):
        return int(x.numerator) if x.denominator == 1 else x
    if isinstance(x, int):
        return int(x)
    if isinstance(x, Rational):
        return _norm(Fraction(x))
    raise TypeError(f"coefficients must be exact rationals, got {type(x).__name__}")


class QSeries:
    """Immutable truncated q-series; see the module docstring for conventions."""

    __slots__ = ("low", "step", "coeffs", "trunc")

    def __init__(self, low: int, step: int, coeffs: Iterable, trunc: int):
        if step <= 0:
            raise ValueError("step must be positive")
        cs = [_norm(c) for c in coeffs]
        # drop slots past trunc, then trailing and leading zeros
        if cs:
            keep = (trunc - low) // step + 1 if trunc >= low else 0
            cs = cs[:max(keep, 0)]
        while cs and cs[-1] == 0:
            cs.pop()
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        if lead:
            cs = cs[lead:]
            low += lead * step
        if not cs:
            low = trunc + 1
            step = 1
        elif len(cs) > 1:
            g = 0
            for i, c in enumerate(cs):
                if c:
                    g = math.gcd(g, i)
            if g > 1:
                cs = cs[::g]
                step *= g
        self.low = low
        self.step = step
        self.coeffs = tuple(cs)
        self.trunc = trunc

    # -- constructors -------------------------------------------------

    @classmethod
    def from_dict(cls, terms: Mapping[int, object], trunc: int) -> "QSeries":
        terms = {e: c for e, c in terms.items() if c != 0 and e <= trunc}
        if not terms:
            return cls.zero(trunc)
        low = min(terms)
        g = 0
        for e in terms:
            g = math.gcd(g, e - low)
        step = g or Q
        size = (max(terms) - low) // step + 1
        cs = [0] * size
        for e, c in terms.items():
            cs[(e - low) // step] = c
        return cls(low, step, cs, trunc)

    @classmethod
    def from_integer_coeffs(cls, coeffs: Iterable, order: int | None = None, shift: int = 0) -> "QSeries":
        """Series sum coeffs[i] q^i (times q^(shift/24)), exact to q^order."""
        cs = list(coeffs)
        if order is None:
            order = len(cs) - 1
        return cls(shift, Q, cs[: order + 1], Q * order + shift)

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls(trunc + 1, 1, (), trunc)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls(0, Q, (1,), Q * order)

    @classmethod
    def monomial(cls, exp24: int, coeff=1, trunc: int | None = None) -> "QSeries":
        """c q^(exp24/24); exact everywhere unless ``trunc`` is given."""
        if trunc is None:
            trunc = exp24 + Q * 10**9
        return cls(exp24, Q, (coeff,), trunc)

    # -- basic access -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        """Exponent index of the lowest nonzero term (trunc+1 if none)."""
        return self.low

    def leading(self):
        if not self.coeffs:
            raise ZeroLeadingTerm("series has no nonzero term within its truncation")
        return self.coeffs[0]

    def __getitem__(self, e: int):
        if e > self.trunc:
            raise IndexError(f"exponent index {e} lies beyond truncation {self.trunc}")
        off = e - self.low
        if off < 0 or off % self.step:
            return 0
        i = off // self.step
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def coeff(self, power) -> object:
        """Coefficient of q**power for a rational ``power`` with denominator | 24."""
        e = Fraction(power) * Q
        if e.denominator != 1:
            raise ValueError(f"power {power} is not on the 1/24 grid")
        return self[int(e)]

    def terms(self) -> Iterator[tuple[int, object]]:
        """Nonzero (exponent index, coefficient) pairs in increasing order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.low + i * self.step, c

    def as_dict(self) -> dict[int, object]:
        return dict(self.terms())

    def integer_coeffs(self, order: int | None = None) -> list:
        """[c_0, ..., c_order] for a series supported on non-negative integer powers."""
        if order is None:
            order = self.trunc // Q
        if Q * order > self.trunc:
            raise IndexError(f"q^{order} lies beyond truncation")
        out = [0] * (order + 1)
        for e, c in self.terms():
            if e % Q or e < 0:
                raise ValueError(f"term q^({e}/24) is not a non-negative integer power")
            if e // Q <= order:
                out[e // Q] = c
        return out

    def _regrid(self, step: int) -> list:
        """Coefficient slots re-expressed with a finer stride ``step``."""
        if step == self.step:
            return list(self.coeffs)
        r = self.step // step
        out = [0] * ((len(self.coeffs) - 1) * r + 1) if self.coeffs else []
        out[::r] = self.coeffs
        return out

    # -- arithmetic ---------------------------------------------------

    def __neg__(self) -> "QSeries":
        return QSeries(self.low, self.step, [-c for c in self.coeffs], self.trunc)

    def __add__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            other = QSeries.monomial(0, other)
        trunc = min(self.trunc, other.trunc)
        terms = dict(t for t in self.terms() if t[0] <= trunc)
        for e, c in other.terms():
            if e <= trunc:
                terms[e] = terms.get(e, 0) + c
        return QSeries.from_dict(terms, trunc)

    __radd__ = __add__

    def __sub__(self, other) -> "QSeries":
        if not isinstance(other, QSeries):
            other = QSeries.monomial(0, other)
        return self + (-other)

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def scale(self, c) -> "QSeries":
        return QSeries(self.low, self.step, [c * x for x in self.coeffs], self.trunc)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return qs_mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return qs_mul(self, qs_inverse(other))
        return self.scale(Fraction(1) / Fraction(other))

    def __pow__(self, a: int) -> "QSeries":
        return qs_pow(self, a)

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^(e/24)."""
        return QSeries(self.low + e, self.step, self.coeffs, self.trunc + e)

    def truncate(self, trunc: int) -> "QSeries":
        return QSeries(self.low, self.step, self.coeffs, min(trunc, self.trunc))

    # -- comparison ---------------------------------------------------

    def first_discrepancy(self, other: "QSeries", upto: int | None = None):
        """First exponent index where the two series differ, as (e, a_e, b_e).

        Only exponents up to the common truncation (and ``upto`` if given)
        are compared.  Returns None when they agree.
        """
        trunc = min(self.trunc, other.trunc)
        if upto is not None:
            trunc = min(trunc, upto)
        a = {e: c for e, c in self.terms() if e <= trunc}
        b = {e: c for e, c in other.terms() if e <= trunc}
        for e in sorted(set(a) | set(b)):
            if a.get(e, 0) != b.get(e, 0):
                return e, a.get(e, 0), b.get(e, 0)
        return None

    def agrees_with(self, other: "QSeries", upto: int | None = None) -> bool:
        return self.first_discrepancy(other, upto) is None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.agrees_with(other)

    def __hash__(self):
        return hash((self.trunc, tuple(self.terms())))

    # -- numerics -----------------------------------------------------

    def evaluate(self, tau: complex) -> complex:
        """Partial sum of the stored terms at q = exp(2 pi i tau)."""
        total = 0j
        for e, c in self.terms():
            total += complex(float(Fraction(c)), 0) * cmath.exp(2j * cmath.pi * tau * e / Q)
        return total

    # -- display / serialization ---------------------------------------

    def __repr__(self) -> str:
        return f"QSeries({format_plain(self, max_terms=8)})"

    def to_json_obj(self) -> dict:
        terms = []
        for e, c in self.terms():
            f = Fraction(c)
            terms.append({"num": str(f.numerator), "den": str(f.denominator), "exp24": e})
        return {"trunc": self.trunc, "terms": terms}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "QSeries":
        terms = {}
        for t in obj["terms"]:
            terms[int(t["exp24"])] = Fraction(int(t["num"]), int(t["den"]))
        return cls.from_dict(terms, int(obj["trunc"]))

    @classmethod
    def from_json(cls, text: str) -> "QSeries":
        return cls.from_json_obj(json.loads(text))


def format_exponent(e: int) -> str:
    """Render exponent index e as a reduced power "a/b" or "a"."""
    f = Fraction(e, Q)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_rational(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_plain(s: QSeries, max_terms: int | None = None) -> str:
    parts = []
    for i, (e, c) in enumerate(s.terms()):
        if max_terms is not None and i >= max_terms:
            parts.append("...")
            break
        parts.append(f"{format_rational(c)}*q^{format_exponent(e)}")
    parts.append(f"O(q^{format_exponent(s.trunc + 1)})")
    return " + ".join(parts)


# -- operations ---------------------------------------------------------


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    """Exact product.

    Valid up to min(val(a) + trunc(b), val(b) + trunc(a)).
    """
    trunc = min(a.low + b.trunc, b.low + a.trunc)
    if a.is_zero() or b.is_zero():
        return QSeries.zero(trunc)
    step = math.gcd(a.step, b.step)
    low = a.low + b.low
    if trunc < low:
        return QSeries.zero(trunc)
    size = (trunc - low) // step + 1
    xa = a._regrid(step)[:size]
    xb = b._regrid(step)[:size]
    return QSeries(low, step, kernels.convolve(xa, xb, size), trunc)


def qs_inverse(a: QSeries) -> QSeries:
    """Multiplicative inverse; needs an invertible lowest term c q^(l/24)."""
    if a.is_zero():
        raise ZeroLeadingTerm("cannot invert a series with no nonzero term within its truncation")
    lead = a.coeffs[0]
    ell = a.low
    trunc = a.trunc - 2 * ell
    size = (a.trunc - ell) // a.step + 1
    xs = list(a.coeffs) + [0] * max(0, size - len(a.coeffs))
    if lead in (1, -1):
        inv_lead = lead
    else:
        inv_lead = Fraction(1) / Fraction(lead)
    out = [0] * size
    out[0] = inv_lead
    for i in range(1, size):
        acc = 0
        for j in range(1, min(i, len(a.coeffs) - 1) + 1):
            acc += xs[j] * out[i - j]
        out[i] = -acc * inv_lead
    return QSeries(-ell, a.step, out, trunc)


def qs_pow(a: QSeries, p: int) -> QSeries:
    """Integer power by repeated squaring; negative powers go through the inverse."""
    if p < 0:
        return qs_pow(qs_inverse(a), -p)
    result = None
    base = a
    while p:
        if p & 1:
            result = base if result is None else qs_mul(result, base)
        p >>= 1
        if p:
            base = qs_mul(base, base)
    if result is None:
        # a^0 = 1, known as far as a itself is relative to its leading term
        return QSeries.monomial(0, 1, a.trunc - a.low) if not a.is_zero() else QSeries.one(0)
    return result


def qs_rescale(a: QSeries, L: int) -> QSeries:
    """Substitute q -> q^L."""
    if L < 1:
        raise ValueError("rescale factor must be a positive integer")
    if a.is_zero():
        return QSeries.zero(L * a.trunc)
    return QSeries(L * a.low, L * a.step, a.coeffs, L * a.trunc)


def pentagonal_series(order: int) -> list[int]:
    """Coefficients of prod_{j>=1} (1 - q^j) up to q^order (Euler's pentagonal theorem)."""
    out = [0] * (order + 1)
    out[0] = 1
    j = 1
    while True:
        g1 = j * (3 * j - 1) // 2
        if g1 > order:
            break
        sign = -1 if j % 2 else 1
        out[g1] += sign
        g2 = j * (3 * j + 1) // 2
        if g2 <= order:
            out[g2] += sign
        j += 1
    return out


def partition_numbers(order: int) -> list[int]:
    """p(0..order) from Euler's pentagonal recurrence."""
    p = [0] * (order + 1)
    p[0] = 1
    for m in range(1, order + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p


def euler_product(m: int, a: int, order: int) -> QSeries:
    """prod_{j>=1} (1 - q^(m j))^a, exact to q^order."""
    if m < 1:
        raise ValueError("exponent multiplier must be a positive integer")
    if order < 0:
        raise ValueError("order must be non-negative")
    inner = order // m
    if a == 0:
        base = QSeries.one(inner)
    elif a == 1:
        base = QSeries.from_integer_coeffs(pentagonal_series(inner), inner)
    elif a == -1:
        base = QSeries.from_integer_coeffs(partition_numbers(inner), inner)
    elif a > 0:
        base = qs_pow(QSeries.from_integer_coeffs(pentagonal_series(inner), inner), a)
    else:
        base = qs_pow(QSeries.from_integer_coeffs(partition_numbers(inner), inner), -a)
    r = qs_rescale(base, m)
    # only multiples of m occur and the next one, m*(inner+1), exceeds order
    return QSeries(r.low, r.step, r.coeffs, Q * order)
