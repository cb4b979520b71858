from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .qseries import QSeries, format_exponent, format_rational


@dataclass
class CheckReport:
    """Outcome of a verification: ``ok`` plus the first discrepancy, if any."""

    name: str
    ok: bool
    exponent: int | None = None  # exponent index of first mismatch
    expected: object = None
    actual: object = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def compare(cls, name: str, expected: QSeries, actual: QSeries, **details) -> "CheckReport":
        diff = expected.first_discrepancy(actual)
        details.setdefault("trunc", min(expected.trunc, actual.trunc))
        if diff is None:
            return cls(name, True, details=details)
        e, a, b = diff
        return cls(name, False, e, a, b, details)

    def to_json_obj(self) -> dict:
        out = {"check": self.name, "ok": self.ok}
        if not self.ok and self.exponent is not None:
            out["first_discrepancy"] = {
                "exp24": self.exponent,
                "power": format_exponent(self.exponent),
                "expected": format_rational(Fraction(self.expected)),
                "actual": format_rational(Fraction(self.actual)),
            }
        for key, val in self.details.items():
            out[key] = val
        return out
