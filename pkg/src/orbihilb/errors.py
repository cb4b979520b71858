"""Exception hierarchy.

Every error carries a ``code`` of the form ``<module>.<Name>`` so the CLI can
report it in a machine-readable way.
"""

from __future__ import annotations


class OrbiHilbError(Exception):
    module = "orbihilb"

    @property
    def code(self) -> str:
        return f"{self.module}.{type(self).__name__}"


class InvalidRank(OrbiHilbError, ValueError):
    module = "root_data"


class UnknownRootSystem(OrbiHilbError, ValueError):
    module = "root_data"


class ZeroLeadingTerm(OrbiHilbError, ZeroDivisionError):
    module = "qseries"


class DomainError(OrbiHilbError, ValueError):
    module = "eta_engine"


class NotInGamma0(OrbiHilbError, ValueError):
    module = "eta_engine"


class ParityError(OrbiHilbError, ArithmeticError):
    module = "quiver_check"


class StabilizerNotDividing(OrbiHilbError, ValueError):
    module = "global_series"
