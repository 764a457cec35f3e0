"""Shared exceptions, enumeration budgets, and the generic check verdict."""

from __future__ import annotations

from dataclasses import dataclass

# Size bounds for exhaustive scans and precomputed tables. Exhaustive law
# checking is exponential in carrier size; these keep it at desk scale.
# Callers may override per call where a `budget` parameter is exposed.
MAX_FRAME_CARRIER = 64
SUBLOCALE_SCAN_LIMIT = 16
SUBLOCALE_TABLE_LIMIT = 1024
TOPOLOGY_POINT_LIMIT = 4
IDENTITY_EXHAUSTIVE_LIMIT = 8


class BudgetExceeded(Exception):
    """An enumeration or table would exceed the configured size bound."""


class EquivalenceViolation(Exception):
    """Independently evaluated equivalent conditions disagreed.

    The conditions in question are provably equivalent, so this always
    signals an implementation bug, never a property of the input.
    """


class TheoremViolation(Exception):
    """A verified correspondence failed on a concrete instance.

    Like EquivalenceViolation this signals an implementation bug; the
    offending instance and per-condition verdicts ride along in args.
    """


PASS = "pass"
FAIL = "fail"
VIOLATION = "violation"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named law check.

    level is "pass", "fail" (counterexample found, witness says where) or
    "violation" (internal consistency broken, see TheoremViolation).
    """

    name: str
    level: str
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.level == PASS

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def passed(cls, name: str, witness: str = "") -> "CheckReport":
        return cls(name, PASS, witness)

    @classmethod
    def failed(cls, name: str, witness: str) -> "CheckReport":
        return cls(name, FAIL, witness)

    @classmethod
    def violated(cls, name: str, witness: str) -> "CheckReport":
        return cls(name, VIOLATION, witness)
