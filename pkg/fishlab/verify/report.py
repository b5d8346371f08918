"""Parameters and result records of a verification run."""

from __future__ import annotations

from collections.abc import Callable
from typing import Any

from pydantic import Field

from fishlab.base.types import FrozenModel
from fishlab.matrices.model import FishburnMatrix
from fishlab.triples.involution import phi

FISHBURN_NUMBERS = (
    1,
    2,
    5,
    15,
    53,
    217,
    1014,
    5335,
    31240,
    201608,
    1422074,
    10886503,
)


class SuiteParams(FrozenModel):
    """Bounds for one verification run."""

    max_weight: int = Field(default=7, ge=1)
    max_dyck_order: int = Field(default=8, ge=1)
    series_degree: int = Field(default=8, ge=1)
    symmetry_degree: int = Field(default=12, ge=1)
    identity_degree: int = Field(default=6, ge=1)
    recurrence_order: int = Field(default=4, ge=1)
    catstat_order: int = Field(default=10, ge=1)
    perm_size: int = Field(default=8, ge=1)
    phi: Callable[[FishburnMatrix], FishburnMatrix] = Field(
        default=phi,
        exclude=True,
        description="The involution under test, replaceable in tests.",
    )

    def capped(self, limit: int) -> int:
        """The matrix weight bound, capped for the costlier checks."""
        return min(self.max_weight, limit)

    def describe(self) -> dict[str, int]:
        return self.model_dump(exclude={"phi"})


class Outcome(FrozenModel):
    """What a check function returns."""

    passed: bool
    flagged: bool = False
    message: str = ""
    counterexample: Any = None


def ok(message: str = "") -> Outcome:
    return Outcome(passed=True, message=message)


def fail(message: str, counterexample: Any = None) -> Outcome:
    return Outcome(
        passed=False, message=message, counterexample=counterexample
    )


def flag(message: str, counterexample: Any = None) -> Outcome:
    """A failed observation that does not fail the suite."""
    return Outcome(
        passed=True,
        flagged=True,
        message=message,
        counterexample=counterexample,
    )


class VerifyReport(FrozenModel):
    """The outcome of one named check with its parameters and timing."""

    name: str
    parameters: dict[str, int]
    passed: bool
    flagged: bool = False
    counterexample: Any = None
    elapsed: float = Field(description="Wall time in seconds.")
    message: str = ""

    def status(self) -> str:
        if not self.passed:
            return "FAIL"
        return "FLAG" if self.flagged else "PASS"


def matrix_payload(m: FishburnMatrix) -> list[list[int]]:
    """A matrix as plain nested lists for JSON counterexamples."""
    return [list(row) for row in m.rows]
