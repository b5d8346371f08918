"""Joint distributions of integer statistics and their tabular output."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence

import pandas as pd

from fishlab.base.exceptions import FishlabError
from fishlab.base.types import FrozenModel, OutputFormat


class Distribution(FrozenModel):
    """Counts of objects per tuple of statistic values.

    Each row holds the statistic values followed by the count; rows are
    sorted by value so equal distributions render identically.
    """

    columns: tuple[str, ...]
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_counter(
        cls, columns: Sequence[str], counts: Counter[tuple[int, ...]]
    ) -> Distribution:
        return cls(
            columns=tuple(columns),
            rows=tuple(
                key + (count,) for key, count in sorted(counts.items())
            ),
        )

    @classmethod
    def tally(
        cls, columns: Sequence[str], values: Iterable[tuple[int, ...]]
    ) -> Distribution:
        return cls.from_counter(columns, Counter(values))

    def counts(self) -> Counter[tuple[int, ...]]:
        return Counter({row[:-1]: row[-1] for row in self.rows})

    @property
    def total(self) -> int:
        return sum(row[-1] for row in self.rows)

    def is_symmetric(self, first: int = 0, second: int = 1) -> bool:
        """True iff swapping two statistics leaves every count unchanged."""
        counts = self.counts()
        for key, count in counts.items():
            swapped = list(key)
            swapped[first], swapped[second] = key[second], key[first]
            if counts.get(tuple(swapped), 0) != count:
                return False
        return True

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [list(row) for row in self.rows],
            columns=[*self.columns, "count"],
        )

    def render(self, fmt: OutputFormat) -> str:
        frame = self.to_frame()
        if fmt is OutputFormat.csv:
            return str(frame.to_csv(index=False))
        if fmt is OutputFormat.json:
            return str(frame.to_json(orient="records")) + "\n"
        if frame.empty:
            return "(no rows)\n"
        return str(frame.to_string(index=False)) + "\n"


def ensure_columns(columns: Sequence[str], known: Sequence[str]) -> None:
    unknown = [c for c in columns if c not in known]
    if unknown:
        raise FishlabError(
            f"Unknown statistics {unknown}; choose from {sorted(known)}.",
            {"unknown": unknown},
        )
