"""Tests for statistic distributions and their rendering."""

from __future__ import annotations

import json

import pytest

from fishlab.base.exceptions import FishlabError
from fishlab.base.tables import Distribution, ensure_columns
from fishlab.base.types import OutputFormat


@pytest.fixture
def table() -> Distribution:
    values = [(1, 2), (2, 1), (1, 2), (2, 1), (3, 3)]
    return Distribution.tally(("a", "b"), values)


class TestDistribution:
    def test_rows_sorted_with_counts(self, table: Distribution) -> None:
        assert table.rows == ((1, 2, 2), (2, 1, 2), (3, 3, 1))
        assert table.total == 5

    def test_symmetric(self, table: Distribution) -> None:
        assert table.is_symmetric()

    def test_not_symmetric(self) -> None:
        lopsided = Distribution.tally(("a", "b"), [(1, 2), (1, 2), (2, 1)])
        assert not lopsided.is_symmetric()

    def test_tally_order_does_not_matter(self) -> None:
        one = Distribution.tally(("a",), [(1,), (2,), (1,)])
        two = Distribution.tally(("a",), [(2,), (1,), (1,)])
        assert one == two

    def test_csv(self, table: Distribution) -> None:
        assert table.render(OutputFormat.csv).splitlines() == [
            "a,b,count",
            "1,2,2",
            "2,1,2",
            "3,3,1",
        ]

    def test_json_records(self, table: Distribution) -> None:
        records = json.loads(table.render(OutputFormat.json))
        assert records[0] == {"a": 1, "b": 2, "count": 2}
        assert len(records) == 3

    def test_text_has_header(self, table: Distribution) -> None:
        text = table.render(OutputFormat.text)
        assert text.splitlines()[0].split() == ["a", "b", "count"]

    def test_empty_text(self) -> None:
        empty = Distribution.tally(("a",), [])
        assert empty.render(OutputFormat.text) == "(no rows)\n"


def test_ensure_columns_rejects_unknown() -> None:
    with pytest.raises(FishlabError, match="Unknown statistics"):
        ensure_columns(["ne", "bogus"], ["ne", "lc"])
