"""Tests for text input helpers."""

from __future__ import annotations

import pytest

from fishlab.base.exceptions import LoadError
from fishlab.base.loading import data_lines, parse_ints, read_source


def test_data_lines_skip_comments_and_blanks() -> None:
    content = "# header\n\n1 2  # trailing\n   \n3\n"
    assert list(data_lines(content)) == [(3, ["1", "2"]), (5, ["3"])]


def test_parse_ints_reports_line() -> None:
    with pytest.raises(LoadError, match=r"line 4"):
        parse_ints(["1", "x"], 4, "input.txt")


def test_read_source_local_file(tmp_path) -> None:
    path = tmp_path / "m.txt"
    path.write_text("1 1\n0 1\n", encoding="utf-8")
    assert read_source(path) == "1 1\n0 1\n"


def test_read_source_missing_file(tmp_path) -> None:
    with pytest.raises(LoadError, match="Cannot read input"):
        read_source(tmp_path / "absent.txt")
