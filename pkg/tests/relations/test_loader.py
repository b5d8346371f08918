"""Tests for the relational structure text format."""

from __future__ import annotations

import pytest

from fishlab.base.exceptions import LoadError
from fishlab.relations.loader import (
    dump_structure,
    load_structure,
    parse_structure,
)
from fishlab.relations.model import Relation

C1_PAIR = """\
# a C1-pair on three elements
3 2
1 S
0 1
1 R
2 1
"""


def test_parse_named_components() -> None:
    s = parse_structure(C1_PAIR)
    assert (s.n, s.k) == (3, 2)
    assert s.names == ("S", "R")
    assert s.component("R") == Relation.from_pairs(3, [(2, 1)])


def test_dump_is_accepted_by_parse() -> None:
    s = parse_structure(C1_PAIR)
    assert parse_structure(dump_structure(s)) == s
    assert dump_structure(s).startswith("3 2\n1 S\n0 1\n")


def test_load_from_file(tmp_path) -> None:
    path = tmp_path / "pair.txt"
    path.write_text(C1_PAIR, encoding="utf-8")
    assert load_structure(path).k == 2


@pytest.mark.parametrize(
    "content, message",
    [
        ("", "Empty relation input"),
        ("3\n", "Header must be"),
        ("3 2\n0\n", "Expected 2 component blocks"),
        ("3 1\n2\n0 1\n", "declares 2 pairs"),
        ("3 1\n1\n0 0\n", "not irreflexive"),
        ("3 1\n1\n0 x\n", "Expected integers"),
        ("3 1\n0\n5 5\n", "Unexpected trailing content"),
        ("3 2\n0 S\n0\n", "every component block is named"),
    ],
)
def test_malformed_input(content: str, message: str) -> None:
    with pytest.raises(LoadError, match=message):
        parse_structure(content, source="bad.txt")


def test_error_carries_line_number() -> None:
    with pytest.raises(LoadError) as info:
        parse_structure("2 1\n1\n0 1 2\n")
    assert info.value.line == 3
