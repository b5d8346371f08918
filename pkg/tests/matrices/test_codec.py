"""Tests for the matrix text and JSON formats."""

from __future__ import annotations

import pytest

from fishlab.base.exceptions import LoadError
from fishlab.matrices.codec import (
    dump_matrix,
    load_matrix,
    matrix_from_json,
    matrix_to_json,
    parse_inline,
    parse_matrix,
)


def test_inline(sample_matrix) -> None:
    assert parse_inline("1 1 0;0 0 1;0 0 1") == sample_matrix
    assert parse_inline("1,1,0; 0,0,1; 0,0,1") == sample_matrix


def test_text(sample_matrix) -> None:
    text = dump_matrix(sample_matrix)
    assert text == "1 1 0\n0 0 1\n0 0 1\n"
    assert parse_matrix("# comment\n" + text) == sample_matrix


def test_json(sample_matrix) -> None:
    doc = matrix_to_json(sample_matrix)
    assert doc == '{"k":3,"rows":[[1,1,0],[0,0,1],[0,0,1]]}'
    assert matrix_from_json(doc) == sample_matrix


def test_load_from_file(tmp_path, sample_matrix) -> None:
    path = tmp_path / "m.txt"
    path.write_text(dump_matrix(sample_matrix), encoding="utf-8")
    assert load_matrix(path) == sample_matrix


@pytest.mark.parametrize(
    "content, message",
    [
        ("", "Empty matrix input"),
        ("1 a\n0 1\n", "Expected integers"),
        ("0 1\n0 0\n", "Row 2 has zero weight"),
    ],
)
def test_bad_text(content: str, message: str) -> None:
    with pytest.raises(LoadError, match=message):
        parse_matrix(content, source="m.txt")


def test_declared_size_must_match() -> None:
    with pytest.raises(LoadError, match="Declared k=2"):
        matrix_from_json('{"k":2,"rows":[[1]]}')


def test_bad_json() -> None:
    with pytest.raises(LoadError, match="Invalid matrix JSON"):
        matrix_from_json('{"rows": "nope"}')
