"""Text and JSON formats for Fishburn matrices.

Text: ``k`` lines of ``k`` space-separated integers. Inline: the same rows
joined by ``;``. JSON: ``{"k":3,"rows":[[...],[...],[...]]}``.
"""

from __future__ import annotations

from pathlib import Path

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from fishlab.base.exceptions import LoadError, MatrixError
from fishlab.base.loading import data_lines, parse_ints, read_source
from fishlab.matrices.model import FishburnMatrix, validate


class MatrixDocument(BaseModel):
    """JSON shape of a matrix."""

    k: int
    rows: list[list[int]]


def parse_matrix(content: str, source: str | None = None) -> FishburnMatrix:
    """Parse the text format.

    Raises:
        LoadError: If the rows are not integers or do not form a Fishburn
            matrix.
    """
    rows = [parse_ints(tokens, n, source) for n, tokens in data_lines(content)]
    if not rows:
        raise LoadError("Empty matrix input", source=source)
    try:
        return validate(rows)
    except MatrixError as e:
        raise LoadError(e.message, source=source) from e


def parse_inline(text: str) -> FishburnMatrix:
    """Parse rows separated by ``;``, e.g. ``"1 1 0;0 0 1;0 0 1"``."""
    return parse_matrix(
        "\n".join(text.replace(",", " ").split(";")), source="<inline>"
    )


def load_matrix(path: str | Path) -> FishburnMatrix:
    source = str(path)
    return parse_matrix(read_source(source), source=source)


def dump_matrix(m: FishburnMatrix) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in m.rows) + "\n"


def matrix_to_json(m: FishburnMatrix) -> str:
    return MatrixDocument(
        k=m.k, rows=[list(row) for row in m.rows]
    ).model_dump_json()


def matrix_from_json(text: str) -> FishburnMatrix:
    try:
        doc = MatrixDocument.model_validate_json(text)
    except PydanticValidationError as e:
        raise LoadError(f"Invalid matrix JSON: {e}") from e
    if doc.k != len(doc.rows):
        raise LoadError(f"Declared k={doc.k} but found {len(doc.rows)} rows")
    try:
        return validate(doc.rows)
    except MatrixError as e:
        raise LoadError(e.message) from e
