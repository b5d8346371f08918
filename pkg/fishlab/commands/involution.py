"""
Command-line interface for applying phi or the antidiagonal transpose to a
matrix read from a file or given inline.
"""

from __future__ import annotations

import argparse
import logging

from fishlab.base.types import OutputFormat
from fishlab.commands._shared import add_format, emit, guarded
from fishlab.matrices.codec import (
    dump_matrix,
    load_matrix,
    matrix_to_json,
    parse_inline,
)
from fishlab.matrices.model import FishburnMatrix
from fishlab.matrices.transpose import antidiagonal_transpose
from fishlab.triples.involution import phi_stats

logger = logging.getLogger(__name__)


def _source(args: argparse.Namespace) -> FishburnMatrix:
    if args.matrix is not None:
        return parse_inline(args.matrix)
    return load_matrix(args.file)


def _apply(name: str, m: FishburnMatrix) -> FishburnMatrix:
    if name == "transpose":
        return antidiagonal_transpose(m)
    result = phi_stats(m)
    a, b = result.source_stats, result.image_stats
    logger.info(
        f"wNE {a.wne} -> {b.wne}, wSE {a.wse} -> {b.wse}, lc {a.lc} -> {b.lc}"
    )
    if not result.statistics_exchanged:
        logger.warning("phi did not exchange the NE and SE statistics")
    return result.image


@guarded
def main(args: argparse.Namespace) -> None:
    """Print the image of the matrix in the chosen format."""
    image = _apply(args.map, _source(args))
    if args.format is OutputFormat.json:
        emit(matrix_to_json(image))
    else:
        emit(dump_matrix(image))


def parser(subparsers: argparse._SubParsersAction) -> None:
    """Set up the involution subcommand parser.

    Args:
        subparsers: The subparsers object to add the command to.
    """
    cmd_parser = subparsers.add_parser(
        "involution", help="Apply phi or the antidiagonal transpose."
    )
    cmd_parser.add_argument(
        "map", choices=["phi", "transpose"], help="Involution to apply."
    )
    source = cmd_parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "file",
        nargs="?",
        help="Matrix file: one row of integers per line (path or URL).",
    )
    source.add_argument(
        "--matrix",
        help='Inline matrix, rows separated by ";", e.g. "1 1 0;0 0 1;0 0 1".',
    )
    add_format(cmd_parser)
    cmd_parser.set_defaults(func=main)
