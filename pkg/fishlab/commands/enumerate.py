"""
Command-line interface for listing Fishburn matrices, Dyck paths and
pattern-avoiding permutations.
"""

from __future__ import annotations

import argparse
import logging
from collections.abc import Iterator

from fishlab.base.config import get_settings, require_within
from fishlab.base.types import Avoidance, OutputFormat
from fishlab.catalan.dyck import enumerate_dyck
from fishlab.commands._shared import (
    add_avoid,
    add_format,
    add_size,
    emit,
    guarded,
)
from fishlab.matrices.codec import dump_matrix, matrix_to_json
from fishlab.matrices.enumerate import enumerate_matrices, enumerate_primitive
from fishlab.permutations.model import enumerate_avoiders

logger = logging.getLogger(__name__)

FAMILIES = ("matrices", "primitive", "dyck", "perms")


def _matrix_lines(
    n: int, primitive: bool, avoid: Avoidance, fmt: OutputFormat
) -> Iterator[str]:
    require_within("weight", n, get_settings().max_weight)
    if primitive:
        found = enumerate_primitive(weight=n, avoid=avoid)
    else:
        found = enumerate_matrices(n, avoid=avoid)
    for m in found:
        yield matrix_to_json(m) if fmt is OutputFormat.json else dump_matrix(m)


def _lines(args: argparse.Namespace) -> Iterator[str]:
    fmt: OutputFormat = args.format
    if args.family in ("matrices", "primitive"):
        yield from _matrix_lines(
            args.size, args.family == "primitive", args.avoid, fmt
        )
        return
    if args.avoid is not Avoidance.none:
        logger.warning("--avoid only applies to matrices; ignoring it")
    if args.family == "dyck":
        require_within("dyck order", args.size, get_settings().max_dyck_order)
        for p in enumerate_dyck(args.size):
            yield p.model_dump_json() if fmt is OutputFormat.json else str(p)
    else:
        for perm in enumerate_avoiders(args.size):
            if fmt is OutputFormat.json:
                yield perm.model_dump_json()
            else:
                yield str(perm)


@guarded
def main(args: argparse.Namespace) -> None:
    """Stream the objects of one size, one per line (JSON Lines for json).

    Text matrices span several lines and are separated by a blank line.
    """
    count = 0
    for line in _lines(args):
        if count and args.format is OutputFormat.text and "\n" in line:
            emit("")
        emit(line)
        count += 1
    logger.info(f"Listed {count} {args.family} of size {args.size}")


def parser(subparsers: argparse._SubParsersAction) -> None:
    """Set up the enumerate subcommand parser.

    Args:
        subparsers: The subparsers object to add the command to.
    """
    cmd_parser = subparsers.add_parser(
        "enumerate",
        help="List matrices, primitive matrices, Dyck paths or avoiders.",
    )
    cmd_parser.add_argument(
        "family",
        choices=FAMILIES,
        help="Objects to list; 'perms' are the bivincular avoiders.",
    )
    add_size(cmd_parser)
    add_avoid(cmd_parser)
    add_format(cmd_parser)
    cmd_parser.set_defaults(func=main)
