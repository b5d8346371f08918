"""
Command-line interface for joint distributions of statistics.
"""

from __future__ import annotations

import argparse
import logging

from fishlab.application.distributions import (
    distribution_table,
    stat_choices,
)
from fishlab.base.types import ObjectKind, OutputFormat
from fishlab.commands._shared import (
    add_avoid,
    add_format,
    add_size,
    emit,
    guarded,
)

logger = logging.getLogger(__name__)


def _choices_help() -> str:
    return "; ".join(
        f"{kind.value}: {', '.join(stat_choices(kind))}"
        for kind in ObjectKind
    )


@guarded
def main(args: argparse.Namespace) -> None:
    """Print the number of objects per tuple of statistic values."""
    table = distribution_table(
        ObjectKind(args.kind),
        args.size,
        args.stat,
        primitive=args.primitive,
        avoid=args.avoid,
    )
    logger.info(f"{table.total} objects in {len(table.rows)} rows")
    emit(table.render(args.format))


def parser(subparsers: argparse._SubParsersAction) -> None:
    """Set up the stats subcommand parser.

    Args:
        subparsers: The subparsers object to add the command to.
    """
    cmd_parser = subparsers.add_parser(
        "stats", help="Tabulate the joint distribution of statistics."
    )
    cmd_parser.add_argument(
        "kind",
        choices=[kind.value for kind in ObjectKind],
        help="Family to tabulate.",
    )
    add_size(cmd_parser)
    cmd_parser.add_argument(
        "--stat",
        action="append",
        default=[],
        metavar="NAME",
        help="Statistic column, repeatable. " + _choices_help(),
    )
    cmd_parser.add_argument(
        "--primitive",
        action="store_true",
        help="Only primitive (0/1) matrices.",
    )
    add_avoid(cmd_parser)
    add_format(cmd_parser, list(OutputFormat))
    cmd_parser.set_defaults(func=main)
