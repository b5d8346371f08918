"""
Command-line interface for expanding the Fishburn generating functions.
"""

from __future__ import annotations

import argparse
import logging
from collections.abc import Callable

from fishlab.base.types import OutputFormat
from fishlab.commands._shared import add_format, emit, guarded, positive
from fishlab.series.brute import brute_series
from fishlab.series.formulas import F_formula, G_formula, P_formula
from fishlab.series.model import TruncatedSeries

logger = logging.getLogger(__name__)

EXPANSIONS: dict[str, Callable[[int], TruncatedSeries]] = {
    "F": F_formula,
    "G1": lambda N: G_formula(N, 1),
    "G2": lambda N: G_formula(N, 2),
    "G3": lambda N: G_formula(N, 3),
    "brute": brute_series,
    "P": P_formula,
}


@guarded
def main(args: argparse.Namespace) -> None:
    """Print the nonzero terms, sorted by monomial."""
    series = EXPANSIONS[args.name](args.degree)
    logger.info(f"{args.name} has {len(series.terms)} terms to {args.degree}")
    if args.format is OutputFormat.json:
        emit(series.to_document().model_dump_json())
    else:
        emit(series.to_text())


def parser(subparsers: argparse._SubParsersAction) -> None:
    """Set up the series subcommand parser.

    Args:
        subparsers: The subparsers object to add the command to.
    """
    cmd_parser = subparsers.add_parser(
        "series",
        help="Expand F, the G closed forms, the brute-force sum or P.",
    )
    cmd_parser.add_argument(
        "name",
        choices=list(EXPANSIONS),
        help=(
            "F(x,y,z) and G(x,y) are x-graded; 'brute' sums enumerated "
            "matrices; P counts primitive matrices, totally graded."
        ),
    )
    cmd_parser.add_argument(
        "-N",
        "--degree",
        type=positive,
        required=True,
        help="Truncation degree.",
    )
    add_format(cmd_parser)
    cmd_parser.set_defaults(func=main)
