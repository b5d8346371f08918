"""
Command-line interface for the desk-scale conjecture reports on
bivincular-pattern avoiders.
"""

from __future__ import annotations

import argparse
import logging
from collections.abc import Callable

from fishlab.base.types import OutputFormat
from fishlab.commands._shared import add_format, emit, guarded, positive
from fishlab.permutations.conjectures import (
    ConjectureReport,
    conjecture_pat1_necessary,
    conjecture_pat2,
)

logger = logging.getLogger(__name__)

REPORTS: dict[str, Callable[[int], ConjectureReport]] = {
    "pat1": conjecture_pat1_necessary,
    "pat2": conjecture_pat2,
}


def render(report: ConjectureReport, fmt: OutputFormat) -> str:
    """Text and CSV put each table under a ``# name`` header line."""
    if fmt is OutputFormat.json:
        return report.model_dump_json() + "\n"
    verdict = "holds" if report.holds else "fails"
    parts = [f"# {report.name} n={report.n}: {verdict}\n"]
    for name, table in report.tables.items():
        parts.append(f"# {name}\n")
        parts.append(table.render(fmt))
    if fmt is OutputFormat.text:
        parts.extend(
            f"# {key}: {value}\n" for key, value in report.details.items()
        )
    return "".join(parts)


@guarded
def main(args: argparse.Namespace) -> None:
    """Compute the report and print it; a failing report is still exit 0."""
    report = REPORTS[args.name](args.size)
    if not report.holds:
        logger.warning(f"⚠️ {args.name} does not hold at n={args.size}")
    emit(render(report, args.format))


def parser(subparsers: argparse._SubParsersAction) -> None:
    """Set up the conjecture subcommand parser.

    Args:
        subparsers: The subparsers object to add the command to.
    """
    cmd_parser = subparsers.add_parser(
        "conjecture",
        help="Report evidence for the conjectures on pattern avoiders.",
    )
    cmd_parser.add_argument(
        "name",
        choices=list(REPORTS),
        help=(
            "pat1: necessary conditions for a statistic-preserving "
            "bijection to matrices; pat2: symmetry of (LRmax, RLmax)."
        ),
    )
    cmd_parser.add_argument(
        "-n",
        "--order",
        dest="size",
        type=positive,
        required=True,
        help="Permutation size.",
    )
    add_format(cmd_parser, list(OutputFormat))
    cmd_parser.set_defaults(func=main)
