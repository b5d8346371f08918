"""
Command-line interface for running the verification suite.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from fishlab.base.types import OutputFormat
from fishlab.commands._shared import add_format, emit, guarded, positive
from fishlab.verify import (
    SuiteParams,
    VerifyReport,
    all_passed,
    default_progress,
    run_suite,
    select,
)

logger = logging.getLogger(__name__)

CHECK_FAILED = 1


def suite_params(args: argparse.Namespace) -> SuiteParams:
    """Bounds from the command line, defaults for the rest."""
    given = {
        "max_weight": args.weight,
        "max_dyck_order": args.order,
        "series_degree": args.degree,
        "perm_size": args.perm_size,
    }
    return SuiteParams(
        **{name: value for name, value in given.items() if value is not None}
    )


def render(reports: list[VerifyReport], fmt: OutputFormat) -> str:
    """Reports without timings, so identical runs print identical bytes."""
    if fmt is OutputFormat.json:
        payload = [
            report.model_dump(mode="json", exclude={"elapsed"})
            for report in reports
        ]
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    for report in reports:
        line = f"{report.status()} {report.name}"
        if report.message:
            line += f": {report.message}"
        lines.append(line)
        if not report.passed and report.counterexample is not None:
            lines.append(f"    counterexample: {report.counterexample}")
    failed = sum(1 for r in reports if not r.passed)
    flagged = sum(1 for r in reports if r.flagged)
    lines.append(
        f"{len(reports)} checks, {failed} failed, {flagged} flagged"
    )
    return "\n".join(lines) + "\n"


@guarded
def main(args: argparse.Namespace) -> None:
    """Run the checks; exit 1 if any of them fails."""
    params = suite_params(args)
    names = select(args.only)
    if args.list:
        emit("\n".join(names))
        return
    progress = None if args.no_progress else default_progress(len(names))
    reports = run_suite(
        params, only=args.only, jobs=args.jobs, progress=progress
    )
    emit(render(reports, args.format))
    if all_passed(reports):
        logger.info("✅ All checks passed.")
    else:
        logger.error("❌ Some checks failed.")
        sys.exit(CHECK_FAILED)


def parser(subparsers: argparse._SubParsersAction) -> None:
    """Set up the verify subcommand parser.

    Args:
        subparsers: The subparsers object to add the command to.
    """
    defaults = SuiteParams()
    cmd_parser = subparsers.add_parser(
        "verify", help="Check every stated property by exhaustive search."
    )
    cmd_parser.add_argument(
        "-w",
        "--weight",
        type=positive,
        help=f"Largest matrix weight (default: {defaults.max_weight}).",
    )
    cmd_parser.add_argument(
        "-n",
        "--order",
        type=positive,
        help=f"Largest Dyck path order (default: {defaults.max_dyck_order}).",
    )
    cmd_parser.add_argument(
        "-N",
        "--degree",
        type=positive,
        help=f"Series truncation degree (default: {defaults.series_degree}).",
    )
    cmd_parser.add_argument(
        "-p",
        "--perm-size",
        type=positive,
        help=f"Largest permutation size (default: {defaults.perm_size}).",
    )
    cmd_parser.add_argument(
        "--jobs",
        type=positive,
        default=1,
        help="Worker processes; reports keep registry order.",
    )
    cmd_parser.add_argument(
        "--only",
        nargs="+",
        metavar="NAME",
        help="Checks to run, by full name or group such as 'catalan'.",
    )
    cmd_parser.add_argument(
        "--list",
        action="store_true",
        help="Print the selected check names and exit.",
    )
    cmd_parser.add_argument(
        "--no-progress",
        action="store_true",
        help="Do not show a progress display on stderr.",
    )
    add_format(cmd_parser)
    cmd_parser.set_defaults(func=main)
