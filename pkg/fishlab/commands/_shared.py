"""Arguments and error handling shared by the subcommands."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from typing import NoReturn

from fishlab.base.exceptions import FishlabError
from fishlab.base.types import Avoidance, OutputFormat

logger = logging.getLogger(__name__)

USAGE_ERROR = 2

Handler = Callable[[argparse.Namespace], None]


def positive(text: str) -> int:
    """argparse type for sizes and bounds."""
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(
            f"expected a positive integer, got {value}"
        )
    return value


def add_size(cmd_parser: argparse.ArgumentParser) -> None:
    """``-w/--weight`` for matrices, ``-n/--order`` for paths and
    permutations; both set ``size``."""
    group = cmd_parser.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "-w", "--weight", dest="size", type=positive, help="Matrix weight."
    )
    group.add_argument(
        "-n",
        "--order",
        dest="size",
        type=positive,
        help="Dyck path order or permutation size.",
    )


def add_avoid(cmd_parser: argparse.ArgumentParser) -> None:
    cmd_parser.add_argument(
        "--avoid",
        type=Avoidance,
        choices=list(Avoidance),
        metavar="{none,nw,sw}",
        default=Avoidance.none,
        help="Skip matrices with two nonzero cells strictly NW or SW.",
    )


def add_format(
    cmd_parser: argparse.ArgumentParser,
    choices: Sequence[OutputFormat] = (OutputFormat.text, OutputFormat.json),
) -> None:
    cmd_parser.add_argument(
        "--format",
        type=OutputFormat,
        choices=list(choices),
        metavar="{" + ",".join(c.value for c in choices) + "}",
        default=OutputFormat.text,
        help="Output format (default: text).",
    )


def emit(text: str) -> None:
    """Write data to stdout; logs go to stderr."""
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def exit_on_error(e: FishlabError) -> NoReturn:
    logger.error(f"❌ {e}")
    if e.details:
        logger.debug(f"Details: {e.details}")
    sys.exit(USAGE_ERROR)


def guarded(handler: Handler) -> Handler:
    """Run a command, turning domain errors into exit status 2."""

    def run(args: argparse.Namespace) -> None:
        try:
            handler(args)
        except FishlabError as e:
            exit_on_error(e)

    run.__doc__ = handler.__doc__
    return run

