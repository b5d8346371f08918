"""
fishlab CLI entry point for enumerating, tabulating and verifying.
"""

import argparse
import importlib
import logging
from pathlib import Path

from fishlab.base.logging import configure_logging

logger = logging.getLogger(__name__)


def _discover_commands(subparsers: argparse._SubParsersAction) -> None:
    """Register every module in ``fishlab/commands`` that has a
    ``parser`` function. Modules starting with ``_`` are skipped.

    Args:
        subparsers: The subparsers object to add commands to.
    """
    commands_dir = Path(__file__).parent / "commands"

    for py_file in sorted(commands_dir.glob("*.py")):
        if py_file.name.startswith("_"):
            continue

        module_name = f"fishlab.commands.{py_file.stem}"
        module = importlib.import_module(module_name)
        if hasattr(module, "parser"):
            module.parser(subparsers)
        else:
            logger.warning(
                f"Command module {module_name} does not have a "
                "'parser' function"
            )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fishlab",
        description=(
            "fishlab CLI: enumerate interval orders and Catalan objects, "
            "tabulate statistics, expand series and verify identities."
        ),
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Set the logging level (default: WARNING)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    _discover_commands(subparsers)
    return parser


def main(argv: list[str] | None = None) -> None:
    """
    Main entry point for the fishlab CLI.
    Sets up argument parsing and dispatches to the appropriate subcommand.
    """
    args = build_parser().parse_args(argv)

    # Logs go to stderr; stdout carries data only
    configure_logging(level=args.log_level)

    # Dispatch to the selected subcommand
    args.func(args)


if __name__ == "__main__":
    main()
