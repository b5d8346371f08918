"""Logging utilities for fishlab."""

from __future__ import annotations

import logging


def configure_logging(
    level: str = "WARNING", format_string: str | None = None
) -> None:
    """Configure root logging for fishlab.

    The default level is WARNING because commands write their results to
    stdout; progress and info records stay out of piped output unless
    asked for.
    """
    numeric_level = getattr(logging, level.upper(), logging.WARNING)

    format_str = (
        format_string or "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )

    logging.basicConfig(
        level=numeric_level,
        format=format_str,
        force=True,  # Override any existing configuration
    )
