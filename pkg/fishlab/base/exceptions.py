"""Base exceptions for fishlab."""

from __future__ import annotations

from typing import Any


class FishlabError(Exception):
    """Base exception for all fishlab errors."""

    def __init__(
        self, message: str, details: dict[str, Any] | None = None
    ) -> None:
        """Initialize the exception with message and optional details."""
        super().__init__(message)
        self.message = message
        self.details = details or {}


class ConfigError(FishlabError):
    """Exception raised when an environment setting is invalid."""

    pass


class LoadError(FishlabError):
    """Exception raised when parsing an input file fails."""

    def __init__(
        self,
        message: str,
        line: int | None = None,
        source: str | None = None,
    ) -> None:
        self.line = line
        self.source = source
        super().__init__(
            self._format_message(message, line, source),
            {"line": line, "source": source},
        )

    @staticmethod
    def _format_message(
        message: str, line: int | None, source: str | None
    ) -> str:
        """Format error message with location information."""
        parts = []
        if source:
            parts.append(f"in {source}")
        if line is not None:
            parts.append(f"line {line}")
        if parts:
            return f"{message} ({', '.join(parts)})"
        return message


class BoundExceededError(FishlabError):
    """Exception raised when a request exceeds a configured bound."""

    def __init__(self, what: str, value: int, bound: int) -> None:
        super().__init__(
            f"{what}={value} exceeds the configured bound {bound}",
            {"what": what, "value": value, "bound": bound},
        )
        self.value = value
        self.bound = bound


class RelationError(FishlabError):
    """Exception raised for malformed relations or structures."""

    pass


class MatrixError(FishlabError):
    """Exception raised for invalid Fishburn matrix operations."""

    pass


class CatalanError(FishlabError):
    """Exception raised for invalid Dyck paths or Catalan pairs."""

    pass


class TripleError(FishlabError):
    """Exception raised for invalid Fishburn triples."""

    pass


class SeriesError(FishlabError):
    """Exception raised when power series arithmetic is not defined."""

    pass


class PermutationError(FishlabError):
    """Exception raised for invalid permutations."""

    pass


class VerificationError(FishlabError):
    """Exception raised when the verification suite cannot run."""

    pass
