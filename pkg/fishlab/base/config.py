"""Environment-driven settings for fishlab.

Values are read from ``FISHLAB_*`` environment variables after loading a
``.env`` file from the working directory, if one exists.
"""

from __future__ import annotations

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, Field
from pydantic import ValidationError as PydanticValidationError

from fishlab.base.exceptions import BoundExceededError, ConfigError

_ENV_PREFIX = "FISHLAB_"


class Settings(BaseModel):
    """Bounds that keep exhaustive computations at desk scale."""

    max_weight: int = Field(
        default=8,
        gt=0,
        description="Largest matrix weight accepted by exhaustive checks.",
    )
    max_order: int = Field(
        default=12,
        gt=0,
        description="Largest ground set for canonical forms and embeddings.",
    )
    max_dyck_order: int = Field(
        default=10, gt=0, description="Largest Dyck path order enumerated."
    )
    max_perm_size: int = Field(
        default=9, gt=0, description="Largest permutation size enumerated."
    )
    cache_size: int = Field(
        default=64, gt=0, description="Size of the LRU lookup caches."
    )


def load_settings() -> Settings:
    """Build settings from the environment.

    Raises:
        ConfigError: If a variable is not a positive integer.
    """
    load_dotenv()
    values: dict[str, str] = {}
    for name in Settings.model_fields:
        raw = os.getenv(f"{_ENV_PREFIX}{name.upper()}")
        if raw is not None and raw.strip():
            values[name] = raw.strip()
    try:
        return Settings.model_validate(values)
    except PydanticValidationError as e:
        raise ConfigError(
            f"Invalid fishlab environment settings: {e}",
            {"values": values},
        ) from e


def require_within(what: str, value: int, bound: int) -> None:
    """Raise BoundExceededError when value is above bound."""
    if value > bound:
        raise BoundExceededError(what, value, bound)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Process-wide settings, loaded on first use."""
    return load_settings()
