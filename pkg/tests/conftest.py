"""
Shared test fixtures.

Settings are read once per process, so tests that change the environment
clear the settings and lookup caches around themselves.
"""

from __future__ import annotations

import pytest

from fishlab.base.cache import clear_caches
from fishlab.base.config import get_settings
from fishlab.matrices.model import FishburnMatrix, validate


@pytest.fixture
def fresh_settings():
    """Reload settings from the environment before and after the test."""
    get_settings.cache_clear()
    clear_caches()
    yield
    get_settings.cache_clear()
    clear_caches()


@pytest.fixture
def sample_matrix() -> FishburnMatrix:
    """A primitive 3x3 matrix of weight 4 fixed by the transpose."""
    return validate([[1, 1, 0], [0, 0, 1], [0, 0, 1]])
