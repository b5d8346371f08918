"""
Shared lookup caches for fishlab.

Expensive, deterministic tables (primitive matrices by weight, Dyck path
encodings by order) are memoised in named LRU caches sized by
``FISHLAB_CACHE_SIZE``.
"""

from __future__ import annotations

from typing import Any

from cachetools import LRUCache

from fishlab.base.config import get_settings

_CACHES: dict[str, LRUCache[Any, Any]] = {}


def lookup_cache(name: str) -> LRUCache[Any, Any]:
    """Return the cache registered under ``name``, creating it on demand."""
    cache = _CACHES.get(name)
    if cache is None:
        cache = LRUCache(maxsize=get_settings().cache_size)
        _CACHES[name] = cache
    return cache


def clear_caches() -> None:
    """
    Clear all cached tables.

    Useful for testing or after changing the cache size in the environment.
    """
    for cache in _CACHES.values():
        cache.clear()
