"""Exact combinatorics of interval orders and Fishburn matrices."""

__version__ = "0.1.0"
