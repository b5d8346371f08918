"""Shared building blocks: errors, logging, configuration and enums."""
