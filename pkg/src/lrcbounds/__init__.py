"""Bounds on locally recoverable codes."""

__version__ = "0.1.0"
