"""Shared exception base so the CLI can map library failures to one exit code."""


class TextspaceError(Exception):
    """Base class for all errors raised by this package."""
