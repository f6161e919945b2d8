"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds a configured size cap."""
