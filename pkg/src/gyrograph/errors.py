"""Shared exception types."""


class BoundExceededError(ValueError):
    """An input is larger than the configured bound for an exponential search."""


class DisconnectedGraphError(ValueError):
    """Raised by operations that are only defined on connected graphs."""


class ConvergenceError(RuntimeError):
    """An iterative numeric method failed to reach the requested tolerance."""
