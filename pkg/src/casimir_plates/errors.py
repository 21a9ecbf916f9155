"""Exception types shared across the engine and the CLI."""

from __future__ import annotations


class CasimirPlatesError(Exception):
    """Base class for errors raised by this package."""


class ConfigError(CasimirPlatesError):
    """Invalid user configuration; carries the offending key in the message."""


class ConvergenceError(CasimirPlatesError):
    """A numerical procedure failed to reach its tolerance.

    Carries the best available estimate and the achieved error bound so
    callers can decide whether the partial result is still usable.
    """

    def __init__(self, message: str, estimate: float, error_bound: float):
        super().__init__(message)
        self.estimate = estimate
        self.error_bound = error_bound
