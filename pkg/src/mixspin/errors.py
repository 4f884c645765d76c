"""Exception types raised across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """Input outside the physical domain (singular R, T <= 0, non-finite values)."""

    def __init__(self, message: str, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class EvaluationOverflow(ArithmeticError):
    """A raw (unshifted) published expression left the binary64 range."""


class ConvergenceError(ArithmeticError):
    """Jacobi sweeps hit the iteration cap."""


class ContractError(RuntimeError):
    """A numerical self-consistency check failed."""


class NoThreshold(RuntimeError):
    """No epsilon-crossing of the negativity was found inside the bracket."""
