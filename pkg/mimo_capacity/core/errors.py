"""Exception hierarchy for numerical contract violations."""

from __future__ import annotations

from collections.abc import Mapping
from typing import Any


class MimoCapacityError(Exception):
    """Root of every exception raised by mimo_capacity."""


class DomainError(MimoCapacityError, ValueError):
    """An argument lies outside the domain of the requested quantity.

    Example:
        >>> raise DomainError("x must be positive, got -1.0")
        Traceback (most recent call last):
            ...
        mimo_capacity.core.errors.DomainError: x must be positive, got -1.0
    """


class ConvergenceError(MimoCapacityError, ArithmeticError):
    """A quadrature or series did not reach its tolerance.

    Attributes:
        estimate: The best value reached before giving up
        abserr: Absolute error estimate of ``estimate`` (nan when unknown)
    """

    def __init__(self, message: str, estimate: float, abserr: float = float("nan")) -> None:
        super().__init__(f"{message} (estimate={estimate!r}, abserr={abserr!r})")
        self.estimate = estimate
        self.abserr = abserr


class ConsistencyError(MimoCapacityError, RuntimeError):
    """An internal invariant of a closed form failed.

    Attributes:
        diagnostics: Values that led to the failure
    """

    def __init__(self, message: str, diagnostics: Mapping[str, Any] | None = None) -> None:
        super().__init__(message)
        self.diagnostics: dict[str, Any] = dict(diagnostics or {})


__all__ = [
    "MimoCapacityError",
    "DomainError",
    "ConvergenceError",
    "ConsistencyError",
]
