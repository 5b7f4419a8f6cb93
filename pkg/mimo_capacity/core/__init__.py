"""Errors, configuration and logging shared by every sub-package."""

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    MimoCapacityError,
)
from mimo_capacity.core.logs import configure_logging, timed

__all__ = [
    "NumericsConfig",
    "DEFAULT_NUMERICS",
    "MimoCapacityError",
    "DomainError",
    "ConvergenceError",
    "ConsistencyError",
    "configure_logging",
    "timed",
]
