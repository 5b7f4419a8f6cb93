"""Per-point outcomes of batch evaluation.

A sweep keeps one Result per grid point: ``Ok`` holds the computed point,
``Error`` holds the failure together with its diagnostics, so no point is
ever silently dropped.

    >>> [r.is_ok() for r in (Result.attempt(lambda: 0.6, str), Result.attempt(lambda: 1 / 0, str))]
    [True, False]
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Callable
from dataclasses import dataclass
from typing import Generic, TypeVar

from typing_extensions import override

T = TypeVar("T")
E = TypeVar("E")


class Result(ABC, Generic[T, E]):
    """``Ok`` or ``Error``."""

    @staticmethod
    def attempt(f: Callable[[], T], on_error: Callable[[Exception], E]) -> Result[T, E]:
        """Run ``f`` and capture any ``Exception`` it raises as an Error.

        Example:
            >>> Result.attempt(lambda: 1 / 0, lambda exc: type(exc).__name__)
            Error('ZeroDivisionError')
        """
        try:
            return Ok(f())
        except Exception as exc:  # noqa: BLE001 - converted into a value
            return Error(on_error(exc))

    @abstractmethod
    def is_ok(self) -> bool: ...

    def is_error(self) -> bool:
        return not self.is_ok()

    @abstractmethod
    def unwrap(self) -> T:
        """The success value; ``ValueError`` on Error."""

    @abstractmethod
    def unwrap_error(self) -> E:
        """The failure payload; ``ValueError`` on Ok."""


@dataclass(frozen=True, slots=True)
class Ok(Result[T, E], Generic[T, E]):
    _value: T

    @override
    def is_ok(self) -> bool:
        return True

    @override
    def unwrap(self) -> T:
        return self._value

    @override
    def unwrap_error(self) -> E:
        raise ValueError("Cannot unwrap_error Ok")

    @override
    def __repr__(self) -> str:
        return f"Ok({self._value!r})"


@dataclass(frozen=True, slots=True)
class Error(Result[T, E], Generic[T, E]):
    _error: E

    @override
    def is_ok(self) -> bool:
        return False

    @override
    def unwrap(self) -> T:
        raise ValueError(f"Cannot unwrap Error: {self._error}")

    @override
    def unwrap_error(self) -> E:
        return self._error

    @override
    def __repr__(self) -> str:
        return f"Error({self._error!r})"


__all__ = ["Result", "Ok", "Error"]
