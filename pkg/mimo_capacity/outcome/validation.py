"""Validation values that accumulate every problem instead of stopping at the first.

Scenario files and run configurations are checked field by field; all the
issues found are reported together.

Usage:
    >>> Validation.collect([Valid(6), Invalid([Issue("sigma2", "must be positive")])])
    Invalid([Issue(sigma2: must be positive)])
"""

from __future__ import annotations

from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Generic, TypeVar

from typing_extensions import override

from mimo_capacity.outcome.issue import Issue

T = TypeVar("T")
U = TypeVar("U")


class Validation(Generic[T]):
    """Base class of ``Valid`` and ``Invalid``; errors are always ``Issue`` lists."""

    @staticmethod
    def valid(value: T) -> Validation[T]:
        return Valid(value)

    @staticmethod
    def invalid(issues: list[Issue] | Issue) -> Validation[T]:
        """Create an Invalid from one issue or a list of them."""
        if isinstance(issues, Issue):
            return Invalid([issues])
        return Invalid(list(issues))

    @staticmethod
    def collect(items: Iterable[Validation[T]]) -> Validation[list[T]]:
        """Combine validations, concatenating the issues of every Invalid."""
        values: list[T] = []
        issues: list[Issue] = []
        for item in items:
            if item.is_valid():
                values.append(item.unwrap())
            else:
                issues.extend(item.unwrap_errors())
        if issues:
            return Invalid(issues)
        return Valid(values)

    def is_valid(self) -> bool:
        raise NotImplementedError()

    def is_invalid(self) -> bool:
        return not self.is_valid()

    def unwrap(self) -> T:
        raise NotImplementedError()

    def unwrap_errors(self) -> list[Issue]:
        raise NotImplementedError()

    def map(self, f: Callable[[T], U]) -> Validation[U]:
        raise NotImplementedError()


@dataclass(frozen=True, slots=True)
class Valid(Validation[T], Generic[T]):
    """Valid variant.

    >>> Valid(3).map(lambda nt: nt * 2)
    Valid(6)
    """

    _value: T

    @override
    def is_valid(self) -> bool:
        return True

    @override
    def unwrap(self) -> T:
        return self._value

    @override
    def unwrap_errors(self) -> list[Issue]:
        raise ValueError("Cannot unwrap_errors Valid")

    @override
    def map(self, f: Callable[[T], U]) -> Validation[U]:
        return Valid(f(self._value))

    @override
    def __repr__(self) -> str:
        return f"Valid({self._value!r})"


@dataclass(frozen=True, slots=True)
class Invalid(Validation[T], Generic[T]):
    """Invalid variant holding one or more issues."""

    _issues: list[Issue]

    @override
    def is_valid(self) -> bool:
        return False

    @override
    def unwrap(self) -> T:
        details = "; ".join(str(issue) for issue in self._issues)
        raise ValueError(f"Cannot unwrap Invalid: {details}")

    @override
    def unwrap_errors(self) -> list[Issue]:
        return list(self._issues)

    @override
    def map(self, f: Callable[[T], U]) -> Validation[U]:
        return Invalid(self._issues)

    @override
    def __repr__(self) -> str:
        return f"Invalid({self._issues!r})"


__all__ = ["Validation", "Valid", "Invalid"]
