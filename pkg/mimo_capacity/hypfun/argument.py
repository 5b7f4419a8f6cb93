"""Eigenvalue arguments of two-matrix hypergeometric functions."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from typing_extensions import override

from mimo_capacity.core.errors import DomainError


@dataclass(frozen=True, slots=True)
class EigenArgument:
    """Diagonal matrix argument given as ``(value, multiplicity)`` groups.

    Group values are distinct; zero is allowed. Group order only fixes the
    column order of the determinants and never changes a function value.

    Attributes:
        values: ``(eigenvalue, multiplicity)`` groups
    """

    values: tuple[tuple[float, int], ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise DomainError("an eigenvalue argument needs at least one value")
        seen: set[float] = set()
        for value, mult in self.values:
            if not math.isfinite(value):
                raise DomainError(f"eigenvalues must be finite, got {value}")
            if int(mult) != mult or mult < 1:
                raise DomainError(f"multiplicities must be positive integers, got {mult}")
            if value in seen:
                raise DomainError(f"group value {value} appears twice")
            seen.add(value)

    @staticmethod
    def distinct(values: Iterable[float]) -> EigenArgument:
        """Every value with multiplicity one."""
        return EigenArgument(tuple((float(v), 1) for v in values))

    @staticmethod
    def from_values(values: Sequence[float]) -> EigenArgument:
        """Group exactly equal values, keeping first-appearance order.

        Example:
            >>> EigenArgument.from_values([0.5, 2.0, 0.5]).values
            ((0.5, 2), (2.0, 1))
        """
        counts: dict[float, int] = {}
        for v in values:
            counts[float(v)] = counts.get(float(v), 0) + 1
        return EigenArgument(tuple(counts.items()))

    @property
    def m(self) -> int:
        return sum(mult for _, mult in self.values)

    @property
    def group_values(self) -> tuple[float, ...]:
        return tuple(v for v, _ in self.values)

    @property
    def expanded(self) -> tuple[float, ...]:
        return tuple(v for v, mult in self.values for _ in range(mult))

    def is_distinct(self) -> bool:
        return all(mult == 1 for _, mult in self.values)

    @override
    def __repr__(self) -> str:
        inner = ", ".join(f"({v:.6g}, {mult})" for v, mult in self.values)
        return f"EigenArgument([{inner}], m={self.m})"


__all__ = ["EigenArgument"]
