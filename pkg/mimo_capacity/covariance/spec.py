"""Correlation matrices described by their distinct eigenvalues.

A correlation matrix only enters the closed forms through its spectrum, so
it is stored as ``(eigenvalue, multiplicity)`` groups. Groups are kept in
strictly decreasing eigenvalue order; the inverse view ``mu = 1/eigenvalue``
used by the density and capacity formulas is then strictly decreasing when
read from the last group to the first.

Example:
    >>> spec = canonicalize([2.0, 2.0, 0.5])
    >>> spec.groups
    ((2.0, 2), (0.5, 1))
    >>> spec.mu_groups
    ((2.0, 1), (0.5, 2))
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from typing_extensions import override

from mimo_capacity.core.config import DEFAULT_NUMERICS
from mimo_capacity.core.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CovarianceSpec:
    """Spectrum of a positive-definite one-sided correlation matrix.

    Attributes:
        groups: ``(eigenvalue, multiplicity)`` pairs, eigenvalues strictly decreasing

    An empty ``groups`` tuple is the zero-dimensional matrix (no interferers).
    """

    groups: tuple[tuple[float, int], ...]

    def __post_init__(self) -> None:
        previous = math.inf
        for value, mult in self.groups:
            if not value > 0 or not math.isfinite(value):
                raise DomainError(f"eigenvalues must be positive and finite, got {value}")
            if int(mult) != mult or mult < 1:
                raise DomainError(f"multiplicities must be positive integers, got {mult}")
            if not value < previous:
                raise DomainError("group eigenvalues must be strictly decreasing")
            previous = value

    @staticmethod
    def empty() -> CovarianceSpec:
        return CovarianceSpec(())

    @staticmethod
    def scaled_identity(value: float, n: int) -> CovarianceSpec:
        """``value * I_n``."""
        if n < 1:
            raise DomainError(f"dimension must be >= 1, got {n}")
        return CovarianceSpec(((float(value), int(n)),))

    @property
    def n(self) -> int:
        return sum(m for _, m in self.groups)

    @property
    def num_groups(self) -> int:
        return len(self.groups)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.groups)

    @property
    def eigenvalues(self) -> tuple[float, ...]:
        """Every eigenvalue repeated by multiplicity, decreasing."""
        return tuple(v for v, m in self.groups for _ in range(m))

    @property
    def mu_groups(self) -> tuple[tuple[float, int], ...]:
        """``(1/eigenvalue, multiplicity)`` with ``mu`` strictly decreasing."""
        return tuple((1.0 / v, m) for v, m in reversed(self.groups))

    @property
    def mus(self) -> tuple[float, ...]:
        return tuple(mu for mu, _ in self.mu_groups)

    @property
    def mu_multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.mu_groups)

    @property
    def trace(self) -> float:
        return math.fsum(v * m for v, m in self.groups)

    def is_empty(self) -> bool:
        return not self.groups

    def scaled(self, factor: float) -> CovarianceSpec:
        """Spectrum of ``factor * Phi``."""
        if not factor > 0:
            raise DomainError(f"scale factor must be positive, got {factor}")
        return CovarianceSpec(tuple((v * factor, m) for v, m in self.groups))

    def direct_sum(
        self, other: CovarianceSpec, merge_tolerance: float = DEFAULT_NUMERICS.merge_tolerance
    ) -> CovarianceSpec:
        """Spectrum of the block-diagonal matrix ``self (+) other``."""
        return canonicalize(self.eigenvalues + other.eigenvalues, merge_tolerance, allow_empty=True)

    @override
    def __repr__(self) -> str:
        inner = ", ".join(f"({v:.6g}, {m})" for v, m in self.groups)
        return f"CovarianceSpec([{inner}], n={self.n})"


def _relative_gap(lo: float, hi: float) -> float:
    return (hi - lo) / hi


def canonicalize(
    raw_eigenvalues: Iterable[float],
    merge_tolerance: float = DEFAULT_NUMERICS.merge_tolerance,
    *,
    allow_empty: bool = False,
) -> CovarianceSpec:
    """Group raw eigenvalues into a canonical CovarianceSpec.

    Neighbouring values (after sorting) whose relative gap ``(hi - lo) / hi``
    is at most ``merge_tolerance`` fall into one group whose eigenvalue is the
    arithmetic mean of its members.

    Args:
        raw_eigenvalues: Positive eigenvalues, any order
        merge_tolerance: Relative gap at or below which values merge
        allow_empty: Accept an empty input and return the 0-dimensional spec

    Returns:
        The canonical spec; the result does not depend on input order

    Raises:
        DomainError: Empty input, nonpositive or non-finite value, or a
            negative tolerance

    Example:
        >>> canonicalize([1.0, 1.0 + 1e-9, 3.0], 1e-6).multiplicities
        (1, 2)
    """
    values = sorted(float(v) for v in raw_eigenvalues)
    if merge_tolerance < 0:
        raise DomainError(f"merge_tolerance must be >= 0, got {merge_tolerance}")
    if not values:
        if allow_empty:
            return CovarianceSpec.empty()
        raise DomainError("eigenvalue list is empty")
    bad = [v for v in values if not (v > 0 and math.isfinite(v))]
    if bad:
        raise DomainError(f"eigenvalues must be positive and finite, got {bad[0]}")

    clusters: list[list[float]] = [[values[0]]]
    for value in values[1:]:
        if _relative_gap(clusters[-1][-1], value) <= merge_tolerance:
            clusters[-1].append(value)
        else:
            clusters.append([value])

    groups = []
    for members in reversed(clusters):
        if members[0] == members[-1]:
            groups.append((members[0], len(members)))
            continue
        mean = math.fsum(members) / len(members)
        logger.debug("merged %d eigenvalues around %.12g", len(members), mean)
        groups.append((mean, len(members)))
    return CovarianceSpec(tuple(groups))


def from_groups(
    groups: Sequence[tuple[float, int]], merge_tolerance: float = DEFAULT_NUMERICS.merge_tolerance
) -> CovarianceSpec:
    """Canonical spec from ``(eigenvalue, multiplicity)`` pairs in any order."""
    expanded = []
    for value, mult in groups:
        if int(mult) != mult or mult < 1:
            raise DomainError(f"multiplicities must be positive integers, got {mult}")
        expanded.extend([float(value)] * int(mult))
    return canonicalize(expanded, merge_tolerance)


__all__ = ["CovarianceSpec", "canonicalize", "from_groups"]
