"""Truncated generalized hypergeometric series of a scalar argument."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

from mimo_capacity.core.config import DEFAULT_NUMERICS
from mimo_capacity.core.errors import DomainError


@dataclass(frozen=True, slots=True)
class SeriesSum:
    """Partial sum of a series.

    Attributes:
        value: The partial sum
        terms: Number of terms added
        converged: Whether the stopping tolerance was met before truncation
    """

    value: float
    terms: int
    converged: bool


def _nonpositive_integer(v: float) -> bool:
    return v <= 0 and float(v).is_integer()


def scalar_pFq(
    a: Sequence[float],
    b: Sequence[float],
    z: float,
    truncation: int = DEFAULT_NUMERICS.series_truncation,
    tolerance: float = DEFAULT_NUMERICS.series_tolerance,
) -> SeriesSum:
    """Sum ``sum_k (a_1)_k...(a_p)_k / ((b_1)_k...(b_q)_k) z^k / k!``.

    Summation stops once a term is below ``tolerance * |sum|`` or after
    ``truncation`` terms. A series that terminates (some ``a_i`` a nonpositive
    integer) is summed exactly.

    Args:
        a: Numerator parameters
        b: Denominator parameters
        z: Argument
        truncation: Maximum number of terms
        tolerance: Relative stopping threshold

    Returns:
        The partial sum with a convergence flag

    Raises:
        DomainError: Divergent parameter/argument combination, or a ``b``
            parameter that the series reaches at a nonpositive integer

    Example:
        >>> round(scalar_pFq([], [], 1.0).value, 6)
        2.718282
        >>> round(scalar_pFq([2.0], [], 0.5).value, 9)
        4.0
    """
    if truncation < 1:
        raise DomainError(f"truncation must be >= 1, got {truncation}")
    p, q = len(a), len(b)
    stop_at = min(
        (int(-ai) + 1 for ai in a if _nonpositive_integer(ai)),
        default=None,
    )
    if stop_at is None:
        if p > q + 1 and z != 0.0:
            raise DomainError(f"{p}F{q} series diverges for z={z} != 0")
        if p == q + 1 and abs(z) >= 1.0:
            raise DomainError(f"{p}F{q} series diverges for |z|={abs(z)} >= 1")
    limit = truncation if stop_at is None else min(truncation, stop_at)
    for bj in b:
        if _nonpositive_integer(bj) and int(-bj) < limit:
            raise DomainError(f"denominator parameter {bj} is reached by the series")

    total, term = 1.0, 1.0
    for k in range(limit - 1):
        ratio = z / (k + 1)
        for ai in a:
            ratio *= ai + k
        for bj in b:
            ratio /= bj + k
        term *= ratio
        total += term
        if term == 0.0:
            return SeriesSum(total, k + 2, True)
        if abs(term) < tolerance * abs(total) and k > 0:
            return SeriesSum(total, k + 2, True)
        if not math.isfinite(total):
            raise DomainError(f"{p}F{q} series overflowed at z={z}")
    return SeriesSum(total, limit, stop_at is not None and limit == stop_at)


__all__ = ["SeriesSum", "scalar_pFq"]
