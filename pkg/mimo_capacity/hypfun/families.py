"""Row-function families with closed-form derivatives.

A family holds one scalar function ``f_i(w)`` per determinant row and
returns the ``n``-th derivative of every row at a point, entrywise as
``(sign, log|value|)`` so that exponentials of large arguments stay finite.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from typing import Protocol, runtime_checkable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import ConvergenceError, DomainError
from mimo_capacity.specfun.gamma import falling_factorial, pochhammer
from mimo_capacity.specfun.series import scalar_pFq

FloatArray = NDArray[np.float64]


@runtime_checkable
class DerivativeFamily(Protocol):
    """Rows ``f_1 .. f_size`` whose derivatives can be evaluated in closed form."""

    @property
    def size(self) -> int: ...

    def derivative(self, w: float, order: int) -> tuple[FloatArray, FloatArray]:
        """Signs and log-magnitudes of ``f_i^{(order)}(w)`` for every row."""
        ...


def _signed_power(base: FloatArray, order: int) -> tuple[FloatArray, FloatArray]:
    """``base ** order`` for a nonnegative integer order, as (sign, log)."""
    if order == 0:
        return np.ones_like(base), np.zeros_like(base)
    signs = np.sign(base) ** order
    with np.errstate(divide="ignore"):
        logs = order * np.log(np.abs(base))
    return signs, logs


class ExponentialFamily:
    """``f_i(w) = exp(rate_i * w)``; ``f_i^{(n)}(w) = rate_i^n exp(rate_i w)``.

    Example:
        >>> s, l = ExponentialFamily([2.0]).derivative(0.5, 1)
        >>> round(float(s[0] * np.exp(l[0])), 12)
        5.436563656918
    """

    def __init__(self, rates: ArrayLike) -> None:
        self.rates = np.asarray(rates, dtype=np.float64).reshape(-1)

    @property
    def size(self) -> int:
        return int(self.rates.size)

    def derivative(self, w: float, order: int) -> tuple[FloatArray, FloatArray]:
        signs, logs = _signed_power(self.rates, order)
        return signs, logs + self.rates * w


class BinomialFamily:
    """``f_i(w) = (1 - rate_i w)^gamma``.

    ``f_i^{(n)}(w) = (-rate_i)^n [gamma]_n (1 - rate_i w)^(gamma - n)``.
    """

    def __init__(self, rates: ArrayLike, exponent: float) -> None:
        self.rates = np.asarray(rates, dtype=np.float64).reshape(-1)
        self.exponent = float(exponent)

    @property
    def size(self) -> int:
        return int(self.rates.size)

    def derivative(self, w: float, order: int) -> tuple[FloatArray, FloatArray]:
        base = 1.0 - self.rates * w
        if np.any(base == 0.0):
            raise DomainError(f"singular factor 1 - lambda*w = 0 at w={w}")
        power = self.exponent - order
        integral = float(power).is_integer()
        if np.any(base < 0.0) and not integral:
            raise DomainError(f"negative base 1 - lambda*w with non-integer power {power}")
        coeff = falling_factorial(self.exponent, order)
        if coeff == 0.0:
            return np.zeros_like(base), np.full_like(base, -np.inf)
        signs, logs = _signed_power(-self.rates, order)
        base_signs = np.where(base < 0.0, (-1.0) ** int(power) if integral else np.nan, 1.0)
        logs = logs + math.log(abs(coeff)) + power * np.log(np.abs(base))
        return signs * base_signs * math.copysign(1.0, coeff), logs


class HypergeometricFamily:
    """``f_i(w) = pFq(a; b; rate_i w)`` with scalar series.

    ``f_i^{(n)}(w) = rate_i^n (a)_n / (b)_n pFq(a + n; b + n; rate_i w)``, where
    ``(x)_n`` multiplies over every parameter.
    """

    def __init__(
        self,
        a: Sequence[float],
        b: Sequence[float],
        rates: ArrayLike,
        config: NumericsConfig = DEFAULT_NUMERICS,
    ) -> None:
        self.a = tuple(float(v) for v in a)
        self.b = tuple(float(v) for v in b)
        self.rates = np.asarray(rates, dtype=np.float64).reshape(-1)
        self.config = config

    @property
    def size(self) -> int:
        return int(self.rates.size)

    def derivative(self, w: float, order: int) -> tuple[FloatArray, FloatArray]:
        coeff = math.prod(pochhammer(ai, order) for ai in self.a)
        denom = math.prod(pochhammer(bj, order) for bj in self.b)
        if denom == 0.0:
            raise DomainError(f"denominator parameters {self.b} vanish at derivative order {order}")
        shifted_a = [ai + order for ai in self.a]
        shifted_b = [bj + order for bj in self.b]
        values = np.empty(self.size)
        for i, rate in enumerate(self.rates):
            partial = scalar_pFq(
                shifted_a,
                shifted_b,
                float(rate * w),
                self.config.series_truncation,
                self.config.series_tolerance,
            )
            if not partial.converged:
                raise ConvergenceError(
                    f"{len(self.a)}F{len(self.b)} series at z={rate * w} hit the truncation",
                    partial.value,
                )
            values[i] = partial.value
        signs, logs = _signed_power(self.rates, order)
        value_signs = np.sign(values) * math.copysign(1.0, coeff / denom)
        with np.errstate(divide="ignore"):
            extra = np.log(np.abs(values)) + (math.log(abs(coeff / denom)) if coeff else -np.inf)
        return signs * value_signs, logs + extra


class PowerFamily:
    """``f_i(w) = w^k_i`` for nonnegative integers ``k_i``."""

    def __init__(self, powers: Sequence[int]) -> None:
        if any(int(k) != k or k < 0 for k in powers):
            raise DomainError(f"powers must be nonnegative integers, got {powers}")
        self.powers = tuple(int(k) for k in powers)

    @property
    def size(self) -> int:
        return len(self.powers)

    def derivative(self, w: float, order: int) -> tuple[FloatArray, FloatArray]:
        signs = np.zeros(self.size)
        logs = np.full(self.size, -np.inf)
        for i, k in enumerate(self.powers):
            if order > k:
                continue
            coeff = falling_factorial(k, order)
            if k == order:
                signs[i], logs[i] = 1.0, math.log(coeff)
            elif w != 0.0:
                signs[i] = math.copysign(1.0, w) ** (k - order)
                logs[i] = math.log(coeff) + (k - order) * math.log(abs(w))
        return signs, logs


class StackedFamily:
    """Rows of several families stacked top to bottom."""

    def __init__(self, parts: Sequence[DerivativeFamily]) -> None:
        self.parts = tuple(parts)

    @property
    def size(self) -> int:
        return sum(part.size for part in self.parts)

    def derivative(self, w: float, order: int) -> tuple[FloatArray, FloatArray]:
        pieces = [part.derivative(w, order) for part in self.parts if part.size]
        if not pieces:
            return np.empty(0), np.empty(0)
        return (
            np.concatenate([s for s, _ in pieces]),
            np.concatenate([lg for _, lg in pieces]),
        )


__all__ = [
    "DerivativeFamily",
    "ExponentialFamily",
    "BinomialFamily",
    "HypergeometricFamily",
    "PowerFamily",
    "StackedFamily",
]
