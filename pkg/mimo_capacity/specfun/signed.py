"""Real numbers stored as (sign, log|value|).

Products of factorials, Vandermonde factors and determinants in the closed
forms leave double range long before the final result does; carrying the
logarithm keeps every intermediate finite.

Example:
    >>> big = SignedLogValue.from_float(1e300)
    >>> (big * big / big).to_float()
    1e+300
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

from typing_extensions import override

from mimo_capacity.core.errors import DomainError


@dataclass(frozen=True, slots=True)
class SignedLogValue:
    """A real value ``sign * exp(logmag)``.

    Attributes:
        sign: -1, 0 or +1
        logmag: Natural log of the magnitude; ``-inf`` when sign is 0
    """

    sign: int
    logmag: float

    def __post_init__(self) -> None:
        if self.sign not in (-1, 0, 1):
            raise DomainError(f"sign must be -1, 0 or 1, got {self.sign}")
        if self.sign == 0 and self.logmag != -math.inf:
            object.__setattr__(self, "logmag", -math.inf)
        if self.sign != 0 and (math.isnan(self.logmag) or self.logmag == -math.inf):
            object.__setattr__(self, "sign", 0)
            object.__setattr__(self, "logmag", -math.inf)

    @staticmethod
    def zero() -> SignedLogValue:
        return SignedLogValue(0, -math.inf)

    @staticmethod
    def one() -> SignedLogValue:
        return SignedLogValue(1, 0.0)

    @staticmethod
    def from_float(value: float) -> SignedLogValue:
        """Convert a finite float.

        Example:
            >>> SignedLogValue.from_float(-2.0).sign
            -1
        """
        if math.isnan(value):
            raise DomainError("cannot represent nan")
        if value == 0.0:
            return SignedLogValue.zero()
        return SignedLogValue(1 if value > 0 else -1, math.log(abs(value)))

    @staticmethod
    def from_log(logmag: float, sign: int = 1) -> SignedLogValue:
        return SignedLogValue(sign, logmag)

    @staticmethod
    def sum(values: Iterable[SignedLogValue]) -> SignedLogValue:
        """Add many values with a single shift by the largest magnitude."""
        items = [v for v in values if v.sign != 0]
        if not items:
            return SignedLogValue.zero()
        peak = max(v.logmag for v in items)
        total = math.fsum(v.sign * math.exp(v.logmag - peak) for v in items)
        if total == 0.0:
            return SignedLogValue.zero()
        return SignedLogValue(1 if total > 0 else -1, peak + math.log(abs(total)))

    def is_zero(self) -> bool:
        return self.sign == 0

    def to_float(self) -> float:
        """Exponentiate; magnitudes above double range become signed inf."""
        if self.sign == 0:
            return 0.0
        try:
            return self.sign * math.exp(self.logmag)
        except OverflowError:
            return self.sign * math.inf

    def __float__(self) -> float:
        return self.to_float()

    def __mul__(self, other: SignedLogValue) -> SignedLogValue:
        if self.sign == 0 or other.sign == 0:
            return SignedLogValue.zero()
        return SignedLogValue(self.sign * other.sign, self.logmag + other.logmag)

    def __truediv__(self, other: SignedLogValue) -> SignedLogValue:
        if other.sign == 0:
            raise ZeroDivisionError("division by a zero SignedLogValue")
        if self.sign == 0:
            return SignedLogValue.zero()
        return SignedLogValue(self.sign * other.sign, self.logmag - other.logmag)

    def __neg__(self) -> SignedLogValue:
        return SignedLogValue(-self.sign, self.logmag)

    def __add__(self, other: SignedLogValue) -> SignedLogValue:
        if self.sign == 0:
            return other
        if other.sign == 0:
            return self
        hi, lo = (self, other) if self.logmag >= other.logmag else (other, self)
        ratio = math.exp(lo.logmag - hi.logmag)
        if hi.sign == lo.sign:
            return SignedLogValue(hi.sign, hi.logmag + math.log1p(ratio))
        if ratio == 1.0:
            return SignedLogValue.zero()
        return SignedLogValue(hi.sign, hi.logmag + math.log1p(-ratio))

    def __sub__(self, other: SignedLogValue) -> SignedLogValue:
        return self + (-other)

    def __pow__(self, exponent: int) -> SignedLogValue:
        """Integer power; sign follows the parity of ``exponent``."""
        if exponent == 0:
            return SignedLogValue.one()
        if self.sign == 0:
            if exponent < 0:
                raise ZeroDivisionError("negative power of zero")
            return SignedLogValue.zero()
        sign = self.sign if exponent % 2 else 1
        return SignedLogValue(sign, self.logmag * exponent)

    @override
    def __repr__(self) -> str:
        return f"SignedLogValue(sign={self.sign}, logmag={self.logmag!r})"


__all__ = ["SignedLogValue"]
