"""Arbitrary-precision twins of the moment integrals.

Every function works at the precision of the caller's ``mp.workdps``
context. Results stay mpmath numbers until ``to_signed_log`` brings them
back to double range.
"""

from __future__ import annotations

from collections.abc import Sequence
from typing import Any

import mpmath as mp

from mimo_capacity.specfun.signed import SignedLogValue

MpReal = Any


def gamma_ladder(order: int, mu: float) -> list[MpReal]:
    """``Gamma(-k, mu)`` for ``k = 0 .. order``."""
    rate = mp.mpf(mu)
    return [mp.gammainc(-k, rate) for k in range(order + 1)]


def power_moment(m: int, mu: float) -> MpReal:
    """``m! / mu^(m+1)``."""
    return mp.factorial(m) / mp.mpf(mu) ** (m + 1)


def log_moment(m: int, mu: float, ladder: Sequence[MpReal]) -> MpReal:
    """``m! e^mu sum_{i=0}^{m} Gamma(i-m, mu) / mu^(i+1)``.

    Args:
        m: Nonnegative integer power
        mu: Positive rate
        ladder: ``gamma_ladder(M, mu)`` for some ``M >= m``

    Example:
        >>> with mp.workdps(30):
        ...     value = log_moment(0, 1.0, gamma_ladder(0, 1.0))
        >>> round(float(value), 6)
        0.596347
    """
    rate = mp.mpf(mu)
    terms = [ladder[m - i] / rate ** (i + 1) for i in range(m + 1)]
    return mp.factorial(m) * mp.exp(rate) * mp.fsum(terms)


def falling_power(top: int, order: int, mu: float) -> MpReal:
    """``[top]_order mu^(top - order)``, zero when ``order > top``."""
    if order > top:
        return mp.mpf(0)
    return mp.ff(top, order) * mp.mpf(mu) ** (top - order)


def determinant(rows: Sequence[Sequence[MpReal]]) -> MpReal:
    return mp.det(mp.matrix([list(r) for r in rows]))


def to_signed_log(value: MpReal) -> SignedLogValue:
    """Signed-log copy of an mpmath real; the magnitude may lie outside double range."""
    if value == 0:
        return SignedLogValue.zero()
    return SignedLogValue(1 if value > 0 else -1, float(mp.log(abs(value))))


__all__ = [
    "MpReal",
    "gamma_ladder",
    "power_moment",
    "log_moment",
    "falling_power",
    "determinant",
    "to_signed_log",
]
