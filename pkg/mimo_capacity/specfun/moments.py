"""Moment integrals of the exponential density.

    int_0^inf x^m e^(-mu x) dx            = m! / mu^(m+1)
    int_0^inf x^m e^(-mu x) ln(1+x) dx    = m! e^mu sum_{i=0}^{m} Gamma(i-m, mu) / mu^(i+1)

Both are evaluated in log form so the capacity determinants can use them
without leaving double range.
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy import integrate, special

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.specfun.gamma import scaled_gamma_ladder

logger = logging.getLogger(__name__)


def _check(m: int, mu: float) -> None:
    if m < 0 or int(m) != m:
        raise DomainError(f"moment order must be a nonnegative integer, got {m}")
    if not mu > 0:
        raise DomainError(f"rate mu must be positive, got {mu}")


def log_power_moment(m: int, mu: float) -> float:
    """Log of ``m! / mu^(m+1)``."""
    _check(m, mu)
    return float(special.gammaln(m + 1) - (m + 1) * math.log(mu))


def power_moment_integral(m: int, mu: float) -> float:
    """``int_0^inf x^m e^(-x mu) dx = m! / mu^(m+1)``.

    Example:
        >>> power_moment_integral(3, 0.5)
        96.0
    """
    _check(m, mu)
    try:
        return math.factorial(m) / mu ** (m + 1)
    except OverflowError:
        return math.exp(log_power_moment(m, mu))


def log_log_moment(m: int, mu: float, config: NumericsConfig = DEFAULT_NUMERICS) -> float:
    """Log of ``int_0^inf x^m e^(-x mu) ln(1+x) dx`` from the incomplete-gamma sum.

    Every summand is positive, so the sum is taken with logsumexp.
    """
    _check(m, mu)
    ladder = scaled_gamma_ladder(int(m), float(mu), config)
    # Gamma(i - m, mu) is ladder entry m - i.
    logs = np.array(
        [math.log(ladder[m - i]) - (i + 1) * math.log(mu) for i in range(m + 1)]
    )
    value = float(special.gammaln(m + 1) + special.logsumexp(logs))
    if config.cross_check:
        _cross_check(m, mu, value, config)
    return value


def log_moment_integral(m: int, mu: float, config: NumericsConfig = DEFAULT_NUMERICS) -> float:
    """``int_0^inf x^m e^(-x mu) ln(1+x) dx`` in natural-log units.

    Args:
        m: Nonnegative integer power
        mu: Positive rate
        config: ``cross_check`` compares against adaptive quadrature

    Example:
        >>> round(log_moment_integral(0, 1.0), 6)
        0.596347
    """
    return math.exp(log_log_moment(m, mu, config))


def log_moment_quadrature(m: int, mu: float, config: NumericsConfig = DEFAULT_NUMERICS) -> float:
    """Adaptive quadrature of the log-moment integral (diagnostics only)."""
    _check(m, mu)
    # Substitute x = t / mu so the exponential has unit rate.
    value, _ = integrate.quad(
        lambda t: t**m * math.exp(-t) * math.log1p(t / mu),
        0.0,
        np.inf,
        epsabs=0.0,
        epsrel=config.quad_epsrel,
        limit=config.quad_limit,
    )
    return float(value / mu ** (m + 1))


def _cross_check(m: int, mu: float, log_value: float, config: NumericsConfig) -> None:
    reference = log_moment_quadrature(m, mu, config)
    closed = math.exp(log_value)
    rel = abs(closed - reference) / abs(reference)
    if rel > 1e-8:
        logger.warning(
            "log-moment closed form disagrees with quadrature: m=%d mu=%g rel=%.2e", m, mu, rel
        )
    else:
        logger.debug("log-moment m=%d mu=%g agrees with quadrature (rel=%.2e)", m, mu, rel)


__all__ = [
    "power_moment_integral",
    "log_power_moment",
    "log_moment_integral",
    "log_log_moment",
    "log_moment_quadrature",
]
