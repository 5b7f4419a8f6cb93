"""Gamma-family functions used by the closed forms.

The upper incomplete gamma function is needed at nonpositive first argument,
where scipy's regularized ``gammaincc`` does not apply. Values are carried in
the scaled form ``exp(x) * Gamma(a, x)`` so that large ``x`` never underflows.
"""

from __future__ import annotations

import logging
import math
from functools import lru_cache

import numpy as np
from scipy import integrate, special

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import ConvergenceError, DomainError

logger = logging.getLogger(__name__)

# e^x E1(x) switches to its asymptotic series above this point.
_EXP1_ASYMPTOTIC_FROM = 50.0


def log_multi_factorial(m: int, n: int) -> float:
    """Log of ``Gamma_(m)(n) = prod_{i=1}^{m} (n - i)!``.

    Example:
        >>> log_multi_factorial(3, 3) == math.log(2)
        True
    """
    if m < 0 or n < m:
        raise DomainError(f"Gamma_(m)(n) needs 0 <= m <= n, got m={m}, n={n}")
    return float(sum(special.gammaln(n - i + 1) for i in range(1, m + 1)))


def falling_factorial(a: float, k: int) -> float:
    """``[a]_k = a (a-1) ... (a-k+1)`` with ``[a]_0 = 1``."""
    if k < 0:
        raise DomainError(f"falling factorial order must be >= 0, got {k}")
    out = 1.0
    for i in range(k):
        out *= a - i
    return out


def pochhammer(a: float, k: int) -> float:
    """Rising factorial ``(a)_k = a (a+1) ... (a+k-1)`` with ``(a)_0 = 1``."""
    if k < 0:
        raise DomainError(f"Pochhammer order must be >= 0, got {k}")
    out = 1.0
    for i in range(k):
        out *= a + i
    return out


def _scaled_exp1(x: float) -> float:
    """``exp(x) * E1(x)`` for ``x > 0``."""
    if x < _EXP1_ASYMPTOTIC_FROM:
        return float(special.exp1(x) * math.exp(x))
    # Asymptotic series, truncated at its smallest term.
    total, term, k = 0.0, 1.0 / x, 0
    while True:
        total += term
        k += 1
        nxt = -term * k / x
        if abs(nxt) >= abs(term) or abs(nxt) < 1e-17 * abs(total):
            return total
        term = nxt


def scaled_gamma_quadrature(a: float, x: float, config: NumericsConfig = DEFAULT_NUMERICS) -> float:
    """``exp(x) * Gamma(a, x)`` by adaptive quadrature.

    Uses ``exp(x) Gamma(a, x) = x^a * int_0^inf (1+s)^(a-1) exp(-x s) ds``,
    whose integrand is smooth and bounded for every real ``a`` and ``x > 0``.
    """
    if x <= 0:
        raise DomainError(f"Gamma(a, x) needs x > 0, got x={x}")
    value, abserr = integrate.quad(
        lambda s: (1.0 + s) ** (a - 1.0) * math.exp(-x * s),
        0.0,
        np.inf,
        epsabs=0.0,
        epsrel=config.quad_epsrel,
        limit=config.quad_limit,
    )
    if not math.isfinite(value) or abserr > 1e3 * config.quad_epsrel * abs(value):
        raise ConvergenceError(f"quadrature for Gamma({a}, {x}) did not converge", value, abserr)
    return float(x**a * value)


def _scaled_seed(a: float, x: float) -> float:
    """``exp(x) Gamma(a, x)`` for ``a > 0`` or ``a == 0``."""
    if a == 0.0:
        return _scaled_exp1(x)
    if x > 500.0:
        return scaled_gamma_quadrature(a, x)
    return float(special.gammaincc(a, x) * special.gamma(a) * math.exp(x))


def _downward(seed_a: float, seed: float, steps: int, x: float, config: NumericsConfig) -> list[float]:
    """Run ``G(a-1) = (G(a) - x^(a-1)) / (a-1)`` on scaled values.

    Returns the ladder ``[G(seed_a), G(seed_a-1), ..., G(seed_a-steps)]``.
    Entries reached after the accumulated cancellation exceeds
    ``config.cancellation_ratio`` are recomputed by quadrature.
    """
    ladder = [seed]
    amplification = 1.0
    current, a = seed, seed_a
    for step in range(1, steps + 1):
        power = x ** (a - 1.0)
        diff = current - power
        if diff == 0.0:
            amplification = math.inf
        else:
            amplification *= max(abs(current), abs(power)) / abs(diff)
        if amplification > config.cancellation_ratio:
            logger.debug(
                "incomplete gamma recurrence at x=%g lost %.1f digits; quadrature for a <= %g",
                x,
                math.log10(amplification) if math.isfinite(amplification) else math.inf,
                a - 1.0,
            )
            ladder.extend(
                scaled_gamma_quadrature(seed_a - j, x, config) for j in range(step, steps + 1)
            )
            return ladder
        current = diff / (a - 1.0)
        ladder.append(current)
        a -= 1.0
    return ladder


@lru_cache(maxsize=4096)
def scaled_gamma_ladder(depth: int, x: float, config: NumericsConfig = DEFAULT_NUMERICS) -> tuple[float, ...]:
    """``exp(x) Gamma(-j, x)`` for ``j = 0 .. depth``.

    Seeded at ``exp(x) E1(x)``; the recurrence cannot cross ``a = 0`` so
    integer orders always start there.
    """
    if x <= 0:
        raise DomainError(f"Gamma(a, x) needs x > 0, got x={x}")
    if depth < 0:
        raise DomainError(f"ladder depth must be >= 0, got {depth}")
    return tuple(_downward(0.0, _scaled_exp1(x), depth, x, config))


def scaled_upper_incomplete_gamma(
    a: float, x: float, config: NumericsConfig = DEFAULT_NUMERICS
) -> float:
    """``exp(x) * Gamma(a, x)`` for any real ``a`` and ``x > 0``."""
    if not x > 0:
        raise DomainError(f"Gamma(a, x) needs x > 0 (the integral diverges at 0), got x={x}")
    if a > 0:
        return _scaled_seed(a, x)
    if float(a).is_integer():
        return scaled_gamma_ladder(int(-a), float(x), config)[-1]
    steps = math.floor(-a) + 1
    seed_a = a + steps
    return _downward(seed_a, _scaled_seed(seed_a, x), steps, x, config)[-1]


def upper_incomplete_gamma(a: float, x: float, config: NumericsConfig = DEFAULT_NUMERICS) -> float:
    """Upper incomplete gamma ``Gamma(a, x) = int_x^inf t^(a-1) e^(-t) dt``.

    Args:
        a: Any real order
        x: Positive lower limit
        config: Tolerances (cancellation monitor, quadrature)

    Returns:
        Gamma(a, x)

    Raises:
        DomainError: If ``x <= 0``

    Example:
        >>> round(upper_incomplete_gamma(1.0, 2.0), 6)
        0.135335
        >>> round(upper_incomplete_gamma(0.0, 1.0), 6)
        0.219384
    """
    return scaled_upper_incomplete_gamma(a, x, config) * math.exp(-x)


__all__ = [
    "log_multi_factorial",
    "falling_factorial",
    "pochhammer",
    "scaled_gamma_quadrature",
    "scaled_gamma_ladder",
    "scaled_upper_incomplete_gamma",
    "upper_incomplete_gamma",
]
