"""Sum-of-determinants identity for ordered multiple integrals.

For ``p`` functions ``phi_j``, ``n >= p`` functions ``psi_i`` and an
``n x (n - p)`` block of constants ``psi_{i,j}``:

    int_{b >= x_1 >= ... >= x_p >= a} det Phi(x) det Psi(x)
        prod_m xi(x_m) sum_l xi~(x_l) dx = sum_k det c^(k)

where ``c^(k)_{ij} = int_a^b phi_j psi_i xi U_{kj}(xi~) dx`` for ``j <= p``
(``U_{kj}`` is ``xi~`` when ``j = k`` and 1 otherwise) and
``c^(k)_{ij} = psi_{i,j}`` for ``j > p``. The single-user capacity is the
instance ``phi_j = x^{j-1}``, ``xi~ = ln(1 + x)``.
"""

from __future__ import annotations

import logging
import math
import warnings
from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.hypfun.families import FloatArray
from mimo_capacity.specfun.determinant import signed_log_det_dense
from mimo_capacity.specfun.signed import SignedLogValue

logger = logging.getLogger(__name__)

ScalarFunction = Callable[[float], float]


def _element_integral(
    integrand: ScalarFunction, bounds: tuple[float, float], config: NumericsConfig
) -> float:
    """``quad`` value, or nan when it is non-finite or clearly unconverged."""
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        try:
            value, abserr = integrate.quad(
                integrand,
                bounds[0],
                bounds[1],
                epsabs=config.quad_epsabs,
                epsrel=config.quad_epsrel,
                limit=config.quad_limit,
            )
        except (OverflowError, ZeroDivisionError, ValueError):
            return math.nan
    trouble = any(issubclass(w.category, integrate.IntegrationWarning) for w in caught)
    if not math.isfinite(value) or (trouble and abserr > 1e-6 * max(1.0, abs(value))):
        return math.nan
    return float(value)


def element_matrices(
    phi_funcs: Sequence[ScalarFunction],
    psi_funcs: Sequence[ScalarFunction],
    xi: ScalarFunction,
    xi_tilde: ScalarFunction,
    bounds: tuple[float, float] = (0.0, math.inf),
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> tuple[FloatArray, FloatArray]:
    """The ``n x p`` integrals without and with ``xi~``; failed entries are nan."""
    plain = np.empty((len(psi_funcs), len(phi_funcs)))
    weighted = np.empty_like(plain)
    for i, psi in enumerate(psi_funcs):
        for j, phi in enumerate(phi_funcs):
            plain[i, j] = _element_integral(
                lambda x, f=phi, g=psi: f(x) * g(x) * xi(x), bounds, config
            )
            weighted[i, j] = _element_integral(
                lambda x, f=phi, g=psi: f(x) * g(x) * xi(x) * xi_tilde(x), bounds, config
            )
    return plain, weighted


def det_integral_identity(
    phi_funcs: Sequence[ScalarFunction],
    psi_funcs: Sequence[ScalarFunction],
    xi: ScalarFunction,
    xi_tilde: ScalarFunction,
    bounds: tuple[float, float] = (0.0, math.inf),
    psi_constants: ArrayLike | None = None,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> float:
    """Evaluate the ordered multiple integral as ``sum_k det c^(k)``.

    Args:
        phi_funcs: ``p`` functions
        psi_funcs: ``n`` functions filling the first ``p`` columns of Psi
        xi: Weight applied to every variable
        xi_tilde: Summand inserted one variable at a time
        bounds: Integration interval ``(a, b)``
        psi_constants: ``n x (n - p)`` constant columns of Psi (``n > p`` only)
        config: Quadrature tolerances

    Raises:
        DomainError: Shape mismatch, or an element integral of some ``c^(k)``
            is not finite; the message names the 1-based ``(i, j, k)``

    Example:
        >>> import math
        >>> one = lambda x: 1.0
        >>> round(det_integral_identity([one], [one], lambda x: math.exp(-x), one), 10)
        1.0
    """
    p, n = len(phi_funcs), len(psi_funcs)
    if p < 1 or n < p:
        raise DomainError(f"need 1 <= p <= n, got p={p}, n={n}")
    constants = np.zeros((n, 0)) if psi_constants is None else np.asarray(psi_constants, dtype=np.float64)
    if constants.ndim != 2 or constants.shape != (n, n - p):
        raise DomainError(f"psi_constants must have shape ({n}, {n - p}), got {constants.shape}")

    plain, weighted = element_matrices(phi_funcs, psi_funcs, xi, xi_tilde, bounds, config)
    dets = []
    for k in range(p):
        columns = plain.copy()
        columns[:, k] = weighted[:, k]
        bad = np.argwhere(~np.isfinite(columns))
        if bad.size:
            i, j = bad[0]
            raise DomainError(f"element integral c^({k + 1})[{i + 1}, {j + 1}] is not finite")
        det = signed_log_det_dense(np.hstack([columns, constants]))
        logger.debug("k=%d: det c^(k) = %.12g", k + 1, det.to_float())
        dets.append(det)
    return SignedLogValue.sum(dets).to_float()


__all__ = ["ScalarFunction", "element_matrices", "det_integral_identity"]
