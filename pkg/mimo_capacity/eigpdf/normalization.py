"""Nested adaptive quadrature over the ordered eigenvalue domain."""

from __future__ import annotations

import logging
import math
import warnings
from collections.abc import Callable, Sequence

import numpy as np
from scipy import integrate

from mimo_capacity.core.errors import ConvergenceError, DomainError
from mimo_capacity.core.logs import timed
from mimo_capacity.eigpdf.density import EigenPdf, joint_pdf_unchecked

logger = logging.getLogger(__name__)

_MAX_NESTED_DIMENSION = 3


def ordered_domain_integral(
    f: Callable[[Sequence[float]], float],
    dims: int,
    bounds: tuple[float, float] = (0.0, math.inf),
    *,
    limit: int = 50,
    epsabs: float = 1e-10,
    epsrel: float = 1e-8,
) -> tuple[float, float]:
    """Integrate ``f(x)`` over ``b >= x_1 >= x_2 >= ... >= x_dims >= a``.

    ``f`` receives the point in decreasing order. The innermost variable is
    the smallest one.

    Returns:
        ``(value, abserr)`` from scipy's nested quadrature

    Raises:
        ConvergenceError: Non-finite estimate, or scipy reported trouble
            together with a large error estimate
    """
    if dims < 1:
        raise DomainError(f"dimension must be >= 1, got {dims}")
    a, b = bounds

    def integrand(*ys: float) -> float:
        return f(ys[::-1])

    def inner_range(*outer: float) -> tuple[float, float]:
        return (a, outer[0])

    ranges: list[object] = [inner_range] * (dims - 1) + [(a, b)]
    opts = {"limit": limit, "epsabs": epsabs, "epsrel": epsrel}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", integrate.IntegrationWarning)
        value, abserr = integrate.nquad(integrand, ranges, opts=[opts] * dims)
    trouble = [str(w.message) for w in caught if issubclass(w.category, integrate.IntegrationWarning)]
    if not math.isfinite(value):
        raise ConvergenceError("ordered-domain quadrature produced a non-finite value", value, abserr)
    if trouble and abserr > 1e-6 * max(1.0, abs(value)):
        raise ConvergenceError(f"ordered-domain quadrature: {trouble[0]}", value, abserr)
    if trouble:
        logger.warning("ordered-domain quadrature reported: %s", trouble[0])
    return float(value), float(abserr)


def normalization_check(pdf: EigenPdf, quadrature_depth: int = 50, *, epsrel: float = 1e-8) -> float:
    """Integral of the joint density over the ordered positive orthant.

    Args:
        pdf: Density with ``nmin <= 3``
        quadrature_depth: Subinterval limit of each nested quadrature level
        epsrel: Relative tolerance of each level

    Returns:
        The integral; 1 up to quadrature error for a correct density

    Raises:
        DomainError: ``nmin > 3``
        ConvergenceError: The quadrature failed; carries the achieved estimate
    """
    if pdf.n_min > _MAX_NESTED_DIMENSION:
        raise DomainError(f"nested quadrature is limited to nmin <= 3, got {pdf.n_min}")
    with timed(f"normalization check n={pdf.n} p={pdf.p}", logger):
        value, abserr = ordered_domain_integral(
            lambda x: joint_pdf_unchecked(pdf, x),
            pdf.n_min,
            limit=quadrature_depth,
            epsrel=epsrel,
        )
    logger.debug("density integrates to %.12g (abserr %.2e)", value, abserr)
    return value


def largest_eigenvalue_density(pdf: EigenPdf, x1: float, *, limit: int = 50) -> float:
    """Marginal density of the largest eigenvalue at ``x1`` (``nmin <= 2``)."""
    if not x1 > 0:
        raise DomainError(f"x1 must be positive, got {x1}")
    if pdf.n_min == 1:
        return joint_pdf_unchecked(pdf, [x1])
    if pdf.n_min != 2:
        raise DomainError(f"largest-eigenvalue marginal is limited to nmin <= 2, got {pdf.n_min}")
    value, _ = integrate.quad(lambda x2: joint_pdf_unchecked(pdf, [x1, x2]), 0.0, x1, limit=limit)
    return float(value)


def largest_eigenvalue_bin_mass(pdf: EigenPdf, left: float, right: float) -> float:
    """Probability that the largest eigenvalue falls in ``[left, right)``."""
    if pdf.n_min > 2:
        raise DomainError(f"bin mass is limited to nmin <= 2, got {pdf.n_min}")
    lo = max(left, np.finfo(float).tiny)
    value, _ = integrate.quad(lambda t: largest_eigenvalue_density(pdf, t), lo, right)
    return float(value)


__all__ = [
    "ordered_domain_integral",
    "normalization_check",
    "largest_eigenvalue_density",
    "largest_eigenvalue_bin_mass",
]
