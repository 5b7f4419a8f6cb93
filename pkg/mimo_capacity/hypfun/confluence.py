"""Determinant ratios with coincident arguments.

For distinct ``w`` the ratio ``det[f_i(w_j)] / prod_{i<j}(w_i - w_j)`` is
well defined; when ``L`` arguments coincide it is 0/0. Its continuous
extension replaces the ``L`` columns of the group by the derivatives
``f^{(L-1)}, ..., f', f`` at the common point, drops the vanishing
denominator factors and divides by ``prod_{i=1}^{L-1} i!``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence

import numpy as np

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.hypfun.argument import EigenArgument
from mimo_capacity.hypfun.families import DerivativeFamily, FloatArray
from mimo_capacity.specfun.determinant import signed_log_det
from mimo_capacity.specfun.gamma import log_multi_factorial
from mimo_capacity.specfun.signed import SignedLogValue

logger = logging.getLogger(__name__)


def confluent_matrix(
    family: DerivativeFamily, w_arg: EigenArgument
) -> tuple[FloatArray, FloatArray]:
    """Signed-log matrix with one derivative column block per ``w`` group.

    A group of multiplicity ``L`` contributes the columns
    ``f^{(L-1)}(w), ..., f^{(0)}(w)`` in that order.
    """
    if family.size != w_arg.m:
        raise DomainError(f"family has {family.size} rows but the argument has dimension {w_arg.m}")
    signs = np.empty((family.size, w_arg.m))
    logs = np.empty((family.size, w_arg.m))
    col = 0
    for value, mult in w_arg.values:
        for order in range(mult - 1, -1, -1):
            signs[:, col], logs[:, col] = family.derivative(value, order)
            col += 1
    return signs, logs


def log_confluence_scale(w_arg: EigenArgument) -> float:
    """``sum over groups of log Gamma_(L)(L)``."""
    return math.fsum(log_multi_factorial(mult, mult) for _, mult in w_arg.values)


def group_vandermonde(groups: Sequence[tuple[float, int]]) -> SignedLogValue:
    """``prod_{a<b} (w_a - w_b)^(L_a L_b)`` over distinct groups in the given order."""
    total = SignedLogValue.one()
    for a, (wa, la) in enumerate(groups):
        for wb, lb in groups[a + 1 :]:
            total = total * SignedLogValue.from_float(wa - wb) ** (la * lb)
    return total


def lambda_vandermonde(lambdas: Sequence[float]) -> SignedLogValue:
    """``prod_{i<j} (lambda_i - lambda_j)``; coincident values are a domain error."""
    if len(set(lambdas)) != len(lambdas):
        raise DomainError(f"lambda values must be distinct, got {list(lambdas)}")
    return group_vandermonde([(float(v), 1) for v in lambdas])


def smallest_relative_gap(values: Sequence[float]) -> float:
    """Smallest ``|a - b| / max(|a|, |b|)`` over distinct pairs (inf for < 2 values)."""
    ordered = sorted(values)
    gaps = [
        (hi - lo) / max(abs(lo), abs(hi))
        for lo, hi in zip(ordered, ordered[1:], strict=False)
        if max(abs(lo), abs(hi)) > 0
    ]
    return min(gaps, default=math.inf)


def check_gaps(w_arg: EigenArgument, config: NumericsConfig = DEFAULT_NUMERICS) -> float | None:
    """Warn when two distinct ``w`` groups are nearly coincident; return the gap if so."""
    gap = smallest_relative_gap(w_arg.group_values)
    if gap < config.gap_warning:
        logger.warning(
            "w arguments are %.2e apart (relative); about %.0f digits are lost, "
            "merge them with canonicalize instead",
            gap,
            -math.log10(gap) if gap > 0 else math.inf,
        )
        return gap
    return None


def confluent_det_ratio(
    family: DerivativeFamily,
    lambda_args: Sequence[float],
    w_arg: EigenArgument,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> SignedLogValue:
    """Continuous extension of ``det[f_i(w_j)] / (V(lambda) V(w))``.

    ``V(lambda) = prod_{i<j}(lambda_i - lambda_j)`` and ``V(w)`` keeps only
    the factors between distinct groups. Each ``w`` group of multiplicity ``L``
    uses derivative columns and adds the scaling ``Gamma_(L)(L)``.

    Args:
        family: Row functions ``f_i`` (built from ``lambda_args``)
        lambda_args: Distinct row parameters, one per row
        w_arg: Column arguments with multiplicities
        config: ``gap_warning`` threshold

    Returns:
        The ratio as a SignedLogValue

    Raises:
        DomainError: Coincident lambda values or mismatched dimensions

    Example:
        >>> from mimo_capacity.hypfun.families import ExponentialFamily
        >>> lam = [1.0, 0.5]
        >>> r = confluent_det_ratio(ExponentialFamily(lam), lam, EigenArgument(((0.2, 2),)))
        >>> round(r.to_float(), 12) == round(math.exp(1.5 * 0.2), 12)
        True
    """
    if len(lambda_args) != w_arg.m:
        raise DomainError(f"{len(lambda_args)} lambda values for an argument of dimension {w_arg.m}")
    v_lambda = lambda_vandermonde(lambda_args)
    check_gaps(w_arg, config)
    det = signed_log_det(*confluent_matrix(family, w_arg))
    scale = SignedLogValue.from_log(log_confluence_scale(w_arg))
    return det / (v_lambda * group_vandermonde(w_arg.values) * scale)


__all__ = [
    "confluent_matrix",
    "confluent_det_ratio",
    "log_confluence_scale",
    "group_vandermonde",
    "lambda_vandermonde",
    "smallest_relative_gap",
    "check_gaps",
]
