"""Hypergeometric functions of two matrix arguments in determinant form.

All three functions use the same recipe: a constant times a confluent
determinant ratio whose row family is ``exp``, a binomial power, or a scalar
pFq series. Coincident ``w`` values (including a zero group) are handled by
the confluent ratio; the ``lambda`` side must be distinct.
"""

from __future__ import annotations

from collections.abc import Sequence

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.hypfun.argument import EigenArgument
from mimo_capacity.hypfun.confluence import confluent_det_ratio
from mimo_capacity.hypfun.families import BinomialFamily, ExponentialFamily, HypergeometricFamily
from mimo_capacity.specfun.gamma import log_multi_factorial
from mimo_capacity.specfun.signed import SignedLogValue


def _distinct_lambdas(lambda_arg: EigenArgument, w_arg: EigenArgument) -> list[float]:
    if not lambda_arg.is_distinct():
        raise DomainError("lambda eigenvalues must be distinct (all multiplicities 1)")
    if lambda_arg.m != w_arg.m:
        raise DomainError(f"dimension mismatch: lambda has {lambda_arg.m}, w has {w_arg.m}")
    return list(lambda_arg.group_values)


def psi_constant(params: Sequence[float], m: int) -> SignedLogValue:
    """``psi^{(m)}(b) = prod_{i=1}^{m} prod_j (b_j - i + 1)^(i - 1)``."""
    total = SignedLogValue.one()
    for i in range(1, m + 1):
        for b in params:
            total = total * SignedLogValue.from_float(b - i + 1) ** (i - 1)
    return total


def hyp0F0(
    lambda_arg: EigenArgument, w_arg: EigenArgument, config: NumericsConfig = DEFAULT_NUMERICS
) -> SignedLogValue:
    """``0F0(Lambda, W)`` for distinct ``Lambda`` and any ``W``.

    Example:
        >>> import math
        >>> lam = EigenArgument.distinct([1.0, 2.0])
        >>> value = hyp0F0(lam, EigenArgument(((0.5, 2),))).to_float()
        >>> math.isclose(value, math.exp(0.5 * 3.0))
        True
    """
    lambdas = _distinct_lambdas(lambda_arg, w_arg)
    m = w_arg.m
    ratio = confluent_det_ratio(ExponentialFamily(lambdas), lambdas, w_arg, config)
    return SignedLogValue.from_log(log_multi_factorial(m, m)) * ratio


def hyp1F0(
    r: float,
    lambda_arg: EigenArgument,
    w_arg: EigenArgument,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> SignedLogValue:
    """``1F0(r; Lambda, W)``; rows are ``(1 - lambda_i w)^(m - r - 1)``.

    Raises:
        DomainError: ``1 - lambda_i w_j = 0`` for some pair, coincident lambdas,
            or ``psi_1^{(m)}(r) = 0``
    """
    lambdas = _distinct_lambdas(lambda_arg, w_arg)
    m = w_arg.m
    psi = psi_constant([r], m)
    if psi.is_zero():
        raise DomainError(f"psi_1^({m})({r}) vanishes")
    family = BinomialFamily(lambdas, m - r - 1)
    ratio = confluent_det_ratio(family, lambdas, w_arg, config)
    return SignedLogValue.from_log(log_multi_factorial(m, m)) / psi * ratio


def hyp_pFq(
    a: Sequence[float],
    b: Sequence[float],
    lambda_arg: EigenArgument,
    w_arg: EigenArgument,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> SignedLogValue:
    """``pFq(a; b; Lambda, W)`` with scalar series entries.

    Entries are ``pFq(a - m + 1 + n; b - m + 1 + n; lambda_i w)`` times the
    derivative factors, ``n`` being the column's derivative order. The
    constant is ``Gamma_(m)(m) psi_q(b) / psi_p(a)``.

    Raises:
        DomainError: Divergent scalar series, or a vanishing ``psi_p(a)``
        ConvergenceError: A scalar series reached its truncation
    """
    lambdas = _distinct_lambdas(lambda_arg, w_arg)
    m = w_arg.m
    psi_a = psi_constant(a, m)
    if psi_a.is_zero():
        raise DomainError(f"psi_p^({m})({list(a)}) vanishes")
    family = HypergeometricFamily(
        [ai - m + 1 for ai in a], [bj - m + 1 for bj in b], lambdas, config
    )
    ratio = confluent_det_ratio(family, lambdas, w_arg, config)
    constant = SignedLogValue.from_log(log_multi_factorial(m, m)) * psi_constant(b, m) / psi_a
    return constant * ratio


__all__ = ["hyp0F0", "hyp1F0", "hyp_pFq", "psi_constant"]
