"""Hypergeometric functions of matrix arguments with coincident eigenvalues."""

from mimo_capacity.hypfun.argument import EigenArgument
from mimo_capacity.hypfun.confluence import (
    check_gaps,
    confluent_det_ratio,
    confluent_matrix,
    group_vandermonde,
    lambda_vandermonde,
    log_confluence_scale,
    smallest_relative_gap,
)
from mimo_capacity.hypfun.families import (
    BinomialFamily,
    DerivativeFamily,
    ExponentialFamily,
    HypergeometricFamily,
    PowerFamily,
    StackedFamily,
)
from mimo_capacity.hypfun.functions import hyp0F0, hyp1F0, hyp_pFq, psi_constant

__all__ = [
    "EigenArgument",
    "DerivativeFamily",
    "ExponentialFamily",
    "BinomialFamily",
    "HypergeometricFamily",
    "PowerFamily",
    "StackedFamily",
    "confluent_matrix",
    "confluent_det_ratio",
    "log_confluence_scale",
    "group_vandermonde",
    "lambda_vandermonde",
    "smallest_relative_gap",
    "check_gaps",
    "hyp0F0",
    "hyp1F0",
    "hyp_pFq",
    "psi_constant",
]
