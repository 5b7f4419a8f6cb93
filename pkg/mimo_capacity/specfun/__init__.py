"""Scalar special functions and signed-log arithmetic."""

from mimo_capacity.specfun.determinant import (
    conditioned_log_det,
    log_hadamard_bound,
    signed_log_det,
    signed_log_det_dense,
    split_signed_log,
)
from mimo_capacity.specfun.gamma import (
    falling_factorial,
    log_multi_factorial,
    pochhammer,
    scaled_gamma_ladder,
    scaled_gamma_quadrature,
    scaled_upper_incomplete_gamma,
    upper_incomplete_gamma,
)
from mimo_capacity.specfun.moments import (
    log_log_moment,
    log_moment_integral,
    log_moment_quadrature,
    log_power_moment,
    power_moment_integral,
)
from mimo_capacity.specfun.series import SeriesSum, scalar_pFq
from mimo_capacity.specfun.signed import SignedLogValue

__all__ = [
    "SignedLogValue",
    "split_signed_log",
    "signed_log_det",
    "conditioned_log_det",
    "signed_log_det_dense",
    "log_hadamard_bound",
    "log_multi_factorial",
    "falling_factorial",
    "pochhammer",
    "scaled_gamma_ladder",
    "scaled_gamma_quadrature",
    "scaled_upper_incomplete_gamma",
    "upper_incomplete_gamma",
    "power_moment_integral",
    "log_power_moment",
    "log_moment_integral",
    "log_log_moment",
    "log_moment_quadrature",
    "SeriesSum",
    "scalar_pFq",
]
