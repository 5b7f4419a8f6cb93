"""Single-user ergodic mutual information in closed form.

For ``W = H Phi H^H`` with ``H`` of shape ``p x n``:

    C_SU = E log det(I_p + W) = K * sum_{k=1}^{nmin} det R^(k)

``K`` is the joint-density constant. Row ``i`` of ``R^(k)`` belongs to the
inverse-eigenvalue group ``e_i`` with derivative order ``d_i``; its columns
are

- ``j <= nmin, j != k``: ``(-1)^{d_i} int x^{q} e^{-mu x} dx``
- ``j = k``: ``(-1)^{d_i} int x^{q} e^{-mu x} ln(1 + x) dx``
- ``j > nmin``: ``[n - j]_{d_i} mu^{n - j - d_i}``

with ``q = p - nmin + j - 1 + d_i`` and ``mu = mu_(e_i)``.

Widely spread eigenvalues with high multiplicity make ``R^(k)`` so
ill-conditioned that a double-precision LU keeps no correct digit. The
Hadamard deficit of each determinant detects that, and the whole sum is
then rebuilt with mpmath at rising precision.
"""

from __future__ import annotations

import functools
import logging
import math
from dataclasses import replace

import mpmath as mp
import numpy as np

from mimo_capacity.capacity.montecarlo import monte_carlo_su
from mimo_capacity.capacity.result import CapacityResult, Diagnostics
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import ConsistencyError, ConvergenceError, DomainError
from mimo_capacity.core.logs import timed
from mimo_capacity.covariance.indexing import index_maps
from mimo_capacity.covariance.spec import CovarianceSpec
from mimo_capacity.eigpdf.density import normalization_constant
from mimo_capacity.hypfun.families import FloatArray
from mimo_capacity.specfun import extended
from mimo_capacity.specfun.determinant import conditioned_log_det
from mimo_capacity.specfun.gamma import falling_factorial
from mimo_capacity.specfun.moments import log_log_moment, log_power_moment
from mimo_capacity.specfun.signed import SignedLogValue

logger = logging.getLogger(__name__)

# Relative agreement of two extended sums that ends the precision ladder.
_SETTLE = 1e-13


def _check_inputs(spec: CovarianceSpec, p: int) -> int:
    if spec.is_empty():
        raise DomainError("capacity needs a nonempty covariance")
    if int(p) != p or p < 1:
        raise DomainError(f"p must be a positive integer, got {p}")
    return int(p)


def capacity_matrices(
    spec: CovarianceSpec, p: int, config: NumericsConfig = DEFAULT_NUMERICS
) -> tuple[FloatArray, FloatArray, FloatArray, FloatArray]:
    """Signed-log ``R`` with power moments everywhere, plus the log-moment columns.

    Returns:
        ``(signs, logs, log_signs, log_logs)``: the ``n x n`` base matrix and
        the ``n x nmin`` replacement columns; ``R^(k)`` is the base matrix with
        column ``k`` swapped in.
    """
    p = _check_inputs(spec, p)
    n = spec.n
    n_min = min(n, p)
    index = index_maps(spec)
    mus = [spec.mu_groups[e - 1][0] for e in index.e]

    signs = np.zeros((n, n))
    logs = np.full((n, n), -np.inf)
    log_signs = np.zeros((n, n_min))
    log_logs = np.full((n, n_min), -np.inf)
    for i, (d, mu) in enumerate(zip(index.d, mus, strict=True)):
        sign = -1.0 if d % 2 else 1.0
        for j in range(1, n_min + 1):
            order = p - n_min + j - 1 + d
            signs[i, j - 1] = sign
            logs[i, j - 1] = log_power_moment(order, mu)
            log_signs[i, j - 1] = sign
            log_logs[i, j - 1] = log_log_moment(order, mu, config)
        for j in range(n_min + 1, n + 1):
            if d > n - j:
                continue
            signs[i, j - 1] = 1.0
            logs[i, j - 1] = math.log(falling_factorial(n - j, d)) + (n - j - d) * math.log(mu)
    return signs, logs, log_signs, log_logs


def _double_terms(
    spec: CovarianceSpec, p: int, config: NumericsConfig
) -> tuple[list[SignedLogValue], float]:
    signs, logs, log_signs, log_logs = capacity_matrices(spec, p, config)
    constant = normalization_constant(spec, int(p))
    terms = []
    worst = 0.0
    for k in range(log_signs.shape[1]):
        col_signs = signs.copy()
        col_logs = logs.copy()
        col_signs[:, k] = log_signs[:, k]
        col_logs[:, k] = log_logs[:, k]
        det, deficit = conditioned_log_det(col_signs, col_logs)
        logger.debug(
            "k=%d: log|det R^(k)|=%.6g sign=%d deficit=%.3g", k + 1, det.logmag, det.sign, deficit
        )
        terms.append(constant * det)
        worst = max(worst, deficit)
    return terms, worst


def capacity_terms(
    spec: CovarianceSpec, p: int, config: NumericsConfig = DEFAULT_NUMERICS
) -> list[SignedLogValue]:
    """``K det R^(k)`` for ``k = 1 .. nmin`` in double precision."""
    return _double_terms(spec, p, config)[0]


def extended_determinants(
    spec: CovarianceSpec, p: int, digits: int
) -> tuple[list[SignedLogValue], SignedLogValue]:
    """``det R^(k)`` and their sum with every entry rebuilt at ``digits`` decimal digits.

    The sum is taken before leaving mpmath, so cancellation between the
    determinants costs working digits instead of the answer.
    """
    p = _check_inputs(spec, p)
    n = spec.n
    n_min = min(n, p)
    index = index_maps(spec)
    with mp.workdps(digits):
        top = p - 1 + max(index.d)
        ladders = {e: extended.gamma_ladder(top, spec.mu_groups[e - 1][0]) for e in set(index.e)}
        base: list[list[extended.MpReal]] = []
        replacements: list[list[extended.MpReal]] = []
        for e, d in zip(index.e, index.d, strict=True):
            mu = spec.mu_groups[e - 1][0]
            sign = -1 if d % 2 else 1
            orders = [p - n_min + j - 1 + d for j in range(1, n_min + 1)]
            base.append(
                [sign * extended.power_moment(q, mu) for q in orders]
                + [extended.falling_power(n - j, d, mu) for j in range(n_min + 1, n + 1)]
            )
            replacements.append([sign * extended.log_moment(q, mu, ladders[e]) for q in orders])
        dets: list[extended.MpReal] = []
        for k in range(n_min):
            rows = [
                row[:k] + [swap[k]] + row[k + 1 :]
                for row, swap in zip(base, replacements, strict=True)
            ]
            dets.append(extended.determinant(rows))
        total = mp.fsum(dets)
        return [extended.to_signed_log(d) for d in dets], extended.to_signed_log(total)


def _settled(previous: SignedLogValue, current: SignedLogValue) -> bool:
    if previous.is_zero() or current.is_zero():
        return previous.is_zero() and current.is_zero()
    return previous.sign == current.sign and abs(previous.logmag - current.logmag) <= _SETTLE


def _extended_terms(
    spec: CovarianceSpec, p: int, config: NumericsConfig, lost: float
) -> tuple[list[SignedLogValue], SignedLogValue, int]:
    """Raise the working precision until two successive sums agree.

    Raises:
        ConvergenceError: No agreement up to ``config.max_extended_digits``
    """
    constant = normalization_constant(spec, p)
    guess = math.ceil(lost / math.log(10)) if math.isfinite(lost) else config.extended_digits
    digits = min(config.extended_digits + guess, config.max_extended_digits)
    previous: SignedLogValue | None = None
    while True:
        dets, total = extended_determinants(spec, p, digits)
        logger.debug("extended C_SU at %d digits: log|sum|=%.12g", digits, total.logmag)
        if previous is not None and _settled(previous, total):
            return [constant * d for d in dets], constant * total, digits
        if digits >= config.max_extended_digits:
            raise ConvergenceError(
                f"extended-precision determinants did not settle at {digits} digits",
                (constant * total).to_float(),
            )
        previous = total
        digits = min(2 * digits, config.max_extended_digits)


def capacity_su(
    spec: CovarianceSpec, p: int, config: NumericsConfig = DEFAULT_NUMERICS
) -> CapacityResult:
    """Exact ``E log det(I_p + H Phi H^H)``.

    Args:
        spec: Spectrum of Phi, dimension n
        p: Rows of H
        config: ``conditioning_limit`` and ``*_extended_digits`` control the
            mpmath re-evaluation of ill-conditioned determinants;
            ``determinant_spread`` and ``fallback_*`` the Monte Carlo
            fallback; ``consistency_tolerance`` the sign assertion

    Returns:
        The value in nats with its diagnostics

    Raises:
        DomainError: Empty spec or invalid p
        ConsistencyError: The sum is negative beyond rounding and no
            conditioning warning explains it

    Example:
        >>> from mimo_capacity.covariance import CovarianceSpec
        >>> round(capacity_su(CovarianceSpec.scaled_identity(1.0, 1), 1).value_nats, 6)
        0.596347
    """
    return _capacity_su(spec, _check_inputs(spec, p), config)


@functools.lru_cache(maxsize=512)
def _capacity_su(spec: CovarianceSpec, p: int, config: NumericsConfig) -> CapacityResult:
    with timed(f"C_SU n={spec.n} p={p} groups={spec.num_groups}", logger):
        terms, deficit = _double_terms(spec, p, config)
    total = SignedLogValue.sum(terms)
    peak = max(t.logmag for t in terms)
    cancelled = math.inf if total.is_zero() else max(peak - total.logmag, 0.0)

    warnings: list[str] = []
    digits: int | None = None
    lost = deficit + cancelled
    if lost > math.log(config.conditioning_limit):
        logger.info(
            "C_SU n=%d p=%d loses %.0f digits in double precision, recomputing with mpmath",
            spec.n,
            p,
            lost / math.log(10),
        )
        try:
            with timed(f"extended C_SU n={spec.n} p={p}", logger):
                terms, total, digits = _extended_terms(spec, p, config, lost)
        except ConvergenceError as exc:
            warnings.append(str(exc))
        peak = max(t.logmag for t in terms)

    log_mags = tuple(t.logmag for t in terms)
    diag = Diagnostics(n_min=len(terms), log_term_magnitudes=log_mags, extended_digits=digits)
    spread = diag.term_spread
    if spread > config.determinant_spread:
        warnings.append(f"per-k determinant spread {spread:.3g} exceeds {config.determinant_spread:.3g}")
    if digits is None and (
        total.is_zero() or peak - total.logmag > math.log(config.determinant_spread)
    ):
        warnings.append(
            f"sum of {len(terms)} determinants cancels by more than {config.determinant_spread:.3g}"
        )

    if total.sign < 0:
        if total.logmag - peak > math.log(config.consistency_tolerance):
            if not warnings:
                raise ConsistencyError(
                    f"negative mutual information {total.to_float():.6g} for {spec!r}, p={p}",
                    {"terms": [t.to_float() for t in terms], "spec": spec, "p": p},
                )
            warnings.append(f"negative sum {total.to_float():.3g} clamped to 0 after conditioning warnings")
        else:
            logger.debug("clamping rounding-level negative sum %.3g to 0", total.to_float())
        value = 0.0
    else:
        value = total.to_float()
    if not math.isfinite(value):
        warnings.append("sum of determinants overflows double range")

    if warnings:
        for message in warnings:
            logger.warning("%s (spec=%r, p=%d)", message, spec, p)
        fallback = monte_carlo_su(spec, p, config.fallback_samples, config.fallback_seed, config)
        diag = replace(diag, warnings=tuple(warnings), fallback=fallback)
        if not math.isfinite(value):
            value = fallback.mean
    return CapacityResult(value, diag)


def relay_upper_bound(
    spec: CovarianceSpec, p: int, config: NumericsConfig = DEFAULT_NUMERICS
) -> CapacityResult:
    """Two-hop relay network bound ``C_u = C_SU / 2``."""
    return capacity_su(spec, p, config).scaled(0.5)


def jensen_upper_bound(spec: CovarianceSpec, p: int) -> CapacityResult:
    """``1/2 log det(I_p + E[H Phi H^H]) = p/2 ln(1 + tr Phi)``.

    Example:
        >>> from mimo_capacity.covariance import CovarianceSpec
        >>> round(jensen_upper_bound(CovarianceSpec.scaled_identity(1.0, 2), 1).value_nats, 12)
        0.549306144334
    """
    p = _check_inputs(spec, p)
    return CapacityResult(0.5 * p * math.log1p(spec.trace))


__all__ = [
    "capacity_matrices",
    "capacity_terms",
    "extended_determinants",
    "capacity_su",
    "relay_upper_bound",
    "jensen_upper_bound",
]
