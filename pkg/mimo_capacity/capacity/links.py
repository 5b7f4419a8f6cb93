"""Single-user links with correlation on one side.

Two mappings onto ``C_SU(spec, n, p)``:

- transmit-side correlation ``Psi_T`` with transmit covariance ``Q``
  (diagonal in the eigenbasis of ``Psi_T``): ``Phi = Psi_T Q / sigma2``,
  ``n = n_T``, ``p = n_R``;
- receive-side correlation ``Psi_R`` with equal power ``P`` over ``n_T``
  antennas: ``Phi = P / (n_T sigma2) Psi_R``, ``n = n_R``, ``p = n_T``.

Directions with zero power or zero correlation carry no signal and are
dropped from ``Phi``.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

from mimo_capacity.capacity.closed_form import capacity_su, jensen_upper_bound, relay_upper_bound
from mimo_capacity.capacity.result import CapacityResult
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.covariance.spec import CovarianceSpec, canonicalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class LinkCase:
    """A link reduced to the arguments of ``capacity_su``.

    Attributes:
        spec: Spectrum of Phi after dropping zero directions
        p: Rows of the equivalent channel
        label: Short description for logs and CSV comments
    """

    spec: CovarianceSpec
    p: int
    label: str

    @property
    def n(self) -> int:
        return self.spec.n

    def capacity(self, config: NumericsConfig = DEFAULT_NUMERICS) -> CapacityResult:
        return capacity_su(self.spec, self.p, config)

    def relay_bound(self, config: NumericsConfig = DEFAULT_NUMERICS) -> CapacityResult:
        return relay_upper_bound(self.spec, self.p, config)

    def jensen_bound(self) -> CapacityResult:
        return jensen_upper_bound(self.spec, self.p)


def _nonzero(values: Sequence[float], what: str) -> list[float]:
    bad = [v for v in values if not (v >= 0 and math.isfinite(v))]
    if bad:
        raise DomainError(f"{what} must be nonnegative and finite, got {bad[0]}")
    kept = [float(v) for v in values if v > 0]
    if len(kept) < len(values):
        logger.debug("dropped %d zero %s entries", len(values) - len(kept), what)
    if not kept:
        raise DomainError(f"every {what} entry is zero")
    return kept


def transmit_side(
    correlation: Sequence[float],
    powers: Sequence[float],
    nr: int,
    sigma2: float = 1.0,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> LinkCase:
    """Transmit-correlated MIMO-(n_T, n_R) with per-antenna powers.

    Args:
        correlation: Eigenvalues of Psi_T (length n_T)
        powers: Eigenvalues of Q in the same basis (length n_T)
        nr: Receive antennas
        sigma2: Noise variance

    Example:
        >>> transmit_side([1.0] * 6, [2.0, 2.0, 2.0, 0.0, 0.0, 0.0], 3).spec.groups
        ((2.0, 3),)
    """
    if len(correlation) != len(powers):
        raise DomainError(f"{len(correlation)} correlation eigenvalues but {len(powers)} powers")
    if int(nr) != nr or nr < 1:
        raise DomainError(f"nr must be a positive integer, got {nr}")
    if not sigma2 > 0:
        raise DomainError(f"sigma2 must be positive, got {sigma2}")
    phi = _nonzero([c * q / sigma2 for c, q in zip(correlation, powers, strict=True)], "transmit eigenvalue")
    spec = canonicalize(phi, config.merge_tolerance)
    return LinkCase(spec, int(nr), f"tx-correlated MIMO-({len(powers)},{nr})")


def receive_side(
    correlation: Sequence[float],
    nt: int,
    power: float,
    sigma2: float = 1.0,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> LinkCase:
    """Receive-correlated MIMO-(n_T, n_R) with total power ``power`` split evenly.

    Args:
        correlation: Eigenvalues of Psi_R (length n_R)
        nt: Transmit antennas
        power: Total transmit power P
        sigma2: Noise variance
    """
    if int(nt) != nt or nt < 1:
        raise DomainError(f"nt must be a positive integer, got {nt}")
    if not (power > 0 and sigma2 > 0):
        raise DomainError(f"power and sigma2 must be positive, got {power}, {sigma2}")
    scale = power / (nt * sigma2)
    phi = _nonzero([scale * c for c in correlation], "receive correlation")
    spec = canonicalize(phi, config.merge_tolerance)
    return LinkCase(spec, int(nt), f"rx-correlated MIMO-({nt},{len(correlation)})")


__all__ = ["LinkCase", "transmit_side", "receive_side"]
