"""Joint density of the nonzero eigenvalues of ``W = H Phi H^H``.

``H`` is ``p x n`` with i.i.d. unit-variance circular complex Gaussian
entries and ``Phi`` is given by a CovarianceSpec. For ordered
``x_1 > ... > x_nmin > 0``, ``nmin = min(n, p)``:

    f(x) = K |V(x)| |G~(x, mu)| prod_i x_i^(p - nmin)

``V`` is the Vandermonde matrix ``v_ij = x_j^(i-1)``; row ``i`` of ``G~`` is
the ``d_i``-th derivative with respect to ``mu`` of
``(e^{-mu x_1}, ..., e^{-mu x_nmin}, mu^(n-nmin-1), ..., mu, 1)`` at
``mu_(e_i)``, which is exactly a confluent matrix over the ``mu`` groups.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from mimo_capacity.core.errors import ConsistencyError, DomainError
from mimo_capacity.covariance.indexing import MultiplicityIndex, index_maps
from mimo_capacity.covariance.spec import CovarianceSpec
from mimo_capacity.hypfun.argument import EigenArgument
from mimo_capacity.hypfun.confluence import confluent_matrix, group_vandermonde
from mimo_capacity.hypfun.families import ExponentialFamily, FloatArray, PowerFamily, StackedFamily
from mimo_capacity.specfun.determinant import log_hadamard_bound, signed_log_det
from mimo_capacity.specfun.gamma import log_multi_factorial
from mimo_capacity.specfun.signed import SignedLogValue

logger = logging.getLogger(__name__)

# Negative pdf values smaller than this fraction of the Hadamard bound are rounding.
_SIGN_SLACK = 1e-10


@dataclass(frozen=True, slots=True)
class EigenPdf:
    """Joint eigenvalue density for one ``(Phi, p)`` pair.

    Attributes:
        spec: Spectrum of Phi (dimension n)
        p: Number of rows of H
        constant: Normalization constant K

    Use ``EigenPdf.build`` to compute ``constant``.
    """

    spec: CovarianceSpec
    p: int
    constant: SignedLogValue

    @staticmethod
    def build(spec: CovarianceSpec, p: int) -> EigenPdf:
        """Compute K for ``spec`` and ``p``.

        Example:
            >>> from mimo_capacity.covariance import CovarianceSpec
            >>> EigenPdf.build(CovarianceSpec.scaled_identity(1.0, 2), 1).constant.sign
            -1
        """
        if spec.is_empty():
            raise DomainError("the density needs a nonempty covariance")
        if int(p) != p or p < 1:
            raise DomainError(f"p must be a positive integer, got {p}")
        return EigenPdf(spec, int(p), normalization_constant(spec, int(p)))

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def n_min(self) -> int:
        return min(self.n, self.p)

    @property
    def index(self) -> MultiplicityIndex:
        return index_maps(self.spec)

    def mu_argument(self) -> EigenArgument:
        return EigenArgument(self.spec.mu_groups)


def normalization_constant(spec: CovarianceSpec, p: int) -> SignedLogValue:
    """``K = (-1)^{p(n-nmin)} / Gamma_(nmin)(p) * prod mu_i^{m_i p}
    / (prod Gamma_(m_i)(m_i) * prod_{i<j} (mu_i - mu_j)^{m_i m_j})``."""
    n = spec.n
    n_min = min(n, p)
    mu_groups = spec.mu_groups
    log_mag = -log_multi_factorial(n_min, p)
    log_mag += math.fsum(m * p * math.log(mu) for mu, m in mu_groups)
    log_mag -= math.fsum(log_multi_factorial(m, m) for _, m in mu_groups)
    sign = -1 if (p * (n - n_min)) % 2 else 1
    return SignedLogValue.from_log(log_mag, sign) / group_vandermonde(mu_groups)


def g_tilde(pdf: EigenPdf, x: Sequence[float]) -> tuple[FloatArray, FloatArray]:
    """Signed-log ``G~(x, mu)`` (``n x n``)."""
    n, n_min = pdf.n, pdf.n_min
    xs = np.asarray(x, dtype=np.float64)
    family = StackedFamily(
        [ExponentialFamily(-xs), PowerFamily([n - j for j in range(n_min + 1, n + 1)])]
    )
    signs, logs = confluent_matrix(family, pdf.mu_argument())
    return signs.T.copy(), logs.T.copy()


def vandermonde(x: Sequence[float]) -> SignedLogValue:
    """``det[x_j^(i-1)] = prod_{i<j} (x_j - x_i)``."""
    return group_vandermonde([(float(v), 1) for v in reversed(list(x))])


def _check_ordered(x: Sequence[float], n_min: int) -> None:
    if len(x) != n_min:
        raise DomainError(f"expected {n_min} eigenvalues, got {len(x)}")
    if any(not v > 0 for v in x):
        raise DomainError(f"eigenvalues must be positive, got {list(x)}")
    if any(a <= b for a, b in zip(x, x[1:], strict=False)):
        raise DomainError(f"eigenvalues must be strictly decreasing, got {list(x)}")


def _evaluate(pdf: EigenPdf, x: Sequence[float]) -> SignedLogValue:
    signs, logs = g_tilde(pdf, x)
    det = signed_log_det(signs, logs)
    weight = SignedLogValue.from_log((pdf.p - pdf.n_min) * math.fsum(math.log(v) for v in x))
    value = pdf.constant * vandermonde(x) * det * weight
    if value.sign >= 0:
        return value
    # Compare against the largest value the determinant could take.
    bound = (
        pdf.constant.logmag
        + vandermonde(x).logmag
        + log_hadamard_bound(logs)
        + weight.logmag
    )
    relative = math.exp(value.logmag - bound)
    if relative > _SIGN_SLACK:
        raise ConsistencyError(
            "joint eigenvalue density came out negative",
            {"x": list(x), "value": value.to_float(), "relative_to_bound": relative},
        )
    logger.debug("clamped a rounding-level negative density at x=%s", list(x))
    return SignedLogValue.zero()


def log_joint_pdf(pdf: EigenPdf, x: Sequence[float]) -> SignedLogValue:
    """The density at ordered ``x`` as a SignedLogValue (never negative)."""
    _check_ordered(x, pdf.n_min)
    return _evaluate(pdf, x)


def joint_pdf(pdf: EigenPdf, x: Sequence[float]) -> float:
    """Density of the ordered nonzero eigenvalues at ``x``.

    Args:
        pdf: Density parameters
        x: ``nmin`` strictly decreasing positive values

    Raises:
        DomainError: ``x`` unordered, nonpositive or of the wrong length
        ConsistencyError: The determinant product is negative beyond rounding

    Example:
        >>> import math
        >>> from mimo_capacity.covariance import CovarianceSpec
        >>> pdf = EigenPdf.build(CovarianceSpec.scaled_identity(1.0, 2), 2)
        >>> math.isclose(joint_pdf(pdf, [2.0, 0.5]), 1.5**2 * math.exp(-2.5))
        True
    """
    return log_joint_pdf(pdf, x).to_float()


def joint_pdf_unchecked(pdf: EigenPdf, x: Sequence[float]) -> float:
    """Density without the ordering check; ties give 0. Used by quadrature."""
    return _evaluate(pdf, x).to_float()


def distinct_joint_pdf(spec: CovarianceSpec, p: int, x: Sequence[float]) -> float:
    """Density for all-distinct Phi eigenvalues and ``p >= n``.

    ``1/Gamma_(n)(p) * prod mu_i^p / prod_{i<j}(mu_i - mu_j) * |V(x)| |e^{-mu_i x_j}|
    * prod x_j^(p-n)``. Evaluated independently of the confluent machinery.
    """
    n = spec.n
    if any(m != 1 for m in spec.multiplicities):
        raise DomainError("distinct_joint_pdf needs all multiplicities equal to 1")
    if p < n:
        raise DomainError(f"distinct_joint_pdf needs p >= n, got p={p}, n={n}")
    _check_ordered(x, n)
    mus = np.asarray(spec.mus)
    xs = np.asarray(x, dtype=np.float64)
    det = signed_log_det(np.ones((n, n)), -np.outer(mus, xs))
    sign_v, log_v = np.linalg.slogdet(np.vander(xs, increasing=True).T)
    diffs = mus[:, None] - mus[None, :]
    log_mu_v = float(np.sum(np.log(diffs[np.triu_indices(n, 1)])))
    log_value = (
        -log_multi_factorial(n, p)
        + p * float(np.sum(np.log(mus)))
        - log_mu_v
        + float(log_v)
        + det.logmag
        + (p - n) * float(np.sum(np.log(xs)))
    )
    return float(sign_v) * det.sign * math.exp(log_value)


__all__ = [
    "EigenPdf",
    "normalization_constant",
    "g_tilde",
    "vandermonde",
    "joint_pdf",
    "log_joint_pdf",
    "joint_pdf_unchecked",
    "distinct_joint_pdf",
]
