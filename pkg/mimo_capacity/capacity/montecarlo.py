"""Monte Carlo oracles for the closed forms.

Every estimator draws through ``eigpdf.sampling`` shards, so a given
``(samples, seed)`` pair gives the same number on any machine and for any
worker count.
"""

from __future__ import annotations

import logging
import math

import numpy as np

from mimo_capacity.capacity.result import MonteCarloEstimate
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.core.logs import timed
from mimo_capacity.covariance.scenario import NetworkScenario
from mimo_capacity.covariance.spec import CovarianceSpec
from mimo_capacity.eigpdf.sampling import (
    FloatArray,
    complex_gaussian,
    iter_eigenvalue_shards,
    map_shards,
)

logger = logging.getLogger(__name__)


def _estimate(per_sample: list[FloatArray], seed: int) -> MonteCarloEstimate:
    values = np.concatenate(per_sample)
    n = int(values.size)
    mean = math.fsum(values.tolist()) / n
    stderr = float(np.std(values, ddof=1) / math.sqrt(n)) if n > 1 else math.inf
    return MonteCarloEstimate(mean, stderr, n, seed)


def monte_carlo_su(
    spec: CovarianceSpec,
    p: int,
    samples: int,
    seed: int,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> MonteCarloEstimate:
    """Estimate ``E log det(I_p + H Phi H^H)`` in nats.

    Example:
        >>> from mimo_capacity.covariance import CovarianceSpec
        >>> est = monte_carlo_su(CovarianceSpec.scaled_identity(1.0, 1), 1, 20_000, seed=3)
        >>> abs(est.mean - 0.596347) < 5 * est.stderr
        True
    """
    with timed(f"monte carlo C_SU n={spec.n} p={p} samples={samples}", logger):
        per_sample = [
            np.log1p(eigs).sum(axis=1)
            for eigs in iter_eigenvalue_shards(spec, p, samples, seed, config)
        ]
    return _estimate(per_sample, seed)


class _MultiuserShard:
    def __init__(self, scenario: NetworkScenario) -> None:
        scale = [math.sqrt(r) for r, u in zip(scenario.rho, scenario.users, strict=True) for _ in range(u.nt)]
        self.scale = np.asarray(scale)
        self.nr = scenario.nr
        self.desired_nt = scenario.desired.nt
        self.eye = np.eye(scenario.nr)

    def __call__(self, rng: np.random.Generator, size: int) -> FloatArray:
        h = complex_gaussian(rng, (size, self.nr, self.scale.size)) * self.scale[None, None, :]
        h_int = h[:, :, self.desired_nt :]
        total = self.eye + h @ np.conj(np.swapaxes(h, 1, 2))
        _, log_total = np.linalg.slogdet(total)
        if h_int.shape[2] == 0:
            return np.asarray(log_total, dtype=np.float64)
        interference = self.eye + h_int @ np.conj(np.swapaxes(h_int, 1, 2))
        _, log_int = np.linalg.slogdet(interference)
        return np.asarray(log_total - log_int, dtype=np.float64)


def monte_carlo_mu(
    scenario: NetworkScenario,
    samples: int,
    seed: int,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> MonteCarloEstimate:
    """Estimate the multiuser mutual information directly.

    Each draw evaluates ``log det(I + H~ Psi~ H~^H) - log det(I + H Psi H^H)``
    with the interferer columns shared between the two terms.
    """
    with timed(f"monte carlo C_MU nr={scenario.nr} samples={samples}", logger):
        per_sample = map_shards(_MultiuserShard(scenario), samples, seed, config)
    return _estimate(per_sample, seed)


class _GramShard:
    def __init__(self, spec: CovarianceSpec, p: int) -> None:
        self.scale = np.sqrt(np.asarray(spec.eigenvalues))
        self.p = p

    def __call__(self, rng: np.random.Generator, size: int) -> FloatArray:
        h = complex_gaussian(rng, (size, self.p, self.scale.size)) * self.scale[None, None, :]
        total = (h @ np.conj(np.swapaxes(h, 1, 2))).sum(axis=0)
        return np.concatenate([[float(size)], total.real.ravel(), total.imag.ravel()])


def monte_carlo_jensen(
    spec: CovarianceSpec,
    p: int,
    samples: int,
    seed: int,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> MonteCarloEstimate:
    """Estimate the Jensen bound ``1/2 log det(I + E[H Phi H^H])`` in nats.

    The expectation is replaced by the sample mean; the standard error comes
    from the spread of the per-shard plug-in values.
    """
    if spec.is_empty():
        raise DomainError("the Jensen bound needs a nonempty covariance")
    shards = map_shards(_GramShard(spec, int(p)), samples, seed, config)
    eye = np.eye(p)

    def plug_in(counts: float, flat: FloatArray) -> float:
        gram = (flat[: p * p] + 1j * flat[p * p :]).reshape(p, p) / counts
        return 0.5 * float(np.linalg.slogdet(eye + gram)[1])

    pooled = np.sum(shards, axis=0)
    value = plug_in(float(pooled[0]), pooled[1:])
    per_shard = [plug_in(float(s[0]), s[1:]) for s in shards]
    stderr = float(np.std(per_shard, ddof=1) / math.sqrt(len(per_shard))) if len(per_shard) > 1 else math.inf
    return MonteCarloEstimate(value, stderr, samples, seed)


__all__ = ["monte_carlo_su", "monte_carlo_mu", "monte_carlo_jensen"]
