"""Monte Carlo eigenvalues of ``H Phi H^H``.

Samples are produced in fixed-size shards. Shard ``s`` of seed ``seed`` is
drawn from a Philox generator keyed by ``(seed, s)``, so any shard can be
regenerated on its own and the concatenation does not depend on how many
workers produced it.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterator, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Protocol

import numpy as np
from numpy.typing import NDArray

from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.covariance.spec import CovarianceSpec

logger = logging.getLogger(__name__)

SHARD_SIZE = 4096

ComplexArray = NDArray[np.complex128]
FloatArray = NDArray[np.float64]


def shard_generator(seed: int, shard: int) -> np.random.Generator:
    """Independent Philox stream for one shard."""
    if not 0 <= seed < 2**64:
        raise DomainError(f"seed must lie in [0, 2**64), got {seed}")
    return np.random.Generator(np.random.Philox(key=(shard << 64) | seed))


def complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> ComplexArray:
    """Circular complex Gaussian entries with unit total variance."""
    real = rng.standard_normal(shape)
    imag = rng.standard_normal(shape)
    return (real + 1j * imag) / math.sqrt(2.0)


def shard_sizes(count: int) -> list[int]:
    if count < 1:
        raise DomainError(f"sample count must be >= 1, got {count}")
    full, rest = divmod(count, SHARD_SIZE)
    return [SHARD_SIZE] * full + ([rest] if rest else [])


class ShardWork(Protocol):
    """One shard of Monte Carlo work: ``(rng, size) -> per-sample array``."""

    def __call__(self, rng: np.random.Generator, size: int) -> FloatArray: ...


def map_shards(
    work: ShardWork, count: int, seed: int, config: NumericsConfig = DEFAULT_NUMERICS
) -> list[FloatArray]:
    """Run ``work(rng, size)`` over every shard, in shard order."""
    sizes = shard_sizes(count)
    jobs = list(enumerate(sizes))
    if config.workers <= 1 or len(jobs) == 1:
        return [work(shard_generator(seed, s), size) for s, size in jobs]
    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        return list(pool.map(lambda job: work(shard_generator(seed, job[0]), job[1]), jobs))


class _EigenvalueShard:
    def __init__(self, spec: CovarianceSpec, p: int) -> None:
        self.scale = np.sqrt(np.asarray(spec.eigenvalues, dtype=np.float64))
        self.n = spec.n
        self.p = p

    def __call__(self, rng: np.random.Generator, size: int) -> FloatArray:
        h = complex_gaussian(rng, (size, self.p, self.n)) * self.scale[None, None, :]
        # Nonzero eigenvalues of H Phi H^H equal those of the smaller Gram matrix.
        if self.p <= self.n:
            gram = h @ np.conj(np.swapaxes(h, 1, 2))
        else:
            gram = np.conj(np.swapaxes(h, 1, 2)) @ h
        eigs = np.linalg.eigvalsh(gram)
        return np.clip(eigs[:, ::-1], 0.0, None)


def iter_eigenvalue_shards(
    spec: CovarianceSpec,
    p: int,
    count: int,
    seed: int,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> Iterator[FloatArray]:
    """Yield ``(shard_size, nmin)`` arrays of decreasing eigenvalues."""
    if spec.is_empty():
        raise DomainError("sampling needs a nonempty covariance")
    if int(p) != p or p < 1:
        raise DomainError(f"p must be a positive integer, got {p}")
    yield from map_shards(_EigenvalueShard(spec, int(p)), count, seed, config)


def sample_eigenvalues(
    spec: CovarianceSpec,
    p: int,
    count: int,
    seed: int,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> FloatArray:
    """Draw ``count`` ordered eigenvalue tuples of ``H Phi H^H``.

    Args:
        spec: Spectrum of Phi
        p: Rows of H
        count: Number of draws
        seed: Generator key; equal seeds give identical output
        config: ``workers`` spreads shards over threads

    Returns:
        Array of shape ``(count, min(n, p))``, each row decreasing

    Example:
        >>> from mimo_capacity.covariance import CovarianceSpec
        >>> sample_eigenvalues(CovarianceSpec.scaled_identity(1.0, 2), 3, 5, seed=1).shape
        (5, 2)
    """
    return np.concatenate(list(iter_eigenvalue_shards(spec, p, count, seed, config)), axis=0)


@dataclass(frozen=True, slots=True)
class HistogramBin:
    """One histogram bin with its density estimate.

    Attributes:
        left: Left edge
        right: Right edge
        density: ``count / (N * width)``
        stderr: Binomial standard error of ``density``
    """

    left: float
    right: float
    density: float
    stderr: float

    @property
    def probability(self) -> float:
        return self.density * (self.right - self.left)


def eigenvalue_histogram(
    values: Sequence[float] | FloatArray, bins: int = 40, value_range: tuple[float, float] | None = None
) -> list[HistogramBin]:
    """Density histogram of samples with binomial standard errors."""
    data = np.asarray(values, dtype=np.float64).reshape(-1)
    if data.size == 0:
        raise DomainError("histogram needs at least one sample")
    counts, edges = np.histogram(data, bins=bins, range=value_range)
    total = data.size
    out = []
    for count, left, right in zip(counts, edges[:-1], edges[1:], strict=True):
        width = float(right - left)
        prob = count / total
        out.append(
            HistogramBin(
                float(left),
                float(right),
                float(prob / width),
                float(math.sqrt(prob * (1.0 - prob) / total) / width),
            )
        )
    return out


__all__ = [
    "SHARD_SIZE",
    "shard_generator",
    "complex_gaussian",
    "shard_sizes",
    "map_shards",
    "ShardWork",
    "iter_eigenvalue_shards",
    "sample_eigenvalues",
    "HistogramBin",
    "eigenvalue_histogram",
]
