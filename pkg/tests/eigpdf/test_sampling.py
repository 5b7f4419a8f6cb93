"""Tests for the sharded eigenvalue sampler."""

import math

import numpy as np
import pytest

from mimo_capacity.core.config import NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.covariance import CovarianceSpec, from_groups
from mimo_capacity.eigpdf import (
    SHARD_SIZE,
    HistogramBin,
    complex_gaussian,
    eigenvalue_histogram,
    sample_eigenvalues,
    shard_generator,
)
from mimo_capacity.eigpdf.sampling import shard_sizes


class TestShards:
    """Tests for shard bookkeeping."""

    def test_shard_sizes(self):
        """Counts should split into full shards and a remainder."""
        assert shard_sizes(SHARD_SIZE * 2 + 5) == [SHARD_SIZE, SHARD_SIZE, 5]
        assert shard_sizes(3) == [3]
        with pytest.raises(DomainError):
            shard_sizes(0)

    def test_generators_are_independent(self):
        """Different shards of one seed should give different streams."""
        first = shard_generator(5, 0).standard_normal(4)
        second = shard_generator(5, 1).standard_normal(4)
        assert not np.allclose(first, second)
        np.testing.assert_array_equal(first, shard_generator(5, 0).standard_normal(4))

    def test_seed_range(self):
        """Seeds outside [0, 2**64) should be rejected."""
        with pytest.raises(DomainError):
            shard_generator(-1, 0)
        with pytest.raises(DomainError):
            shard_generator(2**64, 0)

    def test_complex_gaussian_power(self):
        """Entries should have unit mean power."""
        z = complex_gaussian(shard_generator(1, 0), (50_000,))
        assert np.mean(np.abs(z) ** 2) == pytest.approx(1.0, abs=0.03)


class TestSampleEigenvalues:
    """Tests for sample_eigenvalues()."""

    def test_shape_and_order(self):
        """Rows should hold nmin decreasing nonnegative values."""
        draws = sample_eigenvalues(from_groups([(2.0, 1), (1.0, 2)]), 2, 100, seed=3)
        assert draws.shape == (100, 2)
        assert np.all(draws[:, 0] >= draws[:, 1])
        assert np.all(draws >= 0)

    def test_deterministic(self):
        """Equal seeds should give identical output."""
        spec = CovarianceSpec.scaled_identity(1.0, 2)
        np.testing.assert_array_equal(
            sample_eigenvalues(spec, 3, 50, seed=9), sample_eigenvalues(spec, 3, 50, seed=9)
        )
        assert not np.array_equal(
            sample_eigenvalues(spec, 3, 50, seed=9), sample_eigenvalues(spec, 3, 50, seed=10)
        )

    def test_worker_count_does_not_matter(self):
        """Threaded sampling should reproduce the serial stream."""
        spec = from_groups([(1.5, 2), (0.5, 1)])
        count = SHARD_SIZE * 2 + 17
        serial = sample_eigenvalues(spec, 2, count, seed=4)
        threaded = sample_eigenvalues(spec, 2, count, seed=4, config=NumericsConfig(workers=3))
        np.testing.assert_array_equal(serial, threaded)

    def test_mean_trace(self):
        """E[tr H Phi H^H] should be p tr(Phi)."""
        spec = from_groups([(2.0, 1), (0.5, 2)])
        draws = sample_eigenvalues(spec, 3, 20_000, seed=11)
        assert draws.sum(axis=1).mean() == pytest.approx(3 * spec.trace, rel=0.02)

    def test_rejects_bad_input(self):
        """Empty spec and nonpositive p should be rejected."""
        with pytest.raises(DomainError):
            sample_eigenvalues(CovarianceSpec.empty(), 2, 10, seed=0)
        with pytest.raises(DomainError):
            sample_eigenvalues(CovarianceSpec.scaled_identity(1.0, 2), 0, 10, seed=0)


class TestHistogram:
    """Tests for eigenvalue_histogram()."""

    def test_density_integrates_to_one(self):
        """Bin probabilities should sum to one over the data range."""
        data = np.random.default_rng(0).exponential(size=1000)
        bins = eigenvalue_histogram(data, bins=20)
        assert len(bins) == 20
        assert math.fsum(b.probability for b in bins) == pytest.approx(1.0)

    def test_stderr(self):
        """The standard error should follow the binomial formula."""
        (only,) = eigenvalue_histogram([0.5, 1.5, 1.0, 1.2], bins=1, value_range=(0.0, 2.0))
        assert only == HistogramBin(0.0, 2.0, 0.5, 0.0)

    def test_empty_rejected(self):
        """An empty sample should be rejected."""
        with pytest.raises(DomainError):
            eigenvalue_histogram([])
