"""Tests for signed-log determinants."""

import math

import numpy as np
import pytest

from mimo_capacity.core.errors import DomainError
from mimo_capacity.specfun import (
    conditioned_log_det,
    log_hadamard_bound,
    signed_log_det,
    signed_log_det_dense,
    split_signed_log,
)


class TestSignedLogDet:
    """Tests for signed_log_det()."""

    def test_matches_numpy(self):
        """Dense determinants should agree with numpy."""
        rng = np.random.default_rng(7)
        matrix = rng.standard_normal((5, 5))
        expected = np.linalg.det(matrix)
        assert signed_log_det_dense(matrix).to_float() == pytest.approx(expected, rel=1e-12)

    def test_entries_beyond_double_range(self):
        """Log-domain entries far outside double range should factor."""
        signs = np.array([[1.0, -1.0], [1.0, 1.0]])
        logs = np.array([[1000.0, 0.0], [-1000.0, 1000.0]])
        det = signed_log_det(signs, logs)
        assert det.sign == 1
        assert det.logmag == pytest.approx(2000.0)

    def test_graded_rows(self):
        """Rows of wildly different scale should keep full relative accuracy."""
        base = np.array([[2.0, 1.0], [1.0, 3.0]])
        signs, logs = split_signed_log(base)
        logs = logs + np.array([[300.0], [-300.0]])
        assert signed_log_det(signs, logs).logmag == pytest.approx(math.log(5.0), rel=1e-13)

    def test_zero_row(self):
        """A zero row should give a zero determinant."""
        assert signed_log_det_dense([[0.0, 0.0], [1.0, 2.0]]).is_zero()

    def test_singular(self):
        """An exactly singular matrix should give zero or a tiny value."""
        assert abs(signed_log_det_dense([[1.0, 2.0], [2.0, 4.0]]).to_float()) < 1e-14

    def test_empty_matrix(self):
        """The 0x0 determinant should be 1."""
        assert signed_log_det(np.zeros((0, 0)), np.zeros((0, 0))).to_float() == 1.0

    def test_shape_mismatch(self):
        """Mismatched or non-square input should be a domain error."""
        with pytest.raises(DomainError):
            signed_log_det(np.ones((2, 3)), np.zeros((2, 3)))
        with pytest.raises(DomainError):
            signed_log_det(np.ones((2, 2)), np.zeros((3, 3)))

    def test_nan_logs_rejected(self):
        """nan log-magnitudes should be rejected."""
        with pytest.raises(DomainError):
            signed_log_det(np.ones((1, 1)), np.full((1, 1), np.nan))


class TestHadamardBound:
    """Tests for log_hadamard_bound()."""

    def test_column_norms(self):
        """The bound should be the product of column norms."""
        _, logs = split_signed_log([[3.0, 1.0], [4.0, 1.0]])
        assert log_hadamard_bound(logs) == pytest.approx(math.log(5.0 * math.sqrt(2.0)))

    def test_bounds_determinant(self):
        """|det| should not exceed the bound."""
        matrix = np.random.default_rng(3).standard_normal((4, 4))
        signs, logs = split_signed_log(matrix)
        assert signed_log_det(signs, logs).logmag <= log_hadamard_bound(logs) + 1e-12


class TestConditionedLogDet:
    """Tests for conditioned_log_det()."""

    def test_orthogonal_has_no_deficit(self):
        """A permutation matrix should lose nothing."""
        det, deficit = conditioned_log_det(*split_signed_log([[0.0, 1.0], [1.0, 0.0]]))
        assert det.to_float() == pytest.approx(-1.0)
        assert deficit == pytest.approx(0.0, abs=1e-12)

    def test_nearly_parallel_rows(self):
        """Rows 1e-9 apart should report about nine lost digits."""
        det, deficit = conditioned_log_det(*split_signed_log([[1.0, 1.0], [1.0, 1.0 + 1e-9]]))
        assert det.to_float() == pytest.approx(1e-9, rel=1e-6)
        assert deficit == pytest.approx(math.log(2e9), rel=1e-3)

    def test_scaling_is_not_a_deficit(self):
        """Graded rows and columns should not count as ill-conditioning."""
        signs, logs = split_signed_log(np.diag([1.0, 2.0, 3.0]))
        logs = logs + np.array([[200.0], [0.0], [-200.0]]) + np.array([[-50.0, 0.0, 50.0]])
        _, deficit = conditioned_log_det(signs, logs)
        assert deficit == pytest.approx(0.0, abs=1e-12)

    def test_singular_is_infinite(self):
        """A zero column should give a zero determinant and an infinite deficit."""
        det, deficit = conditioned_log_det(*split_signed_log([[1.0, 0.0], [2.0, 0.0]]))
        assert det.is_zero()
        assert math.isinf(deficit)

    def test_agrees_with_signed_log_det(self):
        """The determinant should be the one signed_log_det returns."""
        matrix = np.random.default_rng(5).standard_normal((4, 4))
        signs, logs = split_signed_log(matrix)
        assert conditioned_log_det(signs, logs)[0] == signed_log_det(signs, logs)
