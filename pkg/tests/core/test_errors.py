"""Tests for the exception hierarchy."""

import math

import pytest

from mimo_capacity.core.errors import (
    ConsistencyError,
    ConvergenceError,
    DomainError,
    MimoCapacityError,
)


class TestHierarchy:
    """Tests for base classes."""

    def test_domain_error_is_value_error(self):
        """DomainError should be catchable as ValueError."""
        with pytest.raises(ValueError):
            raise DomainError("x must be positive")

    def test_convergence_error_is_arithmetic_error(self):
        """ConvergenceError should be catchable as ArithmeticError."""
        assert issubclass(ConvergenceError, ArithmeticError)

    def test_consistency_error_is_runtime_error(self):
        """ConsistencyError should be catchable as RuntimeError."""
        assert issubclass(ConsistencyError, RuntimeError)

    @pytest.mark.parametrize("cls", [DomainError, ConvergenceError, ConsistencyError])
    def test_common_root(self, cls):
        """Every error should derive from MimoCapacityError."""
        assert issubclass(cls, MimoCapacityError)


class TestPayloads:
    """Tests for attached diagnostics."""

    def test_convergence_error_carries_estimate(self):
        """ConvergenceError should keep the estimate and error bound."""
        exc = ConvergenceError("series stalled", 1.25, 0.5)
        assert exc.estimate == 1.25
        assert exc.abserr == 0.5
        assert "estimate=1.25" in str(exc)

    def test_convergence_error_default_abserr(self):
        """abserr should default to nan."""
        assert math.isnan(ConvergenceError("x", 0.0).abserr)

    def test_consistency_error_copies_diagnostics(self):
        """ConsistencyError should keep its own copy of the diagnostics."""
        source = {"terms": [1.0, -2.0]}
        exc = ConsistencyError("negative", source)
        source["terms"] = []
        assert exc.diagnostics == {"terms": [1.0, -2.0]}

    def test_consistency_error_without_diagnostics(self):
        """diagnostics should default to an empty dict."""
        assert ConsistencyError("negative").diagnostics == {}
