"""Tests for the gamma-family functions."""

import logging
import math

import pytest

from mimo_capacity.core.config import NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.specfun import (
    falling_factorial,
    log_multi_factorial,
    pochhammer,
    scaled_gamma_ladder,
    scaled_gamma_quadrature,
    scaled_upper_incomplete_gamma,
    upper_incomplete_gamma,
)


class TestFactorials:
    """Tests for factorial helpers."""

    def test_multi_factorial(self):
        """Gamma_(m)(n) should be the product of (n-i)!."""
        assert log_multi_factorial(3, 3) == pytest.approx(math.log(2.0))
        assert log_multi_factorial(2, 4) == pytest.approx(math.log(6.0 * 2.0))
        assert log_multi_factorial(0, 5) == 0.0

    def test_multi_factorial_domain(self):
        """m > n should be rejected."""
        with pytest.raises(DomainError):
            log_multi_factorial(3, 2)

    def test_falling_and_rising(self):
        """Falling and rising factorials should match their products."""
        assert falling_factorial(5.0, 3) == 60.0
        assert falling_factorial(2.0, 3) == 0.0
        assert falling_factorial(4.0, 0) == 1.0
        assert pochhammer(2.0, 3) == 24.0
        with pytest.raises(DomainError):
            pochhammer(1.0, -1)


class TestUpperIncompleteGamma:
    """Tests for Gamma(a, x) at any real order."""

    def test_reference_values(self):
        """Known values should be reproduced."""
        assert upper_incomplete_gamma(1.0, 2.0) == pytest.approx(0.135335283, rel=1e-8)
        assert upper_incomplete_gamma(0.0, 1.0) == pytest.approx(0.219383934, rel=1e-8)

    def test_negative_integer_order(self):
        """Gamma(-1, 1) should equal e^-1 - E1(1)."""
        assert upper_incomplete_gamma(-1.0, 1.0) == pytest.approx(0.367879441 - 0.219383934, rel=1e-7)

    @pytest.mark.parametrize(("a", "x"), [(-2.5, 3.0), (-0.5, 0.2), (-4.0, 7.0), (1.5, 0.5)])
    def test_matches_quadrature(self, a, x):
        """The recurrence should agree with direct quadrature."""
        assert scaled_upper_incomplete_gamma(a, x) == pytest.approx(
            scaled_gamma_quadrature(a, x), rel=1e-9
        )

    def test_large_argument_stays_finite(self):
        """Scaled values at large x should not underflow."""
        value = scaled_upper_incomplete_gamma(0.0, 200.0)
        assert value == pytest.approx(scaled_gamma_quadrature(0.0, 200.0), rel=1e-10)
        assert value == pytest.approx(1 / 200.0, rel=1e-2)

    def test_nonpositive_x_rejected(self):
        """x <= 0 should be a domain error."""
        with pytest.raises(DomainError):
            upper_incomplete_gamma(-1.0, 0.0)
        with pytest.raises(DomainError):
            scaled_gamma_quadrature(1.0, -1.0)


class TestScaledGammaLadder:
    """Tests for the downward recurrence."""

    def test_ladder_length(self):
        """The ladder should hold depth + 1 entries."""
        assert len(scaled_gamma_ladder(4, 2.0)) == 5

    def test_cancellation_falls_back(self, caplog):
        """Large x should hand deep orders to quadrature and log it."""
        config = NumericsConfig(cancellation_ratio=10.0)
        with caplog.at_level(logging.DEBUG, logger="mimo_capacity.specfun.gamma"):
            ladder = scaled_gamma_ladder(3, 20.0, config)
        for j, value in enumerate(ladder):
            assert value == pytest.approx(scaled_gamma_quadrature(-j, 20.0), rel=1e-9)
        assert any("quadrature" in r.getMessage() for r in caplog.records)

    def test_negative_depth_rejected(self):
        """A negative depth should be rejected."""
        with pytest.raises(DomainError):
            scaled_gamma_ladder(-1, 1.0)
