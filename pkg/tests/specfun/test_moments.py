"""Tests for the exponential moment integrals."""

import logging
import math

import pytest

from mimo_capacity.core.config import NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.specfun import (
    log_log_moment,
    log_moment_integral,
    log_moment_quadrature,
    log_power_moment,
    power_moment_integral,
)


class TestPowerMoment:
    """Tests for m! / mu^(m+1)."""

    def test_values(self):
        """Small cases should be exact."""
        assert power_moment_integral(3, 0.5) == 96.0
        assert power_moment_integral(0, 2.0) == 0.5

    def test_log_form_for_huge_values(self):
        """The log form should stay finite past double range."""
        assert log_power_moment(300, 1e-3) == pytest.approx(
            math.lgamma(301) + 301 * math.log(1e3)
        )

    def test_domain(self):
        """Negative orders and nonpositive rates should be rejected."""
        with pytest.raises(DomainError):
            power_moment_integral(-1, 1.0)
        with pytest.raises(DomainError):
            power_moment_integral(1, 0.0)


class TestLogMoment:
    """Tests for the ln(1+x) moments."""

    def test_reference_value(self):
        """int e^-x ln(1+x) dx should equal e E1(1)."""
        assert log_moment_integral(0, 1.0) == pytest.approx(0.596347362, rel=1e-8)

    @pytest.mark.parametrize(("m", "mu"), [(0, 0.1), (1, 0.5), (3, 2.0), (5, 0.05), (8, 10.0)])
    def test_matches_quadrature(self, m, mu):
        """The incomplete-gamma sum should match adaptive quadrature."""
        assert log_moment_integral(m, mu) == pytest.approx(log_moment_quadrature(m, mu), rel=1e-9)

    def test_log_form(self):
        """log_log_moment() should be the log of the integral."""
        assert log_log_moment(2, 0.7) == pytest.approx(math.log(log_moment_integral(2, 0.7)))

    def test_cross_check_logs(self, caplog):
        """With cross_check on, agreement should be logged at DEBUG."""
        config = NumericsConfig(cross_check=True)
        with caplog.at_level(logging.DEBUG, logger="mimo_capacity.specfun.moments"):
            log_log_moment(2, 1.3, config)
        assert any("agrees with quadrature" in r.getMessage() for r in caplog.records)
