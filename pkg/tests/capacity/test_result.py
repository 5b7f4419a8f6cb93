"""Tests for capacity result records."""

import math

import pytest

from mimo_capacity.capacity import CapacityResult, Diagnostics, MonteCarloEstimate, nats_to_bits
from mimo_capacity.core.errors import DomainError


class TestMonteCarloEstimate:
    """Tests for MonteCarloEstimate."""

    def test_deviation(self):
        """deviation() should count standard errors."""
        est = MonteCarloEstimate(1.0, 0.1, 100, 0)
        assert est.deviation(1.25) == pytest.approx(2.5)
        assert est.agrees_with(1.25)
        assert not est.agrees_with(1.35)
        assert est.agrees_with(1.35, slack=0.1)

    def test_zero_stderr(self):
        """A zero standard error should give 0 or inf."""
        est = MonteCarloEstimate(2.0, 0.0, 1, 0)
        assert est.deviation(2.0) == 0.0
        assert est.deviation(2.5) == math.inf

    def test_bits(self):
        """Bit views should divide by ln 2."""
        est = MonteCarloEstimate(math.log(2.0), math.log(2.0) / 10, 10, 1)
        assert est.mean_bits == pytest.approx(1.0)
        assert est.stderr_bits == pytest.approx(0.1)


class TestDiagnostics:
    """Tests for Diagnostics."""

    def test_term_spread(self):
        """The spread should be max over min of the term magnitudes."""
        assert Diagnostics(log_term_magnitudes=(0.0, math.log(8.0))).term_spread == pytest.approx(8.0)
        assert Diagnostics().term_spread == 1.0
        assert Diagnostics(log_term_magnitudes=(0.0, -math.inf)).term_spread == math.inf

    def test_merged(self):
        """merged() should concatenate warnings and keep the first fallback."""
        fallback = MonteCarloEstimate(1.0, 0.1, 10, 0)
        first = Diagnostics(("a",), 2, (0.0, 1.0))
        second = Diagnostics(("b",), 1, (5.0,), fallback)
        combined = first.merged(second)
        assert combined.warnings == ("a", "b")
        assert combined.log_term_magnitudes == (0.0, 1.0)
        assert combined.fallback is fallback

    def test_merged_keeps_highest_precision(self):
        """merged() should report the larger extended precision of the two terms."""
        plain = Diagnostics()
        assert plain.merged(plain).extended_digits is None
        assert plain.merged(Diagnostics(extended_digits=60)).extended_digits == 60
        assert Diagnostics(extended_digits=120).merged(Diagnostics(extended_digits=60)).extended_digits == 120


class TestCapacityResult:
    """Tests for CapacityResult."""

    def test_units(self):
        """value_bits should convert nats."""
        result = CapacityResult(math.log(4.0))
        assert result.value_bits == pytest.approx(2.0)
        assert nats_to_bits(math.log(2.0)) == pytest.approx(1.0)

    def test_rejects_negative_and_nan(self):
        """Negative or non-finite values should be rejected."""
        with pytest.raises(DomainError):
            CapacityResult(-1e-3)
        with pytest.raises(DomainError):
            CapacityResult(math.nan)

    def test_scaled_keeps_diagnostics(self):
        """scaled() should keep the diagnostics."""
        diag = Diagnostics(("warned",))
        half = CapacityResult(2.0, diag).scaled(0.5)
        assert half.value_nats == 1.0
        assert half.warnings == ("warned",)

    def test_repr(self):
        """repr() should show bits and warning count."""
        assert repr(CapacityResult(math.log(2.0))) == "CapacityResult(1.000000 bits, warnings=0)"
