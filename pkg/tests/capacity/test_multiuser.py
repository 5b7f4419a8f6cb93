"""Tests for the multiuser mutual information."""

import pytest

from mimo_capacity.capacity import (
    CapacityResult,
    Diagnostics,
    MonteCarloEstimate,
    capacity_gaussian_approx,
    capacity_mu,
    capacity_su,
    monte_carlo_mu,
)
from mimo_capacity.cli.figures import fig4_scenario, floor_capacity_bits
from mimo_capacity.core.config import NumericsConfig
from mimo_capacity.core.errors import ConsistencyError
from mimo_capacity.covariance import CovarianceSpec, NetworkScenario, UserLink, build_interference_matrices


@pytest.fixture
def small_network():
    return NetworkScenario(2, (UserLink(2, 4.0), UserLink(1, 2.0)))


class TestCapacityMU:
    """Tests for capacity_mu()."""

    def test_without_interferers(self):
        """No interferers should reduce to the single-user value."""
        scenario = NetworkScenario.single_user(3, 2, 6.0)
        expected = capacity_su(CovarianceSpec.scaled_identity(2.0, 3), 2).value_nats
        assert capacity_mu(scenario).value_nats == pytest.approx(expected, rel=1e-12)

    def test_matches_monte_carlo(self, small_network):
        """The closed form should agree with direct sampling."""
        closed = capacity_mu(small_network).value_nats
        estimate = monte_carlo_mu(small_network, 60_000, seed=5)
        assert estimate.deviation(closed) < 4.0

    def test_interference_hurts(self, small_network):
        """Interference should lower the mutual information."""
        alone = capacity_mu(small_network.desired_only()).value_nats
        assert capacity_mu(small_network).value_nats < alone

    def test_gaussian_approximation_is_below(self):
        """Treating interference as noise should not beat the exact value."""
        for sir_db in (-20.0, 0.0, 20.0):
            scenario = fig4_scenario(2).with_sir_db(sir_db)
            assert capacity_gaussian_approx(scenario).value_nats <= capacity_mu(scenario).value_nats + 1e-9

    def test_gaussian_approximation_value(self, small_network):
        """The approximation should be the desired link at the SINR."""
        expected = capacity_su(CovarianceSpec.scaled_identity(4.0 / (2 * 3.0), 2), 2).value_nats
        assert capacity_gaussian_approx(small_network).value_nats == pytest.approx(expected, rel=1e-12)

    @pytest.mark.parametrize("nt1", [1, 2])
    def test_weak_interference_limit(self, nt1):
        """At SIR = +40 dB the value should approach the interference-free MIMO-(6,6)."""
        high = capacity_mu(fig4_scenario(nt1).with_sir_db(40.0)).value_bits
        assert high == pytest.approx(floor_capacity_bits(6, 6), abs=0.05)

    @pytest.mark.parametrize("nt1", [1, 2, 4])
    def test_strong_interference_floor(self, nt1):
        """At SIR = -40 dB the interferer should remove nt1 receive dimensions."""
        low = capacity_mu(fig4_scenario(nt1).with_sir_db(-40.0)).value_bits
        assert low == pytest.approx(floor_capacity_bits(6, 6 - nt1), abs=0.05)

    @pytest.mark.parametrize("nt1", [6, 10])
    def test_full_rank_interference_vanishes(self, nt1):
        """An interferer with at least as many antennas as the receiver leaves nothing at -40 dB."""
        result = capacity_mu(fig4_scenario(nt1).with_sir_db(-40.0))
        assert 0.0 <= result.value_bits < 0.05

    @pytest.mark.parametrize("sir_db", [-30.0, -20.0])
    def test_wide_interferer_matches_sampling(self, sir_db):
        """Ten strong interfering antennas should still agree with direct sampling."""
        scenario = fig4_scenario(10).with_sir_db(sir_db)
        result = capacity_mu(scenario)
        estimate = monte_carlo_mu(scenario, 20_000, seed=9)
        assert abs(result.value_bits - estimate.mean_bits) <= 0.05 + 4.0 * estimate.stderr_bits

    def test_fallback_estimates_the_difference(self):
        """A conditioning warning should attach a Monte Carlo estimate of C_MU, not of a C_SU term."""
        config = NumericsConfig(determinant_spread=1.0000001, fallback_samples=20_000, fallback_seed=3)
        scenario = NetworkScenario(3, (UserLink(2, 10.0), UserLink(2, 5.0)))
        result = capacity_mu(scenario, config)
        assert result.warnings
        fallback = result.diagnostics.fallback
        assert isinstance(fallback, MonteCarloEstimate)
        assert fallback.samples == 20_000
        assert fallback.agrees_with(result.value_nats, sigmas=4.0, slack=1e-3)

    def test_diagnostics_merge_both_terms(self):
        """Warnings from both terms should survive in order."""
        config = NumericsConfig(determinant_spread=1.0000001, fallback_samples=2000)
        scenario = NetworkScenario(3, (UserLink(2, 10.0), UserLink(2, 5.0)))
        psi, psi_tilde = build_interference_matrices(scenario, config)
        expected = capacity_su(psi_tilde, 3, config).warnings + capacity_su(psi, 3, config).warnings
        assert capacity_mu(scenario, config).warnings == expected


class TestConsistencyPolicy:
    """Tests for negative differences."""

    @pytest.fixture
    def fake_terms(self, monkeypatch):
        def install(total, interference):
            results = iter([total, interference])
            monkeypatch.setattr(
                "mimo_capacity.capacity.multiuser.capacity_su", lambda spec, p, config: next(results)
            )
            monkeypatch.setattr(
                "mimo_capacity.capacity.multiuser.monte_carlo_mu",
                lambda scenario, samples, seed, config: MonteCarloEstimate(0.5, 0.01, samples, seed),
            )

        return install

    def test_negative_without_warnings_raises(self, fake_terms, small_network):
        """A clean negative difference should raise ConsistencyError."""
        fake_terms(CapacityResult(1.0), CapacityResult(1.5))
        with pytest.raises(ConsistencyError) as info:
            capacity_mu(small_network)
        assert info.value.diagnostics == {"total": 1.0, "interference": 1.5}

    def test_negative_with_warnings_clamps(self, fake_terms, small_network):
        """A negative difference after warnings should clamp to 0 and add a warning."""
        fake_terms(CapacityResult(1.0, Diagnostics(("ill-conditioned",))), CapacityResult(1.5))
        result = capacity_mu(small_network)
        assert result.value_nats == 0.0
        assert result.warnings[0] == "ill-conditioned"
        assert "clamped" in result.warnings[1]
        assert result.diagnostics.fallback == MonteCarloEstimate(0.5, 0.01, 100_000, 0)

    def test_term_fallback_is_replaced(self, fake_terms, small_network):
        """A single-user fallback on either term should give way to the multiuser one."""
        term_fallback = MonteCarloEstimate(9.0, 0.1, 50, 1)
        fake_terms(CapacityResult(2.0, Diagnostics(("spread",), fallback=term_fallback)), CapacityResult(1.0))
        result = capacity_mu(small_network)
        assert result.value_nats == 1.0
        assert result.warnings == ("spread",)
        assert result.diagnostics.fallback == MonteCarloEstimate(0.5, 0.01, 100_000, 0)

    def test_rounding_negative_clamps_quietly(self, fake_terms, small_network):
        """A rounding-level negative difference should clamp without a warning."""
        fake_terms(CapacityResult(1.0), CapacityResult(1.0 + 1e-12))
        result = capacity_mu(small_network)
        assert result.value_nats == 0.0
        assert result.warnings == ()
