"""Tests for SNR and SIR sweeps."""

import importlib
import math

import pytest

from mimo_capacity.capacity import (
    PointFailure,
    ScenarioSweep,
    apply_axis,
    capacity_mu,
    sweep,
    symmetric_network,
    symmetric_network_ordered,
)
from mimo_capacity.core.config import NumericsConfig
from mimo_capacity.core.errors import ConvergenceError, DomainError
from mimo_capacity.covariance import NetworkScenario, UserLink


@pytest.fixture
def network():
    return NetworkScenario(3, (UserLink(2, 10.0), UserLink(1, 1.0)))


class TestSweep:
    """Tests for sweep()."""

    def test_sir_sweep(self, network):
        """An SIR sweep should produce one ordered point per grid value."""
        result = sweep(network, "sir", [-10.0, 0.0, 10.0])
        assert result.is_complete()
        assert [p.axis_db for p in result.points] == [-10.0, 0.0, 10.0]
        c_mu = [p.c_mu.value_nats for p in result.points]
        assert c_mu == sorted(c_mu)
        assert result.points[1].scenario.sir == pytest.approx(1.0)

    def test_reference_and_gaussian(self, network):
        """Each point should satisfy C_gauss <= C_MU <= C_SU reference."""
        (point,) = sweep(network, "sir", [0.0]).points
        assert point.c_gauss.value_nats <= point.c_mu.value_nats <= point.c_su_ref.value_nats

    def test_snr_sweep_keeps_sir(self, network):
        """An SNR sweep should move every user together."""
        result = sweep(network, "snr", [0.0, 20.0])
        assert [p.scenario.sir for p in result.points] == pytest.approx([10.0, 10.0])
        assert result.points[1].scenario.snr == pytest.approx(100.0)

    def test_rows(self, network):
        """rows() should report bits per column."""
        (row,) = sweep(network, "sir", [5.0]).rows()
        point_bits = capacity_mu(network.with_sir_db(5.0)).value_bits
        assert row[0] == 5.0
        assert row[1] == pytest.approx(point_bits)
        assert math.isnan(row[4]) and math.isnan(row[5])
        assert row[6] == ""

    def test_threads_match_serial(self, network):
        """Worker threads should not change the results."""
        grid = [-5.0, 0.0, 5.0, 10.0]
        serial = sweep(network, "sir", grid).rows()
        threaded = sweep(network, "sir", grid, NumericsConfig(workers=3)).rows()
        assert serial == threaded

    def test_failed_point_is_kept(self, network, monkeypatch):
        """A raising point should become a failure row, not abort the sweep."""
        sweep_module = importlib.import_module("mimo_capacity.capacity.sweep")
        real = sweep_module.evaluate_point

        def flaky(scenario, value_db, config):
            if value_db == 0.0:
                raise ConvergenceError("quadrature stalled", 1.25, 0.5)
            return real(scenario, value_db, config)

        monkeypatch.setattr(sweep_module, "evaluate_point", flaky)
        result = sweep(network, "sir", [-5.0, 0.0, 5.0])
        assert not result.is_complete()
        (failure,) = result.failures
        assert failure.kind == "ConvergenceError"
        assert failure.diagnostics == {"estimate": 1.25, "abserr": 0.5}
        row = result.rows()[1]
        assert math.isnan(row[1])
        assert row[6].startswith("ConvergenceError: quadrature stalled")

    @pytest.mark.parametrize("grid", [[], [1.0, 1.0], [2.0, 1.0], [0.0, math.nan]])
    def test_bad_grid(self, network, grid):
        """Empty, repeated, decreasing or nan grids should be rejected."""
        with pytest.raises(DomainError):
            sweep(network, "sir", grid)

    def test_sir_needs_interferers(self):
        """An SIR sweep without interferers should be rejected."""
        with pytest.raises(DomainError):
            sweep(NetworkScenario.single_user(2, 2, 10.0), "sir", [0.0])

    def test_unknown_axis(self, network):
        """Only snr and sir are axes."""
        with pytest.raises(DomainError):
            sweep(network, "sinr", [0.0])
        with pytest.raises(DomainError):
            apply_axis(network, "sinr", 0.0)

    def test_result_length_checked(self, network):
        """ScenarioSweep should reject a result count that does not match the grid."""
        with pytest.raises(DomainError):
            ScenarioSweep(network, "sir", (0.0, 1.0), ())


class TestPointFailure:
    """Tests for PointFailure."""

    def test_from_plain_exception(self):
        """Exceptions without diagnostics should give an empty mapping."""
        failure = PointFailure.from_exception(3.0, DomainError("bad"))
        assert (failure.axis_db, failure.kind, failure.message) == (3.0, "DomainError", "bad")
        assert failure.diagnostics == {}


class TestSymmetricNetwork:
    """Tests for the symmetric MIMO-(n,n) network."""

    def test_powers(self):
        """Interferers should split the interference power evenly."""
        scenario = symmetric_network(3, 2, 10.0, 3.0)
        assert scenario.nr == 3
        assert scenario.snr == pytest.approx(10.0)
        assert scenario.interferers[0].power == scenario.interferers[1].power
        assert scenario.sir == pytest.approx(10 ** 0.3)

    def test_without_interferers(self):
        """Zero interferers should give a single-user scenario."""
        assert symmetric_network(2, 0, 10.0, 0.0).interferers == ()

    def test_capacity_grows_with_n(self):
        """More antennas everywhere should raise C_MU."""
        ordered, values = symmetric_network_ordered([3, 1, 2], 1, 10.0, 10.0)
        assert ordered
        assert len(values) == 3

    def test_rejects_bad_counts(self):
        """Negative interferer counts and zero antennas should be rejected."""
        with pytest.raises(DomainError):
            symmetric_network(2, -1, 10.0, 0.0)
        with pytest.raises(DomainError):
            symmetric_network(0, 1, 10.0, 0.0)
