"""Tests for the figure data builders."""

import math

import pytest

from mimo_capacity.capacity import monte_carlo_mu, sweep
from mimo_capacity.cli import figure_tables, grid_values, run_figure
from mimo_capacity.cli.figures import (
    DEFAULT_GRIDS,
    FIG2_DELTAS,
    FIG4_INTERFERER_ANTENNAS,
    fig2_link,
    fig3_link,
    fig4_scenario,
    fig5_scenario,
    floor_capacity_bits,
)
from mimo_capacity.core.errors import DomainError


class TestGridValues:
    """Tests for grid_values()."""

    def test_inclusive(self):
        """The stop value should be included."""
        assert grid_values(0.0, 30.0, 2.0)[-1] == 30.0
        assert len(grid_values(*DEFAULT_GRIDS["fig4"])) == 17

    def test_rejects_bad_steps(self):
        """Nonpositive steps and reversed ranges should be rejected."""
        with pytest.raises(DomainError):
            grid_values(0.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            grid_values(1.0, 0.0, 1.0)


class TestLinks:
    """Tests for the figure links and scenarios."""

    def test_fig2_link(self):
        """The uneven split should keep tr Phi = SNR."""
        link = fig2_link(10.0, 0.5)
        assert link.spec.trace == pytest.approx(10.0)
        assert link.spec.multiplicities == (3, 3)
        assert link.spec.eigenvalues[0] == pytest.approx(2.5)
        assert link.spec.eigenvalues[-1] == pytest.approx(10.0 / 12.0)
        assert link.p == 3

    def test_fig2_delta_one_drops_antennas(self):
        """delta = 1 should leave three active antennas."""
        assert fig2_link(10.0, 1.0).n == 3

    def test_fig3_link(self):
        """The relay link should have ten transmit and four receive antennas."""
        link = fig3_link(20.0)
        assert link.n == 10
        assert link.p == 4
        assert link.spec.trace == pytest.approx(100.0)

    def test_fig4_and_fig5_scenarios(self):
        """The network scenarios should have the stated shapes."""
        fig4 = fig4_scenario(2)
        assert (fig4.nr, fig4.desired.nt, fig4.interferers[0].nt) == (6, 6, 2)
        assert fig4.snr == pytest.approx(10.0)
        fig5 = fig5_scenario(4, 2)
        assert [u.nt for u in fig5.users] == [4, 4, 4]


class TestFigureTables:
    """Tests for figure_tables()."""

    def test_fig2_relations(self):
        """Capacity should fall with delta; delta = 1 should match three equal antennas."""
        tables = figure_tables("fig2", [0.0, 10.0])
        assert len(tables) == len(FIG2_DELTAS) + 1
        for full, equal in zip(tables["fig2_delta_1.00.csv"].rows, tables["fig2_equal3.csv"].rows, strict=True):
            assert full[1] == pytest.approx(equal[1], rel=1e-12)
        for point in range(2):
            values = [tables[f"fig2_delta_{d:.2f}.csv"].rows[point][1] for d in FIG2_DELTAS]
            assert values == sorted(values, reverse=True)

    def test_fig3_exact_below_jensen(self):
        """The relay bound should stay below the Jensen bound."""
        tables = figure_tables("fig3", [0.0, 10.0, 20.0])
        for exact, jensen in zip(tables["fig3_exact.csv"].rows, tables["fig3_jensen.csv"].rows, strict=True):
            assert exact[1] <= jensen[1]

    @pytest.mark.slow
    def test_fig4_files(self):
        """fig4 should emit one sweep per interferer size plus reference curves."""
        tables = figure_tables("fig4", [-40.0, 40.0])
        assert sorted(tables) == sorted(
            [f"fig4_nt1_{k}.csv" for k in (1, 2, 4, 6, 10)]
            + [f"fig4_floor_nt1_{k}.csv" for k in (1, 2, 4)]
            + ["fig4_gaussian.csv", "fig4_single_user.csv"]
        )
        free = floor_capacity_bits(6, 6)
        for nt1 in FIG4_INTERFERER_ANTENNAS:
            low, high = tables[f"fig4_nt1_{nt1}.csv"].rows
            floor = floor_capacity_bits(6, 6 - nt1) if nt1 < 6 else 0.0
            assert low[1] == pytest.approx(floor, abs=0.05)
            assert high[1] == pytest.approx(free, abs=0.05)

    @pytest.mark.slow
    @pytest.mark.parametrize("nt1", FIG4_INTERFERER_ANTENNAS)
    def test_fig4_sweep_matches_sampling(self, nt1):
        """Every point of the default fig4 grid should be finite and track direct sampling."""
        scenario = fig4_scenario(nt1)
        result = sweep(scenario, "sir", grid_values(*DEFAULT_GRIDS["fig4"]))
        assert result.is_complete()
        for point in result.points:
            bits = point.c_mu.value_bits
            assert math.isfinite(bits)
            estimate = monte_carlo_mu(point.scenario, 10_000, seed=17)
            assert abs(bits - estimate.mean_bits) <= 0.05 + 4.0 * estimate.stderr_bits

    def test_unknown_figure(self):
        """Unknown names should be rejected."""
        with pytest.raises(DomainError):
            figure_tables("fig9")


class TestRunFigure:
    """Tests for run_figure()."""

    def test_writes_files(self, tmp_path):
        """Every table should land in the output directory."""
        written = run_figure("fig3", tmp_path / "out", [0.0])
        assert [p.name for p in written] == ["fig3_exact.csv", "fig3_jensen.csv"]
        assert all(p.read_text(encoding="utf-8").startswith("# digest=") for p in written)
