"""Data behind the four network figures, one CSV per curve."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from pathlib import Path

from mimo_capacity.capacity.closed_form import capacity_su
from mimo_capacity.capacity.links import LinkCase, transmit_side
from mimo_capacity.capacity.sweep import check_grid, sweep
from mimo_capacity.cli.csvio import CsvTable, make_table, sweep_table, text_digest
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.core.logs import timed
from mimo_capacity.covariance.scenario import NetworkScenario, UserLink, db_to_linear
from mimo_capacity.covariance.spec import CovarianceSpec

logger = logging.getLogger(__name__)

FIG2_DELTAS = (0.0, 0.25, 0.5, 0.75, 1.0)
FIG3_WEIGHTS = (1.0, 2.0, 5.0, 10.0, 20.0)
FIG4_INTERFERER_ANTENNAS = (1, 2, 4, 6, 10)
FIG5_DESIRED_ANTENNAS = (3, 4, 5, 6)
FIGURE_SNR_DB = 10.0

DEFAULT_GRIDS: dict[str, tuple[float, float, float]] = {
    "fig2": (0.0, 30.0, 2.0),
    "fig3": (0.0, 30.0, 2.0),
    "fig4": (-40.0, 40.0, 5.0),
    "fig5": (-20.0, 30.0, 5.0),
}


def grid_values(start: float, stop: float, step: float) -> tuple[float, ...]:
    """``start, start + step, ...`` up to ``stop`` inclusive.

    Example:
        >>> grid_values(-1.0, 1.0, 0.5)
        (-1.0, -0.5, 0.0, 0.5, 1.0)
    """
    if not step > 0:
        raise DomainError(f"grid step must be positive, got {step}")
    if stop < start:
        raise DomainError(f"grid stop {stop} is below start {start}")
    count = int((stop - start) / step + 1e-9) + 1
    return check_grid([round(start + i * step, 10) for i in range(count)])


def fig2_link(snr_db: float, delta: float, config: NumericsConfig = DEFAULT_NUMERICS) -> LinkCase:
    """MIMO-(6,3); half the antennas at ``1 + delta``, half at ``1 - delta``, total SNR."""
    snr = db_to_linear(snr_db)
    powers = [snr / 6 * (1 + delta)] * 3 + [snr / 6 * (1 - delta)] * 3
    return transmit_side([1.0] * 6, powers, 3, config=config)


def fig3_link(snr_db: float, config: NumericsConfig = DEFAULT_NUMERICS) -> LinkCase:
    """Source with 4 antennas, 5 relays of 2 antennas, power split by FIG3_WEIGHTS, ``tr Phi = SNR``."""
    snr = db_to_linear(snr_db)
    total = 2 * sum(FIG3_WEIGHTS)
    powers = [snr * w / total for w in FIG3_WEIGHTS for _ in range(2)]
    return transmit_side([1.0] * 10, powers, 4, config=config)


def fig4_scenario(interferer_antennas: int) -> NetworkScenario:
    """MIMO-(6,6) at 10 dB SNR with one equal-power interferer."""
    return NetworkScenario(6, (UserLink(6, db_to_linear(FIGURE_SNR_DB)), UserLink(interferer_antennas, 1.0)))


def fig5_scenario(desired_antennas: int, interferers: int) -> NetworkScenario:
    """MIMO-(NT0, 6) with ``interferers`` co-channel users of NT0 antennas each."""
    users = [UserLink(desired_antennas, db_to_linear(FIGURE_SNR_DB))]
    users.extend(UserLink(desired_antennas, 1.0) for _ in range(interferers))
    return NetworkScenario(6, tuple(users))


def floor_capacity_bits(nt0: int, receive: int, config: NumericsConfig = DEFAULT_NUMERICS) -> float:
    """Single-user MIMO-(nt0, receive) at the figure SNR."""
    spec = CovarianceSpec.scaled_identity(db_to_linear(FIGURE_SNR_DB) / nt0, nt0)
    return capacity_su(spec, receive, config).value_bits


def _constant_curve(name: str, column: str, grid: Sequence[float], value: float) -> CsvTable:
    return make_table(("sir_db", column), [(g, value) for g in grid], text_digest(f"{name};{value!r}"))


def _fig2(grid: Sequence[float], config: NumericsConfig) -> dict[str, CsvTable]:
    tables = {}
    for delta in FIG2_DELTAS:
        rows = [(g, fig2_link(g, delta, config).capacity(config).value_bits) for g in grid]
        tables[f"fig2_delta_{delta:.2f}.csv"] = make_table(
            ("snr_db", "c_bits"), rows, text_digest(f"fig2;n=6;p=3;delta={delta!r};grid={tuple(grid)}")
        )
    rows = [
        (g, transmit_side([1.0] * 3, [db_to_linear(g) / 3] * 3, 3, config=config).capacity(config).value_bits)
        for g in grid
    ]
    tables["fig2_equal3.csv"] = make_table(
        ("snr_db", "c_bits"), rows, text_digest(f"fig2;n=3;p=3;grid={tuple(grid)}")
    )
    return tables


def _fig3(grid: Sequence[float], config: NumericsConfig) -> dict[str, CsvTable]:
    digest = text_digest(f"fig3;n=10;p=4;weights={FIG3_WEIGHTS};grid={tuple(grid)}")
    links = [fig3_link(g, config) for g in grid]
    return {
        "fig3_exact.csv": make_table(
            ("snr_db", "c_u_bits"),
            [(g, link.relay_bound(config).value_bits) for g, link in zip(grid, links, strict=True)],
            digest,
        ),
        "fig3_jensen.csv": make_table(
            ("snr_db", "c_u_bits"),
            [(g, link.jensen_bound().value_bits) for g, link in zip(grid, links, strict=True)],
            digest,
        ),
    }


def _fig4(grid: Sequence[float], config: NumericsConfig) -> dict[str, CsvTable]:
    tables = {}
    for nt1 in FIG4_INTERFERER_ANTENNAS:
        result = sweep(fig4_scenario(nt1), "sir", grid, config)
        tables[f"fig4_nt1_{nt1}.csv"] = sweep_table(result)
        if nt1 == FIG4_INTERFERER_ANTENNAS[0]:
            # Interference treated as noise depends only on the total power.
            tables["fig4_gaussian.csv"] = make_table(
                ("sir_db", "c_gauss_bits"),
                [(row[0], row[2]) for row in result.rows()],
                result.scenario.digest(),
            )
        if nt1 < 6:
            tables[f"fig4_floor_nt1_{nt1}.csv"] = _constant_curve(
                f"fig4;floor;nt1={nt1}", "c_su_bits", grid, floor_capacity_bits(6, 6 - nt1, config)
            )
    tables["fig4_single_user.csv"] = _constant_curve(
        "fig4;single-user", "c_su_bits", grid, floor_capacity_bits(6, 6, config)
    )
    return tables


def _fig5(grid: Sequence[float], config: NumericsConfig) -> dict[str, CsvTable]:
    tables = {}
    for interferers in (1, 2):
        for nt0 in FIG5_DESIRED_ANTENNAS:
            result = sweep(fig5_scenario(nt0, interferers), "sir", grid, config)
            tables[f"fig5_{interferers}int_nt0_{nt0}.csv"] = sweep_table(result)
    return tables


_BUILDERS: dict[str, Callable[[Sequence[float], NumericsConfig], dict[str, CsvTable]]] = {
    "fig2": _fig2,
    "fig3": _fig3,
    "fig4": _fig4,
    "fig5": _fig5,
}

FIGURES = tuple(_BUILDERS)


def figure_tables(
    name: str, grid: Sequence[float] | None = None, config: NumericsConfig = DEFAULT_NUMERICS
) -> dict[str, CsvTable]:
    """File name to table for every curve of figure ``name``."""
    builder = _BUILDERS.get(name)
    if builder is None:
        raise DomainError(f"unknown figure {name!r}; expected one of {FIGURES}")
    values = check_grid(grid) if grid is not None else grid_values(*DEFAULT_GRIDS[name])
    with timed(f"figure {name} over {len(values)} points", logger):
        return builder(values, config)


def run_figure(
    name: str,
    out: str | Path,
    grid: Sequence[float] | None = None,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> list[Path]:
    """Write every curve of figure ``name`` into directory ``out``.

    Raises:
        DomainError: Unknown figure name
        OSError: ``out`` cannot be created or written
    """
    tables = figure_tables(name, grid, config)
    directory = Path(out)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for filename, table in sorted(tables.items()):
        path = directory / filename
        table.write(path)
        written.append(path)
    logger.info("figure %s: wrote %d files to %s", name, len(written), directory)
    return written


__all__ = [
    "FIGURES",
    "FIG2_DELTAS",
    "FIG3_WEIGHTS",
    "FIG4_INTERFERER_ANTENNAS",
    "FIG5_DESIRED_ANTENNAS",
    "FIGURE_SNR_DB",
    "DEFAULT_GRIDS",
    "grid_values",
    "fig2_link",
    "fig3_link",
    "fig4_scenario",
    "fig5_scenario",
    "floor_capacity_bits",
    "figure_tables",
    "run_figure",
]
