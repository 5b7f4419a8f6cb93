"""SNR and SIR sweeps of a network scenario.

Every grid point keeps a ``Result``: ``Ok(SweepPoint)`` or
``Error(PointFailure)``. A failing point never aborts the sweep and is
never dropped.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Literal

from mimo_capacity.capacity.closed_form import capacity_su
from mimo_capacity.capacity.multiuser import capacity_gaussian_approx, capacity_mu
from mimo_capacity.capacity.result import CapacityResult
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import ConvergenceError, DomainError
from mimo_capacity.core.logs import timed
from mimo_capacity.covariance.scenario import NetworkScenario, UserLink, build_interference_matrices, db_to_linear
from mimo_capacity.outcome import Result

logger = logging.getLogger(__name__)

SweepAxis = Literal["snr", "sir"]
AXES: tuple[SweepAxis, ...] = ("snr", "sir")


@dataclass(frozen=True, slots=True)
class SweepPoint:
    """All capacities of one grid point.

    Attributes:
        axis_db: Grid value
        scenario: Scenario after applying the grid value
        c_mu: Mutual information under interference
        c_gauss: Interference treated as noise
        c_su_ref: Desired link without interference
    """

    axis_db: float
    scenario: NetworkScenario
    c_mu: CapacityResult
    c_gauss: CapacityResult
    c_su_ref: CapacityResult

    @property
    def warnings(self) -> tuple[str, ...]:
        # Deduplicated, first occurrence wins.
        seen = dict.fromkeys(self.c_mu.warnings + self.c_gauss.warnings + self.c_su_ref.warnings)
        return tuple(seen)

    @property
    def c_mu_fallback_bits(self) -> tuple[float, float]:
        """Monte Carlo ``(mean, stderr)`` of C_MU in bits, nan when none was needed."""
        fallback = self.c_mu.diagnostics.fallback
        if fallback is None:
            return math.nan, math.nan
        return fallback.mean_bits, fallback.stderr_bits


@dataclass(frozen=True, slots=True)
class PointFailure:
    """A grid point whose evaluation raised.

    Attributes:
        axis_db: Grid value
        kind: Exception class name
        message: Exception text
        diagnostics: Extra values carried by the exception
    """

    axis_db: float
    kind: str
    message: str
    diagnostics: dict[str, Any] = field(default_factory=dict)

    @staticmethod
    def from_exception(axis_db: float, exc: Exception) -> PointFailure:
        extra = dict(getattr(exc, "diagnostics", {}) or {})
        if isinstance(exc, ConvergenceError):
            extra.update(estimate=exc.estimate, abserr=exc.abserr)
        return PointFailure(axis_db, type(exc).__name__, str(exc), extra)


PointResult = Result[SweepPoint, PointFailure]


@dataclass(frozen=True, slots=True)
class ScenarioSweep:
    """Ordered per-point results of one sweep.

    Attributes:
        scenario: Base scenario
        axis: ``"snr"`` or ``"sir"``
        grid_db: Strictly increasing grid
        results: One Result per grid value, in grid order
    """

    scenario: NetworkScenario
    axis: SweepAxis
    grid_db: tuple[float, ...]
    results: tuple[PointResult, ...]

    def __post_init__(self) -> None:
        check_grid(self.grid_db)
        if len(self.results) != len(self.grid_db):
            raise DomainError(f"{len(self.results)} results for {len(self.grid_db)} grid points")

    @property
    def points(self) -> list[SweepPoint]:
        return [r.unwrap() for r in self.results if r.is_ok()]

    @property
    def failures(self) -> list[PointFailure]:
        return [r.unwrap_error() for r in self.results if r.is_error()]

    def is_complete(self) -> bool:
        return all(r.is_ok() for r in self.results)

    def rows(self) -> list[tuple[float, float, float, float, float, float, str]]:
        """One row per grid value; failures carry nan.

        Columns: ``axis_db, c_mu_bits, c_gauss_bits, c_su_ref_bits,
        c_mu_fallback_bits, c_mu_fallback_stderr_bits, warnings``.
        """
        out = []
        for value, result in zip(self.grid_db, self.results, strict=True):
            if result.is_ok():
                point = result.unwrap()
                out.append(
                    (
                        value,
                        point.c_mu.value_bits,
                        point.c_gauss.value_bits,
                        point.c_su_ref.value_bits,
                        *point.c_mu_fallback_bits,
                        " | ".join(point.warnings),
                    )
                )
            else:
                failure = result.unwrap_error()
                nan = math.nan
                out.append((value, nan, nan, nan, nan, nan, f"{failure.kind}: {failure.message}"))
        return out


def check_grid(grid_db: Sequence[float]) -> tuple[float, ...]:
    """Reject empty, non-finite or non-increasing grids."""
    grid = tuple(float(v) for v in grid_db)
    if not grid:
        raise DomainError("sweep grid is empty")
    if not all(math.isfinite(v) for v in grid):
        raise DomainError("sweep grid values must be finite")
    if any(b <= a for a, b in zip(grid, grid[1:], strict=False)):
        raise DomainError("sweep grid must be strictly increasing")
    return grid


def apply_axis(scenario: NetworkScenario, axis: SweepAxis, value_db: float) -> NetworkScenario:
    """The scenario at one grid value.

    SNR moves every user together so SIR stays fixed; SIR rescales the
    interferers together so their power ratios stay fixed.
    """
    if axis == "snr":
        return scenario.with_snr_db(value_db)
    if axis == "sir":
        return scenario.with_sir_db(value_db)
    raise DomainError(f"unknown sweep axis {axis!r}")


def evaluate_point(scenario: NetworkScenario, value_db: float, config: NumericsConfig) -> SweepPoint:
    reference_spec = build_interference_matrices(scenario.desired_only(), config)[1]
    return SweepPoint(
        value_db,
        scenario,
        capacity_mu(scenario, config),
        capacity_gaussian_approx(scenario, config),
        capacity_su(reference_spec, scenario.nr, config),
    )


def _point(scenario: NetworkScenario, axis: SweepAxis, value_db: float, config: NumericsConfig) -> PointResult:
    def run() -> SweepPoint:
        return evaluate_point(apply_axis(scenario, axis, value_db), value_db, config)

    def fail(exc: Exception) -> PointFailure:
        failure = PointFailure.from_exception(value_db, exc)
        logger.warning("sweep point %s=%g dB failed: %s", axis, value_db, failure.message)
        return failure

    result: PointResult = Result.attempt(run, fail)
    return result


def sweep(
    scenario: NetworkScenario,
    axis: SweepAxis,
    grid_db: Sequence[float],
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> ScenarioSweep:
    """Evaluate ``scenario`` over an SNR or SIR grid.

    Points run on ``config.workers`` threads; results stay in grid order.

    Raises:
        DomainError: Bad grid, unknown axis, or an SIR sweep without interferers
    """
    grid = check_grid(grid_db)
    if axis not in AXES:
        raise DomainError(f"unknown sweep axis {axis!r}; expected one of {AXES}")
    if axis == "sir" and not scenario.interferers:
        raise DomainError("an SIR sweep needs at least one interferer")
    with timed(f"{axis} sweep over {len(grid)} points ({scenario.describe()})", logger):
        if config.workers <= 1 or len(grid) == 1:
            results = [_point(scenario, axis, v, config) for v in grid]
        else:
            with ThreadPoolExecutor(max_workers=config.workers) as pool:
                results = list(pool.map(lambda v: _point(scenario, axis, v, config), grid))
    return ScenarioSweep(scenario, axis, grid, tuple(results))


def symmetric_network(
    n: int, num_interferers: int, snr_db: float, sir_db: float, sigma2: float = 1.0
) -> NetworkScenario:
    """Every node uses MIMO-(n, n); interferers share the interference power equally.

    Example:
        >>> s = symmetric_network(2, 2, 10.0, 0.0)
        >>> [u.nt for u in s.users], round(s.sir, 12)
        ([2, 2, 2], 1.0)
    """
    if int(num_interferers) != num_interferers or num_interferers < 0:
        raise DomainError(f"num_interferers must be a nonnegative integer, got {num_interferers}")
    if int(n) != n or n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    p0 = db_to_linear(snr_db) * sigma2
    users = [UserLink(n, p0)]
    if num_interferers:
        each = p0 / (db_to_linear(sir_db) * num_interferers)
        users.extend(UserLink(n, each) for _ in range(num_interferers))
    return NetworkScenario(n, tuple(users), sigma2)


def symmetric_network_ordered(
    sizes: Sequence[int],
    num_interferers: int,
    snr_db: float,
    sir_db: float,
    config: NumericsConfig = DEFAULT_NUMERICS,
) -> tuple[bool, list[float]]:
    """Whether ``C_MU`` grows strictly with the common antenna count.

    Returns:
        ``(ordered, capacities_bits)`` for ``sizes`` in increasing order
    """
    values = [
        capacity_mu(symmetric_network(n, num_interferers, snr_db, sir_db), config).value_bits
        for n in sorted(sizes)
    ]
    return all(b > a for a, b in zip(values, values[1:], strict=False)), values


__all__ = [
    "SweepAxis",
    "AXES",
    "SweepPoint",
    "PointFailure",
    "PointResult",
    "ScenarioSweep",
    "check_grid",
    "apply_axis",
    "evaluate_point",
    "sweep",
    "symmetric_network",
    "symmetric_network_ordered",
]
