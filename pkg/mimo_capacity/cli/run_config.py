"""Validated command-line configuration."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path
from typing import Literal

from mimo_capacity.cli.figures import FIGURES, grid_values
from mimo_capacity.cli.verify import DEPTHS, Depth
from mimo_capacity.core.config import DEFAULT_NUMERICS, NumericsConfig
from mimo_capacity.core.errors import DomainError
from mimo_capacity.outcome import Issue, Validation

Command = Literal["capacity", "sweep", "pdf", "verify", "figure"]
COMMANDS: tuple[Command, ...] = ("capacity", "sweep", "pdf", "verify", "figure")

MIN_MC_SAMPLES = 1_000
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Everything one CLI invocation needs.

    Attributes:
        command: Sub-command to run
        scenario_path: Scenario file (capacity, sweep, pdf)
        out: Output file, or directory for ``figure``; None writes to stdout
        seed: Base seed; required whenever Monte Carlo runs
        mc_samples: Monte Carlo sample count (>= 1000 when given)
        numerics: Tolerances after ``--tol`` overrides
        figure: Figure name for ``figure``
        axis: ``snr`` or ``sir`` for ``sweep``
        grid: Grid in dB (``sweep``; optional for ``figure``)
        depth: ``quick`` or ``full`` for ``verify``
        bins: Histogram bins for ``pdf``
        log_level: Level passed to ``configure_logging``
    """

    command: Command
    scenario_path: Path | None = None
    out: Path | None = None
    seed: int | None = None
    mc_samples: int | None = None
    numerics: NumericsConfig = DEFAULT_NUMERICS
    figure: str | None = None
    axis: Literal["snr", "sir"] | None = None
    grid: tuple[float, ...] | None = None
    depth: Depth = "quick"
    bins: int = 40
    log_level: str = "WARNING"

    @property
    def uses_monte_carlo(self) -> bool:
        return self.command in ("pdf", "verify") or (self.command == "capacity" and self.mc_samples is not None)

    @staticmethod
    def from_namespace(args: argparse.Namespace) -> Validation[RunConfig]:
        """Check parsed arguments, reporting every problem at once."""
        issues: list[Issue] = []
        command: Command = args.command

        numerics = DEFAULT_NUMERICS
        overrides, tol_issues = parse_tolerances(args.tol or [])
        issues.extend(tol_issues)
        checked = NumericsConfig.with_overrides(overrides)
        if checked.is_valid():
            numerics = checked.unwrap()
        else:
            issues.extend(checked.unwrap_errors())
        if args.workers is not None:
            if args.workers < 1:
                issues.append(Issue("--workers", "must be >= 1"))
            else:
                numerics = NumericsConfig.with_overrides({"workers": args.workers}, numerics).unwrap()

        grid: tuple[float, ...] | None = None
        if args.grid is not None:
            parsed = parse_grid(args.grid)
            if parsed.is_valid():
                grid = parsed.unwrap()
            else:
                issues.extend(parsed.unwrap_errors())

        if command in ("capacity", "sweep", "pdf") and args.scenario is None:
            issues.append(Issue("--scenario", f"required for {command}"))
        if command == "sweep":
            if args.axis is None:
                issues.append(Issue("--axis", "required for sweep"))
            if args.grid is None:
                issues.append(Issue("--grid", "required for sweep"))
        if command == "figure":
            if args.figure is None:
                issues.append(Issue("--figure", "required for figure"))
            elif args.figure not in FIGURES:
                issues.append(Issue("--figure", f"unknown figure {args.figure!r}; expected one of {FIGURES}"))
            if args.out is None:
                issues.append(Issue("--out", "figure needs an output directory"))
        if args.verify not in DEPTHS:
            issues.append(Issue("--verify", f"expected one of {DEPTHS}"))
        if args.log_level.upper() not in LOG_LEVELS:
            issues.append(Issue("--log-level", f"expected one of {LOG_LEVELS}"))
        if args.bins < 1:
            issues.append(Issue("--bins", "must be >= 1"))

        config = RunConfig(
            command=command,
            scenario_path=Path(args.scenario) if args.scenario is not None else None,
            out=Path(args.out) if args.out is not None else None,
            seed=args.seed,
            mc_samples=args.mc_samples,
            numerics=numerics,
            figure=args.figure,
            axis=args.axis,
            grid=grid,
            depth=args.verify if args.verify in DEPTHS else "quick",
            bins=args.bins,
            log_level=args.log_level.upper(),
        )
        if config.mc_samples is not None and config.mc_samples < MIN_MC_SAMPLES:
            issues.append(Issue("--mc-samples", f"must be >= {MIN_MC_SAMPLES}, got {config.mc_samples}"))
        if config.command == "pdf" and config.mc_samples is None:
            issues.append(Issue("--mc-samples", "required for pdf"))
        if config.uses_monte_carlo and config.seed is None:
            issues.append(Issue("--seed", f"required for reproducible Monte Carlo in {command}"))
        if config.seed is not None and not 0 <= config.seed < 2**64:
            issues.append(Issue("--seed", "must lie in [0, 2**64)"))

        if issues:
            return Validation.invalid(issues)
        return Validation.valid(config)


def parse_tolerances(entries: Sequence[str]) -> tuple[dict[str, str], list[Issue]]:
    """Split ``key=value`` strings; malformed entries become issues."""
    overrides: dict[str, str] = {}
    issues: list[Issue] = []
    for entry in entries:
        key, sep, value = entry.partition("=")
        if not sep or not key.strip() or not value.strip():
            issues.append(Issue("--tol", f"expected key=value, got {entry!r}"))
            continue
        overrides[key.strip()] = value.strip()
    return overrides, issues


def parse_grid(text: str) -> Validation[tuple[float, ...]]:
    """Parse ``"start:stop:step"`` (dB) into an inclusive grid.

    Example:
        >>> parse_grid("-10:10:10").unwrap()
        (-10.0, 0.0, 10.0)
        >>> parse_grid("1:0:1").is_invalid()
        True
    """
    parts = text.split(":")
    if len(parts) != 3:
        return Validation.invalid(Issue("--grid", f"expected start:stop:step, got {text!r}"))
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError:
        return Validation.invalid(Issue("--grid", f"non-numeric grid {text!r}"))
    try:
        return Validation.valid(grid_values(start, stop, step))
    except DomainError as exc:
        return Validation.invalid(Issue("--grid", str(exc)))


__all__ = [
    "Command",
    "COMMANDS",
    "MIN_MC_SAMPLES",
    "LOG_LEVELS",
    "RunConfig",
    "parse_tolerances",
    "parse_grid",
]
