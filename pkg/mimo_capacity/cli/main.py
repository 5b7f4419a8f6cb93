"""``mimo-capacity`` command-line entry point.

Exit status: 0 on success, 1 when a computation fails or ``verify`` finds a
failing check, 2 when the arguments or the scenario file are invalid.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from collections.abc import Sequence

import numpy as np

from mimo_capacity import __version__
from mimo_capacity.capacity.montecarlo import monte_carlo_mu
from mimo_capacity.capacity.sweep import evaluate_point, sweep
from mimo_capacity.cli.csvio import FALLBACK_COLUMNS, histogram_table, make_table, sweep_table
from mimo_capacity.cli.figures import run_figure
from mimo_capacity.cli.run_config import COMMANDS, RunConfig
from mimo_capacity.cli.scenario_file import load_scenario
from mimo_capacity.cli.verify import DEPTHS, run_verify
from mimo_capacity.core.errors import MimoCapacityError
from mimo_capacity.core.logs import configure_logging
from mimo_capacity.covariance.scenario import NetworkScenario, build_interference_matrices
from mimo_capacity.eigpdf.sampling import eigenvalue_histogram, sample_eigenvalues
from mimo_capacity.outcome import Issue

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mimo-capacity",
        description="Exact ergodic mutual information of correlated MIMO Rayleigh links with interference.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--scenario", metavar="PATH", help="scenario file (key = value lines)")
    parser.add_argument("--out", metavar="PATH", help="output file (directory for figure); stdout when omitted")
    parser.add_argument("--seed", type=int, help="Monte Carlo seed")
    parser.add_argument("--mc-samples", type=int, dest="mc_samples", help="Monte Carlo sample count")
    parser.add_argument("--figure", help="fig2, fig3, fig4 or fig5")
    parser.add_argument("--axis", choices=("snr", "sir"), help="sweep axis")
    parser.add_argument("--grid", metavar="A:B:STEP", help="sweep grid in dB, inclusive")
    parser.add_argument("--verify", choices=DEPTHS, default="quick", help="verification depth")
    parser.add_argument("--bins", type=int, default=40, help="histogram bins for pdf")
    parser.add_argument("--tol", action="append", metavar="KEY=VALUE", help="numerical tolerance override")
    parser.add_argument("--workers", type=int, help="threads for sweeps and Monte Carlo shards")
    parser.add_argument("--log-level", dest="log_level", default="WARNING", help="DEBUG, INFO, WARNING or ERROR")
    return parser


def _report_issues(issues: Sequence[Issue]) -> int:
    for issue in issues:
        print(f"error: {issue}", file=sys.stderr)
    return EXIT_INVALID


def _scenario(config: RunConfig) -> NetworkScenario | list[Issue]:
    assert config.scenario_path is not None
    loaded = load_scenario(config.scenario_path)
    return loaded.unwrap() if loaded.is_valid() else loaded.unwrap_errors()


def _run_capacity(config: RunConfig, scenario: NetworkScenario) -> int:
    point = evaluate_point(scenario, 10.0 * math.log10(scenario.snr), config.numerics)
    mc_mean = mc_stderr = math.nan
    if config.mc_samples is not None and config.seed is not None:
        estimate = monte_carlo_mu(scenario, config.mc_samples, config.seed, config.numerics)
        mc_mean, mc_stderr = estimate.mean_bits, estimate.stderr_bits
    table = make_table(
        (
            "snr_db",
            "sir_db",
            "c_mu_bits",
            "c_gauss_bits",
            "c_su_ref_bits",
            *FALLBACK_COLUMNS,
            "mc_mean_bits",
            "mc_stderr_bits",
            "warnings",
        ),
        [
            (
                point.axis_db,
                10.0 * math.log10(scenario.sir) if math.isfinite(scenario.sir) else math.inf,
                point.c_mu.value_bits,
                point.c_gauss.value_bits,
                point.c_su_ref.value_bits,
                *point.c_mu_fallback_bits,
                mc_mean,
                mc_stderr,
                " | ".join(point.warnings),
            )
        ],
        scenario.digest(),
    )
    table.write(config.out)
    return EXIT_OK


def _run_sweep(config: RunConfig, scenario: NetworkScenario) -> int:
    assert config.axis is not None and config.grid is not None
    result = sweep(scenario, config.axis, config.grid, config.numerics)
    sweep_table(result).write(config.out)
    for failure in result.failures:
        logger.error("point %s=%g dB failed: %s: %s", config.axis, failure.axis_db, failure.kind, failure.message)
    return EXIT_OK if result.is_complete() else EXIT_FAILED


def _run_pdf(config: RunConfig, scenario: NetworkScenario) -> int:
    """Histogram of the largest eigenvalue of ``H Psi~ H^H`` with ``NR`` rows."""
    assert config.mc_samples is not None and config.seed is not None
    _, psi_tilde = build_interference_matrices(scenario, config.numerics)
    samples = sample_eigenvalues(psi_tilde, scenario.nr, config.mc_samples, config.seed, config.numerics)
    largest = np.asarray(samples[:, 0])
    histogram_table(eigenvalue_histogram(largest, bins=config.bins), scenario.digest()).write(config.out)
    logger.info("largest-eigenvalue sample mean %.6g over %d draws", float(largest.mean()), largest.size)
    return EXIT_OK


def _run_verify(config: RunConfig) -> int:
    assert config.seed is not None
    report = run_verify(config.depth, config.seed, config.mc_samples, config.numerics)
    text = report.render()
    if config.out is None:
        sys.stdout.write(text)
    else:
        config.out.parent.mkdir(parents=True, exist_ok=True)
        with config.out.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    return EXIT_OK if report.passed else EXIT_FAILED


def _run_figure(config: RunConfig) -> int:
    assert config.figure is not None and config.out is not None
    for path in run_figure(config.figure, config.out, config.grid, config.numerics):
        print(path)
    return EXIT_OK


def run(config: RunConfig) -> int:
    """Execute a validated configuration and return the exit status."""
    if config.command == "verify":
        return _run_verify(config)
    if config.command == "figure":
        return _run_figure(config)
    scenario = _scenario(config)
    if isinstance(scenario, list):
        return _report_issues(scenario)
    handlers = {"capacity": _run_capacity, "sweep": _run_sweep, "pdf": _run_pdf}
    return handlers[config.command](config, scenario)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    checked = RunConfig.from_namespace(args)
    if checked.is_invalid():
        return _report_issues(checked.unwrap_errors())
    config = checked.unwrap()
    configure_logging(config.log_level)
    try:
        return run(config)
    except MimoCapacityError as exc:
        logger.error("%s failed: %s", config.command, exc)
        return EXIT_FAILED
    except OSError as exc:
        logger.error("cannot write output: %s", exc)
        return EXIT_FAILED


__all__ = ["EXIT_OK", "EXIT_FAILED", "EXIT_INVALID", "build_parser", "run", "main"]
