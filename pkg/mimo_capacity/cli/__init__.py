"""Command-line surface: scenario files, CSV output, figures and verification."""

from mimo_capacity.cli.csvio import CsvTable, format_cell, histogram_table, make_table, sweep_table, text_digest
from mimo_capacity.cli.figures import FIGURES, figure_tables, grid_values, run_figure
from mimo_capacity.cli.run_config import COMMANDS, RunConfig, parse_grid, parse_tolerances
from mimo_capacity.cli.scenario_file import load_scenario, parse_scenario_text
from mimo_capacity.cli.verify import CheckOutcome, VerifyReport, run_verify

__all__ = [
    "CsvTable",
    "format_cell",
    "make_table",
    "sweep_table",
    "histogram_table",
    "text_digest",
    "FIGURES",
    "figure_tables",
    "grid_values",
    "run_figure",
    "COMMANDS",
    "RunConfig",
    "parse_grid",
    "parse_tolerances",
    "load_scenario",
    "parse_scenario_text",
    "CheckOutcome",
    "VerifyReport",
    "run_verify",
]
