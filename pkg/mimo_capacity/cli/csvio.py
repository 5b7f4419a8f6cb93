"""CSV emission.

Every file starts with one ``#`` comment line carrying the scenario digest
and the units, followed by the header row. Numbers use ``%.10g``, lines end
in LF, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import hashlib
import io
import math
import sys
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from pathlib import Path

from mimo_capacity.capacity.sweep import ScenarioSweep
from mimo_capacity.eigpdf.sampling import HistogramBin

Cell = float | int | str

UNITS = "axis in dB; capacity in bits/s/Hz"

FALLBACK_COLUMNS = ("c_mu_fallback_bits", "c_mu_fallback_stderr_bits")


def text_digest(text: str) -> str:
    """12-hex-digit sha256 fingerprint of ``text``."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def format_cell(value: Cell) -> str:
    """``%.10g`` for numbers, ``nan``/``inf`` spelled out, strings unchanged.

    Example:
        >>> format_cell(1 / 3), format_cell(float("nan")), format_cell(7)
        ('0.3333333333', 'nan', '7')
    """
    if isinstance(value, str):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    number = float(value)
    if math.isnan(number):
        return "nan"
    if math.isinf(number):
        return "inf" if number > 0 else "-inf"
    return "%.10g" % number


@dataclass(frozen=True, slots=True)
class CsvTable:
    """A header-plus-rows table with its provenance comment.

    Attributes:
        columns: Header names
        rows: Data rows, one cell per column
        digest: Scenario or configuration fingerprint
        units: Units note for the comment line
    """

    columns: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]
    digest: str
    units: str = UNITS

    def render(self) -> str:
        buffer = io.StringIO()
        buffer.write(f"# digest={self.digest}; units: {self.units}\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError(f"row has {len(row)} cells for {len(self.columns)} columns")
            writer.writerow([format_cell(c) for c in row])
        return buffer.getvalue()

    def write(self, path: str | Path | None) -> None:
        """Write to ``path``, or to stdout when ``path`` is None or ``-``."""
        text = self.render()
        if path is None or str(path) == "-":
            sys.stdout.write(text)
            return
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with target.open("w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def make_table(
    columns: Sequence[str], rows: Iterable[Sequence[Cell]], digest: str, units: str = UNITS
) -> CsvTable:
    return CsvTable(tuple(columns), tuple(tuple(r) for r in rows), digest, units)


def sweep_table(result: ScenarioSweep) -> CsvTable:
    """One row per grid value, columns as in ``ScenarioSweep.rows``."""
    return make_table(
        (f"{result.axis}_db", "c_mu_bits", "c_gauss_bits", "c_su_ref_bits", *FALLBACK_COLUMNS, "warnings"),
        result.rows(),
        result.scenario.digest(),
        f"{result.axis}_db in dB; capacity in bits/s/Hz",
    )


def histogram_table(bins: Sequence[HistogramBin], digest: str) -> CsvTable:
    """``bin_left, bin_right, density, stderr``."""
    return make_table(
        ("bin_left", "bin_right", "density", "stderr"),
        [(b.left, b.right, b.density, b.stderr) for b in bins],
        digest,
        "bin edges in eigenvalue units; density per unit",
    )


__all__ = [
    "UNITS",
    "FALLBACK_COLUMNS",
    "Cell",
    "text_digest",
    "format_cell",
    "CsvTable",
    "make_table",
    "sweep_table",
    "histogram_table",
]
