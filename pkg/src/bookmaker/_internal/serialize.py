"""CSV and JSON writers with shortest round-trip float formatting."""

import csv
import json
from collections.abc import Iterable, Sequence
from typing import IO, Any

from ..types import Report, StudyRecord, StudySummary, SweepEntry

STUDY_COLUMNS = (
    "level",
    "run",
    "target_b",
    "prevalence",
    "guess_bias",
    "tp",
    "fp",
    "fn",
    "tn",
    "informedness",
    "markedness",
    "correlation",
    "kappa",
    "f",
    "g",
    "a",
)

SUMMARY_COLUMNS = (
    "measure",
    "mae_vs_target",
    "mae_vs_correlation",
    "slope",
    "intercept",
)

SWEEP_COLUMNS = ("threshold", "fpr", "tpr")

Cell = str | int | float | None


def format_cell(value: Cell) -> str:
    """Absent values become empty fields; floats use repr, the shortest round trip."""
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(
    stream: IO[str], header: Sequence[str], rows: Iterable[Sequence[Cell]]
) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(value) for value in row])


def study_rows(records: Iterable[StudyRecord]) -> Iterable[list[Cell]]:
    for record in records:
        yield [
            record.level,
            record.run,
            record.target_b,
            record.prevalence,
            record.guess_bias,
            *record.counts.as_tuple(),
            record.informedness,
            record.markedness,
            record.correlation,
            record.kappa,
            record.f,
            record.g,
            record.a,
        ]


def summary_rows(summary: StudySummary) -> Iterable[list[Cell]]:
    for item in summary.measures:
        yield [
            item.measure,
            item.mae_vs_target,
            item.mae_vs_correlation,
            item.slope,
            item.intercept,
        ]


def sweep_rows(curve: Iterable[SweepEntry]) -> Iterable[list[Cell]]:
    for entry in curve:
        yield [entry.threshold, entry.point.fpr, entry.point.tpr]


def _flatten(data: dict[str, Any], prefix: str = "") -> Iterable[list[Cell]]:
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            yield from _flatten(value, prefix=f"{name}.")
        else:
            yield [name, value]


def report_rows(report: Report) -> Iterable[list[Cell]]:
    """Dotted `field,value` rows of a report."""
    return _flatten(report.to_dict())


def report_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, allow_nan=False)
