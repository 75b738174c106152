"""Accuracy-delta rows and their CSV / aligned-table renderings."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

_COLUMNS = ("dataset", "analyzer", "original_accuracy", "compressed_accuracy", "delta")

AVERAGE_ROW_NAME = "Average"


@dataclass(frozen=True)
class AccuracyDelta:
    dataset: str
    analyzer: str
    original_accuracy: float
    compressed_accuracy: float
    delta: float

    def __post_init__(self):
        if self.delta != self.compressed_accuracy - self.original_accuracy:
            raise ValueError(
                f"delta {self.delta} is not compressed-original "
                f"({self.compressed_accuracy} - {self.original_accuracy})"
            )

    @classmethod
    def measure(
        cls, dataset: str, analyzer: str, original: float, compressed: float
    ) -> "AccuracyDelta":
        return cls(dataset, analyzer, original, compressed, compressed - original)


def average_row(rows: list[AccuracyDelta]) -> AccuracyDelta:
    """Column means; the delta is recomputed from the mean accuracies so the
    row satisfies the same delta identity as every other row."""
    if not rows:
        raise ValueError("no rows to average")
    n = len(rows)
    orig = sum(r.original_accuracy for r in rows) / n
    comp = sum(r.compressed_accuracy for r in rows) / n
    return AccuracyDelta.measure(AVERAGE_ROW_NAME, rows[0].analyzer, orig, comp)


def rows_to_csv(rows: list[AccuracyDelta]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_COLUMNS)
    for r in rows:
        writer.writerow(
            [r.dataset, r.analyzer, repr(r.original_accuracy), repr(r.compressed_accuracy), repr(r.delta)]
        )
    return buf.getvalue()


def rows_from_csv(text: str) -> list[AccuracyDelta]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != list(_COLUMNS):
        raise ValueError(f"unexpected CSV header {header!r}")
    rows = []
    for record in reader:
        if not record:
            continue
        dataset, analyzer, orig, comp, delta = record
        rows.append(AccuracyDelta(dataset, analyzer, float(orig), float(comp), float(delta)))
    return rows


def rows_to_table(rows: list[AccuracyDelta]) -> str:
    """Aligned text table, percentages to one decimal place."""
    header = ("dataset", "analyzer", "original", "compressed", "delta")
    body = [
        (
            r.dataset,
            r.analyzer,
            f"{r.original_accuracy:.1f}",
            f"{r.compressed_accuracy:.1f}",
            f"{r.delta:+.1f}",
        )
        for r in rows
    ]
    widths = [max(len(header[c]), *(len(row[c]) for row in body)) for c in range(len(header))]
    lines = []
    for row in [header, *body]:
        left = row[0].ljust(widths[0]) + "  " + row[1].ljust(widths[1])
        right = "  ".join(cell.rjust(widths[c + 2]) for c, cell in enumerate(row[2:]))
        lines.append(left + "  " + right)
    return "\n".join(lines) + "\n"
