import csv
import io
from typing import List, Optional, TextIO, Tuple

from .._model import (
    ComputeReport,
    IdentityRow,
    OutputFormat,
    Report,
    TableReport,
    TableRow,
    VerifyReport,
)


def _csv_table(report: Report) -> Tuple[List[str], List[dict]]:
    # Header and rows of the tabular part of a report
    if isinstance(report, VerifyReport):
        return list(IdentityRow.model_fields), [r.model_dump() for r in report.rows]
    if isinstance(report, TableReport):
        return list(TableRow.model_fields), [r.model_dump() for r in report.rows]
    if isinstance(report, ComputeReport):
        row = report.model_dump(by_alias=True)
        return list(row), [row]
    raise TypeError(f"Unknown report type {type(report).__name__}!")


def to_csv(report: Report) -> str:
    """Render a report as RFC 4180 CSV with a header line."""
    header, rows = _csv_table(report)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if row[k] is None else row[k] for k in header])
    return buffer.getvalue()


def render(report: Report, fmt: OutputFormat) -> str:
    """Render a report in an output format."""
    if fmt is OutputFormat.csv:
        return to_csv(report)
    return report.to_json()


def write_report(
    report: Report, fmt: OutputFormat, out: Optional[str], stdout: TextIO
) -> None:
    """Write a report to a file, or to ``stdout`` when no path is given."""
    text = render(report, fmt)
    if out is None:
        stdout.write(text)
        return
    with open(out, "w", newline="", encoding="utf-8") as f:
        f.write(text)
