"""Verification reports: CSV and JSON forms, merging and the console summary."""

import csv
import io
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from rich.console import Console
from rich.table import Table

from certilab.errors import InputMismatchError
from certilab.harness.experiment import CHECKS

SCHEMA = "certilab-report v1"

COLUMNS = [
    "instance",
    "algo",
    "seed",
    "size",
    "diameter_before",
    "diameter_after",
    "certified",
    "witness_lower_bound",
    "cert_complexity",
    "wall_ms",
    *[f"check_{name}" for name in CHECKS],
    "error",
]


@dataclass
class Report:
    """Per-run rows plus the list of checks every row carries."""

    checks: List[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def aggregate(self) -> Dict[str, Dict[str, int]]:
        totals = {check: {"passed": 0, "failed": 0} for check in self.checks}
        for row in self.rows:
            for check in self.checks:
                state = row["checks"].get(check)
                if state is None:
                    raise InputMismatchError(f"row {row.get('algo')}/{row.get('seed')} lacks the {check} check")
                totals[check]["passed" if state["passed"] else "failed"] += 1
        return totals

    @property
    def passed(self) -> bool:
        return all(t["failed"] == 0 for t in self.aggregate().values())

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA,
            "checks": list(self.checks),
            "rows": self.rows,
            "aggregate": self.aggregate(),
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "Report":
        if payload.get("schema") != SCHEMA:
            raise InputMismatchError(f"report schema {payload.get('schema')!r}, expected {SCHEMA!r}")
        return cls(checks=list(payload.get("checks", [])), rows=list(payload.get("rows", [])))

    def to_csv(self) -> str:
        buffer = io.StringIO()
        buffer.write(f"# {SCHEMA}\n")
        writer = csv.DictWriter(buffer, fieldnames=COLUMNS, extrasaction="ignore", lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            flat = {key: _cell(row.get(key)) for key in COLUMNS}
            for check in CHECKS:
                state = row["checks"].get(check)
                flat[f"check_{check}"] = "" if state is None else ("pass" if state["passed"] else "fail")
            writer.writerow(flat)
        return buffer.getvalue()


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def merge_reports(reports: List[Report]) -> Report:
    """Concatenate reports that ran the same checks."""
    if not reports:
        raise InputMismatchError("no reports to merge")
    checks = reports[0].checks
    for other in reports[1:]:
        if other.checks != checks:
            raise InputMismatchError(f"reports ran different checks: {checks} vs {other.checks}")
    return Report(checks=list(checks), rows=[row for report in reports for row in report.rows])


def render_summary(report: Report, console: Console, title: Optional[str] = None) -> None:
    """Print one table row per check with pass and fail counts."""
    table = Table(title=title or "Verification summary")
    table.add_column("check")
    table.add_column("passed", justify="right")
    table.add_column("failed", justify="right")
    for check, totals in report.aggregate().items():
        style = "pass" if totals["failed"] == 0 else "fail"
        table.add_row(check, str(totals["passed"]), f"[{style}]{totals['failed']}[/{style}]")
    console.print(table)
    errors = [row for row in report.rows if row.get("error")]
    for row in errors:
        console.print(f"[warning]{row['algo']} seed {row['seed']}: {row['error']}[/warning]")
    verdict = "[pass]all checks passed[/pass]" if report.passed else "[fail]some checks failed[/fail]"
    console.print(verdict)
