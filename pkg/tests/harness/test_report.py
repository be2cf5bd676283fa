"""Tests for verification reports."""

import pytest

from certilab.errors import InputMismatchError
from certilab.harness import COLUMNS, SCHEMA, Report, merge_reports, render_summary


def _row(algo="jls", seed=0, passed=True, error=None):
    row = {
        "instance": "dag",
        "algo": algo,
        "seed": seed,
        "size": 7,
        "diameter_before": 5,
        "diameter_after": 2,
        "certified": passed,
        "checks": {"certified": {"passed": passed, "detail": ""}},
    }
    if error:
        row["error"] = error
    return row


class TestReport:
    """Tests for the Report record."""

    def test_csv_layout(self):
        """Test the schema line, the header and a pass cell."""
        lines = Report(checks=["certified"], rows=[_row()]).to_csv().splitlines()
        assert lines[0] == f"# {SCHEMA}"
        assert lines[1] == ",".join(COLUMNS)
        cells = dict(zip(COLUMNS, lines[2].split(",")))
        assert cells["certified"] == "true"
        assert cells["check_certified"] == "pass"
        assert cells["check_schedule"] == ""
        assert cells["witness_lower_bound"] == ""

    def test_aggregate_and_verdict(self):
        """Test pass and fail counts."""
        report = Report(checks=["certified"], rows=[_row(seed=0), _row(seed=1, passed=False)])
        assert report.aggregate() == {"certified": {"passed": 1, "failed": 1}}
        assert not report.passed
        assert Report(checks=["certified"]).passed

    def test_missing_check_in_row(self):
        """Test that a row lacking a requested check is an input mismatch."""
        with pytest.raises(InputMismatchError):
            Report(checks=["certified", "closure"], rows=[_row()]).aggregate()

    def test_json_form(self):
        """Test the JSON form and the schema guard."""
        report = Report(checks=["certified"], rows=[_row()])
        payload = report.to_dict()
        assert payload["schema"] == SCHEMA
        assert payload["passed"] is True
        assert Report.from_dict(payload).rows == report.rows
        payload["schema"] = "certilab-report v0"
        with pytest.raises(InputMismatchError):
            Report.from_dict(payload)


class TestMergeAndSummary:
    """Tests for merge_reports and render_summary."""

    def test_merge_concatenates_rows(self):
        """Test merging two reports with the same checks."""
        merged = merge_reports([
            Report(checks=["certified"], rows=[_row(seed=0)]),
            Report(checks=["certified"], rows=[_row(seed=1)]),
        ])
        assert [row["seed"] for row in merged.rows] == [0, 1]

    def test_merge_rejects_mismatch(self):
        """Test that different check lists or no reports cannot merge."""
        with pytest.raises(InputMismatchError):
            merge_reports([Report(checks=["certified"]), Report(checks=["closure"])])
        with pytest.raises(InputMismatchError):
            merge_reports([])

    def test_summary_output(self, mock_console):
        """Test that the summary prints the table, error rows and the verdict."""
        report = Report(checks=["certified"], rows=[_row(passed=False, error="ParameterError: uy needs p")])
        render_summary(report, mock_console)
        printed = [str(call.args[0]) for call in mock_console.print.call_args_list]
        assert any("uy needs p" in text for text in printed)
        assert "some checks failed" in printed[-1]
