"""Batch driver: instance families, seeded runs, verification checks and reports."""

from certilab.harness.checks import CHECK_FUNCTIONS, CheckOutcome, verify_rows
from certilab.harness.experiment import CHECKS, ExperimentSpec, parse_checks, parse_params, parse_seeds
from certilab.harness.families import FAMILIES, generate, hull_points
from certilab.harness.report import COLUMNS, SCHEMA, Report, merge_reports, render_summary
from certilab.harness.runner import ALGORITHMS, run_experiment, run_one

__all__ = [
    "ALGORITHMS",
    "CHECKS",
    "CHECK_FUNCTIONS",
    "COLUMNS",
    "CheckOutcome",
    "ExperimentSpec",
    "FAMILIES",
    "Report",
    "SCHEMA",
    "generate",
    "hull_points",
    "merge_reports",
    "parse_checks",
    "parse_params",
    "parse_seeds",
    "render_summary",
    "run_experiment",
    "run_one",
    "verify_rows",
]
