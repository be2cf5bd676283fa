"""Subcommand handlers. Each returns the process exit code."""

import logging
import os
from typing import Any, List, Tuple

from rich.console import Console

from certilab.config.limits import get_limits, set_limits
from certilab.harness.checks import verify_rows
from certilab.harness.experiment import ExperimentSpec, parse_checks, parse_params, parse_seeds
from certilab.harness.families import generate
from certilab.harness.report import Report, merge_reports, render_summary
from certilab.harness.runner import run_experiment
from certilab.io.output import read_json, write_json_atomic, write_text_atomic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_RUN_FAILED = 2
EXIT_INPUT_MISMATCH = 3


def report_paths(out: str) -> Tuple[str, str]:
    """CSV and JSON paths for a report base path (a .csv/.json suffix is dropped)."""
    base, ext = os.path.splitext(out)
    if ext.lower() not in (".csv", ".json"):
        base = out
    return f"{base}.csv", f"{base}.json"


def _write_report(report: Report, out: str, console: Console) -> None:
    csv_path, json_path = report_paths(out)
    write_text_atomic(csv_path, report.to_csv())
    write_json_atomic(json_path, report.to_dict())
    console.print(f"[info]Report written to {csv_path} and {json_path}[/info]")


def cmd_generate(args: Any, console: Console) -> int:
    params = parse_params(args.params)
    payload = generate(args.family, params, args.seed)
    write_json_atomic(args.out, payload)
    if isinstance(payload, list):
        console.print(f"[info]{len(payload)} hull vertices written to {args.out}[/info]")
    else:
        graph = payload["graph"]
        console.print(f"[info]{args.family} instance with n={graph['n']} written to {args.out}[/info]")
    return EXIT_OK


def cmd_run(args: Any, console: Console) -> int:
    if args.workers is not None:
        set_limits(get_limits().updated({"workers": args.workers}))
    spec = ExperimentSpec(
        instance_path=args.instance,
        algo=args.algo,
        params=parse_params(args.params),
        seeds=parse_seeds(args.seed),
        out_path=args.out,
        record_timing=not args.no_timing,
    )
    document, failed = run_experiment(spec)
    write_json_atomic(args.out, document)
    runs = len(document["runs"])
    if failed:
        console.print(f"[warning]{failed} of {runs} runs failed; see the error rows in {args.out}[/warning]")
        return EXIT_RUN_FAILED
    console.print(f"[info]{runs} runs of {spec.algo} written to {args.out}[/info]")
    return EXIT_OK


def cmd_verify(args: Any, console: Console) -> int:
    checks = parse_checks(args.checks)
    instance_payload = read_json(args.instance)
    results = read_json(args.results)
    name = os.path.splitext(os.path.basename(args.instance))[0]
    report = Report(checks=checks, rows=verify_rows(instance_payload, results, checks, name))
    _write_report(report, args.out, console)
    render_summary(report, console)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_report(args: Any, console: Console) -> int:
    reports: List[Report] = [Report.from_dict(read_json(path)) for path in args.reports]
    merged = merge_reports(reports)
    if args.out:
        _write_report(merged, args.out, console)
    render_summary(merged, console, title=f"{len(merged.rows)} runs from {len(reports)} reports")
    return EXIT_OK if merged.passed else EXIT_CHECK_FAILED


COMMANDS = {
    "gen": cmd_generate,
    "run": cmd_run,
    "verify": cmd_verify,
    "report": cmd_report,
}
