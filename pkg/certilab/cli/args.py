"""Command line argument parsing for certilab."""

import argparse

from certilab import __version__
from certilab.harness.experiment import CHECKS
from certilab.harness.families import FAMILIES
from certilab.harness.runner import ALGORITHMS


def _common_options() -> argparse.ArgumentParser:
    """Options accepted after every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--debug",
        action="store_true",
        help="Enable debug mode with additional diagnostic output",
    )
    common.add_argument(
        "--config",
        help="Config file to read instead of ~/.config/certilab.conf",
    )
    return common


def setup_argparse() -> argparse.ArgumentParser:
    """Set up the argument parser for the CLI."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="certilab",
        description="Generate lower-bound instances, run shortcut algorithms and verify their certificates",
    )
    parser.add_argument(
        "--version",
        "-v",
        action="version",
        version=f"%(prog)s {__version__}",
        help="Show program version and exit",
    )
    commands = parser.add_subparsers(dest="command", required=True, metavar="{gen,run,verify,report}")

    gen = commands.add_parser("gen", parents=[common], help="Write an instance file")
    gen.add_argument(
        "--family",
        "-f",
        required=True,
        choices=sorted([*FAMILIES, "hull"]),
        help="Instance family",
    )
    gen.add_argument("--params", "-p", help="Family parameters as k=v,k2=v2")
    gen.add_argument("--seed", type=int, default=0, help="Generator seed (default: 0)")
    gen.add_argument("--out", "-o", required=True, help="Output JSON path")

    run = commands.add_parser("run", parents=[common], help="Run an algorithm over seeds")
    run.add_argument("--instance", "-i", required=True, help="Instance JSON path")
    run.add_argument("--algo", "-a", required=True, choices=sorted(ALGORITHMS), help="Algorithm")
    run.add_argument("--params", "-p", help="Algorithm parameters as k=v,k2=v2")
    run.add_argument("--seed", "-s", default="0", help="Seeds, e.g. 0,3,5-8 (default: 0)")
    run.add_argument("--out", "-o", required=True, help="Output results JSON path")
    run.add_argument("--workers", type=int, help="Worker threads (defaults to the WORKERS limit)")
    run.add_argument(
        "--no-timing",
        action="store_true",
        help="Leave wall_ms out of the results so reruns are byte-identical",
    )

    verify = commands.add_parser("verify", parents=[common], help="Check results against their instance")
    verify.add_argument("--instance", "-i", required=True, help="Instance JSON path")
    verify.add_argument("--results", "-r", required=True, help="Results JSON path")
    verify.add_argument(
        "--checks",
        "-c",
        default="certified",
        help=f"Comma list of checks from {', '.join(CHECKS)} (default: certified)",
    )
    verify.add_argument("--out", "-o", required=True, help="Report path; .csv and .json are written")

    report = commands.add_parser("report", parents=[common], help="Merge verify reports")
    report.add_argument("reports", nargs="+", help="Report JSON files")
    report.add_argument("--out", "-o", help="Merged report path; .csv and .json are written")
    return parser
