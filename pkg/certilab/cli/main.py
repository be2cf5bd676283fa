"""Main entry point for the certilab package."""

import json
import os
import sys
from typing import Any, List, Optional, Tuple

from rich.console import Console

from certilab.cli.args import setup_argparse
from certilab.cli.commands import (
    COMMANDS,
    EXIT_CHECK_FAILED,
    EXIT_INPUT_MISMATCH,
    EXIT_RUN_FAILED,
)
from certilab.config.limits import get_debug
from certilab.config.manager import ConfigManager
from certilab.errors import CertilabError, CheckFailedError, InputMismatchError
from certilab.io.output import setup_console, setup_logging


def initialize_cli(argv: Optional[List[str]] = None) -> Tuple[Any, Console]:
    """Parse arguments, set up the console, logging and limits.

    Returns:
        Tuple containing parsed arguments and console
    """
    parser = setup_argparse()
    args = parser.parse_args(argv)

    # Set debug mode if requested
    if args.debug:
        os.environ["CERTILAB_DEBUG"] = "true"

    console = setup_console()
    setup_logging(get_debug())
    ConfigManager(console, args.config).apply()
    return args, console


def _fail(console: Console, message: str, code: int) -> int:
    console.print(f"[bold red]Error: {message}[/bold red]")
    if get_debug():
        import traceback
        console.print(f"[red]{traceback.format_exc()}[/red]")
    return code


def run_cli(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit code.

    Exit codes: 0 pass, 1 check failure, 2 run failure, 3 input mismatch.
    """
    args, console = initialize_cli(argv)
    try:
        return COMMANDS[args.command](args, console)
    except KeyboardInterrupt:
        console.print("\n[yellow]Operation interrupted. Exiting.[/yellow]")
        return EXIT_RUN_FAILED
    except CheckFailedError as e:
        return _fail(console, str(e), EXIT_CHECK_FAILED)
    except InputMismatchError as e:
        return _fail(console, str(e), EXIT_INPUT_MISMATCH)
    except (OSError, json.JSONDecodeError) as e:
        return _fail(console, f"cannot read input: {e}", EXIT_INPUT_MISMATCH)
    except CertilabError as e:
        return _fail(console, str(e), EXIT_RUN_FAILED)


def main() -> None:
    """Main entry point for the CLI."""
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
