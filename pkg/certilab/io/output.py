"""Output handling for certilab."""

import json
import logging
import os
import tempfile
from typing import Any, Optional

from rich.console import Console
from rich.logging import RichHandler
from rich.theme import Theme


def setup_console() -> Console:
    """Set up and configure the Rich console for output."""
    # Custom theme for the console
    custom_theme = Theme(
        {
            "info": "dim cyan",
            "warning": "magenta",
            "error": "bold red",
            "pass": "bold green",
            "fail": "bold red",
            "subdued": "dim dim",
        }
    )

    # Initialize Rich console
    return Console(theme=custom_theme)


def setup_logging(debug: bool = False, console: Optional[Console] = None) -> None:
    """Route the package loggers through a RichHandler.

    Args:
        debug: Log at DEBUG level instead of INFO
        console: Console the handler writes to (stderr console when omitted)
    """
    handler = RichHandler(
        console=console or Console(stderr=True),
        show_path=debug,
        rich_tracebacks=debug,
        markup=False,
    )
    root = logging.getLogger("certilab")
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if debug else logging.INFO)
    root.propagate = False


def write_json_atomic(path: str, payload: Any) -> None:
    """Write JSON to path via a temp file in the same directory and os.replace."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, temp_path = tempfile.mkstemp(dir=directory, prefix=".certilab-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
            f.write("\n")
        os.replace(temp_path, path)
    except Exception:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise


def write_text_atomic(path: str, text: str) -> None:
    """Write text to path atomically."""
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, temp_path = tempfile.mkstemp(dir=directory, prefix=".certilab-")
    try:
        with os.fdopen(fd, "w", newline="") as f:
            f.write(text)
        os.replace(temp_path, path)
    except Exception:
        if os.path.exists(temp_path):
            os.unlink(temp_path)
        raise


def read_json(path: str) -> Any:
    """Read a JSON document."""
    with open(path, "r") as f:
        return json.load(f)
