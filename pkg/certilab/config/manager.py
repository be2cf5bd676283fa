"""Configuration manager for certilab.

This module loads limit overrides from the config file and the environment
and turns them into a Limits value the rest of the package reads.
"""

import logging
import os
from typing import Dict, Optional

from rich.console import Console

from certilab.config.limits import Limits, get_limits, set_limits

logger = logging.getLogger(__name__)

ENV_PREFIX = "CERTILAB_"


def default_config_path() -> str:
    """Config file location, honouring CERTILAB_CONFIG."""
    return os.environ.get("CERTILAB_CONFIG") or os.path.expanduser("~/.config/certilab.conf")


class ConfigManager:
    """Configuration manager for certilab.

    Values are resolved in this order:
    1. Environment variables (CERTILAB_<KEY>)
    2. Config file
    3. Default values from certilab.config.limits
    """

    def __init__(self, console: Optional[Console] = None, config_path: Optional[str] = None):
        """Initialize the configuration manager.

        Args:
            console: Rich console for output
            config_path: Explicit config file path (defaults to default_config_path())
        """
        self.console = console or Console()
        self.config_path = config_path or default_config_path()
        self.config_vars: Dict[str, str] = {}

    def load_config(self) -> Dict[str, str]:
        """Load configuration from file.

        Returns:
            Dictionary of configuration variables (raw strings)
        """
        self.config_vars = self._read_config_file()
        return self.config_vars

    def _read_config_file(self) -> Dict[str, str]:
        config_vars: Dict[str, str] = {}
        if not os.path.exists(self.config_path):
            return config_vars

        try:
            with open(self.config_path, "r") as f:
                lines = f.readlines()
        except OSError as e:
            self.console.print(f"[yellow]Error reading config file: {str(e)}[/yellow]")
            return config_vars

        for line in lines:
            line = line.strip()

            # Skip empty lines and comments
            if not line or line.startswith("#") or "=" not in line:
                continue

            key, value = line.split("=", 1)
            key = key.strip()
            value = value.strip()

            # Handle inline comments in values
            if "#" in value:
                value = value.split("#")[0].strip()

            config_vars[key] = value

        return config_vars

    def resolve_limits(self, base: Optional[Limits] = None) -> Limits:
        """Combine defaults, config file and environment into a Limits value.

        Unknown keys and non-integer values are reported and ignored.
        """
        base = base or Limits()
        known = Limits.keys()
        values: Dict[str, int] = {}

        sources = dict(self.config_vars)
        for key in known:
            env_value = os.environ.get(f"{ENV_PREFIX}{key}")
            if env_value is not None:
                sources[key] = env_value

        for key, raw in sources.items():
            if key not in known:
                logger.warning(f"Ignoring unknown config key: {key}")
                continue
            try:
                parsed = int(raw)
            except ValueError:
                logger.warning(f"Config key {key} expects an integer, got {raw!r}; keeping default")
                continue
            if parsed <= 0:
                logger.warning(f"Config key {key} must be positive, got {parsed}; keeping default")
                continue
            values[known[key]] = parsed

        return base.updated(values)

    def apply(self) -> Limits:
        """Load, resolve and install the limits. Returns what was installed."""
        self.load_config()
        limits = self.resolve_limits(get_limits())
        set_limits(limits)
        return limits
