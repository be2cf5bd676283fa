"""Configuration for certilab: limits, config file and debug switch."""

from certilab.config.limits import Limits, get_limits, set_limits, get_debug
from certilab.config.manager import ConfigManager

__all__ = ["Limits", "get_limits", "set_limits", "get_debug", "ConfigManager"]
