"""Console, logging and file output for certilab."""

from certilab.io.output import read_json, setup_console, setup_logging, write_json_atomic, write_text_atomic

__all__ = ["read_json", "setup_console", "setup_logging", "write_json_atomic", "write_text_atomic"]
