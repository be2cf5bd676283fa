"""Command-line interface for certilab."""
