"""
certilab - certified shortcuts and hopsets for DAGs and undirected graphs.
This package provides instance generators for lower-bound graph families,
the shortcut algorithms they are measured against, a certification engine
and a batch harness that ties them together.
"""

__version__ = "0.3.0"

from certilab.cli.main import main

__all__ = ["main"]
