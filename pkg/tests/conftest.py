"""Pytest configuration for certilab tests."""

import os
import sys
import pytest
from unittest.mock import MagicMock
from rich.console import Console

# Add the root directory to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from certilab.config.limits import Limits, set_limits  # noqa: E402
from certilab.graph.core import Graph  # noqa: E402
from certilab.graph.generators import directed_path, random_dag  # noqa: E402


@pytest.fixture
def mock_console():
    """Create a mock console for testing."""
    console = MagicMock(spec=Console)
    return console


@pytest.fixture
def temp_env():
    """Create a temporary environment for tests that modify environment variables."""
    old_env = dict(os.environ)
    yield
    os.environ.clear()
    os.environ.update(old_env)


@pytest.fixture(autouse=True)
def default_limits():
    """Every test starts from the default limits."""
    set_limits(Limits())
    yield
    set_limits(Limits())


@pytest.fixture
def path5() -> Graph:
    """The directed path v0 -> v1 -> v2 -> v3 -> v4."""
    return directed_path(5)


@pytest.fixture
def diamond() -> Graph:
    """0 -> {1, 2} -> 3."""
    return Graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)], directed=True, acyclic=True)


@pytest.fixture
def small_dags():
    """Twenty seeded random DAGs with 8 to 30 vertices."""
    graphs = []
    for seed in range(20):
        n = 8 + seed
        graphs.append(random_dag(n, min(2 * n, n * (n - 1) // 2), seed))
    return graphs
