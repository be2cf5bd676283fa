"""Tests for the obstacle product family."""

import pytest

from certilab.config.limits import Limits, set_limits
from certilab.errors import ParameterError, ResourceLimitError
from certilab.graph.core import is_valid_path
from certilab.graph.oracles import is_unique_path, topological_order
from certilab.instances.obstacle import build_rp_graph, outer_paths


@pytest.fixture(scope="module")
def small_product():
    """Inner copies of the d=2, D=1, r=sqrt(2) grid (432 vertices) within 5000 vertices."""
    return build_rp_graph(0.1, 5000, rng_seed=3, inner_D=1, inner_r="sqrt(2)")


class TestOuterPaths:
    """Tests for outer_paths."""

    def test_outer_paths_are_two_edge_and_disjoint(self):
        """Test that outer paths have a distinct middle vertex each."""
        paths = outer_paths()
        assert len(paths) == 100
        assert all(len(p) == 3 for p in paths)
        assert len({p[1] for p in paths}) == len(paths)


class TestObstacleProduct:
    """Tests for build_rp_graph."""

    def test_budget_fills_whole_copies(self, small_product):
        """Test that copies are added while 434 more vertices fit."""
        assert small_product.params["copies"] == 11
        assert small_product.graph.n == 4774
        assert small_product.graph.n <= 5000
        assert small_product.graph.m == 11 * 300 + 22

    def test_composed_paths_unique(self, small_product):
        """Test that each composed path is valid and the unique path between its ends."""
        assert len(small_product.critical_paths) == 11
        for path in small_product.critical_paths:
            assert len(path) == 5
            assert is_valid_path(small_product.graph, path)
            ok, found = is_unique_path(small_product.graph, path[0], path[-1])
            assert ok
            assert found == path

    def test_acyclic_and_layout(self, small_product):
        """Test the id layout: first layer, copies, last layer."""
        topological_order(small_product.graph)
        assert small_product.sources == list(range(11))
        assert small_product.sinks == list(range(4763, 4774))

    def test_deterministic_in_seed(self, small_product):
        """Test that the seed fixes the inner path choice."""
        again = build_rp_graph(0.1, 5000, rng_seed=3, inner_D=1, inner_r="sqrt(2)")
        assert again.critical_paths == small_product.critical_paths

    def test_parameter_checks(self):
        """Test budget and eps validation."""
        with pytest.raises(ParameterError):
            build_rp_graph(1.0, 5000, inner_D=1, inner_r="sqrt(2)")
        with pytest.raises(ParameterError):
            build_rp_graph(0.1, 300, inner_D=1, inner_r="sqrt(2)")
        set_limits(Limits(rp_size_cap=1000))
        with pytest.raises(ResourceLimitError):
            build_rp_graph(0.1, 5000)
