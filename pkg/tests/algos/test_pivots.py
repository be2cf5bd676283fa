"""Tests for the pivot-based shortcuts."""

import pytest

from certilab.algos import depth_bound, fineman, jls, sampling_probability
from certilab.certify import certification_order, is_certified, validate_shortcut
from certilab.errors import CycleError, ParameterError, StructuralError
from certilab.graph.core import Graph
from certilab.graph.generators import directed_path, layered_dag, random_dag
from certilab.graph.oracles import hop_diameter


class TestFineman:
    """Tests for the recursive single-pivot shortcut."""

    def test_single_vertex(self):
        """Test that one vertex needs no edges."""
        result = fineman(Graph(1, []))
        assert len(result.shortcut) == 0
        assert result.metrics["pivots"] == 0

    def test_middle_pivot_on_short_path(self):
        """Test that pivoting at v1 of a -> b -> c only meets original edges."""
        result = fineman(directed_path(3), first_pivot=1)
        assert len(result.shortcut) == 0
        assert result.params == {"first_pivot": 1}

    def test_first_pivot_at_source(self, path5):
        """Test that a pivot at v0 gets an edge to every vertex it reaches."""
        result = fineman(path5, first_pivot=0)
        assert {(0, 2), (0, 3), (0, 4)} <= set(result.shortcut.edges())

    def test_random_dags_certified(self, small_dags):
        """Test certification and diameter on random DAGs."""
        for seed, g in enumerate(small_dags):
            result = fineman(g, seed=seed)
            validate_shortcut(g, result.shortcut)
            certified, _ = is_certified(g, result.certified_extension)
            assert certified
            assert result.certified_extension.edges() == result.shortcut.edges()
            assert hop_diameter(g, result.shortcut.edges()) <= hop_diameter(g)

    def test_deterministic(self, small_dags):
        """Test that the seed fixes the output."""
        g = small_dags[5]
        assert fineman(g, seed=3).shortcut.edges() == fineman(g, seed=3).shortcut.edges()

    def test_bad_inputs(self, path5):
        """Test pivots outside the graph and non-DAG inputs."""
        with pytest.raises(ParameterError):
            fineman(path5, first_pivot=5)
        with pytest.raises(StructuralError):
            fineman(Graph(2, [(0, 1)], directed=False))
        with pytest.raises(CycleError):
            fineman(Graph(3, [(0, 1), (1, 2), (2, 0)]))


class TestJLS:
    """Tests for the batched-pivot shortcut."""

    def test_sampling_probability(self):
        """Test the probability schedule and its depth bound."""
        assert sampling_probability(2, 0, 1) == 1.0
        assert sampling_probability(2, 0, 1000) == pytest.approx(40 * 6.907755 / 1000, rel=1e-5)
        assert depth_bound(2, 1000) == 2

    def test_single_vertex(self):
        """Test that one vertex gives nothing."""
        assert len(jls(Graph(1, [])).shortcut) == 0

    def test_everything_pivots_on_small_graphs(self, small_dags):
        """Test that p >= 1 at depth 0 makes every vertex a pivot and closes the graph."""
        g = small_dags[12]
        assert g.n == 20
        result = jls(g, seed=1)
        assert result.metrics["pivots"] == 20
        assert result.metrics["rounds"] == 1
        assert hop_diameter(g, result.shortcut.edges()) <= 1

    def test_deep_recursion_certified(self):
        """Test a run that samples below probability 1."""
        g = layered_dag(100, 3, 0.02, 5)
        result = jls(g, k=2, seed=2)
        assert sampling_probability(2, 0, g.n) < 1.0
        assert result.metrics["rounds"] <= result.metrics["depth_bound"] + 1
        certified, _ = is_certified(g, result.certified_extension)
        assert certified
        assert len(certification_order(g, result.certified_extension)) == len(result.certified_extension)

    def test_bad_inputs(self, path5):
        """Test k below 2 and undirected inputs."""
        with pytest.raises(ParameterError):
            jls(path5, k=1)
        with pytest.raises(StructuralError):
            jls(Graph(2, [(0, 1)], directed=False))


class TestRandomDagSweep:
    """Both pivot shortcuts on fifty seeded random DAGs with up to 158 vertices."""

    @staticmethod
    def _graph(seed):
        n = 60 + 2 * seed
        return random_dag(n, 2 * n, seed)

    @pytest.mark.parametrize("seed", range(50))
    def test_fineman(self, seed):
        """Test that the single-pivot shortcut is certified and never lengthens the diameter."""
        g = self._graph(seed)
        result = fineman(g, seed=seed)
        validate_shortcut(g, result.shortcut)
        assert is_certified(g, result.certified_extension)[0]
        assert hop_diameter(g, result.shortcut.edges()) <= hop_diameter(g)

    @pytest.mark.parametrize("seed", range(50))
    def test_jls(self, seed):
        """Test that the batched-pivot shortcut is certified and stops by the depth bound."""
        g = self._graph(seed)
        result = jls(g, k=2, seed=seed)
        validate_shortcut(g, result.shortcut)
        assert is_certified(g, result.certified_extension)[0]
        assert hop_diameter(g, result.shortcut.edges()) <= hop_diameter(g)
        assert result.metrics["rounds"] <= result.metrics["depth_bound"] + 1
