"""Tests for the sampling shortcuts."""

import statistics

import pytest

from certilab.algos import ChainCover, KPMode, kp_sample, uy_sample
from certilab.certify import ShortcutMode, validate_shortcut
from certilab.errors import ParameterError, StructuralError
from certilab.graph.core import Graph
from certilab.graph.generators import directed_path, random_dag
from certilab.graph.oracles import transitive_closure
from certilab.instances import build_kp_gadget, build_uy_gadget, Instance, aux_threads


class TestUYSample:
    """Tests for uy_sample."""

    def test_zero_probability(self, path5):
        """Test p = 0 samples nothing."""
        result = uy_sample(path5, 0.0)
        assert len(result.shortcut) == 0
        assert result.metrics["sampled"] == 0
        assert result.certified_extension is None

    def test_full_probability_on_path(self):
        """Test p = 1 on a -> b -> c gives {(a, c)}."""
        assert uy_sample(directed_path(3), 1.0).shortcut.edges() == [(0, 2)]

    def test_hopset_weights(self, path5):
        """Test that hopset mode stores exact distances."""
        result = uy_sample(path5, 1.0, mode=ShortcutMode.HOPSET)
        assert result.shortcut.weight(0, 4) == 4
        validate_shortcut(path5, result.shortcut)

    def test_max_distance(self, path5):
        """Test that far pairs are skipped."""
        result = uy_sample(path5, 1.0, max_distance=2)
        assert set(result.shortcut.edges()) == {(0, 2), (1, 3), (2, 4)}

    def test_undirected_pairs_once(self):
        """Test that undirected graphs add each pair once."""
        g = Graph(3, [(0, 1), (1, 2)], directed=False)
        assert len(uy_sample(g, 1.0).shortcut) == 1

    def test_probability_range(self, path5):
        """Test that p outside [0, 1] raises ParameterError."""
        with pytest.raises(ParameterError):
            uy_sample(path5, 1.5)

    def test_mean_size_matches_expectation(self):
        """Test mean |H| over 100 seeds against p^2 times the closure non-edges."""
        g = random_dag(30, 60, 11)
        pairs = len(transitive_closure(g)) - g.m
        p = 0.5
        sizes = [len(uy_sample(g, p, seed=seed).shortcut) for seed in range(100)]
        expected = p * p * pairs
        spread = statistics.pstdev(sizes)
        assert abs(statistics.mean(sizes) - expected) <= 3 * max(spread, 1.0)


class TestKPSample:
    """Tests for kp_sample."""

    def test_no_sampled_chains(self, path5):
        """Test p_path = 0 gives nothing."""
        chains = ChainCover(chains=[[2, 3, 4]], ell=1)
        assert len(kp_sample(path5, chains, 1.0, 0.0).shortcut) == 0

    def test_whole_path_chain(self, path5):
        """Test that a chain equal to the path only meets successors."""
        chains = ChainCover(chains=[[0, 1, 2, 3, 4]], ell=1)
        assert len(kp_sample(path5, chains, 1.0, 1.0).shortcut) == 0

    def test_first_reachable_vertex(self):
        """Test edges to the first reachable vertex of the chain."""
        g = directed_path(6)
        chains = ChainCover(chains=[[3, 4, 5]], ell=1)
        assert kp_sample(g, chains, 1.0, 1.0).shortcut.edges() == [(0, 3), (1, 3)]
        assert len(kp_sample(g, chains, 1.0, 1.0, mode=KPMode.PATHS_ONLY).shortcut) == 0

    def test_gadget_trace(self):
        """Test that an S auxiliary gains an edge to the first thread vertex it reaches."""
        inner = Instance(graph=Graph(4, [(0, 1), (1, 2), (2, 3)]), critical_paths=[[0, 1, 2, 3]])
        gadget = build_kp_gadget(inner, copies=2)
        threads = aux_threads(gadget)
        chains = ChainCover(chains=threads, ell=len(threads))
        result = kp_sample(gadget.graph, chains, 1.0, 1.0)
        s_aux = gadget.aux_of[0][0]
        assert (s_aux, threads[0][0]) in result.shortcut

    def test_invalid_cover_rejected(self, path5):
        """Test that overlapping chains raise StructuralError."""
        chains = ChainCover(chains=[[0, 1], [1, 2]], ell=2)
        with pytest.raises(StructuralError):
            kp_sample(path5, chains, 1.0, 1.0)

    def test_uy_gadget_graph_accepts_sampling(self):
        """Test uy sampling on a star gadget stays inside the closure."""
        inner = Instance(graph=Graph(4, [(0, 1), (1, 2), (2, 3)]), critical_paths=[[0, 1, 2, 3]])
        gadget = build_uy_gadget(inner)
        validate_shortcut(gadget.graph, uy_sample(gadget.graph, 0.6, seed=4).shortcut)
