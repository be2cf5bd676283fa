"""Tests for the certified star and path shortcuts."""

import math

import pytest

from certilab.certify import Direction, Orientation, is_certified, path_shortcut_diam2, replay_procedure, tree_star_shortcut
from certilab.errors import NotATreeError, ParameterError
from certilab.graph.core import Graph
from certilab.graph.generators import directed_path, random_tree
from certilab.graph.oracles import hop_diameter


class TestTreeStarShortcut:
    """Tests for tree_star_shortcut."""

    def test_star_needs_nothing(self):
        """Test that a depth-one tree gets no edges."""
        tree = [(0, 1), (0, 2), (0, 3)]
        h, order = tree_star_shortcut(Graph(4, tree), 0, tree)
        assert len(h) == 0
        assert len(order) == 0

    def test_path_rooted_at_end(self):
        """Test a 3-edge path rooted at its first vertex."""
        g = directed_path(4)
        h, order = tree_star_shortcut(g, 0, g.edge_pairs())
        assert h.edges() == [(0, 2), (0, 3)]
        assert order.steps == [(0, 2, 1), (0, 3, 2)]
        assert is_certified(g, h)[0]

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_random_tree(self, seed):
        """Test |H| = n - 1 - deg(root) on a random 50-vertex tree."""
        root, edges = random_tree(50, seed)
        g = Graph(50, edges)
        h, order = tree_star_shortcut(g, root, edges)
        degree = sum(1 for u, _ in edges if u == root)
        assert len(h) == 49 - degree
        assert is_certified(g, h)[0]
        assert set(replay_procedure(g, order).edges()) == set(h.edges())

    def test_to_root_orientation(self):
        """Test edges pointing into the root."""
        g = Graph(3, [(2, 1), (1, 0)])
        h, _ = tree_star_shortcut(g, 0, g.edge_pairs(), Orientation.TO_ROOT)
        assert h.edges() == [(2, 0)]
        assert is_certified(g, h)[0]

    def test_wrong_orientation_rejected(self):
        """Test that edges against the orientation raise NotATreeError."""
        g = Graph(3, [(2, 1), (1, 0)])
        with pytest.raises(NotATreeError):
            tree_star_shortcut(g, 0, g.edge_pairs(), Orientation.FROM_ROOT)

    def test_cycle_rejected(self):
        """Test that a cycle in the tree edges raises NotATreeError."""
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(NotATreeError):
            tree_star_shortcut(g, 0, g.edge_pairs())


class TestPathShortcut:
    """Tests for path_shortcut_diam2."""

    def test_single_edge(self):
        """Test k = 1 needs no edges."""
        h, _ = path_shortcut_diam2([0, 1])
        assert len(h) == 0

    def test_two_edges(self):
        """Test k = 2 gives the single edge (v0, v2)."""
        h, order = path_shortcut_diam2([0, 1, 2])
        assert h.edges() == [(0, 2)]
        assert order.steps == [(0, 2, 1)]

    def test_seven_edges(self):
        """Test k = 7 reaches diameter 2 with at most 17 edges."""
        h, _ = path_shortcut_diam2(list(range(8)))
        assert len(h) <= 17
        assert hop_diameter(directed_path(8), h.edges()) == 2

    @pytest.mark.parametrize("k", [3, 10, 31, 64, 100])
    def test_diameter_size_and_replay(self, k):
        """Test diameter two, the size bound and a replayable order."""
        g = directed_path(k + 1)
        h, order = path_shortcut_diam2(list(range(k + 1)))
        assert hop_diameter(g, h.edges()) <= 2
        assert len(h) <= k * math.ceil(math.log2(k + 1))
        assert is_certified(g, h)[0]
        assert set(replay_procedure(g, order).edges()) == set(h.edges())

    def test_backward_direction(self):
        """Test edges pointing from later to earlier path vertices."""
        h, _ = path_shortcut_diam2([0, 1, 2], Direction.BACKWARD)
        assert h.edges() == [(2, 0)]

    def test_bad_paths_rejected(self):
        """Test that short or repeating paths raise ParameterError."""
        with pytest.raises(ParameterError):
            path_shortcut_diam2([0])
        with pytest.raises(ParameterError):
            path_shortcut_diam2([0, 1, 0])
