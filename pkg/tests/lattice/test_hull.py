"""Tests for lattice balls and their hull vertices."""

from fractions import Fraction

import numpy as np
import pytest

from certilab.config.limits import Limits, set_limits
from certilab.errors import ParameterError, ResourceLimitError
from certilab.lattice.hull import (
    ball_array,
    ball_points,
    convex_hull,
    gift_wrap_positive_vertices,
    gift_wrap_vertices,
    hull_positive_vertices,
    radius_ceiling,
    radius_label,
    radius_squared,
    sort_by_angle,
)


class TestRadius:
    """Tests for radius parsing."""

    def test_radius_forms(self):
        """Test integer, fraction and square-root radii."""
        assert radius_squared(5) == 25
        assert radius_squared("3/2") == Fraction(9, 4)
        assert radius_squared("sqrt(2)") == 2
        assert radius_squared("sqrt 8") == 8

    def test_unparseable_radius(self):
        """Test that garbage raises ParameterError."""
        with pytest.raises(ParameterError):
            radius_squared("five")

    def test_labels_and_ceilings(self):
        """Test canonical labels and exact ceilings."""
        assert radius_label(5) == "5"
        assert radius_label("sqrt(16)") == "4"
        assert radius_label("sqrt(8)") == "sqrt(8)"
        assert radius_ceiling("sqrt(2)") == 2
        assert radius_ceiling(3, factor=2) == 6


class TestBall:
    """Tests for B(r)."""

    def test_ball_of_radius_one(self):
        """Test B(1) is the origin and its four neighbours."""
        assert ball_points(1) == {(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)}

    def test_ball_array_membership(self):
        """Test every point lies inside and the count matches a direct scan."""
        points = ball_array(7)
        assert np.all(points[:, 0] ** 2 + points[:, 1] ** 2 <= 49)
        expected = sum(1 for x in range(-7, 8) for y in range(-7, 8) if x * x + y * y <= 49)
        assert len(points) == expected

    def test_radius_cap(self):
        """Test that the configured radius cap is enforced."""
        set_limits(Limits(lattice_radius_cap=10))
        with pytest.raises(ResourceLimitError):
            ball_array(11)


class TestHullVertices:
    """Tests for V(r)."""

    def test_radius_five(self):
        """Test V(5) = {(4,3), (3,4)} in angle order."""
        assert hull_positive_vertices(5) == [(4, 3), (3, 4)]

    def test_small_radius_has_no_positive_vertices(self):
        """Test that B(1) has no hull vertex with both coordinates positive."""
        assert hull_positive_vertices(1) == []

    @pytest.mark.parametrize("radius", [5, 10, 20, 40, 80, 160])
    def test_matches_gift_wrap_oracle(self, radius):
        """Test the monotone-chain hull against the gift-wrap oracle."""
        assert hull_positive_vertices(radius) == gift_wrap_positive_vertices(radius)

    @pytest.mark.parametrize("radius", [20, 40, 80])
    def test_growth_ratio(self, radius):
        """Test |V(2r)| / |V(r)| stays within [1.1, 2.4]."""
        ratio = len(hull_positive_vertices(2 * radius)) / len(hull_positive_vertices(radius))
        assert 1.1 <= ratio <= 2.4

    def test_vertices_sorted_by_angle(self):
        """Test that consecutive vertices turn counter-clockwise."""
        vertices = hull_positive_vertices(40)
        for a, b in zip(vertices, vertices[1:]):
            assert a[0] * b[1] - a[1] * b[0] > 0

    def test_hull_of_square_drops_collinear_points(self):
        """Test strict-vertex output of both hull routines."""
        square = sorted((x, y) for x in range(3) for y in range(3))
        assert sorted(convex_hull(square)) == [(0, 0), (0, 2), (2, 0), (2, 2)]
        assert sorted(gift_wrap_vertices(np.array(square))) == [(0, 0), (0, 2), (2, 0), (2, 2)]

    def test_sort_by_angle(self):
        """Test polar ordering in the positive quadrant."""
        assert sort_by_angle([(1, 5), (5, 1), (3, 3)]) == [(5, 1), (3, 3), (1, 5)]
