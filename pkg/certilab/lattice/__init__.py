"""Lattice balls and their convex-hull direction sets."""

from certilab.lattice.hull import (
    LatticePoint,
    ball_array,
    ball_points,
    convex_hull,
    gift_wrap_positive_vertices,
    gift_wrap_vertices,
    hull_positive_vertices,
    radius_ceiling,
    radius_label,
    radius_squared,
)

__all__ = [
    "LatticePoint",
    "ball_array",
    "ball_points",
    "convex_hull",
    "gift_wrap_positive_vertices",
    "gift_wrap_vertices",
    "hull_positive_vertices",
    "radius_ceiling",
    "radius_label",
    "radius_squared",
]
