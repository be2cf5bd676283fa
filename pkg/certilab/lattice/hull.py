"""Lattice balls B(r) and their strictly positive convex-hull vertices V(r).

Radii are handled through their exact square, so irrational radii such as
sqrt(2) are represented as r^2 = 2 and membership tests stay integral.
"""

import math
import re
from fractions import Fraction
from typing import List, Set, Tuple, Union

import numpy as np

from certilab.config.limits import get_limits
from certilab.errors import ParameterError, ResourceLimitError

LatticePoint = Tuple[int, int]
RadiusLike = Union[int, float, str, Fraction]

_SQRT_PATTERN = re.compile(r"^\s*sqrt\s*\(?\s*([0-9]+(?:/[0-9]+)?)\s*\)?\s*$")


def radius_squared(radius: RadiusLike) -> Fraction:
    """Exact r^2 for a radius given as a number, "p/q", or "sqrt(x)"."""
    if isinstance(radius, str):
        match = _SQRT_PATTERN.match(radius)
        if match:
            value = Fraction(match.group(1))
        else:
            try:
                value = Fraction(radius.strip()) ** 2
            except (ValueError, ZeroDivisionError):
                raise ParameterError(f"cannot parse radius {radius!r}")
    elif isinstance(radius, float):
        value = Fraction(radius) ** 2
    else:
        value = Fraction(radius) ** 2
    if value < 0:
        raise ParameterError(f"negative squared radius {value}")
    return value


def radius_label(radius: RadiusLike) -> str:
    """Canonical text form of a radius for reproducible parameter records."""
    r2 = radius_squared(radius)
    root = math.isqrt(r2.numerator // r2.denominator) if r2.denominator == 1 else None
    if root is not None and root * root == r2:
        return str(root)
    return f"sqrt({r2})"


def radius_ceiling(radius: RadiusLike, factor: int = 1) -> int:
    """Exact ceil(factor * r)."""
    r2 = radius_squared(radius) * factor * factor
    # smallest integer k with k^2 >= r2
    k = math.isqrt(r2.numerator // r2.denominator)
    while Fraction(k * k) < r2:
        k += 1
    return k


def _bounds(radius: RadiusLike) -> Tuple[int, int]:
    r2 = radius_squared(radius)
    floor_r2 = r2.numerator // r2.denominator
    reach = math.isqrt(floor_r2)
    cap = get_limits().lattice_radius_cap
    if reach > cap:
        raise ResourceLimitError("lattice radius", reach, cap)
    return floor_r2, reach


def ball_array(radius: RadiusLike) -> np.ndarray:
    """B(r) as an (k, 2) integer array, sorted by x then y."""
    floor_r2, reach = _bounds(radius)
    axis = np.arange(-reach, reach + 1, dtype=np.int64)
    xs, ys = np.meshgrid(axis, axis, indexing="ij")
    inside = xs * xs + ys * ys <= floor_r2
    return np.stack([xs[inside], ys[inside]], axis=1)


def ball_points(radius: RadiusLike) -> Set[LatticePoint]:
    """All integral points within Euclidean distance r of the origin."""
    return {(int(x), int(y)) for x, y in ball_array(radius)}


def _column_extremes(radius: RadiusLike) -> List[LatticePoint]:
    floor_r2, reach = _bounds(radius)
    points: List[LatticePoint] = []
    for x in range(-reach, reach + 1):
        top = math.isqrt(floor_r2 - x * x)
        points.append((x, -top))
        if top:
            points.append((x, top))
    return sorted(points)


def _cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points: List[LatticePoint]) -> List[LatticePoint]:
    """Monotone chain hull of sorted points, counter-clockwise, strict vertices only."""
    if len(points) <= 2:
        return list(points)
    lower: List[LatticePoint] = []
    for p in points:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[LatticePoint] = []
    for p in reversed(points):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def sort_by_angle(points: List[LatticePoint]) -> List[LatticePoint]:
    """Order positive-quadrant points by polar angle, using exact cross products."""
    ordered = list(points)
    # insertion by cross sign keeps this exact; V(r) is small
    result: List[LatticePoint] = []
    for p in ordered:
        i = len(result)
        while i > 0 and result[i - 1][0] * p[1] - result[i - 1][1] * p[0] < 0:
            i -= 1
        result.insert(i, p)
    return result


def hull_positive_vertices(radius: RadiusLike) -> List[LatticePoint]:
    """V(r): convex-hull vertices of B(r) with x > 0 and y > 0, sorted by angle."""
    hull = convex_hull(_column_extremes(radius))
    return sort_by_angle([p for p in hull if p[0] > 0 and p[1] > 0])


def gift_wrap_vertices(points: np.ndarray) -> List[LatticePoint]:
    """Independent hull oracle: Jarvis march over every point, strict vertices only.

    Each wrapping step rescans all points, so the cost is O(k * h).
    """
    pts = np.asarray(points, dtype=np.int64)
    if len(pts) == 0:
        return []
    unique = np.unique(pts, axis=0)
    if len(unique) <= 2:
        return [(int(x), int(y)) for x, y in unique]

    start_index = np.lexsort((unique[:, 0], unique[:, 1]))[0]
    start = unique[start_index]
    hull: List[LatticePoint] = []
    p = start
    while True:
        hull.append((int(p[0]), int(p[1])))
        q = unique[0] if not np.array_equal(unique[0], p) else unique[1]
        while True:
            rel_q = q - p
            rel = unique - p
            cross = rel_q[0] * rel[:, 1] - rel_q[1] * rel[:, 0]
            right = np.flatnonzero(cross < 0)
            if right.size == 0:
                break
            q = unique[right[0]]
        # farthest among collinear candidates keeps only strict vertices
        rel_q = q - p
        rel = unique - p
        cross = rel_q[0] * rel[:, 1] - rel_q[1] * rel[:, 0]
        collinear = np.flatnonzero((cross == 0) & ((rel[:, 0] * rel_q[0] + rel[:, 1] * rel_q[1]) > 0))
        dists = rel[collinear, 0] ** 2 + rel[collinear, 1] ** 2
        q = unique[collinear[int(np.argmax(dists))]]
        if np.array_equal(q, start):
            break
        p = q
        if len(hull) > len(unique):
            raise RuntimeError("gift wrapping did not close")
    return hull


def gift_wrap_positive_vertices(radius: RadiusLike) -> List[LatticePoint]:
    """V(r) computed by the gift-wrap oracle over all of B(r)."""
    hull = gift_wrap_vertices(ball_array(radius))
    return sort_by_angle([p for p in hull if p[0] > 0 and p[1] > 0])
