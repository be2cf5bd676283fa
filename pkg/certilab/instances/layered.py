"""Layered grid family with critical paths along strictly convex directions.

Vertices are (i, u) with i in 0..d-1 and u in [s]^(d+1), s = ceil(4*D*r).
Vertex (i, u) has id i * s^(d+1) + u read as a base-s number with the first
coordinate most significant, so ids follow lexicographic grid order. For
each direction (y, z) in V(r) there is an edge from (i, u) to
((i + 1) mod d, u + e_i(y, z)), where e_i puts y at coordinate i and z at
coordinate i + 1, whenever the target stays inside the grid.
"""

import itertools
import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from certilab.config.limits import get_limits
from certilab.errors import ParameterError, ResourceLimitError
from certilab.graph.core import Graph, PathSeq
from certilab.instances.types import Instance
from certilab.lattice.hull import LatticePoint, RadiusLike, hull_positive_vertices, radius_ceiling, radius_label

logger = logging.getLogger(__name__)


def grid_side(D: int, r: RadiusLike) -> int:
    return radius_ceiling(r, 4 * D)


def hs_vertex_count(d: int, D: int, r: RadiusLike) -> int:
    return d * grid_side(D, r) ** (d + 1)


def _check_params(d: int, D: int, directed: bool) -> None:
    if d < 1 or D < 1:
        raise ParameterError(f"need d >= 1 and D >= 1, got d={d}, D={D}")
    if not directed and d not in (1, 2):
        raise ParameterError(f"undirected builds keep shortest paths unique only for d in (1, 2), got d={d}")


def _grid_coords(d: int, s: int) -> np.ndarray:
    """(s^(d+1), d+1) coordinates in id order."""
    return np.indices((s,) * (d + 1)).reshape(d + 1, -1).T


def _strides(d: int, s: int) -> List[int]:
    return [s ** (d - c) for c in range(d + 1)]


def _edge_arrays(d: int, s: int, directions: Sequence[LatticePoint]) -> Tuple[np.ndarray, np.ndarray]:
    cells = s ** (d + 1)
    coords = _grid_coords(d, s)
    flat = np.arange(cells, dtype=np.int64)
    strides = _strides(d, s)
    sources: List[np.ndarray] = []
    targets: List[np.ndarray] = []
    for i in range(d):
        nxt = (i + 1) % d
        for y, z in directions:
            inside = (coords[:, i] + y < s) & (coords[:, i + 1] + z < s)
            base = flat[inside]
            sources.append(i * cells + base)
            targets.append(nxt * cells + base + y * strides[i] + z * strides[i + 1])
    if not sources:
        empty = np.zeros(0, dtype=np.int64)
        return empty, empty
    return np.concatenate(sources), np.concatenate(targets)


def build_hs_graph(d: int, D: int, r: RadiusLike, directed: bool = True) -> Graph:
    """Build the layered grid graph; undirected builds drop edge orientation.

    Raises:
        ParameterError: for d or D below 1, or undirected builds with d > 2
        ResourceLimitError: if the vertex count exceeds the grid cap
    """
    _check_params(d, D, directed)
    s = grid_side(D, r)
    n = d * s ** (d + 1)
    cap = get_limits().grid_vertex_cap
    if n > cap:
        raise ResourceLimitError("grid vertex count", n, cap)

    directions = hull_positive_vertices(r)
    if not directions:
        logger.warning("V(%s) is empty; the layered graph has no edges", radius_label(r))
    sources, targets = _edge_arrays(d, s, directions)
    logger.debug("layered graph d=%d D=%d r=%s: n=%d, m=%d", d, D, radius_label(r), n, len(sources))
    return Graph(n, zip(sources.tolist(), targets.tolist()), directed=directed, validate=False)


def construct_critical_paths(g: Graph, d: int, D: int, r: RadiusLike) -> List[PathSeq]:
    """Greedy edge-disjoint paths of d*D edges, one direction tuple at a time.

    For each tuple (v_1, ..., v_d) in V(r)^d (angle order, lexicographic over
    the tuple) the available edge set is reset, then start vertices are
    scanned in id order; a path following v_i out of layer i is taken when
    all its edges are unused within this tuple. Coordinates only grow along
    a path, so it fits the grid iff its last vertex does.
    """
    _check_params(d, D, g.directed)
    s = grid_side(D, r)
    cells = s ** (d + 1)
    if g.n != d * cells:
        raise ParameterError(f"graph has {g.n} vertices, parameters d={d}, D={D}, r={radius_label(r)} give {d * cells}")
    directions = hull_positive_vertices(r)
    if not directions:
        return []

    coords = _grid_coords(d, s)
    strides = _strides(d, s)
    length = d * D
    floor = g.n / (2 ** (d + 2) * d * D)
    paths: List[PathSeq] = []
    for combo in itertools.product(directions, repeat=d):
        total = np.zeros(d + 1, dtype=np.int64)
        step: List[int] = []
        for i, (y, z) in enumerate(combo):
            total[i] += D * y
            total[i + 1] += D * z
            step.append(y * strides[i] + z * strides[i + 1])
        starts = np.flatnonzero(np.all(coords + total < s, axis=1)).tolist()

        used = bytearray(g.n)  # an edge is identified by its source within one tuple
        found = 0
        for layer in range(d):
            for cell in starts:
                path = [layer * cells + cell]
                i = layer
                for _ in range(length):
                    if used[path[-1]]:
                        break
                    cell += step[i]
                    i = (i + 1) % d
                    path.append(i * cells + cell)
                else:
                    for v in path[:-1]:
                        used[v] = 1
                    paths.append(path)
                    found += 1
        if found < floor:
            logger.warning("direction tuple %s produced %d paths, below %.1f", combo, found, floor)

    for path in paths:
        missing = next(((u, v) for u, v in zip(path, path[1:]) if not g.has_edge(u, v)), None)
        if missing is not None:
            raise ParameterError(f"graph does not match the layered-family parameters: edge {missing} is missing")
    return paths


def build_hs_instance(d: int, D: int, r: RadiusLike, directed: bool = True) -> Instance:
    """The layered graph bundled with its critical paths and parameters."""
    g = build_hs_graph(d, D, r, directed)
    warnings: List[str] = []
    if not hull_positive_vertices(r):
        warnings.append(f"V({radius_label(r)}) is empty; the graph has no edges")
    paths = construct_critical_paths(g, d, D, r)
    logger.info("layered instance d=%d D=%d r=%s: n=%d, m=%d, %d critical paths",
                d, D, radius_label(r), g.n, g.m, len(paths))
    return Instance(
        graph=g,
        critical_paths=paths,
        params={"d": d, "D": D, "r": radius_label(r), "directed": directed},
        kind="hs",
        warnings=warnings,
    )


def vertex_id(layer: int, u: Sequence[int], s: int) -> int:
    """Id of (layer, u) in a grid of side s."""
    cell = 0
    for c in u:
        cell = cell * s + int(c)
    return layer * s ** len(u) + cell


def describe_vertex(vertex: int, d: int, s: int) -> Tuple[int, Tuple[int, ...]]:
    """Inverse of vertex_id."""
    cells = s ** (d + 1)
    layer, cell = divmod(vertex, cells)
    coords: List[int] = []
    for _ in range(d + 1):
        cell, c = divmod(cell, s)
        coords.append(c)
    return layer, tuple(reversed(coords))


def first_layer_paths(paths: Sequence[PathSeq], d: int, s: int, layer: Optional[int] = 0) -> List[PathSeq]:
    """Critical paths whose start vertex lies in the given layer."""
    cells = s ** (d + 1)
    return [p for p in paths if p[0] // cells == layer]
