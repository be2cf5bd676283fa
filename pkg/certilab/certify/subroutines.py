"""Certified building blocks: star shortcuts on trees and diameter-2 path shortcuts."""

from collections import deque
from enum import Enum
from typing import Dict, List, Optional, Sequence, Set, Tuple

from certilab.certify.shortcuts import CertificationOrder, ShortcutMode, ShortcutSet
from certilab.errors import NotATreeError, ParameterError
from certilab.graph.core import Edge, Graph


class Orientation(str, Enum):
    FROM_ROOT = "from_root"
    TO_ROOT = "to_root"


class Direction(str, Enum):
    FORWARD = "forward"  # edges point from earlier to later path vertices
    BACKWARD = "backward"


def _tree_parents(root: int, tree_edges: Sequence[Edge]) -> Tuple[Dict[int, Optional[int]], Dict[int, int]]:
    """BFS parents and depths of an undirected view of the tree edges."""
    neighbours: Dict[int, List[int]] = {root: []}
    seen_edges: Set[Edge] = set()
    for u, v in tree_edges:
        if u == v:
            raise NotATreeError(f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen_edges:
            raise NotATreeError(f"edge ({u},{v}) listed twice")
        seen_edges.add(key)
        neighbours.setdefault(u, []).append(v)
        neighbours.setdefault(v, []).append(u)
    if len(seen_edges) != len(neighbours) - 1:
        raise NotATreeError(f"{len(seen_edges)} edges on {len(neighbours)} vertices")

    parent: Dict[int, Optional[int]] = {root: None}
    depth = {root: 0}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in sorted(neighbours[v]):
            if w not in parent:
                parent[w] = v
                depth[w] = depth[v] + 1
                queue.append(w)
    if len(parent) != len(neighbours):
        raise NotATreeError(f"tree edges do not connect all {len(neighbours)} vertices to root {root}")
    return parent, depth


def tree_star_shortcut(
    g: Graph,
    root: int,
    tree_edges: Sequence[Edge],
    orientation: Orientation = Orientation.FROM_ROOT,
) -> Tuple[ShortcutSet, CertificationOrder]:
    """Join the root to every tree vertex at depth two or more.

    Edges are added in order of depth, each certified through the vertex's
    tree parent, so the result has hop diameter at most two inside the tree.
    Edges already present in g are skipped.
    """
    orientation = Orientation(orientation)
    parent, depth = _tree_parents(root, tree_edges)
    for u, v in tree_edges:
        if not g.has_edge(u, v):
            raise NotATreeError(f"tree edge ({u},{v}) is not an edge of the graph")
        if g.directed:
            expected = (parent[v] == u) if orientation is Orientation.FROM_ROOT else (parent[u] == v)
            if not expected:
                raise NotATreeError(f"tree edge ({u},{v}) is not oriented {orientation.value}")

    h = ShortcutSet(mode=ShortcutMode.SHORTCUT, directed=g.directed)
    steps: List[Tuple[int, int, int]] = []
    for v in sorted(depth, key=lambda x: (depth[x], x)):
        if depth[v] < 2:
            continue
        mid = parent[v]
        assert mid is not None
        u, w = (root, v) if orientation is Orientation.FROM_ROOT else (v, root)
        if g.has_edge(u, w):
            continue
        h.add(u, w, midpoint=mid)
        steps.append((u, w, mid))
    return h, CertificationOrder(steps=steps, mode=ShortcutMode.SHORTCUT, directed=g.directed)


def path_shortcut_diam2(
    p: Sequence[int],
    direction: Direction = Direction.FORWARD,
    directed: bool = True,
) -> Tuple[ShortcutSet, CertificationOrder]:
    """Divide-and-conquer shortcut giving hop distance at most two between path vertices.

    Every vertex left of the middle vertex m gets an edge to m and m gets an
    edge to every vertex right of it; both halves are handled recursively.
    Edges are emitted in an order where each is certified by its path
    neighbour's edge, so the returned order always replays.
    """
    if len(p) < 2:
        raise ParameterError("path_shortcut_diam2 needs a path with at least one edge")
    if len(set(p)) != len(p):
        raise ParameterError("path repeats a vertex")
    path = list(p) if Direction(direction) is Direction.FORWARD else list(reversed(p))

    h = ShortcutSet(mode=ShortcutMode.SHORTCUT, directed=directed)
    steps: List[Tuple[int, int, int]] = []

    def emit(u: int, v: int, mid: int) -> None:
        if h.add(u, v, midpoint=mid):
            steps.append((u, v, mid))

    pending = [(0, len(path) - 1)]
    while pending:
        lo, hi = pending.pop()
        k = hi - lo
        if k < 2:
            continue
        m = lo + (k + 2) // 2
        for i in range(m - 2, lo - 1, -1):
            emit(path[i], path[m], path[i + 1])
        for j in range(m + 2, hi + 1):
            emit(path[m], path[j], path[j - 1])
        pending.append((m + 1, hi))
        pending.append((lo, m - 1))
    return h, CertificationOrder(steps=steps, mode=ShortcutMode.SHORTCUT, directed=directed)
