"""Pivot-based shortcuts: single random pivots and batched sampled pivots.

A pivot x gets an edge to every vertex it reaches and from every vertex
reaching it, inside the current induced subgraph. Each star edge records
as midpoint the search-tree parent of its far endpoint, so the output is
certified by construction.
"""

import logging
import math
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import numpy as np

from certilab.algos.result import AlgoResult
from certilab.certify.shortcuts import ShortcutSet
from certilab.errors import ParameterError, StructuralError
from certilab.graph.core import Graph
from certilab.graph.oracles import topological_order

logger = logging.getLogger(__name__)


def _search(adjacency: Sequence[Sequence[int]], x: int, allowed: Set[int]) -> Dict[int, int]:
    """BFS parents of the vertices reachable from x inside allowed (x maps to itself)."""
    parent = {x: x}
    queue = deque([x])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w in allowed and w not in parent:
                parent[w] = v
                queue.append(w)
    return parent


def _add_stars(g: Graph, h: ShortcutSet, x: int, forward: Dict[int, int], backward: Dict[int, int]) -> None:
    # BFS order puts every parent before its children, so midpoints are present first
    for v, p in forward.items():
        if v != x and not g.has_edge(x, v):
            h.add(x, v, midpoint=p)
    for v, p in backward.items():
        if v != x and not g.has_edge(v, x):
            h.add(v, x, midpoint=p)


def _require_dag(g: Graph) -> None:
    if not g.directed:
        raise StructuralError("pivot shortcuts need a directed graph")
    topological_order(g)


def fineman(g: Graph, seed: int = 0, first_pivot: Optional[int] = None) -> AlgoResult:
    """Recursive single-pivot shortcut.

    After the pivot x is handled the vertex set splits into V_B (reaches
    and is reached by x), V_S (reached only), V_P (reaching only) and V_R
    (neither); all four parts are processed recursively. first_pivot fixes
    the pivot of the top-level call.
    """
    _require_dag(g)
    if first_pivot is not None and not 0 <= first_pivot < g.n:
        raise ParameterError(f"pivot {first_pivot} outside the graph")
    rng = np.random.default_rng(seed)
    out_adj = [g.out_neighbors(v) for v in range(g.n)]
    in_adj = [g.in_neighbors(v) for v in range(g.n)]
    h = ShortcutSet(directed=True)

    pending: List[Tuple[List[int], int]] = [(list(range(g.n)), 0)]
    pivots = 0
    depth = 0
    while pending:
        vertices, level = pending.pop()
        if len(vertices) <= 1:
            continue
        depth = max(depth, level + 1)
        if level == 0 and first_pivot is not None:
            x = first_pivot
        else:
            x = vertices[int(rng.integers(len(vertices)))]
        pivots += 1
        allowed = set(vertices)
        forward = _search(out_adj, x, allowed)
        backward = _search(in_adj, x, allowed)
        _add_stars(g, h, x, forward, backward)

        reached, reaching = set(forward), set(backward)
        both = reached & reaching
        parts = [
            both - {x},
            reached - both,
            reaching - both,
            allowed - reached - reaching,
        ]
        for part in reversed(parts):
            if part:
                pending.append((sorted(part), level + 1))

    logger.debug("fineman seed=%d: %d pivots, depth %d, %d edges", seed, pivots, depth, len(h))
    return AlgoResult(
        algo="fineman",
        seed=seed,
        shortcut=h,
        params={} if first_pivot is None else {"first_pivot": first_pivot},
        certified_extension=h.copy(),
        metrics={"rounds": depth, "pivots": pivots},
    )


def sampling_probability(k: int, r: int, n: int) -> float:
    """min(1, 20 k^(r+1) log n / n), natural log."""
    if n <= 1:
        return 1.0
    return min(1.0, 20 * k ** (r + 1) * math.log(n) / n)


def depth_bound(k: int, n: int) -> int:
    """Smallest r with sampling probability 1."""
    r = 0
    while sampling_probability(k, r, n) < 1.0:
        r += 1
    return r


def jls(g: Graph, k: int = 2, seed: int = 0) -> AlgoResult:
    """Batched-pivot shortcut.

    At recursion depth r every vertex becomes a pivot with probability p_r.
    Vertices reached by a pivot x are labelled (x, +), vertices reaching it
    (x, -), and x itself is done; the remaining vertices are grouped by their
    label sets and each group recurses at depth r + 1. Once p_r reaches 1 all
    vertices are pivots and the recursion ends.
    """
    _require_dag(g)
    if k < 2:
        raise ParameterError(f"k must be at least 2, got {k}")
    rng = np.random.default_rng(seed)
    n = g.n
    out_adj = [g.out_neighbors(v) for v in range(n)]
    in_adj = [g.in_neighbors(v) for v in range(n)]
    h = ShortcutSet(directed=True)

    pending: List[Tuple[List[int], int]] = [(list(range(n)), 0)]
    deepest = 0
    pivots = 0
    while pending:
        vertices, r = pending.pop()
        if not vertices:
            continue
        deepest = max(deepest, r)
        p = sampling_probability(k, r, n)
        if p >= 1.0:
            chosen = list(vertices)
        else:
            chosen = [v for v, hit in zip(vertices, (rng.random(len(vertices)) < p).tolist()) if hit]
        pivots += len(chosen)

        allowed = set(vertices)
        labels: Dict[int, Set[Tuple[int, str]]] = {v: set() for v in vertices}
        done: Set[int] = set()
        for x in chosen:
            forward = _search(out_adj, x, allowed)
            backward = _search(in_adj, x, allowed)
            _add_stars(g, h, x, forward, backward)
            reached, reaching = set(forward), set(backward)
            for v in reached - reaching:
                labels[v].add((x, "+"))
            for v in reaching - reached:
                labels[v].add((x, "-"))
            done |= reached & reaching

        groups: Dict[FrozenSet[Tuple[int, str]], List[int]] = {}
        for v in vertices:
            if v not in done:
                groups.setdefault(frozenset(labels[v]), []).append(v)
        for key in sorted(groups, key=lambda labels_: sorted(labels_), reverse=True):
            pending.append((groups[key], r + 1))

    logger.debug("jls k=%d seed=%d: %d pivots, depth %d, %d edges", k, seed, pivots, deepest, len(h))
    return AlgoResult(
        algo="jls",
        seed=seed,
        shortcut=h,
        params={"k": k},
        certified_extension=h.copy(),
        metrics={"rounds": deepest + 1, "pivots": pivots, "depth_bound": depth_bound(k, n)},
    )
