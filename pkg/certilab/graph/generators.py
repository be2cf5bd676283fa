"""Seeded random graph generators used by tests and the harness."""

from typing import List, Set, Tuple

import numpy as np

from certilab.errors import ParameterError
from certilab.graph.core import Edge, Graph


def random_dag(n: int, m: int, seed: int) -> Graph:
    """Random DAG with exactly m edges.

    Vertices are ranked by a seeded permutation and every edge points from
    a lower rank to a higher one, so the result is acyclic by construction.
    """
    total = n * (n - 1) // 2
    if n < 0 or m < 0 or m > total:
        raise ParameterError(f"cannot place {m} edges on {n} vertices (max {total})")
    rng = np.random.default_rng(seed)
    rank = rng.permutation(n)

    chosen: Set[Edge] = set()
    if m * 2 > total:
        lows, highs = np.triu_indices(n, 1)
        picks = rng.choice(total, size=m, replace=False)
        chosen = {(int(lows[k]), int(highs[k])) for k in picks}
    else:
        while len(chosen) < m:
            a = rng.integers(0, n, size=2 * (m - len(chosen)) + 8)
            b = rng.integers(0, n, size=a.size)
            for i, j in zip(a.tolist(), b.tolist()):
                if i == j:
                    continue
                pair = (min(i, j), max(i, j))
                if pair not in chosen:
                    chosen.add(pair)
                    if len(chosen) == m:
                        break

    # Positions i < j in rank order become edges rank[i] -> rank[j]
    edges = sorted((int(rank[i]), int(rank[j])) for i, j in chosen)
    return Graph(n, edges, directed=True, acyclic=True, validate=False)


def layered_dag(width: int, layers: int, p: float, seed: int) -> Graph:
    """Layered DAG whose edges only join consecutive layers.

    Vertex k of layer L always links to vertex k of layer L+1, so every
    layer-0 vertex starts a path of layers-1 edges; other cross edges
    appear independently with probability p. Hop diameter is layers-1.
    """
    if width < 1 or layers < 1 or not 0.0 <= p <= 1.0:
        raise ParameterError(f"invalid layered DAG parameters width={width} layers={layers} p={p}")
    rng = np.random.default_rng(seed)
    edges: List[Edge] = []
    for layer in range(layers - 1):
        base, nxt = layer * width, (layer + 1) * width
        extra = rng.random((width, width)) < p
        for k in range(width):
            edges.append((base + k, nxt + k))
            for j in np.flatnonzero(extra[k]).tolist():
                if j != k:
                    edges.append((base + k, nxt + j))
    return Graph(width * layers, edges, directed=True, acyclic=True, validate=False)


def random_tree(n: int, seed: int) -> Tuple[int, List[Edge]]:
    """Random recursive tree on 0..n-1 rooted at 0, edges oriented away from the root."""
    if n < 1:
        raise ParameterError("a tree needs at least one vertex")
    rng = np.random.default_rng(seed)
    edges = [(int(rng.integers(0, v)), v) for v in range(1, n)]
    return 0, edges


def directed_path(n: int) -> Graph:
    """The directed path 0 -> 1 -> ... -> n-1."""
    return Graph(n, [(v, v + 1) for v in range(n - 1)], directed=True, acyclic=True)
