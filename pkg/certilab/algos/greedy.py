"""Greedy potential-reduction shortcut."""

import logging
from typing import Iterable, List, Optional, Tuple

import numpy as np

from certilab.algos.result import AlgoResult
from certilab.certify.shortcuts import ShortcutSet
from certilab.config.limits import get_limits
from certilab.errors import ParameterError, ResourceLimitError
from certilab.graph.core import Edge, Graph

logger = logging.getLogger(__name__)


def hop_matrix(g: Graph, extra: Iterable[Edge] = ()) -> np.ndarray:
    """All-pairs hop distances as an int matrix; unreachable pairs hold 2n + 2."""
    n = g.n
    unreachable = 2 * n + 2
    adjacency = g.adjacency_with(extra)
    dist = np.full((n, n), unreachable, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        frontier = [s]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for v in frontier:
                for w in adjacency[v]:
                    if row[w] == unreachable:
                        row[w] = level
                        nxt.append(w)
            frontier = nxt
    return dist


def potential(dist: np.ndarray) -> int:
    """Sum of hop distances over reachable ordered pairs; unreachable pairs count 0."""
    n = dist.shape[0]
    return int(dist[dist <= n].sum())


def potential_reduction(dist: np.ndarray, u: int, v: int, directed: bool = True) -> int:
    """Drop in potential from adding the edge (u, v).

    Undirected edges can be crossed either way; each pair takes the better side.
    """
    n = dist.shape[0]
    if not directed:
        through = np.minimum(
            dist[:, u][:, None] + 1 + dist[v, :][None, :],
            dist[:, v][:, None] + 1 + dist[u, :][None, :],
        )
        return int(np.maximum(np.where(dist <= n, dist - through, 0), 0).sum())
    before = np.flatnonzero(dist[:, u] <= n)
    after = np.flatnonzero(dist[v, :] <= n)
    current = dist[np.ix_(before, after)]
    through = dist[before, u][:, None] + 1 + dist[v, after][None, :]
    return int(np.maximum(current - through, 0).sum())


def best_candidate(g: Graph, dist: np.ndarray, taken: ShortcutSet) -> Optional[Tuple[Edge, int]]:
    """Closure non-edge with the largest reduction, smallest (u, v) on ties."""
    n = g.n
    best: Optional[Tuple[Edge, int]] = None
    for u in range(n):
        for v in np.flatnonzero((dist[u] <= n) & (dist[u] >= 2)).tolist():
            if (u, v) in taken:
                continue
            if not g.directed and v < u:
                continue
            gain = potential_reduction(dist, u, v, g.directed)
            if best is None or gain > best[1]:
                best = ((u, v), gain)
    return best


def brr_greedy(g: Graph, budget: int) -> AlgoResult:
    """Add, budget times, the closure non-edge that reduces the potential most.

    Distances are recomputed exactly every round. Stops early when no closure
    non-edge is left; the result records how many picks were made.

    Raises:
        ResourceLimitError: n above the configured greedy cap
    """
    cap = get_limits().brr_vertex_cap
    if g.n > cap:
        raise ResourceLimitError("vertex count", g.n, cap)
    if budget < 0:
        raise ParameterError(f"budget must be nonnegative, got {budget}")

    h = ShortcutSet(directed=g.directed)
    reductions: List[int] = []
    dist = hop_matrix(g)
    start = potential(dist)
    for _ in range(budget):
        pick = best_candidate(g, dist, h)
        if pick is None:
            logger.warning("greedy stopped after %d of %d picks: no closure non-edge left", len(h), budget)
            break
        (u, v), gain = pick
        h.add(u, v)
        reductions.append(gain)
        dist = hop_matrix(g, h.edges())
    logger.debug("greedy: %d picks, potential %d -> %d", len(h), start, potential(dist))
    return AlgoResult(
        algo="brr",
        seed=0,
        shortcut=h,
        params={"budget": budget},
        metrics={
            "rounds": len(h),
            "stopped_early": len(h) < budget,
            "potential_before": start,
            "potential_after": potential(dist),
            "reductions": reductions,
        },
    )
