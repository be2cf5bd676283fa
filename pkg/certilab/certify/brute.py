"""Exact certification complexity by exhaustive search at tiny scale."""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Set

from certilab.certify.shortcuts import ShortcutMode, ShortcutSet
from certilab.certify.verify import EdgeIndex, validate_shortcut
from certilab.certify.witness import forcing_bound
from certilab.config.limits import get_limits
from certilab.errors import ResourceLimitError
from certilab.graph.core import Edge, Graph
from certilab.graph.oracles import distances

logger = logging.getLogger(__name__)


class _Search:
    """Branch on the midpoint of the first uncertified edge, within a budget of new edges."""

    def __init__(self, g: Graph, h: ShortcutSet, dist: Dict[int, Dict[int, Fraction]]):
        self.g = g
        self.h = h
        self.dist = dist
        self.hopset = h.mode is ShortcutMode.HOPSET
        self.nodes = 0

    def reaches(self, u: int, v: int) -> bool:
        return v in self.dist[u]

    def usable(self, index: EdgeIndex, u: int, w: int) -> Optional[Fraction]:
        """Weight of (u, w) if it is present or can be added, else None."""
        if index.has(u, w):
            return index.weight(u, w) if self.hopset else Fraction(1)
        if not self.reaches(u, w):
            return None
        return self.dist[u][w]

    def first_uncertified(self, index: EdgeIndex, edges: List[Edge]) -> Optional[Edge]:
        for u, v in edges:
            target = index.weight(u, v) if self.hopset else None
            if index.midpoint(u, v, target) is None:
                return (u, v)
        return None

    def solve(self, index: EdgeIndex, edges: List[Edge], budget: int) -> bool:
        self.nodes += 1
        pending = self.first_uncertified(index, edges)
        if pending is None:
            return True
        if budget <= 0:
            return False
        u, v = pending
        target = index.weight(u, v)
        for w in range(self.g.n):
            if w in (u, v) or not (self.reaches(u, w) and self.reaches(w, v)):
                continue
            first = self.usable(index, u, w)
            second = self.usable(index, w, v)
            if first is None or second is None:
                continue
            if self.hopset and first + second != target:
                continue
            added = [(a, b) for a, b in ((u, w), (w, v)) if not index.has(a, b)]
            if len(added) > budget:
                continue
            child = index.copy()
            for a, b in added:
                child.add(a, b, self.dist[a][b] if self.hopset else None)
            if self.solve(child, edges + added, budget - len(added)):
                return True
        return False


def brute_force_cert_complexity(g: Graph, h: ShortcutSet) -> int:
    """Smallest |H'| over certified H' containing h, drawn from the transitive closure.

    Iterative deepening on the number of added edges, starting from the
    forcing bound. Capped at tiny graphs: n and |closure minus E| are
    checked against the configured limits.
    """
    limits = get_limits()
    if g.n > limits.brute_force_vertex_cap:
        raise ResourceLimitError("vertex count", g.n, limits.brute_force_vertex_cap)
    validate_shortcut(g, h)

    dist = {u: distances(g, u) for u in range(g.n)}
    candidates: Set[Edge] = set()
    for u in range(g.n):
        for v in dist[u]:
            if v != u and not g.has_edge(u, v):
                candidates.add(h.key(u, v))
    if len(candidates) > limits.brute_force_closure_cap:
        raise ResourceLimitError("closure edges outside E", len(candidates), limits.brute_force_closure_cap)

    search = _Search(g, h, dist)
    root = EdgeIndex.of(g, h)
    edges = list(h)
    start = max(0, forcing_bound(g, h) - len(h))
    for budget in range(start, len(candidates) - len(h) + 1):
        if search.solve(root, edges, budget):
            logger.debug("brute force: budget %d after %d search nodes", budget, search.nodes)
            return len(h) + budget
    raise AssertionError("the full transitive closure is always certified")
