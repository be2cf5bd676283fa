"""Certification checks, certification orders and procedure replay."""

import logging
from fractions import Fraction
from typing import Dict, List, Optional, Set, Tuple

from certilab.certify.shortcuts import CertificationOrder, ShortcutMode, ShortcutSet
from certilab.errors import (
    CertificationFailure,
    InvalidShortcutError,
    ParameterError,
    PreconditionError,
    ReplayError,
    StructuralError,
)
from certilab.graph.core import Edge, Graph
from certilab.graph.oracles import distances, reachable_from, topological_order

logger = logging.getLogger(__name__)


class EdgeIndex:
    """Incrementally growing E ∪ H with neighbourhood sets and exact weights."""

    def __init__(self, g: Graph, hopset: bool = False):
        self.g = g
        self.directed = g.directed
        self.hopset = hopset
        self.out: List[Set[int]] = [set(g.out_neighbors(v)) for v in range(g.n)]
        self.inn: List[Set[int]] = (
            [set(g.in_neighbors(v)) for v in range(g.n)] if g.directed else self.out
        )
        self._extra_weights: Dict[Edge, Fraction] = {}

    def _key(self, u: int, v: int) -> Edge:
        return (u, v) if self.directed else (min(u, v), max(u, v))

    def has(self, u: int, v: int) -> bool:
        return v in self.out[u]

    def add(self, u: int, v: int, weight: Optional[Fraction] = None) -> None:
        self.out[u].add(v)
        if self.directed:
            self.inn[v].add(u)
        else:
            self.out[v].add(u)
        if weight is not None and not self.g.has_edge(u, v):
            self._extra_weights[self._key(u, v)] = Fraction(weight)

    def weight(self, u: int, v: int) -> Fraction:
        if self.g.has_edge(u, v):
            return self.g.weight(u, v)
        return self._extra_weights.get(self._key(u, v), Fraction(1))

    def midpoint(self, u: int, v: int, target: Optional[Fraction] = None) -> Optional[int]:
        """Lowest-id w with (u, w), (w, v) present (and exact weight sum when target is given)."""
        candidates = self.out[u] & self.inn[v]
        for w in sorted(candidates):
            if w == u or w == v:
                continue
            if target is None or self.weight(u, w) + self.weight(w, v) == target:
                return w
        return None

    def copy(self) -> "EdgeIndex":
        clone = EdgeIndex.__new__(EdgeIndex)
        clone.g = self.g
        clone.directed = self.directed
        clone.hopset = self.hopset
        clone.out = [set(s) for s in self.out]
        clone.inn = [set(s) for s in self.inn] if self.directed else clone.out
        clone._extra_weights = dict(self._extra_weights)
        return clone

    @classmethod
    def of(cls, g: Graph, h: ShortcutSet) -> "EdgeIndex":
        hopset = h.mode is ShortcutMode.HOPSET
        index = cls(g, hopset=hopset)
        for u, v in h:
            index.add(u, v, h.weight(u, v) if hopset else None)
        return index


def validate_shortcut(g: Graph, h: ShortcutSet) -> None:
    """Check that h is a shortcut (or hopset) of g.

    Raises InvalidShortcutError for edges outside the transitive closure,
    edges duplicating an original edge, and (hopsets) weights that differ
    from the exact distance in g.
    """
    if h.directed != g.directed:
        raise ParameterError("shortcut orientation does not match the host graph")
    duplicates = [(u, v) for u, v in h if g.has_edge(u, v)]
    if duplicates:
        raise InvalidShortcutError(duplicates, reason="edges duplicating original edges")

    by_source: Dict[int, List[int]] = {}
    for u, v in h:
        by_source.setdefault(u, []).append(v)

    adjacency = [g.out_neighbors(v) for v in range(g.n)]
    outside: List[Edge] = []
    wrong_weight: List[Edge] = []
    for u, targets in sorted(by_source.items()):
        if h.mode is ShortcutMode.HOPSET:
            dist = distances(g, u)
            for v in targets:
                if v not in dist:
                    outside.append((u, v))
                elif h.weight(u, v) is None or h.weight(u, v) != dist[v]:
                    wrong_weight.append((u, v))
        else:
            reach = reachable_from(adjacency, u)
            outside.extend((u, v) for v in targets if v not in reach)
    if outside:
        raise InvalidShortcutError(outside)
    if wrong_weight:
        raise InvalidShortcutError(wrong_weight, reason="hopset weights differing from exact distances")


def is_certified(g: Graph, h: ShortcutSet) -> Tuple[bool, Dict[Edge, int]]:
    """Check that every edge of h has a midpoint w with (u, w), (w, v) in E ∪ H.

    Returns the flag and one midpoint per certified edge (lowest id). In
    hopset mode the midpoint must also satisfy the exact weight sum.
    """
    validate_shortcut(g, h)
    index = EdgeIndex.of(g, h)
    hopset = h.mode is ShortcutMode.HOPSET
    midpoints: Dict[Edge, int] = {}
    for u, v in h:
        w = index.midpoint(u, v, index.weight(u, v) if hopset else None)
        if w is not None:
            midpoints[h.key(u, v)] = w
    return len(midpoints) == len(h), midpoints


def uncertified_edges(g: Graph, h: ShortcutSet) -> List[Edge]:
    """Edges of h without a certifying midpoint."""
    _, midpoints = is_certified(g, h)
    return [(u, v) for u, v in h if h.key(u, v) not in midpoints]


def certification_order(g: Graph, h: ShortcutSet) -> CertificationOrder:
    """Order h into a shortcutting procedure.

    On DAGs edges are sorted by the topological span of their endpoints; for
    hopsets with positive weights, by weight. Ties keep insertion order.
    """
    hopset = h.mode is ShortcutMode.HOPSET
    position: Dict[int, int] = {}
    if not hopset:
        if not g.directed:
            raise StructuralError("certification orders for shortcuts need a DAG")
        position = {v: i for i, v in enumerate(topological_order(g))}
    else:
        if any(w <= 0 for _, _, w in g.edges) or any(w <= 0 for w in h.weights.values()):
            raise PreconditionError("hopset certification orders need strictly positive weights")

    certified, midpoints = is_certified(g, h)
    if not certified:
        raise CertificationFailure([(u, v) for u, v in h if h.key(u, v) not in midpoints])

    index = EdgeIndex.of(g, h)
    ranked = []
    for i, (u, v) in enumerate(h):
        if hopset:
            rank: object = (index.weight(u, v), i)
        else:
            rank = (position[v] - position[u], i)
        ranked.append((rank, u, v))
    ranked.sort(key=lambda item: item[0])

    order = CertificationOrder(
        steps=[(u, v, midpoints[h.key(u, v)]) for _, u, v in ranked],
        mode=h.mode,
        directed=g.directed,
    )
    replay_procedure(g, order, h)
    return order


def replay_procedure(
    g: Graph, order: CertificationOrder, expected: Optional[ShortcutSet] = None
) -> ShortcutSet:
    """Execute the steps, checking both certifying edges are present at each one.

    Step numbers in errors are 1-based. In hopset mode each new edge gets the
    sum of its certifying weights; when an expected set is passed its weights
    must match.
    """
    hopset = ShortcutMode(order.mode) is ShortcutMode.HOPSET
    index = EdgeIndex(g, hopset=hopset)
    result = ShortcutSet(mode=order.mode, directed=g.directed)
    for step, (u, v, w) in enumerate(order.steps, start=1):
        if not index.has(u, w):
            raise ReplayError(step, (u, v), (u, w))
        if not index.has(w, v):
            raise ReplayError(step, (u, v), (w, v))
        if index.has(u, v):
            raise ParameterError(f"step {step} adds ({u},{v}) which is already present")
        weight = index.weight(u, w) + index.weight(w, v) if hopset else None
        if hopset and expected is not None and expected.weight(u, v) != weight:
            raise ReplayError(step, (u, v), (u, w))
        index.add(u, v, weight)
        result.add(u, v, weight=weight, midpoint=w)
    return result
