"""Exhaustive graph oracles: reachability, distances, diameters and path uniqueness.

These are the reference implementations every other module is tested
against, so they favour plain BFS/DFS over anything clever.
"""

import heapq
import logging
from collections import deque
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from certilab.config.limits import get_limits
from certilab.errors import CycleError, DomainError, ParameterError, ResourceLimitError, StructuralError
from certilab.graph.core import Edge, EdgePairSet, Graph, PathSeq

logger = logging.getLogger(__name__)

HOP_BATCH = 256


def check_vertex_cap(n: int, cap: Optional[int] = None) -> None:
    """Raise ResourceLimitError when n exceeds the oracle cap."""
    cap = get_limits().hop_diameter_vertex_cap if cap is None else cap
    if n > cap:
        raise ResourceLimitError("vertex count", n, cap)


def topological_order(g: Graph) -> List[int]:
    """Kahn's algorithm, lowest id first among ready vertices."""
    if not g.directed:
        raise StructuralError("topological order needs a directed graph")
    indegree = [len(g.in_neighbors(v)) for v in range(g.n)]
    ready = [v for v in range(g.n) if indegree[v] == 0]
    heapq.heapify(ready)
    order: List[int] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for w in g.out_neighbors(v):
            indegree[w] -= 1
            if indegree[w] == 0:
                heapq.heappush(ready, w)
    if len(order) != g.n:
        raise CycleError(f"directed cycle among {g.n - len(order)} vertices")
    return order


def reachable_from(
    adjacency: Sequence[Sequence[int]],
    source: int,
    allowed: Optional[Set[int]] = None,
) -> Set[int]:
    """Vertices reachable from source (source included), optionally inside an allowed set."""
    seen = {source}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w in seen or (allowed is not None and w not in allowed):
                continue
            seen.add(w)
            queue.append(w)
    return seen


def transitive_closure(g: Graph) -> EdgePairSet:
    """All ordered pairs (s, t), s != t, with s reaching t."""
    check_vertex_cap(g.n)
    adjacency = [g.out_neighbors(v) for v in range(g.n)]
    closure: EdgePairSet = set()
    for s in range(g.n):
        for t in reachable_from(adjacency, s):
            if t != s:
                closure.add((s, t))
    return closure


def hop_distances(g: Graph, source: int, extra: Iterable[Edge] = ()) -> Dict[int, int]:
    """BFS hop distances from source in g plus extra edges."""
    adjacency = g.adjacency_with(extra)
    dist = {source: 0}
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adjacency[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def distances(
    g: Graph,
    source: int,
    extra: Sequence[Tuple[int, int, Fraction]] = (),
) -> Dict[int, Fraction]:
    """Exact shortest-path distances from source (Dijkstra on rationals).

    Extra edges carry their own weights; on unweighted graphs this is BFS.
    """
    if not g.weighted and not extra:
        return {v: Fraction(d) for v, d in hop_distances(g, source).items()}
    adjacency = _weighted_adjacency(g, extra)
    dist: Dict[int, Fraction] = {source: Fraction(0)}
    heap: List[Tuple[Fraction, int]] = [(Fraction(0), source)]
    done: Set[int] = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        for w, weight in adjacency[v]:
            candidate = d + weight
            if w not in dist or candidate < dist[w]:
                dist[w] = candidate
                heapq.heappush(heap, (candidate, w))
    return dist


def _weighted_adjacency(
    g: Graph, extra: Sequence[Tuple[int, int, Fraction]] = ()
) -> List[List[Tuple[int, Fraction]]]:
    adjacency: List[List[Tuple[int, Fraction]]] = [
        [(w, g.weight(v, w)) for w in g.out_neighbors(v)] for v in range(g.n)
    ]
    for u, v, weight in extra:
        adjacency[u].append((v, Fraction(weight)))
        if not g.directed:
            adjacency[v].append((u, Fraction(weight)))
    return adjacency


def hop_diameter(g: Graph, extra: Iterable[Edge] = (), weighted_mode: bool = False) -> int:
    """Maximum over reachable ordered pairs of the fewest edges on a connecting path.

    With weighted_mode, the hop count is taken among exact shortest-weight paths
    (the hopset notion); extra edges then need weights, given as (u, v, w).
    Returns 0 when no pair is reachable.
    """
    extra = list(extra)
    check_vertex_cap(g.n)
    for record in extra:
        u, v = record[0], record[1]
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ParameterError(f"extra edge ({u},{v}) has an endpoint outside the graph")
    if g.n <= 1:
        return 0
    if weighted_mode:
        return _weighted_hop_diameter(g, extra)
    return _hop_diameter(g, [(int(r[0]), int(r[1])) for r in extra])


def _hop_diameter(g: Graph, extra: List[Edge]) -> int:
    pairs: Set[Edge] = set(g.edge_pairs())
    pairs.update((u, v) for u, v in extra if u != v)
    if not g.directed:
        pairs = {(min(u, v), max(u, v)) for u, v in pairs}
    if not pairs:
        return 0
    rows = np.fromiter((u for u, _ in pairs), dtype=np.int64, count=len(pairs))
    cols = np.fromiter((v for _, v in pairs), dtype=np.int64, count=len(pairs))
    matrix = csr_matrix((np.ones(len(pairs)), (rows, cols)), shape=(g.n, g.n))

    best = 0
    for start in range(0, g.n, HOP_BATCH):
        indices = np.arange(start, min(g.n, start + HOP_BATCH))
        dist = shortest_path(
            matrix, method="D", directed=g.directed, unweighted=True, indices=indices
        )
        finite = dist[np.isfinite(dist)]
        if finite.size:
            best = max(best, int(finite.max()))
    return best


def _weighted_hop_diameter(g: Graph, extra: List[Sequence]) -> int:
    typed = [(int(r[0]), int(r[1]), Fraction(r[2]) if len(r) > 2 else Fraction(1)) for r in extra]
    adjacency = _weighted_adjacency(g, typed)
    best = 0
    for s in range(g.n):
        # Lexicographic (distance, hops) Dijkstra
        label: Dict[int, Tuple[Fraction, int]] = {s: (Fraction(0), 0)}
        heap: List[Tuple[Fraction, int, int]] = [(Fraction(0), 0, s)]
        done: Set[int] = set()
        while heap:
            d, hops, v = heapq.heappop(heap)
            if v in done:
                continue
            done.add(v)
            best = max(best, hops)
            for w, weight in adjacency[v]:
                candidate = (d + weight, hops + 1)
                if w not in label or candidate < label[w]:
                    label[w] = candidate
                    heapq.heappush(heap, (candidate[0], candidate[1], w))
    return best


def is_unique_path(g: Graph, s: int, t: int) -> Tuple[bool, Optional[PathSeq]]:
    """Decide whether exactly one s-t path exists; return it when unique.

    Path counts saturate at 2 and the search stops as soon as any vertex
    reachable from s is known to have two routes to t.
    """
    if not g.directed:
        raise StructuralError("path uniqueness is defined on DAGs; use is_unique_shortest_path")
    if s == t:
        return True, [s]

    count: Dict[int, int] = {t: 1}
    on_stack: Set[int] = {s}
    stack = [(s, iter(g.out_neighbors(s)))]
    while stack:
        v, successors = stack[-1]
        descended = False
        for w in successors:
            if w in count:
                continue
            if w in on_stack:
                raise CycleError(f"cycle through vertex {w}")
            on_stack.add(w)
            stack.append((w, iter(g.out_neighbors(w))))
            descended = True
            break
        if descended:
            continue
        stack.pop()
        on_stack.discard(v)
        total = min(2, sum(count[w] for w in g.out_neighbors(v)))
        count[v] = total
        if total >= 2:
            return False, None

    if count[s] == 0:
        raise DomainError(f"vertex {s} does not reach {t}")

    path = [s]
    v = s
    while v != t:
        v = next(w for w in g.out_neighbors(v) if count.get(w, 0) == 1)
        path.append(v)
    return True, path


def is_unique_shortest_path(g: Graph, s: int, t: int) -> bool:
    """True iff exactly one minimum-length s-t path exists.

    Counts saturate at 2; the search stops once the distance of t is settled.
    """
    if s == t:
        return True
    if not g.weighted:
        level = {s: 0}
        count = {s: 1}
        frontier = [s]
        while frontier and t not in level:
            next_frontier: List[int] = []
            depth = level[frontier[0]] + 1
            for v in frontier:
                for w in g.out_neighbors(v):
                    if w not in level:
                        level[w] = depth
                        count[w] = count[v]
                        next_frontier.append(w)
                    elif level[w] == depth:
                        count[w] = min(2, count[w] + count[v])
            frontier = next_frontier
        if t not in level:
            raise DomainError(f"vertex {s} does not reach {t}")
        return count[t] == 1

    dist: Dict[int, Fraction] = {s: Fraction(0)}
    paths: Dict[int, int] = {s: 1}
    heap: List[Tuple[Fraction, int]] = [(Fraction(0), s)]
    done: Set[int] = set()
    while heap:
        d, v = heapq.heappop(heap)
        if v in done:
            continue
        done.add(v)
        if v == t:
            return paths[t] == 1
        for w in g.out_neighbors(v):
            candidate = d + g.weight(v, w)
            if w not in dist or candidate < dist[w]:
                dist[w] = candidate
                paths[w] = paths[v]
                heapq.heappush(heap, (candidate, w))
            elif candidate == dist[w]:
                paths[w] = min(2, paths[w] + paths[v])
    raise DomainError(f"vertex {s} does not reach {t}")
