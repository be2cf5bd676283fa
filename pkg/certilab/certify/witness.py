"""Lower-bound witnesses: path expansion, gadget witnesses and the forcing bound."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Set, Tuple

from certilab.certify.shortcuts import ShortcutMode, ShortcutSet
from certilab.certify.verify import is_certified
from certilab.errors import CycleError, DomainError, GadgetConstructionError, PreconditionError
from certilab.graph.core import Edge, Graph, PathSeq
from certilab.graph.oracles import distances, hop_distances, is_unique_path, is_unique_shortest_path
from certilab.instances.types import GadgetInstance

logger = logging.getLogger(__name__)

MAX_SHARED_EDGES = 3


def expansion_witness(
    g: Graph, h: ShortcutSet, p: Sequence[int], p_short: Sequence[int]
) -> Tuple[int, Set[Edge]]:
    """Expand p_short back into p by replacing shortcut edges with their certificates.

    Each iteration replaces the first edge of the current path that is not
    in g by its two certifying edges. When p is the unique (shortest) path
    between its endpoints the process ends at p after |p| - |p_short|
    iterations and every replaced edge has both endpoints on p.

    Returns:
        (iteration count, set of replaced h-edges)
    """
    if len(p) < 1 or len(p_short) < 1 or p[0] != p_short[0] or p[-1] != p_short[-1]:
        raise PreconditionError("p and p_short must share their endpoints")
    on_p = set(p)
    certificates = dict(h.certificates)
    if len(certificates) < len(h):
        _, computed = is_certified(g, h)
        for k, w in computed.items():
            certificates.setdefault(k, w)

    current = list(p_short)
    if not on_p.issuperset(current):
        raise PreconditionError("p_short leaves p; p is not the unique path between its endpoints")
    forced: Set[Edge] = set()
    iterations = 0
    position = 0
    while True:
        while position < len(current) - 1 and g.has_edge(current[position], current[position + 1]):
            position += 1
        if position >= len(current) - 1:
            break
        u, v = current[position], current[position + 1]
        if (u, v) not in h:
            raise PreconditionError(f"edge ({u},{v}) of the current path is in neither g nor h")
        w = certificates.get(h.key(u, v))
        if w is None:
            raise PreconditionError(f"edge ({u},{v}) has no certificate")
        if w not in on_p:
            raise PreconditionError(f"certificate {w} of ({u},{v}) leaves p; p is not unique")
        current.insert(position + 1, w)
        forced.add(h.key(u, v))
        iterations += 1
        if len(current) > len(p):
            raise PreconditionError("expansion grew past p; p is not unique")
    if current != list(p):
        raise PreconditionError("expansion ended on a different path than p")
    return iterations, forced


@dataclass
class WitnessBound:
    value: int = 0
    covered: List[int] = field(default_factory=list)  # critical path indices
    skipped: List[int] = field(default_factory=list)
    edges: Dict[int, Edge] = field(default_factory=dict)


def witness_lower_bound_details(inst: GadgetInstance, h: ShortcutSet) -> WitnessBound:
    """Sum |P| - 1 over extended critical paths whose long-range edge is in h.

    Extended paths must pairwise share at most three edges; anything else
    means the gadget was built wrong.
    """
    by_source: Dict[int, List[int]] = {}
    for a, b in h:
        by_source.setdefault(a, []).append(b)

    result = WitnessBound()
    used: Set[Edge] = set()
    extended: Dict[int, List[Edge]] = {}
    for index, path in enumerate(inst.critical_paths):
        up = inst.upstream(path[0])
        down = inst.downstream(path[-1])
        chosen = None
        for a in sorted(up):
            for b in by_source.get(a, ()):
                if b in down and (a, b) not in used:
                    chosen = (a, b)
                    break
            if chosen is not None:
                break
        if chosen is None:
            result.skipped.append(index)
            continue
        used.add(chosen)
        edges = inst.extended_edges(index, *chosen)
        extended[index] = edges
        result.covered.append(index)
        result.edges[index] = chosen
        result.value += len(edges) - 1

    paths_on_edge: Dict[Edge, List[int]] = {}
    for index, edges in extended.items():
        for e in edges:
            paths_on_edge.setdefault(e, []).append(index)
    for index, edges in extended.items():
        shared: Counter = Counter()
        for e in edges:
            shared.update(j for j in paths_on_edge[e] if j != index)
        if shared:
            other, count = shared.most_common(1)[0]
            if count > MAX_SHARED_EDGES:
                raise GadgetConstructionError(
                    f"extended paths {index} and {other} share {count} edges (at most {MAX_SHARED_EDGES} allowed)"
                )

    logger.debug(
        "witness bound %d from %d covered, %d skipped critical paths",
        result.value, len(result.covered), len(result.skipped),
    )
    return result


def witness_lower_bound(inst: GadgetInstance, h: ShortcutSet) -> int:
    return witness_lower_bound_details(inst, h).value


def _forced_path(g: Graph, h: ShortcutSet, u: int, v: int) -> List[int]:
    """The path whose expansion (u, v) forces, or [] if none is unique."""
    if h.mode is ShortcutMode.HOPSET:
        try:
            if not is_unique_shortest_path(g, u, v):
                return []
        except DomainError:
            return []
        return _shortest_path(g, u, v)
    if not g.directed:
        return []
    try:
        unique, path = is_unique_path(g, u, v)
    except (DomainError, CycleError):
        return []
    return path if unique and path is not None else []


def _shortest_path(g: Graph, u: int, v: int) -> PathSeq:
    if g.weighted:
        dist_u = distances(g, u)
        path = [v]
        while path[-1] != u:
            x = path[-1]
            prev = next(
                w for w in sorted(g.in_neighbors(x))
                if w in dist_u and dist_u[w] + g.weight(w, x) == dist_u[x]
            )
            path.append(prev)
        return list(reversed(path))
    hops = hop_distances(g, u)
    path = [v]
    while path[-1] != u:
        x = path[-1]
        path.append(next(w for w in sorted(g.in_neighbors(x)) if hops.get(w) == hops[x] - 1))
    return list(reversed(path))


def forcing_bound(g: Graph, h: ShortcutSet) -> int:
    """Lower bound on the certification complexity of h from unique paths.

    Certifying an h-edge whose endpoints are joined by a unique (shortest)
    path P forces |P| - 1 shortcut edges with both endpoints on P. Paths
    sharing at most one vertex cannot force a common edge, so their counts
    add up; every other h-edge contributes itself.
    """
    selected: List[Set[int]] = []
    total = 0
    for u, v in h:
        path = _forced_path(g, h, u, v)
        if len(path) < 3:
            continue
        vertices = set(path)
        if all(len(vertices & chosen) <= 1 for chosen in selected):
            selected.append(vertices)
            total += len(path) - 2
    for u, v in h:
        if not any(u in chosen and v in chosen for chosen in selected):
            total += 1
    return total

