"""Layered certification schedules built from persistent treaps.

Every shortcut edge e is expanded into the original edges of the path it
stands for, kept as a treap T_e = join(T_e1, T_e2) over its certifying
edges. Each distinct non-leaf treap node x of height d then contributes the
edge shortcutting its subpath in layer 2d and, when x has two children, a
helper edge in layer 2d - 1. The number of layers is twice the largest
treap height, which is logarithmic with high probability.
"""

import logging
import math
from typing import Dict, List, Optional, Set, Tuple

from certilab.certify.shortcuts import ScheduleLayers, ShortcutMode, ShortcutSet
from certilab.certify.verify import EdgeIndex, certification_order
from certilab.config.limits import get_limits
from certilab.errors import CertificationFailure, StructuralError
from certilab.graph.core import Edge, Graph
from certilab.treap.treap import Priorities, PriorityMode, TreapNode, depth, join, singleton

logger = logging.getLogger(__name__)

SIZE_FACTOR = 8


def depth_target(n: int) -> int:
    """Layer count above which a schedule is rebuilt with fresh priorities."""
    return 4 * math.ceil(math.log2(max(n, 2))) + 2


def _edge_treaps(
    g: Graph, steps: List[Tuple[int, int, int]], priorities: Priorities
) -> Dict[Edge, TreapNode]:
    edge_ids = {(u, v): i for i, (u, v, _) in enumerate(g.edges)}
    trees: Dict[Edge, TreapNode] = {}

    def tree_of(u: int, v: int) -> TreapNode:
        if (u, v) in edge_ids:
            return singleton(edge_ids[(u, v)], priorities)
        return trees[(u, v)]

    for u, v, w in steps:
        joined = join(tree_of(u, w), tree_of(w, v))
        assert joined is not None
        trees[(u, v)] = joined
    return trees


def _layer_candidates(
    g: Graph, roots: List[TreapNode]
) -> Tuple[List[Tuple[int, Edge, int]], int]:
    """(layer, edge, midpoint) records for every distinct non-leaf node, plus the node count."""
    edge_list = g.edge_pairs()
    # id(node) -> (start, end, height)
    info: Dict[int, Tuple[int, int, int]] = {}
    candidates: List[Tuple[int, Edge, int]] = []

    for root in roots:
        stack: List[Tuple[TreapNode, bool]] = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if id(node) in info:
                continue
            children = [c for c in (node.left, node.right) if c is not None]
            if not expanded:
                stack.append((node, True))
                stack.extend((c, False) for c in reversed(children) if id(c) not in info)
                continue

            tail, head = edge_list[node.element]
            left = info[id(node.left)] if node.left is not None else None
            right = info[id(node.right)] if node.right is not None else None
            start = left[0] if left else tail
            end = right[1] if right else head
            height = 1 + max((info[id(c)][2] for c in children), default=-1)
            info[id(node)] = (start, end, height)
            if height == 0:
                continue
            if left and right:
                candidates.append((2 * height - 1, (left[0], head), tail))
                candidates.append((2 * height, (start, end), head))
            elif left:
                candidates.append((2 * height, (start, end), tail))
            else:
                candidates.append((2 * height, (start, end), head))
    return candidates, len(info)


def _assemble(g: Graph, candidates: List[Tuple[int, Edge, int]]) -> Tuple[List[List[Edge]], List[Dict[Edge, int]]]:
    present: Set[Edge] = set(g.edge_pairs())
    by_layer: Dict[int, List[Tuple[Edge, int]]] = {}
    for layer, edge, mid in candidates:
        by_layer.setdefault(layer, []).append((edge, mid))
    layers: List[List[Edge]] = []
    midpoints: List[Dict[Edge, int]] = []
    for layer in sorted(by_layer):
        fresh: List[Edge] = []
        mids: Dict[Edge, int] = {}
        for edge, mid in by_layer[layer]:
            if edge in present:
                continue
            present.add(edge)
            fresh.append(edge)
            mids[edge] = mid
        if fresh:
            layers.append(fresh)
            midpoints.append(mids)
    return layers, midpoints


def check_schedule(g: Graph, h: ShortcutSet, schedule: ScheduleLayers) -> None:
    """Raise CertificationFailure unless every layer is certified by the ones before it and H is covered."""
    index = EdgeIndex(g)
    for layer, mids in zip(schedule.layers, schedule.midpoints):
        broken = [
            (u, v) for u, v in layer
            if not (index.has(u, mids[(u, v)]) and index.has(mids[(u, v)], v))
        ]
        if broken:
            raise CertificationFailure(broken)
        for u, v in layer:
            index.add(u, v)
    missing = [(u, v) for u, v in h if not index.has(u, v)]
    if missing:
        raise CertificationFailure(missing)


def _build(g: Graph, steps: List[Tuple[int, int, int]], seed: int) -> Tuple[ScheduleLayers, int]:
    priorities = Priorities(PriorityMode.RANDOM, seed)
    trees = _edge_treaps(g, steps, priorities)
    roots = [trees[(u, v)] for u, v, _ in steps]
    candidates, node_count = _layer_candidates(g, roots)
    layers, midpoints = _assemble(g, candidates)
    max_depth = max((depth(root) for root in roots), default=0)
    return ScheduleLayers(layers=layers, midpoints=midpoints, max_tree_depth=max_depth, seed=seed), node_count


def low_depth_schedule(g: Graph, h: ShortcutSet, rng_seed: int = 0, max_retries: Optional[int] = None) -> ScheduleLayers:
    """Split a certified shortcut of a DAG into O(log n) layers.

    Certificates stored in h are used when present, otherwise the lowest-id
    midpoints. When the layer count exceeds 4*ceil(log2 n) + 2 the schedule
    is rebuilt with seed + attempt, up to max_retries times, and the
    schedule with the fewest layers is returned.
    """
    if not g.directed or h.mode is not ShortcutMode.SHORTCUT:
        raise StructuralError("low-depth schedules are built for shortcuts of DAGs")
    order = certification_order(g, h)
    index = EdgeIndex(g)
    steps: List[Tuple[int, int, int]] = []
    for u, v, w in order.steps:
        chosen = h.midpoint(u, v)
        if chosen is None or not (index.has(u, chosen) and index.has(chosen, v)):
            chosen = w
        steps.append((u, v, chosen))
        index.add(u, v)

    retries = get_limits().schedule_max_retries if max_retries is None else max_retries
    target = depth_target(g.n)
    best: Optional[ScheduleLayers] = None
    best_nodes = 0
    for attempt in range(retries + 1):
        schedule, node_count = _build(g, steps, rng_seed + attempt)
        if best is None or schedule.k < best.k:
            best, best_nodes = schedule, node_count
        if schedule.k <= target:
            break
        logger.debug("schedule with seed %d has %d layers (target %d)", rng_seed + attempt, schedule.k, target)
    assert best is not None
    if best.k > target:
        logger.warning("schedule has %d layers after %d retries (target %d)", best.k, retries, target)

    check_schedule(g, h, best)
    assert best.k <= 2 * best.max_tree_depth
    assert best.total_size <= 2 * best_nodes
    size_bound = SIZE_FACTOR * max(len(h), 1) * max(1, math.ceil(math.log2(max(g.n, 2))))
    if best.total_size > size_bound:
        logger.warning("schedule size %d exceeds %d", best.total_size, size_bound)
    return best
