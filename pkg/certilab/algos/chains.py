"""Chain covers from min-cost flows, treap-based chain extraction and their certified shortcuts."""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from certilab.algos.result import AlgoResult, ChainCover
from certilab.certify.shortcuts import ShortcutSet
from certilab.certify.subroutines import path_shortcut_diam2
from certilab.certify.verify import EdgeIndex
from certilab.errors import (
    CertificationFailure,
    FlowIntegrityError,
    InputMismatchError,
    ParameterError,
    StructuralError,
)
from certilab.flow.mincost import min_cost_flow
from certilab.flow.network import (
    SINK,
    SOURCE,
    ChainGadget,
    GadgetVariant,
    build_chain_gadget,
    out_node,
    vertex_of,
)
from certilab.graph.core import Graph, PathSeq
from certilab.graph.oracles import topological_order
from certilab.treap.treap import (
    EventLog,
    Priorities,
    PriorityMode,
    Treap,
    from_sequence,
    join,
    member_root,
    sequence,
    size,
    split,
)

logger = logging.getLogger(__name__)

# element -> (parent element, subtree signature)
NodeStates = Dict[int, Tuple[Optional[int], int]]


@dataclass
class ChainExtraction:
    """Chains read off a flow, with the per-vertex treaps they came from.

    treaps[v] holds the unit indices passing through v after all incoming
    pieces were joined; unit_paths[i] lists the vertices unit i visits in
    topological order.
    """

    cover: ChainCover
    log: EventLog
    priorities: Priorities
    treaps: Dict[int, Treap] = field(default_factory=dict)
    unit_paths: List[PathSeq] = field(default_factory=list)


def treap_chain_extract(
    gadget: ChainGadget,
    priority_mode: PriorityMode = PriorityMode.RANDOM,
    seed: int = 0,
) -> ChainExtraction:
    """Sweep the DAG in topological order, passing treaps of unit indices along the flow.

    The source starts with units 0..value-1. At each vertex the arriving
    pieces are joined, the vertex joins the chain of the treap root, and
    the treap is split by the flow on the outgoing arcs (arc id order).

    Raises:
        InputMismatchError: network and graph sizes disagree
        FlowIntegrityError: the flow is not a valid source-sink flow
    """
    g = gadget.graph
    net = gadget.network
    if net.size != 2 + 2 * g.n:
        raise InputMismatchError(f"network has {net.size} nodes, graph needs {2 + 2 * g.n}")
    net.check_flow()
    value = net.value
    priorities = Priorities(priority_mode, seed)
    priorities.assign(range(value))
    log = EventLog()

    incoming: List[List[Treap]] = [[] for _ in range(g.n)]
    rest = from_sequence(range(value), priorities)
    for arc_id in net.out_arcs(SOURCE):
        arc = net.arcs[arc_id]
        if arc.flow:
            piece, rest = split(rest, arc.flow)
            incoming[vertex_of(arc.head)].append(piece)  # type: ignore[index]
    if rest is not None:
        raise FlowIntegrityError(f"{size(rest)} units never leave the source", node=SOURCE)

    treaps: Dict[int, Treap] = {}
    members: Dict[int, List[int]] = {}
    unit_paths: List[PathSeq] = [[] for _ in range(value)]
    for v in topological_order(g):
        tree: Treap = None
        for piece in incoming[v]:
            tree = join(tree, piece, log, v)
        treaps[v] = tree
        if tree is None:
            continue
        root = member_root(tree)
        log.root(v, root)
        members.setdefault(root, []).append(v)
        for unit in sequence(tree):
            unit_paths[unit].append(v)

        rest = tree
        for arc_id in net.out_arcs(out_node(v)):
            arc = net.arcs[arc_id]
            if not arc.flow:
                continue
            if arc.flow > size(rest):
                raise FlowIntegrityError(f"vertex {v} sends more flow than it receives", node=out_node(v))
            piece, rest = split(rest, arc.flow, log, v)
            if arc.head != SINK:
                incoming[vertex_of(arc.head)].append(piece)  # type: ignore[index]
        if rest is not None:
            raise FlowIntegrityError(f"{size(rest)} units stop at vertex {v}", node=out_node(v))

    labels = sorted(members)
    cover = ChainCover(chains=[members[i] for i in labels], ell=value, labels=labels)
    logger.debug("extracted %d chains from a %d-unit flow, %d log records", len(labels), value, len(log))
    return ChainExtraction(cover=cover, log=log, priorities=priorities, treaps=treaps, unit_paths=unit_paths)


def max_uncovered_on_path(g: Graph, covered: Iterable[int]) -> int:
    """Largest number of uncovered vertices on any path (longest-path DP on the DAG)."""
    covered_set = set(covered)
    best = [0] * g.n
    top = 0
    for v in topological_order(g):
        weight = 0 if v in covered_set else 1
        incoming = max((best[u] for u in g.in_neighbors(v)), default=0)
        best[v] = incoming + weight
        top = max(top, best[v])
    return top


def chain_cover_flow(
    g: Graph,
    ell: int,
    seed: int = 0,
    priority_mode: PriorityMode = PriorityMode.RANDOM,
) -> ChainExtraction:
    """At most ell vertex-disjoint chains leaving at most n/ell uncovered vertices on any path.

    Solves the cover gadget at value ell and extracts chains with treaps.
    Values above what the vertices can absorb are routed through the
    zero-cost unbounded arcs.

    Raises:
        FlowIntegrityError: the cover bound fails, which means the flow was not optimal
    """
    if ell < 1:
        raise ParameterError(f"ell must be at least 1, got {ell}")
    gadget = build_chain_gadget(g, GadgetVariant.COVER, ell)
    solved = replace(gadget, network=min_cost_flow(gadget.network, ell))
    extraction = treap_chain_extract(solved, priority_mode, seed)
    uncovered = max_uncovered_on_path(g, extraction.cover.covered())
    if uncovered * ell > g.n:
        raise FlowIntegrityError(f"a path keeps {uncovered} uncovered vertices, above n/ell = {g.n / ell:.2f}")
    logger.info("chain cover: n=%d, ell=%d, %d chains, at most %d uncovered per path",
                g.n, ell, len(extraction.cover.chains), uncovered)
    return extraction


def _node_states(tree: Treap) -> NodeStates:
    states: NodeStates = {}
    if tree is None:
        return states
    stack = [(tree, None)]
    while stack:
        node, parent = stack.pop()
        states[node.element] = (parent, node.signature)
        for child in (node.left, node.right):
            if child is not None:
                stack.append((child, node.element))
    return states


def important_chains(extraction: ChainExtraction) -> Dict[int, PathSeq]:
    """Per unit, the vertices of its path where it is the root or its treap neighbourhood changes.

    A vertex is kept when the unit is the root there, when the unit's parent
    or subtree differs from the previous or next vertex of its path, or when
    it is the first or last vertex of the path.

    Raises InputMismatchError when the log's roots disagree with the treaps.
    """
    states: Dict[int, NodeStates] = {}
    for v, tree in extraction.treaps.items():
        if tree is None:
            continue
        if extraction.log.root_at(v) != member_root(tree):
            raise InputMismatchError(f"event log root at vertex {v} does not match the treap")
        states[v] = _node_states(tree)

    result: Dict[int, PathSeq] = {}
    for unit, path in enumerate(extraction.unit_paths):
        if not path:
            continue
        kept: PathSeq = []
        for k, v in enumerate(path):
            here = states[v][unit]
            if (
                k == 0
                or k == len(path) - 1
                or here[0] is None
                or states[path[k - 1]][unit] != here
                or states[path[k + 1]][unit] != here
            ):
                kept.append(v)
        result[unit] = kept
    return result


def _certify_into(index: EdgeIndex, target: ShortcutSet, u: int, v: int) -> None:
    if index.has(u, v):
        return
    w = index.midpoint(u, v)
    if w is None:
        raise CertificationFailure([(u, v)])
    index.add(u, v)
    target.add(u, v, midpoint=w)


def shortcut_chain(index: EdgeIndex, target: ShortcutSet, chain: Sequence[int], hops: bool = True) -> None:
    """Add the chain hops (certified through index) and the diameter-2 edges of the chain.

    With hops=False the hops must already be present.
    """
    if len(chain) < 2:
        return
    for u, v in zip(chain, chain[1:]):
        if hops:
            _certify_into(index, target, u, v)
        elif not index.has(u, v):
            raise CertificationFailure([(u, v)])
    diam2, _ = path_shortcut_diam2(chain)
    for u, v in diam2:
        if not index.has(u, v):
            index.add(u, v)
            target.add(u, v, midpoint=diam2.midpoint(u, v))


def important_chain_extension(g: Graph, extraction: ChainExtraction) -> ShortcutSet:
    """Certified shortcut giving every important chain hop distance 2.

    Units are processed by increasing priority. Hops between consecutive
    important vertices that are not graph edges are certified by the
    diameter-2 shortcut of the parent unit's chain, which is handled earlier.

    Raises CertificationFailure if some hop has no midpoint.
    """
    chains = important_chains(extraction)
    order = sorted(chains, key=lambda unit: (extraction.priorities(unit), unit))
    index = EdgeIndex(g)
    extension = ShortcutSet(directed=True)
    for unit in order:
        shortcut_chain(index, extension, chains[unit])
    total = sum(len(c) for c in chains.values())
    logger.debug("important chains: %d units, %d vertices, %d extension edges", len(chains), total, len(extension))
    return extension


def chain_cover_shortcut(
    g: Graph,
    ell: Optional[int] = None,
    seed: int = 0,
    priority_mode: PriorityMode = PriorityMode.RANDOM,
) -> AlgoResult:
    """Shortcut every chain of a flow-based cover to hop diameter 2, with a certified extension.

    ell defaults to ceil(sqrt(n)). The extension shortcuts the important
    chains first and then adds the chain shortcut on top, certifying each
    edge through what is already present.
    """
    if not g.directed:
        raise StructuralError("chain covers need a directed graph")
    ell = max(1, math.ceil(math.sqrt(g.n))) if ell is None else ell
    extraction = chain_cover_flow(g, ell, seed, priority_mode)

    shortcut = ShortcutSet(directed=True)
    plain = EdgeIndex(g)
    for chain in extraction.cover.chains:
        for u, v in zip(chain, chain[1:]):
            if not plain.has(u, v):
                plain.add(u, v)
                shortcut.add(u, v)
        shortcut_chain(plain, shortcut, chain, hops=False)

    extension = important_chain_extension(g, extraction)
    index = EdgeIndex.of(g, extension)
    for u, v in shortcut:
        _certify_into(index, extension, u, v)

    covered: Set[int] = extraction.cover.covered()
    return AlgoResult(
        algo="bals",
        seed=seed,
        shortcut=shortcut,
        params={"ell": ell, "priority_mode": PriorityMode(priority_mode).value},
        certified_extension=extension,
        metrics={
            "rounds": 1,
            "chains": len(extraction.cover.chains),
            "uncovered_max": max_uncovered_on_path(g, covered),
            "log_records": len(extraction.log),
        },
        chains=extraction.cover,
    )
