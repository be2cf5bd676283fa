"""Flow networks with integral capacities and costs, and the chain gadgets built on DAGs."""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from certilab.errors import FlowIntegrityError, InputMismatchError, ParameterError, StructuralError
from certilab.graph.core import Graph
from certilab.graph.oracles import topological_order

logger = logging.getLogger(__name__)

UNBOUNDED = -1  # capacity marker in the JSON form, stands for the network's big-M

SOURCE = 0
SINK = 1


@dataclass
class Arc:
    tail: int
    head: int
    capacity: int
    cost: int
    flow: int = 0
    unbounded: bool = False


class FlowNetwork:
    """Nodes 0..size-1 with a distinguished source and sink; parallel arcs allowed.

    Unbounded arcs carry capacity big_m, which callers choose large enough
    that no optimal flow of the values they route can saturate it.
    """

    def __init__(self, size: int, source: int = SOURCE, sink: int = SINK, big_m: int = 1):
        if size < 2:
            raise ParameterError(f"a flow network needs at least two nodes, got {size}")
        if big_m < 1:
            raise ParameterError(f"big-M must be positive, got {big_m}")
        self.size = size
        self.source = source
        self.sink = sink
        self.big_m = big_m
        self.arcs: List[Arc] = []
        self._out: List[List[int]] = [[] for _ in range(size)]
        self._in: List[List[int]] = [[] for _ in range(size)]

    def add_arc(self, tail: int, head: int, capacity: Optional[int], cost: int) -> int:
        """Add an arc; capacity None means unbounded. Returns the arc id."""
        if not (0 <= tail < self.size and 0 <= head < self.size):
            raise ParameterError(f"arc ({tail},{head}) has an endpoint outside 0..{self.size - 1}")
        unbounded = capacity is None
        cap = self.big_m if capacity is None else int(capacity)
        if cap < 0:
            raise ParameterError(f"negative capacity {cap} on arc ({tail},{head})")
        arc_id = len(self.arcs)
        self.arcs.append(Arc(tail, head, cap, int(cost), 0, unbounded))
        self._out[tail].append(arc_id)
        self._in[head].append(arc_id)
        return arc_id

    def out_arcs(self, node: int) -> List[int]:
        return self._out[node]

    def in_arcs(self, node: int) -> List[int]:
        return self._in[node]

    @property
    def value(self) -> int:
        """Net flow leaving the source."""
        out = sum(self.arcs[a].flow for a in self._out[self.source])
        back = sum(self.arcs[a].flow for a in self._in[self.source])
        return out - back

    @property
    def total_cost(self) -> int:
        return sum(arc.flow * arc.cost for arc in self.arcs)

    def reset(self) -> None:
        for arc in self.arcs:
            arc.flow = 0

    def check_flow(self) -> None:
        """Raise FlowIntegrityError on a capacity or conservation violation."""
        for arc_id, arc in enumerate(self.arcs):
            if not 0 <= arc.flow <= arc.capacity:
                raise FlowIntegrityError(
                    f"arc {arc_id} ({arc.tail},{arc.head}) carries {arc.flow} outside 0..{arc.capacity}"
                )
        for node in range(self.size):
            if node in (self.source, self.sink):
                continue
            inflow = sum(self.arcs[a].flow for a in self._in[node])
            outflow = sum(self.arcs[a].flow for a in self._out[node])
            if inflow != outflow:
                raise FlowIntegrityError(f"node {node} receives {inflow} but sends {outflow}", node=node)

    def copy(self) -> "FlowNetwork":
        clone = FlowNetwork(self.size, self.source, self.sink, self.big_m)
        for arc in self.arcs:
            arc_id = clone.add_arc(arc.tail, arc.head, None if arc.unbounded else arc.capacity, arc.cost)
            clone.arcs[arc_id].flow = arc.flow
        return clone

    def to_dict(self) -> Dict[str, Any]:
        """JSON form: {nodes, source, sink, big_m, arcs: [[from, to, cap, cost], ...], flows?}.

        Unbounded capacities are written as -1. Flows are included only when
        some arc carries flow.
        """
        payload: Dict[str, Any] = {
            "nodes": self.size,
            "source": self.source,
            "sink": self.sink,
            "big_m": self.big_m,
            "arcs": [
                [arc.tail, arc.head, UNBOUNDED if arc.unbounded else arc.capacity, arc.cost]
                for arc in self.arcs
            ],
        }
        if any(arc.flow for arc in self.arcs):
            payload["flows"] = [arc.flow for arc in self.arcs]
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "FlowNetwork":
        try:
            net = cls(
                int(payload["nodes"]),
                int(payload.get("source", SOURCE)),
                int(payload.get("sink", SINK)),
                int(payload.get("big_m", 1)),
            )
            for tail, head, cap, cost in payload["arcs"]:
                net.add_arc(int(tail), int(head), None if int(cap) == UNBOUNDED else int(cap), int(cost))
        except (KeyError, ValueError, TypeError) as e:
            raise InputMismatchError(f"malformed flow network JSON: {e}")
        flows = payload.get("flows")
        if flows is not None:
            if len(flows) != len(net.arcs):
                raise InputMismatchError(f"{len(flows)} flows for {len(net.arcs)} arcs")
            for arc, f in zip(net.arcs, flows):
                arc.flow = int(f)
        return net

    def __repr__(self) -> str:
        return f"FlowNetwork(nodes={self.size}, arcs={len(self.arcs)}, value={self.value})"


@dataclass
class FlowPath:
    nodes: List[int]
    arcs: List[int]
    value: int


@dataclass
class FlowDecomposition:
    """s-t paths with integral values; per-arc loads add up to the decomposed flow."""

    paths: List[FlowPath] = field(default_factory=list)

    @property
    def total(self) -> int:
        return sum(p.value for p in self.paths)

    def arc_loads(self, arc_count: int) -> List[int]:
        loads = [0] * arc_count
        for path in self.paths:
            for arc_id in path.arcs:
                loads[arc_id] += path.value
        return loads

    def total_length(self) -> int:
        """Sum of path lengths in arcs, counting each unit of flow once."""
        return sum(len(p.arcs) * p.value for p in self.paths)

    def __len__(self) -> int:
        return len(self.paths)


class GadgetVariant(str, Enum):
    COVER = "cover"
    DOMINATING = "dominating"


# (cost of the unit arc, cost of the unbounded arc) between v_in and v_out
VERTEX_ARC_COSTS: Dict[GadgetVariant, Tuple[int, int]] = {
    GadgetVariant.COVER: (-1, 0),
    GadgetVariant.DOMINATING: (-2, 1),
}


def in_node(v: int) -> int:
    return 2 + 2 * v


def out_node(v: int) -> int:
    return 3 + 2 * v


def vertex_of(node: int) -> Optional[int]:
    """Graph vertex behind a gadget node, None for the source and sink."""
    if node < 2:
        return None
    return (node - 2) // 2


@dataclass
class ChainGadget:
    """A gadget network plus the arc ids a chain extraction needs."""

    network: FlowNetwork
    graph: Graph
    variant: GadgetVariant
    unit_arcs: List[int]  # per vertex, the capacity-1 arc v_in -> v_out
    bulk_arcs: List[int]  # per vertex, the unbounded arc v_in -> v_out
    edge_arcs: Dict[Tuple[int, int], int]  # graph edge (v, u) -> arc v_out -> u_in


def build_chain_gadget(g: Graph, variant: GadgetVariant = GadgetVariant.COVER, ell: Optional[int] = None) -> ChainGadget:
    """Flow gadget on a DAG: split vertices, source and sink attached everywhere.

    Node layout: source 0, sink 1, then v_in = 2 + 2v and v_out = 3 + 2v.
    Per vertex the arcs are s -> v_in, the unit arc v_in -> v_out, the
    unbounded arc v_in -> v_out and v_out -> t, in that order, followed by one
    unbounded arc v_out -> u_in per edge (v, u). Unbounded means big-M n * ell,
    with ell defaulting to n.

    Raises:
        StructuralError: g undirected or cyclic
    """
    if not g.directed:
        raise StructuralError("chain gadgets are built on directed graphs")
    topological_order(g)
    variant = GadgetVariant(variant)
    ell = g.n if ell is None else ell
    if ell < 1:
        raise ParameterError(f"ell must be at least 1, got {ell}")
    unit_cost, bulk_cost = VERTEX_ARC_COSTS[variant]

    net = FlowNetwork(2 + 2 * g.n, big_m=max(1, g.n * ell))
    unit_arcs: List[int] = []
    bulk_arcs: List[int] = []
    for v in range(g.n):
        net.add_arc(SOURCE, in_node(v), None, 0)
        unit_arcs.append(net.add_arc(in_node(v), out_node(v), 1, unit_cost))
        bulk_arcs.append(net.add_arc(in_node(v), out_node(v), None, bulk_cost))
        net.add_arc(out_node(v), SINK, None, 0)
    edge_arcs: Dict[Tuple[int, int], int] = {}
    for v, u, _ in g.edges:
        edge_arcs[(v, u)] = net.add_arc(out_node(v), in_node(u), None, 0)
    logger.debug("%s gadget: %d nodes, %d arcs, big-M %d", variant.value, net.size, len(net.arcs), net.big_m)
    return ChainGadget(
        network=net, graph=g, variant=variant, unit_arcs=unit_arcs, bulk_arcs=bulk_arcs, edge_arcs=edge_arcs,
    )


def vertex_throughput(gadget: ChainGadget) -> List[int]:
    """Flow through v_in for every graph vertex."""
    net = gadget.network
    return [sum(net.arcs[a].flow for a in net.in_arcs(in_node(v))) for v in range(gadget.graph.n)]
