"""Greedy decomposition of an integral flow into source-sink paths."""

import logging
from typing import Dict, List

from certilab.errors import FlowIntegrityError
from certilab.flow.network import FlowDecomposition, FlowNetwork, FlowPath

logger = logging.getLogger(__name__)


def decompose(net: FlowNetwork) -> FlowDecomposition:
    """Strip paths along positive-flow arcs, always taking the lowest arc id.

    Each path carries its bottleneck. A walk that revisits a node has found
    a circulation; that cycle's flow is cancelled and not reported, since it
    adds nothing to the source-sink value.

    Raises FlowIntegrityError if the flow breaks capacity or conservation.
    """
    net.check_flow()
    remaining = [arc.flow for arc in net.arcs]
    decomposition = FlowDecomposition()
    if net.value < 0:
        raise FlowIntegrityError(f"net flow out of the source is negative ({net.value})", node=net.source)

    def next_arc(node: int) -> int:
        for arc_id in net.out_arcs(node):
            if remaining[arc_id] > 0:
                return arc_id
        raise FlowIntegrityError(f"flow stops at node {node}", node=node)

    cancelled = 0
    while any(remaining[a] > 0 for a in net.out_arcs(net.source)):
        nodes: List[int] = [net.source]
        arcs: List[int] = []
        position: Dict[int, int] = {net.source: 0}
        while nodes[-1] != net.sink:
            arc_id = next_arc(nodes[-1])
            head = net.arcs[arc_id].head
            if head in position:
                start = position[head]
                cycle = arcs[start:] + [arc_id]
                amount = min(remaining[a] for a in cycle)
                for a in cycle:
                    remaining[a] -= amount
                cancelled += amount
                for v in nodes[start + 1:]:
                    del position[v]
                nodes = nodes[: start + 1]
                arcs = arcs[:start]
                continue
            position[head] = len(nodes)
            nodes.append(head)
            arcs.append(arc_id)
        amount = min(remaining[a] for a in arcs)
        for a in arcs:
            remaining[a] -= amount
        decomposition.paths.append(FlowPath(nodes=nodes, arcs=arcs, value=amount))

    if cancelled:
        logger.debug("decomposition dropped %d units of circulating flow", cancelled)
    return decomposition
