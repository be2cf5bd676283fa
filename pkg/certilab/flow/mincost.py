"""Min-cost flow of a fixed value by successive shortest paths with node potentials."""

import heapq
import logging
from collections import deque
from typing import List, Optional, Tuple

from certilab.errors import InfeasibleFlowError, ParameterError, PreconditionError
from certilab.flow.network import FlowNetwork

logger = logging.getLogger(__name__)

INF = float("inf")

# residual move: (arc id, +1 forward along the arc, -1 backward against it)
Move = Tuple[int, int]


def _residual(net: FlowNetwork, arc_id: int, sign: int) -> int:
    arc = net.arcs[arc_id]
    return arc.capacity - arc.flow if sign > 0 else arc.flow


def _moves(net: FlowNetwork, node: int):
    for arc_id in net.out_arcs(node):
        arc = net.arcs[arc_id]
        if arc.flow < arc.capacity:
            yield arc_id, 1, arc.head, arc.cost
    for arc_id in net.in_arcs(node):
        arc = net.arcs[arc_id]
        if arc.flow > 0:
            yield arc_id, -1, arc.tail, -arc.cost


def initial_potentials(net: FlowNetwork) -> List[float]:
    """Label-correcting distances from the source over the residual network.

    Raises PreconditionError when a negative cycle is reachable.
    """
    dist: List[float] = [INF] * net.size
    dist[net.source] = 0
    queued = [False] * net.size
    relaxed = [0] * net.size
    queue = deque([net.source])
    queued[net.source] = True
    while queue:
        node = queue.popleft()
        queued[node] = False
        for _, _, head, cost in _moves(net, node):
            candidate = dist[node] + cost
            if candidate < dist[head]:
                dist[head] = candidate
                if not queued[head]:
                    relaxed[head] += 1
                    if relaxed[head] > net.size:
                        raise PreconditionError("the residual network has a negative-cost cycle")
                    queued[head] = True
                    queue.append(head)
    return dist


def _dijkstra(net: FlowNetwork, potential: List[float]) -> Tuple[List[float], List[Optional[Move]]]:
    dist: List[float] = [INF] * net.size
    parent: List[Optional[Move]] = [None] * net.size
    dist[net.source] = 0
    heap = [(0.0, net.source)]
    while heap:
        d, node = heapq.heappop(heap)
        if d > dist[node]:
            continue
        for arc_id, sign, head, cost in _moves(net, node):
            reduced = cost + potential[node] - potential[head]
            candidate = d + reduced
            if candidate < dist[head]:
                dist[head] = candidate
                parent[head] = (arc_id, sign)
                heapq.heappush(heap, (candidate, head))
    return dist, parent


def min_cost_flow(net: FlowNetwork, value: int) -> FlowNetwork:
    """Route exactly value units from source to sink at minimum total cost.

    Works on a copy with all flows reset; the input network is left alone.
    Each round sends the bottleneck of a cheapest augmenting path, found by
    Dijkstra on reduced costs; potentials start from one label-correcting
    pass since arc costs may be negative.

    Raises:
        ParameterError: negative value
        InfeasibleFlowError: value exceeds what the network can carry
    """
    if value < 0:
        raise ParameterError(f"flow value must be nonnegative, got {value}")
    result = net.copy()
    result.reset()
    if value == 0:
        return result

    # nodes unreachable now stay unreachable: augmenting never leaves the reachable set
    potential = [0 if d == INF else d for d in initial_potentials(result)]
    routed = 0
    rounds = 0
    while routed < value:
        dist, parent = _dijkstra(result, potential)
        if dist[result.sink] == INF:
            raise InfeasibleFlowError(value, routed)
        for node in range(result.size):
            if dist[node] < INF:
                potential[node] += dist[node]

        path: List[Move] = []
        node = result.sink
        while node != result.source:
            move = parent[node]
            assert move is not None
            path.append(move)
            arc = result.arcs[move[0]]
            node = arc.tail if move[1] > 0 else arc.head
        push = min([value - routed] + [_residual(result, a, s) for a, s in path])
        for arc_id, sign in path:
            result.arcs[arc_id].flow += sign * push
        routed += push
        rounds += 1

    logger.debug("min-cost flow: value %d, cost %d after %d augmentations", value, result.total_cost, rounds)
    return result
