"""Tests for min-cost flow, decomposition and the chain gadgets."""

from dataclasses import replace

import networkx as nx
import pytest

from certilab.errors import (
    CycleError,
    FlowIntegrityError,
    InfeasibleFlowError,
    InputMismatchError,
    ParameterError,
    PreconditionError,
    StructuralError,
)
from certilab.flow import (
    FlowNetwork,
    GadgetVariant,
    build_chain_gadget,
    decompose,
    in_node,
    initial_potentials,
    min_cost_flow,
    out_node,
    vertex_of,
    vertex_throughput,
)
from certilab.graph.core import Graph
from certilab.graph.generators import directed_path, random_dag


def networkx_cost(net: FlowNetwork, value: int) -> int:
    h = nx.MultiDiGraph()
    h.add_nodes_from(range(net.size))
    h.nodes[net.source]["demand"] = -value
    h.nodes[net.sink]["demand"] = value
    for arc in net.arcs:
        h.add_edge(arc.tail, arc.head, capacity=arc.capacity, weight=arc.cost)
    return nx.min_cost_flow_cost(h)


class TestChainGadget:
    """Tests for build_chain_gadget."""

    def test_path_gadget_shape(self):
        """Test 8 nodes and 14 arcs for a 3-vertex path."""
        gadget = build_chain_gadget(directed_path(3))
        assert gadget.network.size == 8
        assert len(gadget.network.arcs) == 14
        assert gadget.unit_arcs == [1, 5, 9]
        assert gadget.bulk_arcs == [2, 6, 10]
        assert gadget.edge_arcs == {(0, 1): 12, (1, 2): 13}
        assert gadget.network.big_m == 9

    def test_node_layout(self):
        """Test the in/out node numbering."""
        assert (in_node(0), out_node(0), in_node(3)) == (2, 3, 8)
        assert vertex_of(9) == 3
        assert vertex_of(1) is None

    def test_requires_dag(self):
        """Test undirected and cyclic graphs are rejected."""
        with pytest.raises(StructuralError):
            build_chain_gadget(Graph(2, [(0, 1)], directed=False))
        with pytest.raises(CycleError):
            build_chain_gadget(Graph(2, [(0, 1), (1, 0)]))
        with pytest.raises(ParameterError):
            build_chain_gadget(directed_path(3), ell=0)


class TestMinCostFlow:
    """Tests for min_cost_flow."""

    def test_cover_cost_on_path(self):
        """Test one unit covering a 3-vertex path costs -3."""
        gadget = build_chain_gadget(directed_path(3))
        flow = min_cost_flow(gadget.network, 1)
        assert flow.total_cost == -3
        assert vertex_throughput(replace(gadget, network=flow)) == [1, 1, 1]
        flow.check_flow()

    def test_extra_units_gain_nothing(self):
        """Test a second unit on the path costs nothing extra."""
        gadget = build_chain_gadget(directed_path(3), ell=2)
        assert min_cost_flow(gadget.network, 2).total_cost == -3

    def test_dominating_variant(self):
        """Test unit arcs worth -2 in the dominating variant."""
        gadget = build_chain_gadget(directed_path(3), GadgetVariant.DOMINATING)
        assert min_cost_flow(gadget.network, 1).total_cost == -6

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize("variant", list(GadgetVariant))
    def test_matches_networkx(self, seed, variant):
        """Test optimal cost against networkx on random DAG gadgets."""
        g = random_dag(12, 20, seed)
        gadget = build_chain_gadget(g, variant, ell=4)
        for value in (1, 2, 4):
            assert min_cost_flow(gadget.network, value).total_cost == networkx_cost(gadget.network, value)

    def test_infeasible_value(self):
        """Test that too large a value raises InfeasibleFlowError."""
        net = FlowNetwork(3)
        net.add_arc(0, 2, 1, 0)
        net.add_arc(2, 1, 1, 0)
        with pytest.raises(InfeasibleFlowError) as info:
            min_cost_flow(net, 2)
        assert info.value.routed == 1

    def test_zero_and_negative_values(self):
        """Test value 0 routes nothing and negative values are rejected."""
        net = FlowNetwork(2)
        net.add_arc(0, 1, 3, 1)
        assert min_cost_flow(net, 0).value == 0
        with pytest.raises(ParameterError):
            min_cost_flow(net, -1)

    def test_input_left_alone(self):
        """Test that the input network keeps zero flow."""
        gadget = build_chain_gadget(directed_path(3))
        min_cost_flow(gadget.network, 1)
        assert gadget.network.value == 0

    def test_negative_cycle_detected(self):
        """Test that a reachable negative cycle breaks the potentials."""
        net = FlowNetwork(3)
        net.add_arc(0, 2, 1, 0)
        net.add_arc(2, 1, 1, -1)
        net.add_arc(1, 2, 1, -1)
        with pytest.raises(PreconditionError):
            initial_potentials(net)


class TestDecompose:
    """Tests for decompose."""

    def test_single_covering_path(self):
        """Test the decomposition of the path cover flow."""
        gadget = build_chain_gadget(directed_path(3))
        flow = min_cost_flow(gadget.network, 1)
        decomposition = decompose(flow)
        assert len(decomposition) == 1
        assert decomposition.paths[0].nodes == [0, 2, 3, 4, 5, 6, 7, 1]
        assert decomposition.total == 1
        assert decomposition.total_length() == 7

    @pytest.mark.parametrize("seed", range(5))
    def test_loads_reproduce_flow(self, seed):
        """Test that path loads add up to the arc flows on random gadgets."""
        gadget = build_chain_gadget(random_dag(15, 30, seed), ell=3)
        flow = min_cost_flow(gadget.network, 3)
        decomposition = decompose(flow)
        assert decomposition.total == 3
        assert decomposition.arc_loads(len(flow.arcs)) == [arc.flow for arc in flow.arcs]

    def test_circulation_is_dropped(self):
        """Test that a cycle carrying flow is cancelled."""
        net = FlowNetwork(4)
        for tail, head in [(0, 2), (2, 3), (3, 2), (2, 1)]:
            arc_id = net.add_arc(tail, head, 1, 0)
            net.arcs[arc_id].flow = 1
        decomposition = decompose(net)
        assert [p.nodes for p in decomposition.paths] == [[0, 2, 1]]

    def test_conservation_violation(self):
        """Test that a broken flow raises FlowIntegrityError."""
        net = FlowNetwork(3)
        net.add_arc(0, 2, 1, 0)
        net.add_arc(2, 1, 1, 0)
        net.arcs[0].flow = 1
        with pytest.raises(FlowIntegrityError):
            decompose(net)


class TestNetworkJson:
    """Tests for the flow network JSON form."""

    def test_flows_and_unbounded_arcs(self):
        """Test that flows and unbounded capacities survive the JSON form."""
        gadget = build_chain_gadget(directed_path(3))
        flow = min_cost_flow(gadget.network, 1)
        payload = flow.to_dict()
        assert payload["arcs"][0] == [0, 2, -1, 0]
        again = FlowNetwork.from_dict(payload)
        assert again.total_cost == -3
        assert again.arcs[0].unbounded

    def test_malformed_payload(self):
        """Test that broken JSON raises InputMismatchError."""
        with pytest.raises(InputMismatchError):
            FlowNetwork.from_dict({"arcs": []})
        with pytest.raises(InputMismatchError):
            FlowNetwork.from_dict({"nodes": 2, "arcs": [[0, 1, 1, 0]], "flows": [1, 1]})
