"""Integral min-cost flow, flow decomposition and the chain gadgets."""

from certilab.flow.decompose import decompose
from certilab.flow.mincost import initial_potentials, min_cost_flow
from certilab.flow.network import (
    Arc,
    ChainGadget,
    FlowDecomposition,
    FlowNetwork,
    FlowPath,
    GadgetVariant,
    build_chain_gadget,
    in_node,
    out_node,
    vertex_of,
    vertex_throughput,
)

__all__ = [
    "Arc",
    "ChainGadget",
    "FlowDecomposition",
    "FlowNetwork",
    "FlowPath",
    "GadgetVariant",
    "build_chain_gadget",
    "decompose",
    "in_node",
    "initial_potentials",
    "min_cost_flow",
    "out_node",
    "vertex_of",
    "vertex_throughput",
]
