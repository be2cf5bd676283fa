"""Instance generators: layered grids, obstacle products and auxiliary gadgets."""

from certilab.instances.gadgets import (
    AuxMode,
    aux_threads,
    build_cc_gadget,
    build_kp_gadget,
    build_uy_gadget,
    chain_hops,
    with_disjoint_sides,
)
from certilab.instances.layered import (
    build_hs_graph,
    build_hs_instance,
    construct_critical_paths,
    describe_vertex,
    first_layer_paths,
    grid_side,
    hs_vertex_count,
    vertex_id,
)
from certilab.instances.obstacle import build_rp_graph, outer_paths
from certilab.instances.types import GadgetInstance, Instance, load_instance

__all__ = [
    "AuxMode",
    "GadgetInstance",
    "Instance",
    "aux_threads",
    "build_cc_gadget",
    "build_hs_graph",
    "build_hs_instance",
    "build_kp_gadget",
    "build_rp_graph",
    "build_uy_gadget",
    "chain_hops",
    "construct_critical_paths",
    "describe_vertex",
    "first_layer_paths",
    "grid_side",
    "hs_vertex_count",
    "load_instance",
    "outer_paths",
    "vertex_id",
    "with_disjoint_sides",
]
