"""Graph representation, exhaustive oracles and random generators."""

from certilab.graph.core import Edge, EdgePairSet, Graph, PathSeq, as_weight, path_edges, is_valid_path
from certilab.graph.oracles import (
    distances,
    hop_diameter,
    hop_distances,
    is_unique_path,
    is_unique_shortest_path,
    reachable_from,
    topological_order,
    transitive_closure,
)
from certilab.graph.generators import directed_path, layered_dag, random_dag, random_tree

__all__ = [
    "Edge",
    "EdgePairSet",
    "Graph",
    "PathSeq",
    "as_weight",
    "path_edges",
    "is_valid_path",
    "distances",
    "hop_diameter",
    "hop_distances",
    "is_unique_path",
    "is_unique_shortest_path",
    "reachable_from",
    "topological_order",
    "transitive_closure",
    "directed_path",
    "layered_dag",
    "random_dag",
    "random_tree",
]
