"""Obstacle product: an outer three-layer DAG whose middle vertices become inner graph copies."""

import logging
import math
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from certilab.config.limits import get_limits
from certilab.errors import ParameterError, ResourceLimitError
from certilab.graph.core import Edge, Graph, PathSeq, path_edges
from certilab.instances.layered import build_hs_instance, first_layer_paths, grid_side, hs_vertex_count
from certilab.instances.types import Instance
from certilab.lattice.hull import RadiusLike, radius_label

logger = logging.getLogger(__name__)

INNER_DIMENSION = 2
OUTER_RADIUS = "sqrt(2)"


def outer_paths(outer_r: RadiusLike = OUTER_RADIUS) -> List[PathSeq]:
    """Pairwise edge-disjoint 2-edge paths (x, v, y) of the d=2, D=1 layered graph.

    Only paths leaving layer 0 are kept, so x and y lie in layer 0 and v in
    layer 1; the greedy filter keeps a path when none of its edges was taken.
    """
    outer = build_hs_instance(2, 1, outer_r, directed=True)
    candidates = first_layer_paths(outer.critical_paths, 2, grid_side(1, outer_r))
    taken: Set[Edge] = set()
    kept: List[PathSeq] = []
    for path in candidates:
        edges = path_edges(path)
        if any(e in taken for e in edges):
            continue
        taken.update(edges)
        kept.append(path)
    return kept


def _default_inner(eps: float, size_budget: int) -> Tuple[int, str]:
    r_squared = max(2, math.ceil(size_budget ** (2 * eps)))
    radius = f"sqrt({r_squared})"
    best = 0
    D = 1
    while hs_vertex_count(INNER_DIMENSION, D, radius) <= size_budget // 2:
        best = D
        D += 1
    if best == 0:
        raise ParameterError(
            f"size budget {size_budget} cannot hold an inner copy with radius {radius_label(radius)}"
        )
    return best, radius


def build_rp_graph(
    eps: float,
    size_budget: int,
    rng_seed: int = 0,
    inner_D: Optional[int] = None,
    inner_r: Optional[RadiusLike] = None,
    outer_r: RadiusLike = OUTER_RADIUS,
) -> Instance:
    """Build the obstacle product within a vertex budget.

    The inner graph is the d=2 layered family, by default with r^2 about
    size_budget^(2*eps) and the largest D fitting half the budget. Outer
    paths (x, v, y) are grouped by middle vertex v; groups are replaced in
    id order while the budget lasts. Each outer path through v consumes a
    distinct inner critical path (s, t), chosen by a seeded permutation, and
    contributes edges (x, s^(v)) and (t^(v), y).

    Raises:
        ResourceLimitError: size_budget above the configured cap
        ParameterError: budget too small, or more outer paths through a
            middle vertex than inner critical paths
    """
    cap = get_limits().rp_size_cap
    if size_budget > cap:
        raise ResourceLimitError("obstacle product budget", size_budget, cap)
    if not 0 <= eps < 1:
        raise ParameterError(f"eps must lie in [0, 1), got {eps}")
    if inner_D is None or inner_r is None:
        default_D, default_r = _default_inner(eps, size_budget)
        inner_D = default_D if inner_D is None else inner_D
        inner_r = default_r if inner_r is None else inner_r

    inner = build_hs_instance(INNER_DIMENSION, inner_D, inner_r, directed=True)
    if not inner.critical_paths:
        raise ParameterError("inner instance has no critical paths")
    n_inner = inner.graph.n

    groups: Dict[int, List[PathSeq]] = {}
    for path in outer_paths(outer_r):
        groups.setdefault(path[1], []).append(path)
    degree = max((len(g) for g in groups.values()), default=0)
    if degree > len(inner.critical_paths):
        raise ParameterError(
            f"{degree} outer paths share a middle vertex but the inner graph has only "
            f"{len(inner.critical_paths)} critical paths"
        )

    firsts: Set[int] = set()
    lasts: Set[int] = set()
    chosen: List[int] = []
    for v in sorted(groups):
        new_first = {p[0] for p in groups[v]} - firsts
        new_last = {p[2] for p in groups[v]} - lasts
        total = len(firsts) + len(new_first) + len(lasts) + len(new_last) + (len(chosen) + 1) * n_inner
        if total > size_budget:
            break
        chosen.append(v)
        firsts |= new_first
        lasts |= new_last
    if not chosen:
        raise ParameterError(
            f"size budget {size_budget} cannot hold one inner copy ({n_inner} vertices) plus its outer endpoints"
        )

    first_id = {x: i for i, x in enumerate(sorted(firsts))}
    copy_base = len(first_id)
    last_base = copy_base + len(chosen) * n_inner
    last_id = {y: last_base + i for i, y in enumerate(sorted(lasts))}
    n = last_base + len(last_id)

    rng = np.random.default_rng(rng_seed)
    inner_src = np.array([u for u, _, _ in inner.graph.edges], dtype=np.int64)
    inner_dst = np.array([v for _, v, _ in inner.graph.edges], dtype=np.int64)
    sources: List[np.ndarray] = []
    targets: List[np.ndarray] = []
    glue: List[Edge] = []
    composed: List[PathSeq] = []
    for c, v in enumerate(chosen):
        offset = copy_base + c * n_inner
        sources.append(inner_src + offset)
        targets.append(inner_dst + offset)
        picks = rng.permutation(len(inner.critical_paths))[: len(groups[v])]
        for (x, _, y), pick in zip(groups[v], picks.tolist()):
            inner_path = inner.critical_paths[pick]
            glue.append((first_id[x], inner_path[0] + offset))
            glue.append((inner_path[-1] + offset, last_id[y]))
            composed.append([first_id[x]] + [w + offset for w in inner_path] + [last_id[y]])

    edge_src = np.concatenate(sources).tolist() + [u for u, _ in glue]
    edge_dst = np.concatenate(targets).tolist() + [w for _, w in glue]
    g = Graph(n, zip(edge_src, edge_dst), directed=True, validate=False)
    logger.info(
        "obstacle product: %d inner copies of %d vertices, n=%d, m=%d, %d composed paths",
        len(chosen), n_inner, n, g.m, len(composed),
    )
    return Instance(
        graph=g,
        critical_paths=composed,
        params={
            "eps": eps,
            "size_budget": size_budget,
            "seed": rng_seed,
            "inner_d": INNER_DIMENSION,
            "inner_D": inner_D,
            "inner_r": radius_label(inner_r),
            "outer_r": radius_label(outer_r),
            "copies": len(chosen),
            "first_layer": len(first_id),
            "last_layer": len(last_id),
        },
        kind="rp",
    )
