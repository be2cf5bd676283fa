"""Sampling shortcuts: vertex-pair sampling and vertex-to-chain sampling."""

import logging
from enum import Enum
from fractions import Fraction
from typing import List, Optional

import numpy as np

from certilab.algos.result import AlgoResult, ChainCover
from certilab.certify.shortcuts import ShortcutMode, ShortcutSet
from certilab.errors import ParameterError
from certilab.graph.core import Graph
from certilab.graph.oracles import distances, reachable_from

logger = logging.getLogger(__name__)


class KPMode(str, Enum):
    MIXED = "mixed"
    PATHS_ONLY = "paths_only"


def _check_probability(name: str, p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ParameterError(f"{name} must lie in [0, 1], got {p}")


def uy_sample(
    g: Graph,
    p: float,
    mode: ShortcutMode = ShortcutMode.SHORTCUT,
    seed: int = 0,
    max_distance: Optional[Fraction] = None,
) -> AlgoResult:
    """Sample vertices with probability p and join every sampled reachable pair.

    Pairs that are already edges are skipped. In hopset mode each edge gets
    the exact distance as weight. With max_distance, pairs farther apart are
    skipped as well.
    """
    _check_probability("p", p)
    mode = ShortcutMode(mode)
    rng = np.random.default_rng(seed)
    sampled: List[int] = np.flatnonzero(rng.random(g.n) < p).tolist()
    limit = None if max_distance is None else Fraction(max_distance)

    h = ShortcutSet(mode=mode, directed=g.directed)
    members = set(sampled)
    for u in sampled:
        dist = distances(g, u)
        for v in sorted(members & dist.keys()):
            if v == u or g.has_edge(u, v):
                continue
            if limit is not None and dist[v] > limit:
                continue
            h.add(u, v, weight=dist[v] if mode is ShortcutMode.HOPSET else None)
    logger.debug("uy sample p=%s seed=%d: %d sampled, %d edges", p, seed, len(sampled), len(h))
    return AlgoResult(
        algo="uy",
        seed=seed,
        shortcut=h,
        params={"p": p, "mode": mode.value, "max_distance": None if limit is None else str(limit)},
        metrics={"rounds": 1, "sampled": len(sampled)},
    )


def kp_sample(
    g: Graph,
    chains: ChainCover,
    p_v: float,
    p_path: float,
    mode: KPMode = KPMode.MIXED,
    seed: int = 0,
) -> AlgoResult:
    """Join sampled vertices to the first reachable vertex of every sampled chain.

    The first reachable vertex is the earliest chain vertex other than the
    source itself. In paths_only mode the sources are all vertices of the
    sampled chains and p_v is ignored.
    """
    _check_probability("p_v", p_v)
    _check_probability("p_path", p_path)
    mode = KPMode(mode)
    chains.validate(g)
    rng = np.random.default_rng(seed)
    picked = rng.random(len(chains.chains)) < p_path
    sampled_chains = [chain for chain, keep in zip(chains.chains, picked.tolist()) if keep]
    if mode is KPMode.MIXED:
        sources = np.flatnonzero(rng.random(g.n) < p_v).tolist()
    else:
        sources = sorted({v for chain in sampled_chains for v in chain})

    h = ShortcutSet(directed=g.directed)
    adjacency = [g.out_neighbors(v) for v in range(g.n)]
    for u in sources:
        reach = reachable_from(adjacency, u)
        for chain in sampled_chains:
            target = next((w for w in chain if w != u and w in reach), None)
            if target is not None and not g.has_edge(u, target):
                h.add(u, target)
    logger.debug("kp sample seed=%d: %d sources, %d chains, %d edges",
                 seed, len(sources), len(sampled_chains), len(h))
    return AlgoResult(
        algo="kp",
        seed=seed,
        shortcut=h,
        params={"p_v": p_v, "p_path": p_path, "mode": mode.value},
        metrics={"rounds": 1, "sources": len(sources), "sampled_chains": len(sampled_chains)},
    )
