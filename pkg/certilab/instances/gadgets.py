"""Auxiliary-vertex gadgets wrapped around critical-path instances."""

import logging
import math
from dataclasses import replace
from enum import Enum
from typing import Dict, List, Set, Tuple

import numpy as np

from certilab.errors import GadgetConstructionError, ParameterError
from certilab.graph.core import Edge, Graph, PathSeq
from certilab.instances.types import GadgetInstance, Instance

logger = logging.getLogger(__name__)


class AuxMode(str, Enum):
    STAR = "star"
    PATH = "path"


def _sides(inner: Instance) -> Tuple[List[int], List[int]]:
    S, T = inner.sources, inner.sinks
    if not S or not T:
        raise ParameterError("gadgets need an inner instance with critical paths (S and T nonempty)")
    shared = sorted(set(S) & set(T))
    if shared:
        raise ParameterError(f"{len(shared)} vertices are both a source and a sink of critical paths, e.g. {shared[0]}")
    return S, T


def with_disjoint_sides(inner: Instance) -> Instance:
    """Keep, in order, the critical paths that do not make a kept sink a source or a kept source a sink."""
    sources: Set[int] = set()
    sinks: Set[int] = set()
    kept: List[PathSeq] = []
    for path in inner.critical_paths:
        if path[0] in sinks or path[-1] in sources:
            continue
        kept.append(list(path))
        sources.add(path[0])
        sinks.add(path[-1])
    if len(kept) < len(inner.critical_paths):
        logger.info("kept %d of %d critical paths so that S and T are disjoint", len(kept), len(inner.critical_paths))
    return replace(inner, critical_paths=kept)


def _copy_edges(g: Graph, copies: int) -> List[Edge]:
    src = np.array([u for u, _, _ in g.edges], dtype=np.int64)
    dst = np.array([v for _, v, _ in g.edges], dtype=np.int64)
    edges: List[Edge] = []
    for c in range(copies):
        offset = c * g.n
        edges.extend(zip((src + offset).tolist(), (dst + offset).tolist()))
    return edges


def build_uy_gadget(inner: Instance, aux_mode: AuxMode = AuxMode.STAR) -> GadgetInstance:
    """Attach ceil(n'/|S|) auxiliaries to every s in S and ceil(n'/|T|) to every t in T.

    In star mode each auxiliary is adjacent to its S/T vertex; in path mode
    the auxiliaries of one vertex form a path feeding s (or leaving t).
    aux_of lists them in path order, so aux_of[s][-1] and aux_of[t][0] are
    the ones adjacent to s and t. The orientation of inner is kept.
    """
    aux_mode = AuxMode(aux_mode)
    S, T = _sides(inner)
    n_inner = inner.graph.n
    per_s = math.ceil(n_inner / len(S))
    per_t = math.ceil(n_inner / len(T))

    edges: List[Edge] = list(inner.graph.edge_pairs())
    aux_of: Dict[int, List[int]] = {}
    next_id = n_inner
    for s in S:
        group = list(range(next_id, next_id + per_s))
        next_id += per_s
        aux_of[s] = group
        if aux_mode is AuxMode.STAR:
            edges.extend((a, s) for a in group)
        else:
            edges.extend(zip(group, group[1:] + [s]))
    for t in T:
        group = list(range(next_id, next_id + per_t))
        next_id += per_t
        aux_of[t] = group
        if aux_mode is AuxMode.STAR:
            edges.extend((t, a) for a in group)
        else:
            edges.extend(zip([t] + group[:-1], group))

    graph = Graph(next_id, edges, directed=inner.graph.directed, validate=False)
    kind = "uy" if aux_mode is AuxMode.STAR else "brr"
    logger.debug("%s gadget: n'=%d, n=%d, |S|=%d, |T|=%d", kind, n_inner, graph.n, len(S), len(T))
    return GadgetInstance(
        base=inner,
        graph=graph,
        kind=kind,
        S=list(S),
        T=list(T),
        aux_of=aux_of,
        critical_paths=[list(p) for p in inner.critical_paths],
        copies=1,
        aux_mode=aux_mode.value,
        params={"inner": inner.kind, **inner.params, "aux_mode": aux_mode.value},
    )


def build_kp_gadget(inner: Instance, copies: int) -> GadgetInstance:
    """Disjoint copies with auxiliary in-stars on S and threaded auxiliary paths on T.

    Copy i of t gets auxiliaries v_j^(i), j < ceil(n'/|T|); the vertices
    v_j^(0), ..., v_j^(copies-1) form a path, so each thread has copies - 1
    edges and the threads are pairwise vertex-disjoint.
    """
    if copies < 1:
        raise ParameterError(f"copies must be at least 1, got {copies}")
    if not inner.graph.directed:
        raise ParameterError("the kp gadget is built on directed instances")
    S, T = _sides(inner)
    n_inner = inner.graph.n
    per_s = math.ceil(n_inner / len(S))
    per_t = math.ceil(n_inner / len(T))

    edges = _copy_edges(inner.graph, copies)
    aux_of: Dict[int, List[int]] = {}
    next_id = copies * n_inner
    for c in range(copies):
        offset = c * n_inner
        for s in S:
            group = list(range(next_id, next_id + per_s))
            next_id += per_s
            aux_of[s + offset] = group
            edges.extend((a, s + offset) for a in group)

    threads: Dict[Tuple[int, int], List[int]] = {}
    for t in T:
        for j in range(per_t):
            threads[(t, j)] = list(range(next_id, next_id + copies))
            next_id += copies
    for c in range(copies):
        offset = c * n_inner
        for t in T:
            group = [threads[(t, j)][c] for j in range(per_t)]
            aux_of[t + offset] = group
            edges.extend((t + offset, a) for a in group)
    for thread in threads.values():
        edges.extend(zip(thread, thread[1:]))

    graph = Graph(next_id, edges, directed=True, validate=False)
    paths = [[v + c * n_inner for v in p] for c in range(copies) for p in inner.critical_paths]
    logger.debug("kp gadget: %d copies, n=%d, %d threads", copies, graph.n, len(threads))
    return GadgetInstance(
        base=inner,
        graph=graph,
        kind="kp",
        S=[s + c * n_inner for c in range(copies) for s in S],
        T=[t + c * n_inner for c in range(copies) for t in T],
        aux_of=aux_of,
        critical_paths=paths,
        copies=copies,
        aux_mode="kp",
        params={"inner": inner.kind, **inner.params, "copies": copies},
    )


def aux_threads(gadget: GadgetInstance) -> List[PathSeq]:
    """The auxiliary T-side paths of a kp gadget, one per (t, j)."""
    if gadget.kind != "kp":
        raise ParameterError("only kp gadgets have auxiliary threads")
    n_inner = gadget.base.graph.n
    threads: List[PathSeq] = []
    for t in gadget.base.sinks:
        for a in gadget.aux_of[t]:
            thread = [a]
            while True:
                nxt = [w for w in gadget.graph.out_neighbors(thread[-1]) if w >= gadget.copies * n_inner]
                if not nxt:
                    break
                thread.append(nxt[0])
            threads.append(thread)
    return threads


def build_cc_gadget(inner: GadgetInstance, copies: int) -> GadgetInstance:
    """Serial copies of a star uy gadget joined by index matchings, plus adversarial chains.

    The T-auxiliaries of copy i-1 (ordered by t, then position) are matched
    one-to-one with the S-auxiliaries of copy i. Within a copy, the k-th
    critical path leaving s is assigned the k-th auxiliary of s and a fresh
    auxiliary of its end t; chains follow these hops and cross to the next
    copy along the matching.
    """
    if copies < 1:
        raise ParameterError(f"copies must be at least 1, got {copies}")
    if inner.kind != "uy" or inner.aux_mode != AuxMode.STAR.value:
        raise ParameterError("the cc gadget wraps a star-mode uy gadget")
    if not inner.graph.directed:
        raise ParameterError("the cc gadget is built on directed instances")
    n_unit = inner.graph.n

    # hop assignment inside one copy: S-aux -> T-aux through a distinct critical path
    by_source: Dict[int, List[PathSeq]] = {}
    for path in inner.critical_paths:
        by_source.setdefault(path[0], []).append(path)
    used_t: Dict[int, int] = {}
    hops: Dict[int, int] = {}
    for s in inner.S:
        paths = by_source.get(s, [])
        if len(paths) > len(inner.aux_of[s]):
            raise ParameterError(f"{len(paths)} critical paths leave {s} but it has {len(inner.aux_of[s])} auxiliaries")
        for k, path in enumerate(paths):
            t = path[-1]
            slot = used_t.get(t, 0)
            if slot >= len(inner.aux_of[t]):
                raise ParameterError(f"more critical paths end at {t} than it has auxiliaries")
            used_t[t] = slot + 1
            hops[inner.aux_of[s][k]] = inner.aux_of[t][slot]

    t_aux = [a for t in inner.T for a in inner.aux_of[t]]
    s_aux = [a for s in inner.S for a in inner.aux_of[s]]
    matched = min(len(t_aux), len(s_aux))

    edges = _copy_edges(inner.graph, copies)
    matching: Dict[int, int] = {}
    for c in range(1, copies):
        for k in range(matched):
            a = t_aux[k] + (c - 1) * n_unit
            b = s_aux[k] + c * n_unit
            edges.append((a, b))
            matching[a] = b
    graph = Graph(copies * n_unit, edges, directed=True, validate=False)

    chains: List[PathSeq] = []
    reached: Set[int] = set()
    for c in range(copies):
        offset = c * n_unit
        for start in hops:
            v = start + offset
            if v in reached:
                continue
            chain: List[int] = []
            while True:
                local = v % n_unit
                if local not in hops:
                    break
                end = hops[local] - local + v
                chain.extend([v, end])
                reached.add(v)
                if end not in matching:
                    break
                v = matching[end]
            if chain:
                chains.append(chain)

    seen: Set[int] = set()
    for chain in chains:
        if seen & set(chain):
            raise GadgetConstructionError("adversarial chains are not vertex-disjoint")
        seen.update(chain)

    aux_of = {
        v + c * n_unit: [a + c * n_unit for a in aux]
        for c in range(copies) for v, aux in inner.aux_of.items()
    }
    return GadgetInstance(
        base=inner.base,
        graph=graph,
        kind="cc",
        S=[s + c * n_unit for c in range(copies) for s in inner.S],
        T=[t + c * n_unit for c in range(copies) for t in inner.T],
        aux_of=aux_of,
        critical_paths=[[v + c * n_unit for v in p] for c in range(copies) for p in inner.critical_paths],
        copies=copies,
        aux_mode=AuxMode.STAR.value,
        adversarial_chains=chains,
        params={**inner.params, "copies": copies},
    )


def chain_hops(gadget: GadgetInstance) -> List[Edge]:
    """Consecutive (aux_s, aux_t) pairs of the adversarial chains that stay inside one copy."""
    if gadget.adversarial_chains is None:
        return []
    n_unit = gadget.graph.n // gadget.copies
    hops: List[Edge] = []
    for chain in gadget.adversarial_chains:
        for a, b in zip(chain, chain[1:]):
            if a // n_unit == b // n_unit:
                hops.append((a, b))
    return hops
