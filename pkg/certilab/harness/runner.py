"""Running one algorithm over many seeds of one instance."""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Tuple

from certilab.algos import (
    AlgoResult,
    DEFAULT_DIAMETER_FACTOR,
    ChainCover,
    KPMode,
    brr_greedy,
    chain_cover_flow,
    chain_cover_shortcut,
    diam_dominating_pipeline,
    fineman,
    jls,
    kp_sample,
    uy_sample,
)
from certilab.certify.shortcuts import ShortcutMode, ShortcutSet
from certilab.config.limits import get_limits
from certilab.errors import CertilabError, ParameterError
from certilab.graph.core import Graph
from certilab.graph.oracles import hop_diameter
from certilab.harness.experiment import ExperimentSpec, payload_digest
from certilab.instances import GadgetInstance, load_instance
from certilab.io.output import read_json
from certilab.treap.treap import PriorityMode

logger = logging.getLogger(__name__)

RESULTS_SCHEMA = 1

Runner = Callable[[Any, Dict[str, Any], int], AlgoResult]


def _graph(instance: Any) -> Graph:
    return instance.graph


def _run_uy(instance: Any, params: Dict[str, Any], seed: int) -> AlgoResult:
    if "p" not in params:
        raise ParameterError("uy needs p")
    return uy_sample(
        _graph(instance),
        float(params["p"]),
        ShortcutMode(params.get("mode", ShortcutMode.SHORTCUT.value)),
        seed,
        params.get("max_distance"),
    )


def _kp_chains(instance: Any, params: Dict[str, Any], seed: int) -> ChainCover:
    """Adversarial chains of a gadget when present, otherwise a flow-based cover."""
    source = params.get("chains", "adversarial")
    if source == "adversarial" and isinstance(instance, GadgetInstance) and instance.adversarial_chains:
        chains = instance.adversarial_chains
        return ChainCover(chains=chains, ell=len(chains), labels=list(range(len(chains))))
    g = _graph(instance)
    ell = int(params.get("ell", max(1, math.ceil(math.sqrt(g.n)))))
    return chain_cover_flow(g, ell, seed).cover


def _run_kp(instance: Any, params: Dict[str, Any], seed: int) -> AlgoResult:
    if "p_path" not in params:
        raise ParameterError("kp needs p_path")
    return kp_sample(
        _graph(instance),
        _kp_chains(instance, params, seed),
        float(params.get("p_v", 0.0)),
        float(params["p_path"]),
        KPMode(params.get("mode", KPMode.MIXED.value)),
        seed,
    )


def _run_brr(instance: Any, params: Dict[str, Any], seed: int) -> AlgoResult:
    if "budget" in params:
        budget = int(params["budget"])
    elif isinstance(instance, GadgetInstance):
        budget = len(instance.S) * len(instance.T)
    else:
        raise ParameterError("brr needs a budget on plain instances")
    result = brr_greedy(_graph(instance), budget)
    result.seed = seed
    return result


def _run_fineman(instance: Any, params: Dict[str, Any], seed: int) -> AlgoResult:
    first = params.get("first_pivot")
    return fineman(_graph(instance), seed, None if first is None else int(first))


def _run_jls(instance: Any, params: Dict[str, Any], seed: int) -> AlgoResult:
    return jls(_graph(instance), int(params.get("k", 2)), seed)


def _run_bals(instance: Any, params: Dict[str, Any], seed: int) -> AlgoResult:
    ell = params.get("ell")
    return chain_cover_shortcut(
        _graph(instance),
        None if ell is None else int(ell),
        seed,
        PriorityMode(params.get("priority_mode", PriorityMode.RANDOM.value)),
    )


def _run_kogan(instance: Any, params: Dict[str, Any], seed: int) -> AlgoResult:
    return diam_dominating_pipeline(_graph(instance), seed, float(params.get("factor", DEFAULT_DIAMETER_FACTOR)))


ALGORITHMS: Dict[str, Runner] = {
    "uy": _run_uy,
    "kp": _run_kp,
    "brr": _run_brr,
    "fineman": _run_fineman,
    "jls": _run_jls,
    "bals": _run_bals,
    "kogan": _run_kogan,
}


def diameter_with(g: Graph, h: ShortcutSet) -> int:
    """Hop diameter of g plus h; hopsets count hops along exact shortest paths."""
    if h.mode is ShortcutMode.HOPSET:
        return hop_diameter(g, h.weighted_edges(), weighted_mode=True)
    return hop_diameter(g, h.edges())


def run_one(instance: Any, algo: str, params: Dict[str, Any], seed: int, record_timing: bool = True) -> Dict[str, Any]:
    """One result row: the AlgoResult JSON, or an error record when a precondition fails."""
    if algo not in ALGORITHMS:
        raise ParameterError(f"unknown algorithm {algo!r} (choose from {', '.join(ALGORITHMS)})")
    g = _graph(instance)
    started = time.perf_counter()
    try:
        result = ALGORITHMS[algo](instance, params, seed)
        elapsed = (time.perf_counter() - started) * 1000.0
        weighted = g.weighted or result.shortcut.mode is ShortcutMode.HOPSET
        result.metrics["diameter_before"] = hop_diameter(g, weighted_mode=weighted)
        result.metrics["diameter_after"] = diameter_with(g, result.shortcut)
    except CertilabError as e:
        logger.warning("%s seed %d failed: %s", algo, seed, e)
        return {"algo": algo, "seed": seed, "params": dict(params),
                "error": {"type": type(e).__name__, "message": str(e)}}
    if record_timing:
        result.metrics["wall_ms"] = round(elapsed, 3)
    return result.to_dict()


def run_experiment(spec: ExperimentSpec) -> Tuple[Dict[str, Any], int]:
    """Run spec.algo once per seed on a worker pool.

    Returns the results document and the number of failed runs. Rows keep
    the order of spec.seeds.
    """
    spec.validate()
    payload = read_json(spec.instance_path)
    instance = load_instance(payload)
    workers = max(1, min(get_limits().workers, len(spec.seeds)))
    logger.info("running %s on %s (n=%d) for %d seeds with %d workers",
                spec.algo, spec.instance_path, instance.graph.n, len(spec.seeds), workers)

    def task(seed: int) -> Dict[str, Any]:
        return run_one(instance, spec.algo, spec.params, seed, spec.record_timing)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        rows: List[Dict[str, Any]] = list(pool.map(task, spec.seeds))

    failed = sum(1 for row in rows if "error" in row)
    document = {
        "schema": RESULTS_SCHEMA,
        "instance": {"kind": payload.get("kind", "graph"), "digest": payload_digest(payload)},
        "algo": spec.algo,
        "params": dict(spec.params),
        "runs": rows,
    }
    return document, failed
