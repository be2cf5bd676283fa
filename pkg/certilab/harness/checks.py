"""Verification checks run by `certilab verify`.

Each check calls exactly one oracle on one run and returns a CheckOutcome;
a check that cannot apply to its input raises InputMismatchError instead of
being skipped.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from certilab.algos.chains import max_uncovered_on_path
from certilab.algos.result import AlgoResult
from certilab.certify.brute import brute_force_cert_complexity
from certilab.certify.schedule import depth_target, low_depth_schedule
from certilab.certify.shortcuts import ShortcutSet
from certilab.certify.verify import is_certified, validate_shortcut
from certilab.certify.witness import witness_lower_bound_details
from certilab.errors import (
    CertificationFailure,
    CertilabError,
    GadgetConstructionError,
    InputMismatchError,
    InvalidShortcutError,
    ResourceLimitError,
    StructuralError,
)
from certilab.harness.experiment import CHECKS, payload_digest
from certilab.harness.runner import diameter_with
from certilab.instances import GadgetInstance, load_instance

logger = logging.getLogger(__name__)


@dataclass
class CheckOutcome:
    passed: bool
    detail: str = ""
    values: Dict[str, Any] = field(default_factory=dict)


def _target(result: AlgoResult) -> ShortcutSet:
    """The set whose certification is claimed: the extension when present."""
    return result.certified_extension if result.certified_extension is not None else result.shortcut


def check_certified(instance: Any, result: AlgoResult) -> CheckOutcome:
    g = instance.graph
    target = _target(result)
    missing = [e for e in result.shortcut if e not in target]
    if missing:
        return CheckOutcome(False, f"extension lacks {len(missing)} shortcut edges", {"certified": False})
    try:
        ok, midpoints = is_certified(g, target)
    except InvalidShortcutError as e:
        return CheckOutcome(False, str(e), {"certified": False})
    detail = "" if ok else f"{len(target) - len(midpoints)} of {len(target)} edges uncertified"
    return CheckOutcome(ok, detail, {"certified": ok})


def check_diameter(instance: Any, result: AlgoResult) -> CheckOutcome:
    after = diameter_with(instance.graph, result.shortcut)
    before = result.metrics.get("diameter_before")
    recorded = result.metrics.get("diameter_after")
    values = {"diameter_after": after}
    if recorded is not None and recorded != after:
        return CheckOutcome(False, f"recorded diameter {recorded}, recomputed {after}", values)
    if before is not None and after > before:
        return CheckOutcome(False, f"diameter grew from {before} to {after}", values)
    return CheckOutcome(True, "", values)


def check_closure(instance: Any, result: AlgoResult) -> CheckOutcome:
    try:
        validate_shortcut(instance.graph, result.shortcut)
        if result.certified_extension is not None:
            validate_shortcut(instance.graph, result.certified_extension)
    except InvalidShortcutError as e:
        return CheckOutcome(False, str(e))
    return CheckOutcome(True)


def _covered_pairs(instance: GadgetInstance, h: ShortcutSet) -> int:
    """Critical paths with an h-edge from an auxiliary before s to an auxiliary after t."""
    heads: Dict[int, List[int]] = {}
    for a, b in h:
        heads.setdefault(a, []).append(b)
    count = 0
    for path in instance.critical_paths:
        down = instance.downstream(path[-1])
        if any(b in down for a in instance.upstream(path[0]) for b in heads.get(a, ())):
            count += 1
    return count


def check_witness(instance: Any, result: AlgoResult) -> CheckOutcome:
    """The witness bound must reach (covered critical pairs) x (shortest extended path - 1).

    Fails when two critical pairs can only be charged to the same shortcut
    edge, or when extended paths overlap in more than three edges.
    """
    if not isinstance(instance, GadgetInstance):
        raise InputMismatchError("the witness check needs a gadget instance")
    try:
        bound = witness_lower_bound_details(instance, result.shortcut)
    except GadgetConstructionError as e:
        return CheckOutcome(False, str(e))
    pairs = _covered_pairs(instance, result.shortcut)
    shortest = min((len(instance.extended_edges(i, *bound.edges[i])) for i in bound.covered), default=1)
    required = pairs * (shortest - 1)
    values = {"witness_lower_bound": bound.value, "witness_covered": len(bound.covered), "witness_required": required}
    ok = bound.value >= required
    detail = f"{len(bound.covered)} of {pairs} covered pairs charged"
    if not ok:
        detail += f"; bound {bound.value} below {required}"
    return CheckOutcome(ok, detail, values)


def check_cover(instance: Any, result: AlgoResult) -> CheckOutcome:
    cover = result.chains
    if cover is None:
        return CheckOutcome(False, "result carries no chain cover")
    g = instance.graph
    try:
        cover.validate(g)
    except StructuralError as e:
        return CheckOutcome(False, str(e))
    uncovered = max_uncovered_on_path(g, cover.covered())
    ok = uncovered * cover.ell <= g.n
    return CheckOutcome(ok, "" if ok else f"{uncovered} uncovered on a path, above n/ell", {"uncovered": uncovered})


def check_schedule(instance: Any, result: AlgoResult) -> CheckOutcome:
    g = instance.graph
    try:
        schedule = low_depth_schedule(g, _target(result), rng_seed=result.seed)
    except (CertificationFailure, StructuralError) as e:
        return CheckOutcome(False, str(e))
    ok = schedule.k <= depth_target(g.n)
    values = {"schedule_layers": schedule.k, "schedule_size": schedule.total_size}
    return CheckOutcome(ok, f"{schedule.k} layers", values)


def check_complexity(instance: Any, result: AlgoResult) -> CheckOutcome:
    try:
        value = brute_force_cert_complexity(instance.graph, result.shortcut)
    except (ResourceLimitError, InvalidShortcutError) as e:
        return CheckOutcome(False, str(e))
    return CheckOutcome(True, "", {"cert_complexity": value})


CHECK_FUNCTIONS: Dict[str, Callable[[Any, AlgoResult], CheckOutcome]] = {
    "certified": check_certified,
    "diameter": check_diameter,
    "closure": check_closure,
    "witness": check_witness,
    "cover": check_cover,
    "schedule": check_schedule,
    "complexity": check_complexity,
}
assert tuple(CHECK_FUNCTIONS) == CHECKS


def verify_rows(
    instance_payload: Dict[str, Any],
    results: Dict[str, Any],
    checks: List[str],
    instance_id: Optional[str] = None,
) -> List[Dict[str, Any]]:
    """One report row per run with every requested check evaluated once.

    Raises InputMismatchError when the results were produced on another instance.
    """
    digest = payload_digest(instance_payload)
    recorded = results.get("instance", {}).get("digest")
    if recorded != digest:
        raise InputMismatchError("results file was produced on a different instance")
    if "runs" not in results:
        raise InputMismatchError("results file has no runs")
    instance = load_instance(instance_payload)
    name = instance_id or str(instance_payload.get("kind", "graph"))

    rows: List[Dict[str, Any]] = []
    for run in results["runs"]:
        row: Dict[str, Any] = {"instance": name, "algo": run.get("algo"), "seed": run.get("seed"), "checks": {}}
        if "error" in run:
            row["error"] = f"{run['error'].get('type')}: {run['error'].get('message')}"
            for check in checks:
                row["checks"][check] = {"passed": False, "detail": "run failed"}
            rows.append(row)
            continue

        result = AlgoResult.from_dict(run)
        metrics = result.metrics
        row.update({
            "size": metrics.get("size"),
            "diameter_before": metrics.get("diameter_before"),
            "diameter_after": metrics.get("diameter_after"),
            "wall_ms": metrics.get("wall_ms"),
        })
        for check in checks:
            try:
                outcome = CHECK_FUNCTIONS[check](instance, result)
            except InputMismatchError:
                raise
            except CertilabError as e:
                outcome = CheckOutcome(False, f"{type(e).__name__}: {e}")
            row.update(outcome.values)
            row["checks"][check] = {"passed": outcome.passed, "detail": outcome.detail}
            if not outcome.passed:
                logger.info("%s seed %s: %s check failed %s", result.algo, result.seed, check, outcome.detail)
        rows.append(row)
    return rows
