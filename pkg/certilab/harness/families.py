"""Instance families for `certilab gen`."""

import logging
from typing import Any, Callable, Dict, List

from certilab.errors import CheckFailedError, InputMismatchError, ParameterError
from certilab.graph.generators import layered_dag, random_dag
from certilab.instances import (
    AuxMode,
    GadgetInstance,
    Instance,
    build_cc_gadget,
    build_hs_instance,
    build_kp_gadget,
    build_rp_graph,
    build_uy_gadget,
    load_instance,
    with_disjoint_sides,
)
from certilab.io.output import read_json
from certilab.lattice.hull import gift_wrap_positive_vertices, hull_positive_vertices, radius_label

logger = logging.getLogger(__name__)


def _require(params: Dict[str, Any], family: str, *names: str) -> None:
    missing = [name for name in names if name not in params]
    if missing:
        raise ParameterError(f"family {family} needs {', '.join(missing)}")


def _hs(params: Dict[str, Any], seed: int) -> Instance:
    _require(params, "hs", "d", "D", "r")
    return build_hs_instance(int(params["d"]), int(params["D"]), params["r"], bool(params.get("directed", True)))


def _rp(params: Dict[str, Any], seed: int) -> Instance:
    _require(params, "rp", "eps", "budget")
    return build_rp_graph(
        float(params["eps"]),
        int(params["budget"]),
        rng_seed=int(params.get("seed", seed)),
        inner_D=params.get("inner_D"),
        inner_r=params.get("inner_r"),
        **({"outer_r": params["outer_r"]} if "outer_r" in params else {}),
    )


def _inner(params: Dict[str, Any], family: str) -> Any:
    """The wrapped instance: a file given as inner=path, or a layered instance from d, D, r with disjoint S and T."""
    if "inner" in params:
        return load_instance(read_json(str(params["inner"])))
    _require(params, family, "d", "D", "r")
    built = build_hs_instance(int(params["d"]), int(params["D"]), params["r"], bool(params.get("directed", True)))
    return with_disjoint_sides(built)


def _plain_inner(params: Dict[str, Any], family: str) -> Instance:
    inner = _inner(params, family)
    if isinstance(inner, GadgetInstance):
        raise InputMismatchError(f"family {family} wraps a plain instance, got a {inner.kind} gadget")
    return inner


def _uy(params: Dict[str, Any], seed: int) -> GadgetInstance:
    return build_uy_gadget(_plain_inner(params, "uy"), AuxMode.STAR)


def _brr(params: Dict[str, Any], seed: int) -> GadgetInstance:
    return build_uy_gadget(_plain_inner(params, "brr"), AuxMode.PATH)


def _kp(params: Dict[str, Any], seed: int) -> GadgetInstance:
    return build_kp_gadget(_plain_inner(params, "kp"), int(params.get("copies", 2)))


def _cc(params: Dict[str, Any], seed: int) -> GadgetInstance:
    inner = _inner(params, "cc")
    if not isinstance(inner, GadgetInstance):
        inner = build_uy_gadget(inner, AuxMode.STAR)
    return build_cc_gadget(inner, int(params.get("copies", 2)))


def _random_dag(params: Dict[str, Any], seed: int) -> Instance:
    _require(params, "random-dag", "n", "m")
    n, m, s = int(params["n"]), int(params["m"]), int(params.get("seed", seed))
    return Instance(graph=random_dag(n, m, s), params={"n": n, "m": m, "seed": s}, kind="random-dag")


def _layered(params: Dict[str, Any], seed: int) -> Instance:
    _require(params, "layered", "width", "layers")
    width, layers = int(params["width"]), int(params["layers"])
    p, s = float(params.get("p", 0.0)), int(params.get("seed", seed))
    return Instance(
        graph=layered_dag(width, layers, p, s),
        params={"width": width, "layers": layers, "p": p, "seed": s},
        kind="layered",
    )


FAMILIES: Dict[str, Callable[[Dict[str, Any], int], Any]] = {
    "hs": _hs,
    "rp": _rp,
    "uy": _uy,
    "brr": _brr,
    "kp": _kp,
    "cc": _cc,
    "random-dag": _random_dag,
    "layered": _layered,
}


def hull_points(params: Dict[str, Any]) -> List[List[int]]:
    """V(r) as [x, y] pairs, cross-checked against the gift-wrap oracle.

    Raises CheckFailedError when the two hull computations disagree.
    """
    _require(params, "hull", "r")
    radius = params["r"]
    points = hull_positive_vertices(radius)
    oracle = gift_wrap_positive_vertices(radius)
    if points != oracle:
        raise CheckFailedError(
            f"hull of B({radius_label(radius)}) has {len(points)} vertices, the gift-wrap oracle {len(oracle)}"
        )
    return [[x, y] for x, y in points]


def generate(family: str, params: Dict[str, Any], seed: int = 0) -> Any:
    """Build the JSON payload of an instance of the given family.

    The hull family yields a list of points instead of an instance.
    """
    if family == "hull":
        return hull_points(params)
    if family not in FAMILIES:
        raise ParameterError(f"unknown family {family!r} (choose from hull, {', '.join(FAMILIES)})")
    instance = FAMILIES[family](params, seed)
    for warning in getattr(instance, "warnings", []):
        logger.warning(warning)
    logger.info("generated %s instance: n=%d, m=%d", family, instance.graph.n, instance.graph.m)
    return instance.to_dict()
