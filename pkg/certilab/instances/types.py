"""Instance records shared by the generators, the algorithms and the harness."""

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set

from certilab.errors import InputMismatchError
from certilab.graph.core import Edge, Graph, PathSeq, path_edges


@dataclass
class Instance:
    """A graph together with its designated critical paths.

    params holds the generator arguments verbatim (radius as its label),
    so an instance can always be rebuilt from its JSON form.
    """

    graph: Graph
    critical_paths: List[PathSeq] = field(default_factory=list)
    params: Dict[str, Any] = field(default_factory=dict)
    kind: str = "graph"
    warnings: List[str] = field(default_factory=list)

    @property
    def sources(self) -> List[int]:
        """First vertices of the critical paths (the S side)."""
        return sorted({path[0] for path in self.critical_paths})

    @property
    def sinks(self) -> List[int]:
        """Last vertices of the critical paths (the T side)."""
        return sorted({path[-1] for path in self.critical_paths})

    def critical_pairs(self) -> List[Edge]:
        return [(path[0], path[-1]) for path in self.critical_paths]

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "kind": self.kind,
            "params": dict(self.params),
            "graph": self.graph.to_dict(),
            "critical_paths": [list(path) for path in self.critical_paths],
        }
        if self.warnings:
            payload["warnings"] = list(self.warnings)
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "Instance":
        if "graph" not in payload:
            raise InputMismatchError("instance JSON has no graph")
        return cls(
            graph=Graph.from_dict(payload["graph"]),
            critical_paths=[[int(v) for v in path] for path in payload.get("critical_paths", [])],
            params=dict(payload.get("params", {})),
            kind=str(payload.get("kind", "graph")),
            warnings=list(payload.get("warnings", [])),
        )


@dataclass
class GadgetInstance:
    """An inner instance wrapped with auxiliary vertices on its S and T sides.

    Inner copy c occupies ids c*n'..(c+1)*n'-1 of graph, so copy 0 keeps the
    ids of base. critical_paths are given in gadget ids, copy by copy.
    aux_of lists the auxiliary vertices attached directly to each S/T vertex.
    """

    base: Instance
    graph: Graph
    kind: str
    S: List[int]
    T: List[int]
    aux_of: Dict[int, List[int]]
    critical_paths: List[PathSeq] = field(default_factory=list)
    copies: int = 1
    aux_mode: str = "star"
    adversarial_chains: Optional[List[PathSeq]] = None
    params: Dict[str, Any] = field(default_factory=dict)
    _aux: Optional[Set[int]] = field(default=None, repr=False, compare=False)

    @property
    def aux_vertices(self) -> Set[int]:
        if self._aux is None:
            self._aux = {a for group in self.aux_of.values() for a in group}
        return self._aux

    def _walk(self, start: int, forward: bool) -> Dict[int, Optional[int]]:
        # BFS through auxiliary vertices only, recording predecessors
        aux = self.aux_vertices
        prev: Dict[int, Optional[int]] = {start: None}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            nbrs = self.graph.out_neighbors(v) if forward else self.graph.in_neighbors(v)
            for w in nbrs:
                if w in aux and w not in prev:
                    prev[w] = v
                    queue.append(w)
        return prev

    def upstream(self, s: int) -> Set[int]:
        """Auxiliary vertices that reach s through auxiliary vertices only."""
        return set(self._walk(s, forward=False)) - {s}

    def downstream(self, t: int) -> Set[int]:
        """Auxiliary vertices reached from t through auxiliary vertices only."""
        return set(self._walk(t, forward=True)) - {t}

    def extended_path(self, index: int, a: int, b: int) -> PathSeq:
        """The path a -> s -> critical path -> t -> b for critical path number index."""
        path = self.critical_paths[index]
        s, t = path[0], path[-1]
        before = self._walk(s, forward=False)
        after = self._walk(t, forward=True)
        if a not in before or b not in after:
            raise InputMismatchError(f"({a},{b}) is not an auxiliary pair of critical path {index}")
        head: List[int] = []
        v: Optional[int] = a
        while v is not None and v != s:
            head.append(v)
            v = before[v]
        tail: List[int] = []
        v = b
        while v is not None and v != t:
            tail.append(v)
            v = after[v]
        return head + list(path) + list(reversed(tail))

    def extended_edges(self, index: int, a: int, b: int) -> List[Edge]:
        return path_edges(self.extended_path(index, a, b))

    def as_instance(self) -> Instance:
        """Flat view: the gadget graph with its critical paths."""
        return Instance(
            graph=self.graph,
            critical_paths=self.critical_paths,
            params=dict(self.params),
            kind=self.kind,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "params": dict(self.params),
            "graph": self.graph.to_dict(),
            "base": self.base.to_dict(),
            "critical_paths": [list(path) for path in self.critical_paths],
            "S": list(self.S),
            "T": list(self.T),
            "aux_of": {str(v): list(aux) for v, aux in sorted(self.aux_of.items())},
            "copies": self.copies,
            "aux_mode": self.aux_mode,
            "adversarial_chains": (
                None if self.adversarial_chains is None else [list(c) for c in self.adversarial_chains]
            ),
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "GadgetInstance":
        try:
            chains = payload.get("adversarial_chains")
            return cls(
                base=Instance.from_dict(payload["base"]),
                graph=Graph.from_dict(payload["graph"]),
                kind=str(payload["kind"]),
                S=[int(v) for v in payload["S"]],
                T=[int(v) for v in payload["T"]],
                aux_of={int(v): [int(a) for a in aux] for v, aux in payload["aux_of"].items()},
                critical_paths=[[int(v) for v in path] for path in payload.get("critical_paths", [])],
                copies=int(payload.get("copies", 1)),
                aux_mode=str(payload.get("aux_mode", "star")),
                adversarial_chains=None if chains is None else [[int(v) for v in c] for c in chains],
                params=dict(payload.get("params", {})),
            )
        except KeyError as e:
            raise InputMismatchError(f"gadget JSON is missing field {e}")


def load_instance(payload: Dict[str, Any]) -> Any:
    """Instance or GadgetInstance, depending on the JSON shape."""
    if "base" in payload:
        return GadgetInstance.from_dict(payload)
    return Instance.from_dict(payload)
