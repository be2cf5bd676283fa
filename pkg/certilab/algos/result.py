"""Result records for the shortcut algorithms."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Set

from certilab.certify.shortcuts import ShortcutSet
from certilab.errors import InputMismatchError, StructuralError
from certilab.graph.core import Graph, PathSeq
from certilab.graph.oracles import reachable_from


@dataclass
class ChainCover:
    """At most ell vertex-disjoint chains; labels[i] is the flow path behind chains[i]."""

    chains: List[PathSeq] = field(default_factory=list)
    ell: int = 0
    labels: List[int] = field(default_factory=list)

    def covered(self) -> Set[int]:
        return {v for chain in self.chains for v in chain}

    def chain_of(self) -> Dict[int, int]:
        """Vertex -> position of its chain in chains."""
        return {v: i for i, chain in enumerate(self.chains) for v in chain}

    def validate(self, g: Graph) -> None:
        """Raise StructuralError unless the chains form a valid cover of g."""
        if len(self.chains) > self.ell:
            raise StructuralError(f"{len(self.chains)} chains exceed the declared bound {self.ell}")
        seen: Set[int] = set()
        adjacency = [g.out_neighbors(v) for v in range(g.n)]
        for chain in self.chains:
            for v in chain:
                if not 0 <= v < g.n:
                    raise StructuralError(f"chain vertex {v} outside the graph")
                if v in seen:
                    raise StructuralError(f"vertex {v} lies on two chains")
                seen.add(v)
            for a, b in zip(chain, chain[1:]):
                if b not in reachable_from(adjacency, a):
                    raise StructuralError(f"chain hop ({a},{b}) is not a reachable pair")

    def to_dict(self) -> Dict[str, Any]:
        return {"ell": self.ell, "chains": [list(c) for c in self.chains], "labels": list(self.labels)}

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "ChainCover":
        chains = [[int(v) for v in c] for c in payload.get("chains", [])]
        return cls(
            chains=chains,
            ell=int(payload.get("ell", len(chains))),
            labels=[int(i) for i in payload.get("labels", range(len(chains)))],
        )


@dataclass
class AlgoResult:
    """One algorithm run: the shortcut, an optional certified superset and run metrics.

    metrics keys: size, rounds, and (filled by the harness) diameter_before,
    diameter_after, wall_ms; algorithms add their own diagnostics.
    """

    algo: str
    seed: int
    shortcut: ShortcutSet
    params: Dict[str, Any] = field(default_factory=dict)
    certified_extension: Optional[ShortcutSet] = None
    metrics: Dict[str, Any] = field(default_factory=dict)
    chains: Optional[ChainCover] = None

    def __post_init__(self) -> None:
        self.metrics.setdefault("size", len(self.shortcut))

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {
            "algo": self.algo,
            "seed": self.seed,
            "params": dict(self.params),
            "shortcut": self.shortcut.to_dict(),
            "metrics": dict(self.metrics),
        }
        if self.certified_extension is not None:
            payload["certified_extension"] = self.certified_extension.to_dict()
        if self.chains is not None:
            payload["chains"] = self.chains.to_dict()
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "AlgoResult":
        try:
            extension = payload.get("certified_extension")
            chains = payload.get("chains")
            return cls(
                algo=str(payload["algo"]),
                seed=int(payload["seed"]),
                shortcut=ShortcutSet.from_dict(payload["shortcut"]),
                params=dict(payload.get("params", {})),
                certified_extension=None if extension is None else ShortcutSet.from_dict(extension),
                metrics=dict(payload.get("metrics", {})),
                chains=None if chains is None else ChainCover.from_dict(chains),
            )
        except KeyError as e:
            raise InputMismatchError(f"result JSON is missing field {e}")
