"""Shortcut sets, certification orders and layered schedules."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

from certilab.errors import ParameterError
from certilab.graph.core import Edge, as_weight, weight_to_json


class ShortcutMode(str, Enum):
    SHORTCUT = "shortcut"
    HOPSET = "hopset"


class ShortcutSet:
    """Extra edges H, optionally weighted (hopsets) and with certificate midpoints.

    Insertion order is preserved and duplicate edges are ignored. For
    undirected host graphs (directed=False) (u, v) and (v, u) are the same edge.
    """

    def __init__(
        self,
        edges: Iterable[Any] = (),
        mode: ShortcutMode = ShortcutMode.SHORTCUT,
        directed: bool = True,
    ):
        self.mode = ShortcutMode(mode)
        self.directed = directed
        self._edges: List[Edge] = []
        self._index: Dict[Edge, int] = {}
        self.weights: Dict[Edge, Fraction] = {}
        self.certificates: Dict[Edge, int] = {}
        for record in edges:
            if len(record) == 3:
                self.add(int(record[0]), int(record[1]), weight=record[2])
            else:
                self.add(int(record[0]), int(record[1]))

    def key(self, u: int, v: int) -> Edge:
        return (u, v) if self.directed else (min(u, v), max(u, v))

    def add(self, u: int, v: int, weight: Any = None, midpoint: Optional[int] = None) -> bool:
        """Add (u, v); returns False when the edge was already present."""
        if u == v:
            raise ParameterError(f"shortcut self-loop at {u}")
        k = self.key(u, v)
        if k in self._index:
            return False
        self._index[k] = len(self._edges)
        self._edges.append((u, v))
        if weight is not None:
            self.weights[k] = as_weight(weight)
        if midpoint is not None:
            self.certificates[k] = midpoint
        return True

    def update(self, other: "ShortcutSet") -> None:
        """Add every edge of other, keeping its weights and certificates."""
        for u, v in other:
            k = other.key(u, v)
            self.add(u, v, weight=other.weights.get(k), midpoint=other.certificates.get(k))

    def weight(self, u: int, v: int) -> Optional[Fraction]:
        return self.weights.get(self.key(u, v))

    def midpoint(self, u: int, v: int) -> Optional[int]:
        return self.certificates.get(self.key(u, v))

    def index_of(self, u: int, v: int) -> int:
        return self._index[self.key(u, v)]

    def edges(self) -> List[Edge]:
        return list(self._edges)

    def weighted_edges(self) -> List[Tuple[int, int, Fraction]]:
        """(u, v, w) records; unweighted edges report weight 1."""
        return [(u, v, self.weights.get(self.key(u, v), Fraction(1))) for u, v in self._edges]

    def without(self, u: int, v: int) -> "ShortcutSet":
        """Copy with one edge removed."""
        copy = ShortcutSet(mode=self.mode, directed=self.directed)
        drop = self.key(u, v)
        for a, b in self._edges:
            k = self.key(a, b)
            if k != drop:
                copy.add(a, b, weight=self.weights.get(k), midpoint=self.certificates.get(k))
        return copy

    def copy(self) -> "ShortcutSet":
        clone = ShortcutSet(mode=self.mode, directed=self.directed)
        clone.update(self)
        return clone

    def __contains__(self, edge: object) -> bool:
        if not isinstance(edge, tuple) or len(edge) != 2:
            return False
        return self.key(edge[0], edge[1]) in self._index

    def __iter__(self) -> Iterator[Edge]:
        return iter(list(self._edges))

    def __len__(self) -> int:
        return len(self._edges)

    def __repr__(self) -> str:
        return f"ShortcutSet(mode={self.mode.value}, edges={len(self._edges)})"

    def to_dict(self) -> Dict[str, Any]:
        """JSON form: {mode, directed, edges: [[u, v, weight?], ...], certificates: {"u,v": w}}."""
        records: List[List[Any]] = []
        for u, v in self._edges:
            w = self.weights.get(self.key(u, v))
            records.append([u, v] if w is None else [u, v, weight_to_json(w)])
        return {
            "mode": self.mode.value,
            "directed": self.directed,
            "edges": records,
            "certificates": {f"{u},{v}": w for (u, v), w in sorted(self.certificates.items())},
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "ShortcutSet":
        shortcut = cls(
            mode=ShortcutMode(payload.get("mode", "shortcut")),
            directed=bool(payload.get("directed", True)),
        )
        for record in payload.get("edges", []):
            weight = record[2] if len(record) > 2 else None
            shortcut.add(int(record[0]), int(record[1]), weight=weight)
        for text, w in payload.get("certificates", {}).items():
            u, v = (int(part) for part in text.split(","))
            if shortcut.key(u, v) in shortcut._index:
                shortcut.certificates[shortcut.key(u, v)] = int(w)
        return shortcut


@dataclass
class CertificationOrder:
    """Steps (u, v, w): edge (u, v) is certified through midpoint w."""

    steps: List[Tuple[int, int, int]] = field(default_factory=list)
    mode: ShortcutMode = ShortcutMode.SHORTCUT
    directed: bool = True

    def __len__(self) -> int:
        return len(self.steps)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": ShortcutMode(self.mode).value,
            "directed": self.directed,
            "steps": [list(step) for step in self.steps],
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "CertificationOrder":
        return cls(
            steps=[(int(u), int(v), int(w)) for u, v, w in payload.get("steps", [])],
            mode=ShortcutMode(payload.get("mode", "shortcut")),
            directed=bool(payload.get("directed", True)),
        )


@dataclass
class ScheduleLayers:
    """Layers H_1..H_k; midpoints[i][edge] names the midpoint certifying edge in layer i."""

    layers: List[List[Edge]] = field(default_factory=list)
    midpoints: List[Dict[Edge, int]] = field(default_factory=list)
    max_tree_depth: int = 0
    seed: int = 0

    @property
    def k(self) -> int:
        return len(self.layers)

    @property
    def total_size(self) -> int:
        return sum(len(layer) for layer in self.layers)

    def all_edges(self) -> List[Edge]:
        return [e for layer in self.layers for e in layer]
