"""Graph representation shared by every certilab module."""

from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Sequence, Set, Tuple, Union

from certilab.errors import ParameterError, StructuralError

Edge = Tuple[int, int]
WeightedEdge = Tuple[int, int, Fraction]
PathSeq = List[int]
EdgePairSet = Set[Edge]
WeightLike = Union[int, str, Fraction]

ONE = Fraction(1)


def as_weight(value: WeightLike) -> Fraction:
    """Parse an exact nonnegative weight from an int, a "p/q" string or a Fraction."""
    try:
        weight = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ParameterError(f"invalid weight {value!r}: {e}")
    if weight < 0:
        raise ParameterError(f"negative weight {value!r}")
    return weight


def weight_to_json(weight: Fraction) -> Union[int, str]:
    """Serialize an exact weight: integers stay integers, everything else becomes "p/q"."""
    if weight.denominator == 1:
        return int(weight.numerator)
    return f"{weight.numerator}/{weight.denominator}"


class Graph:
    """Immutable directed or undirected graph on vertices 0..n-1.

    Undirected graphs keep one record per edge in ``edges`` but expose a
    symmetric adjacency, so out_neighbors(v) == in_neighbors(v).
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Sequence[Any]] = (),
        directed: bool = True,
        acyclic: bool = False,
        validate: bool = True,
    ):
        """Build a graph.

        Args:
            n: Vertex count
            edges: (src, dst) or (src, dst, weight) records
            directed: Orientation flag
            acyclic: Declare (and check) that the graph is a DAG
            validate: Reject self-loops and duplicates; generators that
                guarantee both pass False to skip the bookkeeping
        """
        if n < 0:
            raise ParameterError(f"vertex count must be nonnegative, got {n}")
        self._n = n
        self._directed = directed
        self._weighted = False
        self._out: List[List[int]] = [[] for _ in range(n)]
        self._in: List[List[int]] = self._out if not directed else [[] for _ in range(n)]
        self._edges: List[WeightedEdge] = []
        self._weights: Dict[Edge, Fraction] = {}
        seen: Set[Edge] = set()

        for record in edges:
            if len(record) == 3:
                u, v, w = int(record[0]), int(record[1]), as_weight(record[2])
                self._weighted = True
            elif len(record) == 2:
                u, v, w = int(record[0]), int(record[1]), ONE
            else:
                raise ParameterError(f"edge record must be (src, dst[, weight]), got {record!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) has an endpoint outside 0..{n - 1}")
            key = (u, v) if directed else (min(u, v), max(u, v))
            if validate:
                if u == v:
                    raise StructuralError(f"self-loop at vertex {u}")
                if key in seen:
                    raise StructuralError(f"duplicate edge ({u},{v})")
                seen.add(key)
            self._edges.append((u, v, w))
            self._out[u].append(v)
            if directed:
                self._in[v].append(u)
            else:
                self._out[v].append(u)
            if w != ONE:
                self._weights[key] = w

        self._edge_set: Optional[Set[Edge]] = None
        self._acyclic = False
        if acyclic:
            if not directed:
                raise StructuralError("only directed graphs can be declared acyclic")
            # Imported here: oracles depends on this module
            from certilab.graph.oracles import topological_order

            topological_order(self)
            self._acyclic = True

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def directed(self) -> bool:
        return self._directed

    @property
    def weighted(self) -> bool:
        return self._weighted

    @property
    def acyclic(self) -> bool:
        """True only when the graph was declared acyclic and the declaration was checked."""
        return self._acyclic

    @property
    def edges(self) -> List[WeightedEdge]:
        return list(self._edges)

    def edge_pairs(self) -> List[Edge]:
        return [(u, v) for u, v, _ in self._edges]

    def out_neighbors(self, v: int) -> List[int]:
        return self._out[v]

    def in_neighbors(self, v: int) -> List[int]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def has_edge(self, u: int, v: int) -> bool:
        if self._edge_set is None:
            pairs: Set[Edge] = set()
            for a, b, _ in self._edges:
                pairs.add((a, b))
                if not self._directed:
                    pairs.add((b, a))
            self._edge_set = pairs
        return (u, v) in self._edge_set

    def weight(self, u: int, v: int) -> Fraction:
        key = (u, v) if self._directed else (min(u, v), max(u, v))
        return self._weights.get(key, ONE)

    def adjacency_with(self, extra: Iterable[Edge] = ()) -> List[List[int]]:
        """Out-adjacency of this graph plus extra edges (symmetric when undirected).

        Extra edges that duplicate existing ones are skipped.
        """
        adjacency = [list(nbrs) for nbrs in self._out]
        for u, v in extra:
            if not (0 <= u < self._n and 0 <= v < self._n):
                raise ParameterError(f"extra edge ({u},{v}) has an endpoint outside 0..{self._n - 1}")
            if u == v or self.has_edge(u, v) or v in adjacency[u]:
                continue
            adjacency[u].append(v)
            if not self._directed:
                adjacency[v].append(u)
        return adjacency

    def in_adjacency_with(self, extra: Iterable[Edge] = ()) -> List[List[int]]:
        """In-adjacency counterpart of adjacency_with."""
        if not self._directed:
            return self.adjacency_with(extra)
        adjacency = [list(nbrs) for nbrs in self._in]
        for u, v in extra:
            if u == v or self.has_edge(u, v) or u in adjacency[v]:
                continue
            adjacency[v].append(u)
        return adjacency

    def with_edges(self, extra: Iterable[Sequence[Any]]) -> "Graph":
        """Return a new graph with extra edges added; duplicates of existing edges are skipped."""
        records: List[Sequence[Any]] = [
            (u, v, w) if self._weighted else (u, v) for u, v, w in self._edges
        ]
        added: Set[Edge] = set()
        for record in extra:
            u, v = int(record[0]), int(record[1])
            key = (u, v) if self._directed else (min(u, v), max(u, v))
            if self.has_edge(u, v) or key in added:
                continue
            added.add(key)
            records.append(tuple(record))
        return Graph(self._n, records, directed=self._directed, acyclic=self._acyclic)

    def to_dict(self) -> Dict[str, Any]:
        """JSON form: {directed, n, edges: [[src, dst, weight?], ...]}."""
        if self._weighted:
            edges = [[u, v, weight_to_json(w)] for u, v, w in self._edges]
        else:
            edges = [[u, v] for u, v, _ in self._edges]
        payload: Dict[str, Any] = {"directed": self._directed, "n": self._n, "edges": edges}
        if self._acyclic:
            payload["acyclic"] = True
        return payload

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "Graph":
        try:
            return cls(
                int(payload["n"]),
                [tuple(e) for e in payload["edges"]],
                directed=bool(payload.get("directed", True)),
                acyclic=bool(payload.get("acyclic", False)),
            )
        except KeyError as e:
            raise ParameterError(f"graph JSON is missing field {e}")

    def __repr__(self) -> str:
        kind = "directed" if self._directed else "undirected"
        return f"Graph({kind}, n={self._n}, m={self.m})"


def path_edges(path: Sequence[int]) -> List[Edge]:
    """Consecutive vertex pairs of a path."""
    return [(path[i], path[i + 1]) for i in range(len(path) - 1)]


def is_valid_path(g: Graph, path: Sequence[int]) -> bool:
    """True if consecutive vertices are joined by edges of g and no vertex repeats."""
    if len(set(path)) != len(path):
        return False
    return all(g.has_edge(u, v) for u, v in path_edges(path))
