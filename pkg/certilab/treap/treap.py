"""Persistent treaps over integer elements.

A treap is a binary tree ordered by sequence position (in-order traversal)
and heap-ordered on priorities, the minimum at the root. Every operation
copies the nodes on its search path and never mutates an existing node, so
old handles stay valid. Ties between equal priorities are broken by the
element id.

Only this persistent form is provided; there is no in-place (ephemeral)
mode, so callers that want to discard old versions simply drop the handles.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Set, Tuple

import numpy as np

from certilab.errors import DomainError, ParameterError


@dataclass(frozen=True, eq=False)
class TreapNode:
    element: int
    priority: int
    left: Optional["TreapNode"]
    right: Optional["TreapNode"]
    size: int
    signature: int  # structural hash of the subtree

    @property
    def key(self) -> Tuple[int, int]:
        return (self.priority, self.element)


Treap = Optional[TreapNode]


def _make(element: int, priority: int, left: Treap, right: Treap) -> TreapNode:
    return TreapNode(
        element=element,
        priority=priority,
        left=left,
        right=right,
        size=1 + size(left) + size(right),
        signature=hash((element, left.signature if left else 0, right.signature if right else 0)),
    )


class PriorityMode(str, Enum):
    RANDOM = "random"
    INCREASING = "increasing"  # priority == element, so lower index sits higher


class Priorities:
    """Per-element priority source.

    RANDOM draws one 64-bit value per element from a seeded generator, in
    first-use order; INCREASING uses the element itself.
    """

    def __init__(self, mode: PriorityMode = PriorityMode.RANDOM, seed: int = 0):
        self.mode = PriorityMode(mode)
        self.seed = seed
        self._rng = np.random.default_rng(seed)
        self._cache: Dict[int, int] = {}

    def __call__(self, element: int) -> int:
        if self.mode is PriorityMode.INCREASING:
            return element
        value = self._cache.get(element)
        if value is None:
            value = int(self._rng.integers(0, 2**63 - 1, dtype=np.int64))
            self._cache[element] = value
        return value

    def assign(self, elements: Iterable[int]) -> None:
        """Fix priorities for elements in a deterministic order."""
        for element in sorted(elements):
            self(element)


class EventKind(str, Enum):
    ROOT = "root"
    CHANGED = "changed"


@dataclass(frozen=True)
class EventRecord:
    position: int
    element: int
    kind: EventKind


@dataclass
class EventLog:
    """Append-only log of treap structure events, tagged by caller position."""

    records: List[EventRecord] = field(default_factory=list)
    _roots: Dict[int, int] = field(default_factory=dict, repr=False)
    _changed: Dict[int, Set[int]] = field(default_factory=dict, repr=False)

    def root(self, position: int, element: int) -> None:
        self.records.append(EventRecord(position, element, EventKind.ROOT))
        self._roots[position] = element

    def changed(self, position: int, element: int) -> None:
        self.records.append(EventRecord(position, element, EventKind.CHANGED))
        self._changed.setdefault(position, set()).add(element)

    def root_at(self, position: int) -> Optional[int]:
        return self._roots.get(position)

    def changed_at(self, position: int) -> Set[int]:
        return self._changed.get(position, set())

    def __len__(self) -> int:
        return len(self.records)


def _note(log: Optional[EventLog], position: Optional[int], parent: TreapNode,
          old_child: Treap, new_child: Treap) -> None:
    if log is None or position is None:
        return
    log.changed(position, parent.element)
    if new_child is not None and (old_child is None or old_child.element != new_child.element):
        log.changed(position, new_child.element)


def size(t: Treap) -> int:
    return t.size if t is not None else 0


def singleton(element: int, priorities: Priorities) -> TreapNode:
    return _make(element, priorities(element), None, None)


def join(t1: Treap, t2: Treap, log: Optional[EventLog] = None, position: Optional[int] = None) -> Treap:
    """Concatenate two treaps; the lower-priority root becomes the root."""
    if t1 is None:
        return t2
    if t2 is None:
        return t1
    if t1.key < t2.key:
        right = join(t1.right, t2, log, position)
        _note(log, position, t1, t1.right, right)
        return _make(t1.element, t1.priority, t1.left, right)
    left = join(t1, t2.left, log, position)
    _note(log, position, t2, t2.left, left)
    return _make(t2.element, t2.priority, left, t2.right)


def split(t: Treap, k: int, log: Optional[EventLog] = None,
          position: Optional[int] = None) -> Tuple[Treap, Treap]:
    """Split into the first k elements and the rest."""
    if not 0 <= k <= size(t):
        raise ParameterError(f"split point {k} outside 0..{size(t)}")
    if k == 0:
        return None, t
    if k == size(t):
        return t, None
    assert t is not None
    left_size = size(t.left)
    if k <= left_size:
        first, rest = split(t.left, k, log, position)
        _note(log, position, t, t.left, rest)
        return first, _make(t.element, t.priority, rest, t.right)
    first, rest = split(t.right, k - left_size - 1, log, position)
    _note(log, position, t, t.right, first)
    return _make(t.element, t.priority, t.left, first), rest


def member_root(t: Treap) -> int:
    """The root element, i.e. the minimum-priority element."""
    if t is None:
        raise DomainError("member of an empty treap")
    return t.element


def from_sequence(elements: Iterable[int], priorities: Priorities) -> Treap:
    """Build a treap for the sequence by successive joins."""
    result: Treap = None
    for element in elements:
        result = join(result, singleton(element, priorities))
    return result


def sequence(t: Treap) -> List[int]:
    """In-order element sequence."""
    out: List[int] = []
    stack: List[TreapNode] = []
    node = t
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        out.append(node.element)
        node = node.right
    return out


def depth(t: Treap) -> int:
    """Number of nodes on the longest root-to-leaf path (0 for the empty treap)."""
    if t is None:
        return 0
    best = 0
    stack = [(t, 1)]
    while stack:
        node, d = stack.pop()
        best = max(best, d)
        if node.left is not None:
            stack.append((node.left, d + 1))
        if node.right is not None:
            stack.append((node.right, d + 1))
    return best


def parent_map(t: Treap) -> Dict[int, Optional[int]]:
    """Element -> parent element (None for the root)."""
    parents: Dict[int, Optional[int]] = {}
    if t is None:
        return parents
    parents[t.element] = None
    stack = [t]
    while stack:
        node = stack.pop()
        for child in (node.left, node.right):
            if child is not None:
                parents[child.element] = node.element
                stack.append(child)
    return parents


def check_invariants(t: Treap) -> bool:
    """Heap order on (priority, element) and consistent subtree sizes."""
    if t is None:
        return True
    stack = [t]
    while stack:
        node = stack.pop()
        expected = 1 + size(node.left) + size(node.right)
        if node.size != expected:
            return False
        for child in (node.left, node.right):
            if child is not None:
                if not node.key < child.key:
                    return False
                stack.append(child)
    return True


def structure_digest(t: Treap) -> Tuple:
    """Freshly computed nested tuple of the layout, for immutability checks."""
    if t is None:
        return ()
    return (t.element, t.priority, t.size, structure_digest(t.left), structure_digest(t.right))
