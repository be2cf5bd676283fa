"""Persistent treaps with join/split/member and an event log."""

from certilab.treap.treap import (
    EventKind,
    EventLog,
    EventRecord,
    Priorities,
    PriorityMode,
    Treap,
    TreapNode,
    check_invariants,
    depth,
    from_sequence,
    join,
    member_root,
    parent_map,
    sequence,
    singleton,
    size,
    split,
    structure_digest,
)

__all__ = [
    "EventKind",
    "EventLog",
    "EventRecord",
    "Priorities",
    "PriorityMode",
    "Treap",
    "TreapNode",
    "check_invariants",
    "depth",
    "from_sequence",
    "join",
    "member_root",
    "parent_map",
    "sequence",
    "singleton",
    "size",
    "split",
    "structure_digest",
]
