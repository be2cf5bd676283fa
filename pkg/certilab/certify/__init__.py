"""Certification engine: checks, orders, witnesses, subroutines and schedules."""

from certilab.certify.brute import brute_force_cert_complexity
from certilab.certify.schedule import check_schedule, depth_target, low_depth_schedule
from certilab.certify.shortcuts import CertificationOrder, ScheduleLayers, ShortcutMode, ShortcutSet
from certilab.certify.subroutines import Direction, Orientation, path_shortcut_diam2, tree_star_shortcut
from certilab.certify.verify import (
    EdgeIndex,
    certification_order,
    is_certified,
    replay_procedure,
    uncertified_edges,
    validate_shortcut,
)
from certilab.certify.witness import (
    WitnessBound,
    expansion_witness,
    forcing_bound,
    witness_lower_bound,
    witness_lower_bound_details,
)

__all__ = [
    "CertificationOrder",
    "Direction",
    "EdgeIndex",
    "Orientation",
    "ScheduleLayers",
    "ShortcutMode",
    "ShortcutSet",
    "WitnessBound",
    "brute_force_cert_complexity",
    "certification_order",
    "check_schedule",
    "depth_target",
    "expansion_witness",
    "forcing_bound",
    "is_certified",
    "low_depth_schedule",
    "path_shortcut_diam2",
    "replay_procedure",
    "tree_star_shortcut",
    "uncertified_edges",
    "validate_shortcut",
    "witness_lower_bound",
    "witness_lower_bound_details",
]
