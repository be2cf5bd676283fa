"""Size caps and runtime limits for certilab."""

import os
from dataclasses import dataclass, fields, replace
from typing import Dict, Any


# Oracle caps
HOP_DIAMETER_VERTEX_CAP = 100000  # all-pairs BFS is O(n*m)
LATTICE_RADIUS_CAP = 10000
GRID_VERTEX_CAP = 2000000  # layered grid families
RP_SIZE_CAP = 200000  # obstacle product vertex budget

# Algorithm caps
BRR_VERTEX_CAP = 400  # greedy recomputes all distances every round
BRUTE_FORCE_VERTEX_CAP = 10
BRUTE_FORCE_CLOSURE_CAP = 30  # |closure \ E|

# Schedules
SCHEDULE_MAX_RETRIES = 5

# Harness
DEFAULT_WORKERS = 4
REPORT_SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Limits:
    """The active set of caps. Field names match the config file keys in lower case."""

    hop_diameter_vertex_cap: int = HOP_DIAMETER_VERTEX_CAP
    lattice_radius_cap: int = LATTICE_RADIUS_CAP
    grid_vertex_cap: int = GRID_VERTEX_CAP
    rp_size_cap: int = RP_SIZE_CAP
    brr_vertex_cap: int = BRR_VERTEX_CAP
    brute_force_vertex_cap: int = BRUTE_FORCE_VERTEX_CAP
    brute_force_closure_cap: int = BRUTE_FORCE_CLOSURE_CAP
    schedule_max_retries: int = SCHEDULE_MAX_RETRIES
    workers: int = DEFAULT_WORKERS

    @classmethod
    def keys(cls) -> Dict[str, str]:
        """Map upper-case config keys to field names."""
        return {f.name.upper(): f.name for f in fields(cls)}

    def updated(self, values: Dict[str, Any]) -> "Limits":
        """Return a copy with the given field values replaced."""
        return replace(self, **values)


_active_limits = Limits()


def get_limits() -> Limits:
    """Get the limits currently in force."""
    return _active_limits


def set_limits(limits: Limits) -> None:
    """Install a new set of limits (used by the CLI after reading config)."""
    global _active_limits
    _active_limits = limits


# Debug mode
def get_debug() -> bool:
    """Get the DEBUG value from environment, respecting any recent changes.

    Returns:
        True if debug mode is enabled, False otherwise
    """
    debug_val = os.environ.get("CERTILAB_DEBUG", "false").lower()
    return debug_val in ["true", "1", "yes", "y", "on"]
