"""Exception hierarchy for certilab."""

from typing import Iterable, List, Optional, Tuple


class CertilabError(Exception):
    """Base class for every error raised by certilab."""


class ResourceLimitError(CertilabError):
    """A configured size cap was exceeded."""

    def __init__(self, what: str, value: int, cap: int):
        self.what = what
        self.value = value
        self.cap = cap
        super().__init__(f"{what} = {value} exceeds the configured cap of {cap}")


class DomainError(CertilabError):
    """An operation was called outside its domain (e.g. on an unreachable pair)."""


class StructuralError(CertilabError):
    """The input graph does not have the required structure."""


class CycleError(StructuralError):
    """A directed cycle was found where a DAG was required."""


class NotATreeError(StructuralError):
    """The given edges do not form a tree."""


class ParameterError(CertilabError):
    """Invalid or inconsistent generator/algorithm parameters."""


class InvalidShortcutError(CertilabError):
    """A shortcut edge breaks the shortcut/hopset definition (closure, weight or duplicate)."""

    def __init__(self, edges: Iterable[Tuple[int, int]], reason: str = "edges outside the transitive closure"):
        self.edges: List[Tuple[int, int]] = list(edges)
        self.reason = reason
        shown = ", ".join(f"({u},{v})" for u, v in self.edges[:5])
        more = "" if len(self.edges) <= 5 else f" and {len(self.edges) - 5} more"
        super().__init__(f"{reason}: {shown}{more}")


class CertificationFailure(CertilabError):
    """Some shortcut edges have no certifying midpoint."""

    def __init__(self, edges: Iterable[Tuple[int, int]]):
        self.edges: List[Tuple[int, int]] = list(edges)
        shown = ", ".join(f"({u},{v})" for u, v in self.edges[:5])
        more = "" if len(self.edges) <= 5 else f" and {len(self.edges) - 5} more"
        super().__init__(f"uncertifiable edges: {shown}{more}")


class ReplayError(CertilabError):
    """A shortcutting procedure step referenced a missing certifying edge."""

    def __init__(self, step: int, edge: Tuple[int, int], missing: Tuple[int, int]):
        self.step = step
        self.edge = edge
        self.missing = missing
        super().__init__(
            f"step {step}: edge ({edge[0]},{edge[1]}) needs ({missing[0]},{missing[1]}) which is not present"
        )


class PreconditionError(CertilabError):
    """A documented precondition does not hold for the given input."""


class InfeasibleFlowError(CertilabError):
    """The requested flow value cannot be routed."""

    def __init__(self, requested: int, routed: int):
        self.requested = requested
        self.routed = routed
        super().__init__(f"flow value {requested} is infeasible (only {routed} routable)")


class FlowIntegrityError(CertilabError):
    """A flow violates capacity or conservation constraints."""

    def __init__(self, message: str, node: Optional[int] = None):
        self.node = node
        super().__init__(message)


class GadgetConstructionError(CertilabError):
    """A gadget instance violates its own structural guarantees."""


class ConvergenceError(CertilabError):
    """An iterative pipeline hit its round limit without converging."""


class InputMismatchError(CertilabError):
    """Input files do not belong together or cannot be parsed."""


class CheckFailedError(CertilabError):
    """A harness check did not pass."""
