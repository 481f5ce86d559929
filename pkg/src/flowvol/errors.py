"""Exception types shared across the package."""


class FlowvolError(Exception):
    """Base class for package-specific errors."""


class GraphFormatError(FlowvolError):
    """Raised when a graph text document cannot be parsed."""


class MultiplicityViolation(FlowvolError):
    """Raised when an algorithm that requires multiple edges to start at
    vertex 1 is handed a graph with a repeated edge (u, v), u >= 2."""


class NodeCapExceeded(FlowvolError):
    """Raised when a search exceeds its configured node budget.

    Distinct from failure: the computation was cut short, not wrong.
    """

    def __init__(self, node_cap: int, message: str | None = None):
        self.node_cap = node_cap
        super().__init__(message or f"node cap of {node_cap} exceeded")


class TruncationUnstable(FlowvolError):
    """Raised when a constant-term evaluation changes under a larger
    truncation window, i.e. the requested bound was too small."""
