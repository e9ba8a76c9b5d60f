"""Exception types raised across the package."""


class GraphError(ValueError):
    """Invalid graph input."""


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass


class ParseError(ValueError):
    """Malformed edge-list, graph6 or witness file."""


class WitnessError(ValueError):
    """A witness that cannot even be checked (bad vertices or broken walks)."""


class ForeignVertex(WitnessError):
    pass


class MalformedPath(WitnessError):
    pass


class HypothesisViolation(ValueError):
    """Parameters fall outside the range where a closed formula is proven."""


class PartTooSmall(HypothesisViolation):
    pass


class CliqueTooSmall(HypothesisViolation):
    pass


class OddOrder(HypothesisViolation):
    pass


class NotApplicable(ValueError):
    pass


class InstanceTooLarge(ValueError):
    pass


class BudgetExhausted(RuntimeError):
    """Search ran out of node expansions before reaching a decision.

    ``lower`` and ``upper`` carry the best bounds proven so far (only
    meaningful for the optimisation routines) and ``nodes`` the expansions
    consumed.
    """

    def __init__(self, message, lower=None, upper=None, nodes=0):
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.nodes = nodes


class GeodesicOverflow(Exception):
    """More geodesics between a pair than the enumeration cap allows.

    Not a failure: callers switch to lazy iteration. ``count`` is exact.
    """

    def __init__(self, u, v, count, cap):
        super().__init__(f"{count} geodesics between {u} and {v} exceed cap {cap}")
        self.u = u
        self.v = v
        self.count = count
        self.cap = cap
