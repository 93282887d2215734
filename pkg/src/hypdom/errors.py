"""Exception types shared across the package.

The CLI prints ``type(err).__name__`` on failure, so class names double as
the error names users see.
"""


class HypergraphError(Exception):
    """Base class for every error raised by hypdom."""


# core
class OutOfRangeVertex(HypergraphError):
    pass


class EdgeTooSmall(HypergraphError):
    pass


class EmptyEdge(HypergraphError):
    pass


class NoEdges(HypergraphError):
    pass


class SameVertex(HypergraphError):
    pass


class BadParameters(HypergraphError):
    pass


class IsolatedVertex(HypergraphError):
    pass


# exact
class BudgetExceeded(HypergraphError):
    pass


# reduce
class NotMaximumMatching(HypergraphError):
    pass


class PeelPrecondition(HypergraphError):
    pass


class ValidButEmpty(HypergraphError):
    """A matching edge made only of degree-1 vertices contributes nothing.

    ``partial`` holds the set built from the other edges and ``edges`` the
    offending matching edges, so callers can patch in a fallback vertex.
    """

    def __init__(self, msg, partial, edges):
        super().__init__(msg)
        self.partial = partial
        self.edges = edges


class PreconditionViolated(HypergraphError):
    pass


# families
class BadProfile(HypergraphError):
    pass


class BadSpec(HypergraphError):
    pass


class InfeasibleBounds(HypergraphError):
    pass


class RetriesExhausted(HypergraphError):
    pass


# recognize
class Disagreement(HypergraphError):
    """Structural and exact answers differ on ``hypergraph``."""

    def __init__(self, hypergraph, structural, oracle):
        super().__init__(
            f"structural={structural} oracle={oracle} on "
            f"n={hypergraph.n} edges={list(hypergraph.edges)}"
        )
        self.hypergraph = hypergraph
        self.structural = structural
        self.oracle = oracle


# io
class HgrSyntaxError(HypergraphError):
    def __init__(self, msg, line, column=1):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


class CountMismatch(HypergraphError):
    pass
