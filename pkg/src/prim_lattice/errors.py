"""Exception types shared across the package."""


class GraphAlgebraError(Exception):
    """Base class for every domain error raised by this package."""


class EmptyGraphError(GraphAlgebraError):
    """The graph has no vertices."""


class SourceVertexError(GraphAlgebraError):
    """A vertex receives no edge, violating the source-free requirement."""

    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} has no incoming edge")
        self.vertex = vertex


class DanglingEndpointError(GraphAlgebraError):
    """An edge references a vertex that was never declared."""

    def __init__(self, edge):
        super().__init__(f"edge {edge!r} references an undeclared vertex")
        self.edge = edge


class UnknownVertexError(GraphAlgebraError):
    """An operation was asked about a vertex the graph does not declare."""

    def __init__(self, vertex):
        super().__init__(f"unknown vertex {vertex!r}")
        self.vertex = vertex


class NotHereditaryError(GraphAlgebraError):
    """The vertex set is not hereditary (or not saturated hereditary)."""


class NotACycleError(GraphAlgebraError):
    """The edge sequence does not form a cycle of the graph."""


class NotAMaximalTailError(GraphAlgebraError):
    """The vertex set fails one of the maximal-tail axioms."""


class MalformedHullError(GraphAlgebraError):
    """A hull entry does not describe a maximal tail of the graph."""


class TooLargeError(GraphAlgebraError):
    """The instance exceeds the size guard of a brute-force routine."""


class InternalInvariantViolation(GraphAlgebraError):
    """A condition the underlying theory rules out was observed at runtime.

    These are deliberate tripwires: if one fires, either the input was
    malformed in a way the validators missed, or an implementation bug
    broke a derivation this package relies on.
    """
