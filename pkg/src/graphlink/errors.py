"""Exception hierarchy shared by all graphlink modules."""


class GraphLinkError(Exception):
    """Base class for all graphlink errors."""


class ParseError(GraphLinkError):
    """Malformed textual input (graph, diagram, or move script)."""


class DomainError(GraphLinkError):
    """Operation applied outside its mathematical domain."""


class MoveError(DomainError):
    """A move site whose precondition fails on the given graph."""


class ResourceLimitError(GraphLinkError):
    """Computation refused because it exceeds a configured size limit."""
