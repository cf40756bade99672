"""
Exception hierarchy for the annihilator package.
Every error raised on purpose by the library derives from AnnihilatorError.
"""


class AnnihilatorError(Exception):
    """Base class for all library errors."""
    pass


class InvalidGraphError(AnnihilatorError, ValueError):
    """Raised when a vertex/edge description does not form a simple graph."""
    pass


class SelfLoopError(InvalidGraphError):
    """Raised when an edge joins a vertex to itself."""
    pass


class DuplicateEdgeError(InvalidGraphError):
    """Raised when the same unordered pair is listed twice."""
    pass


class BadVertexError(InvalidGraphError):
    """Raised when a vertex index is outside 0..n-1."""
    pass


class Graph6Error(AnnihilatorError, ValueError):
    """Raised for malformed graph6 text."""
    pass


class UnsupportedError(AnnihilatorError):
    """Raised when an input is outside the range an algorithm supports."""
    pass


class EnumerationBudgetExceeded(UnsupportedError):
    """Raised when enumeration would retain more sets than the configured budget."""

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"Enumeration budget of {budget} retained sets exceeded")


class NotATreeError(AnnihilatorError, ValueError):
    """Raised by tree-only operations on graphs that are not trees."""
    pass


class BadParameterError(AnnihilatorError, ValueError):
    """Raised when a family or standard graph parameter is out of range."""
    pass


class FamilyNotFoundError(AnnihilatorError, LookupError):
    """Raised when a family or fixed catalog name is unknown."""
    pass


class UsageError(AnnihilatorError):
    """Raised for invalid command-line usage."""
    pass
