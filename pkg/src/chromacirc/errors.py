"""Exception hierarchy shared across the package."""


class ChromacircError(Exception):
    """Base class for all errors raised by this package."""


class NotOddPrime(ChromacircError):
    """The modulus is not an odd prime."""


class EmptyLengthSet(ChromacircError):
    """A circulant was requested with no lengths."""


class LengthOutOfRange(ChromacircError):
    """A length lies outside the admissible range for the vertex count."""


class SizeMismatch(ChromacircError):
    """A vertex coloring does not cover the vertex set exactly."""


class KeySetMismatch(ChromacircError):
    """An edge coloring is not keyed by exactly the graph's edge set."""


class PreconditionFailed(ChromacircError):
    """Construction parameters violate a stated precondition."""


class ConstructionNotVerified(ChromacircError):
    """A generated coloring failed verification.

    Carries the offending graph/digraph, the coloring, and the full
    verification report so callers can inspect or serialize the failure.
    """

    def __init__(self, message, graph=None, coloring=None, report=None):
        super().__init__(message)
        self.graph = graph
        self.coloring = coloring
        self.report = report


class BadCardinality(ChromacircError):
    """A candidate difference set has the wrong size for its modulus."""


class NotDifferenceSet(ChromacircError):
    """A candidate set fails the unique-difference property.

    The ``witness`` attribute holds a residue with zero or multiple
    representations as a difference of set elements.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotFound(ChromacircError):
    """An exhaustive search completed without finding the object."""


class NotDecomposable(ChromacircError):
    """The requested chord set does not split into perfect matchings."""


class BudgetExceeded(ChromacircError):
    """The instance is larger than the search budget allows."""
