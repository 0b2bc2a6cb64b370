"""Exception types shared across the package.

Negative *decisions* (a graph that is not an L-graph, a base edge that does
not work, a missing degeneracy order) are returned as values, not raised.
Exceptions are reserved for violated preconditions and malformed inputs.
"""


class LContactError(Exception):
    """Base class for all package errors."""


class MalformedInput(LContactError):
    """Input document violates the schema or basic graph sanity."""


class NotPlanar(LContactError):
    """No plane embedding exists for the given edge set."""


class InconsistentRotation(LContactError):
    """A supplied rotation system fails the face/Euler consistency check."""


class NotTriangulation(LContactError):
    """Operation requires a maximally planar host graph."""


class InvalidOrder(LContactError):
    """A vertex order does not satisfy the required insertion invariants."""


class NoEar(LContactError):
    """Ear peeling got stuck; the edge labeling is not valid."""


class TooLarge(LContactError):
    """Instance exceeds the exhaustive oracle's size bound."""


class DegenerateContact(LContactError):
    """A contact coincides with a bend or another endpoint."""


class DegenerateRep(LContactError):
    """Representation is too degenerate for the requested construction."""


class InconsistentInputs(LContactError):
    """Two inputs that must describe the same object disagree."""


class NotSL(LContactError):
    """Representation fails the equal-paired-segments condition."""


class SingularSystem(LContactError):
    """The segment-length system is singular; indicates a construction bug."""
