__all__ = [
    "GroupAlgException",
    "InputError",
    "UsageError",
    "InvalidRingSpec",
    "GraphParseError",
    "GroupoidParseError",
    "RingException",
    "RingMismatch",
    "InvalidGroupTable",
    "NoncommutativeCoefficients",
    "InfiniteRing",
    "GroupoidException",
    "InvalidGroupoid",
    "NotComposable",
    "NotABisection",
    "UnknownUnit",
    "UnknownArrow",
    "GroupoidMismatch",
    "GraphException",
    "InvalidPath",
    "UnknownPath",
    "NotDiscrete",
    "NotAcyclic",
    "MatrixException",
    "IndexMismatch",
    "IndexNotInSet",
]


class GroupAlgException(Exception):
    """Base exception for all groupalg exceptions"""


class InputError(GroupAlgException):
    """Base exception for malformed user input (ring specs, JSON documents)"""


class RingException(GroupAlgException):
    """Base exception for all coefficient ring related exceptions"""


class GroupoidException(GroupAlgException):
    """Base exception for all groupoid related exceptions"""


class GraphException(GroupAlgException):
    """Base exception for all graph related exceptions"""


class MatrixException(GroupAlgException):
    """Base exception for all matrix related exceptions"""


class InvalidRingSpec(InputError, RingException):
    """Exception raised when a ring spec string cannot be parsed"""


class GraphParseError(InputError, GraphException):
    """
    Exception raised when a graph document is malformed.

    Attributes
    ----------
    position : str
        Where the problem was found, either ``line:column`` for JSON syntax
        errors or a document path such as ``edges[2].dst``.
    """

    def __init__(self, message: str, position: str = ""):
        self.position = position
        if position:
            message = f"{position}: {message}"
        super().__init__(message)


class GroupoidParseError(InputError, GroupoidException):
    """Exception raised when a groupoid document is malformed."""

    def __init__(self, message: str, position: str = ""):
        self.position = position
        if position:
            message = f"{position}: {message}"
        super().__init__(message)


class RingMismatch(RingException):
    """Exception raised when an element does not belong to the ring it is used with"""


class InvalidGroupTable(RingException):
    """Exception raised when a multiplication table violates the group axioms"""


class NoncommutativeCoefficients(RingException):
    """Exception raised when a noncommutative ring is used as a coefficient ring"""


class InfiniteRing(RingException):
    """Exception raised when a finite-only procedure receives an infinite ring"""


class InvalidGroupoid(GroupoidException):
    """
    Exception raised when a groupoid fails validation.

    Attributes
    ----------
    report : ValidationReport
        Every violated axiom.
    """

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f": {first.detail}" if first is not None else ""
        super().__init__(f"groupoid has {len(report.violations)} violation(s){detail}")


class NotComposable(GroupoidException):
    """Exception raised when composing arrows with d(a) != r(b)"""


class NotABisection(GroupoidException):
    """Exception raised when an arrow set has a repeated source or target"""


class UnknownUnit(GroupoidException):
    """Exception raised when a unit does not belong to the groupoid"""


class UnknownArrow(GroupoidException):
    """Exception raised when an arrow does not belong to the groupoid"""


class GroupoidMismatch(GroupoidException):
    """Exception raised when algebra elements over different groupoids or rings meet"""


class InvalidPath(GraphException):
    """Exception raised when a sequence of edges is not a path of the graph"""


class UnknownPath(GraphException):
    """Exception raised when a boundary path is not one of the enumerated paths"""


class NotDiscrete(GraphException):
    """
    Exception raised when an operation needs a discrete boundary path space.

    Attributes
    ----------
    witness : Witness
        The obstruction found by the discreteness test.
    """

    def __init__(self, witness, message: str = "boundary path space is not discrete"):
        self.witness = witness
        if witness is not None:
            message = f"{message} ({witness.describe()})"
        super().__init__(message)


class NotAcyclic(GraphException):
    """Exception raised when an operation needs a graph without cycles"""


class IndexMismatch(MatrixException):
    """Exception raised when matrices over different index sets or rings meet"""


class IndexNotInSet(MatrixException):
    """Exception raised when a matrix index is not in the index set"""


class UsageError(InputError):
    """Exception raised when a command line cannot be parsed"""
