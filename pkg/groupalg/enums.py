import enum

__all__ = [
    "TriState",
    "RingKind",
    "GroupKind",
    "ArithOp",
    "IsotropyKind",
    "OrbitKind",
    "ViolationKind",
    "Direction",
    "CensusKind",
    "WitnessKind",
    "ExitMarker",
]


class TriState(enum.Enum):
    """
    A three valued answer used by chain flags and verdicts.
    """

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __and__(self, other):
        if not isinstance(other, TriState):
            return NotImplemented
        if TriState.NO in (self, other):
            return TriState.NO
        if TriState.UNKNOWN in (self, other):
            return TriState.UNKNOWN
        return TriState.YES

    @classmethod
    def of(cls, value: bool) -> "TriState":
        return cls.YES if value else cls.NO


class RingKind(enum.Enum):
    """
    The constructors of the coefficient ring universe.
    """

    INTEGERS = "Z"
    """The integers."""

    RATIONALS = "Q"
    """The rationals, elements kept in lowest terms."""

    INTEGERS_MOD = "Zmod"
    """Residues modulo n >= 2."""

    LAURENT = "Laurent"
    """Laurent polynomials R[x, x^-1] over a base ring."""

    GROUP_RING = "GroupRing"
    """The group ring RG of a finite or infinite cyclic group."""


class GroupKind(enum.Enum):
    FINITE = "finite"
    INFINITE_CYCLIC = "infinite_cyclic"


class ArithOp(enum.Enum):
    ADD = "add"
    MUL = "mul"
    NEG = "neg"
    EQ = "eq"
    ZERO = "zero"
    ONE = "one"


class IsotropyKind(enum.Enum):
    """
    Isotropy groups that occur in boundary path groupoids.
    """

    TRIVIAL = "trivial"
    """The path is not eventually periodic."""

    INFINITE_CYCLIC = "infinite_cyclic"
    """The path ends in a cycle."""


class OrbitKind(enum.Enum):
    SINK = "sink"
    CYCLE = "cycle"
    EXPLICIT = "explicit"


class ViolationKind(enum.Enum):
    """
    Groupoid axioms checked by :func:`groupalg.validate`.
    """

    UNKNOWN_ARROW = "unknown_arrow"
    BAD_COMPOSABILITY = "bad_composability"
    MISSING_COMPOSITE = "missing_composite"
    BAD_ENDPOINTS = "bad_endpoints"
    MISSING_IDENTITY = "missing_identity"
    BAD_IDENTITY = "bad_identity"
    NON_ASSOCIATIVE = "non_associative"
    MISSING_INVERSE = "missing_inverse"
    BAD_INVERSE = "bad_inverse"


class Direction(enum.Enum):
    FORWARD = "forward"
    BACKWARD = "backward"


class CensusKind(enum.Enum):
    EMPTY = "empty"
    FINITE = "finite"
    INFINITE = "infinite"


class WitnessKind(enum.Enum):
    """
    Obstructions to discreteness of the boundary path space.
    """

    INFINITE_EMITTER = "infinite_emitter"
    """A vertex emitting infinitely many edges; C(eps_v, e_k) is infinite."""

    CYCLE_WITH_EXIT = "cycle_with_exit"
    """A cycle with an exit f; the disjoint nonempty C(gamma^k f) fill C(eps_v)."""


class ExitMarker(enum.Enum):
    INFINITELY_MANY = "infinitely_many"
    """Stands for the exits of a cycle vertex flagged as an infinite emitter."""
