from .log import set_logging_level, log, ring_log, algebra_log, graph_log, decide_log

set_logging_level()
__version__ = "0.1.0"

from . import utils
from .enums import (
    TriState,
    RingKind,
    GroupKind,
    ArithOp,
    IsotropyKind,
    OrbitKind,
    ViolationKind,
    Direction,
    CensusKind,
    WitnessKind,
    ExitMarker,
)
from .rings import (
    GroupDescriptor,
    RingDescriptor,
    ChainFlags,
    FIELD_FLAGS,
    MAX_ISOMORPHISM_ORDER,
    Z,
    Q,
    integers_mod,
    laurent,
    group_ring,
    group_ring_over,
    require_commutative,
    parse_ring_spec,
    ring_arith,
    laurent_mul,
    chain_flags,
    group_ring_flags,
)
from .groupoid import (
    Orbit,
    Violation,
    ValidationReport,
    DiscreteGroupoid,
    FiniteGroupoid,
    BPArrow,
    BoundaryPathGroupoid,
    validate,
    orbits,
    isotropy,
    is_invariant,
    bp_arrow_valid,
    compose,
    restrict,
    load_groupoid,
    group_groupoid,
    pair_groupoid,
    pair_group_groupoid,
    disjoint_union,
)
from .graph import (
    Edge,
    Graph,
    SinkPath,
    CyclePath,
    CylinderSet,
    Census,
    Witness,
    OrbitDescriptor,
    BoundaryAnalysis,
    parse_graph,
    classify_vertices,
    find_cycles,
    cycle_exits,
    is_discrete,
    enumerate_boundary,
    boundary_orbits,
    analyze,
    cylinder_intersect,
    cylinder_contains,
    cylinder_census,
    shift,
    tail_equivalent,
    isolating_cylinder,
    closed_paths,
    is_cycle_power,
    finite_boundary_groupoid,
)
from .convolution import (
    ConvElement,
    convolve,
    convolve_by_definition,
    involute,
    char_fn,
    corner,
    orbit_split,
    delta,
    local_unit,
)
from .matrices import (
    DEFAULT_BOUND,
    MAX_ORACLE_INDEX,
    FinSuppMatrix,
    matrix_mul,
    DecompositionIso,
    build_iso,
    iso_map,
    VerificationReport,
    verify_iso,
    left_ideals,
    right_ideals,
    OracleReport,
    column_submodule_check,
    row_submodule_check,
)
from .decider import (
    ChainVerdict,
    Reason,
    Summand,
    decide_orbits,
    decide_groupoid,
    decide_graph,
    decide_corner,
)
from .errors import (
    GroupAlgException,
    InputError,
    RingException,
    GroupoidException,
    GraphException,
    MatrixException,
    InvalidGroupoid,
    NotDiscrete,
)

__all__ = [
    "set_logging_level",
    "log",
    "ring_log",
    "algebra_log",
    "graph_log",
    "decide_log",
    "utils",
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
    "GroupDescriptor",
    "RingDescriptor",
    "ChainFlags",
    "FIELD_FLAGS",
    "MAX_ISOMORPHISM_ORDER",
    "Z",
    "Q",
    "integers_mod",
    "laurent",
    "group_ring",
    "group_ring_over",
    "require_commutative",
    "parse_ring_spec",
    "ring_arith",
    "laurent_mul",
    "chain_flags",
    "group_ring_flags",
    "Orbit",
    "Violation",
    "ValidationReport",
    "DiscreteGroupoid",
    "FiniteGroupoid",
    "BPArrow",
    "BoundaryPathGroupoid",
    "validate",
    "orbits",
    "isotropy",
    "is_invariant",
    "bp_arrow_valid",
    "compose",
    "restrict",
    "load_groupoid",
    "group_groupoid",
    "pair_groupoid",
    "pair_group_groupoid",
    "disjoint_union",
    "Edge",
    "Graph",
    "SinkPath",
    "CyclePath",
    "CylinderSet",
    "Census",
    "Witness",
    "OrbitDescriptor",
    "BoundaryAnalysis",
    "parse_graph",
    "classify_vertices",
    "find_cycles",
    "cycle_exits",
    "is_discrete",
    "enumerate_boundary",
    "boundary_orbits",
    "analyze",
    "cylinder_intersect",
    "cylinder_contains",
    "cylinder_census",
    "shift",
    "tail_equivalent",
    "isolating_cylinder",
    "closed_paths",
    "is_cycle_power",
    "finite_boundary_groupoid",
    "ConvElement",
    "convolve",
    "convolve_by_definition",
    "involute",
    "char_fn",
    "corner",
    "orbit_split",
    "delta",
    "local_unit",
    "DEFAULT_BOUND",
    "MAX_ORACLE_INDEX",
    "FinSuppMatrix",
    "matrix_mul",
    "DecompositionIso",
    "build_iso",
    "iso_map",
    "VerificationReport",
    "verify_iso",
    "left_ideals",
    "right_ideals",
    "OracleReport",
    "column_submodule_check",
    "row_submodule_check",
    "ChainVerdict",
    "Reason",
    "Summand",
    "decide_orbits",
    "decide_groupoid",
    "decide_graph",
    "decide_corner",
    "GroupAlgException",
    "InputError",
    "RingException",
    "GroupoidException",
    "GraphException",
    "MatrixException",
    "InvalidGroupoid",
    "NotDiscrete",
]
