"""
Finite directed graphs and their boundary path spaces.

Paths are tuples of edge ids. Boundary paths are encoded canonically as
:class:`SinkPath` (a finite path ending in a sink) or :class:`CyclePath`
(a finite prefix followed by a cycle repeated forever).
"""
from __future__ import annotations

import itertools
import json
from typing import (
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx

from .enums import CensusKind, ExitMarker, IsotropyKind, OrbitKind, WitnessKind
from .errors import (
    GraphException,
    GraphParseError,
    InvalidPath,
    NotAcyclic,
    NotDiscrete,
    UnknownPath,
)
from .groupoid import BoundaryPathGroupoid, BPArrow, FiniteGroupoid
from .log import graph_log
from .utils import canonical_key, sorted_canonical

__all__ = [
    "Edge",
    "Graph",
    "VertexClasses",
    "SinkPath",
    "CyclePath",
    "BoundaryPathId",
    "CylinderSet",
    "Census",
    "Witness",
    "DiscretenessReport",
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
]

Path = Tuple[Hashable, ...]


class Edge(NamedTuple):
    id: Hashable
    src: Hashable
    dst: Hashable


class Graph:
    """
    A finite directed multigraph.

    Parameters
    ----------
    vertices : Iterable
        Vertex ids.
    edges : Iterable[Edge]
        ``(id, src, dst)`` triples; parallel edges are told apart by id.
    infinite_emitters : Iterable
        Vertices that symbolically emit infinitely many edges.

    Raises
    ------
    GraphParseError
        On duplicate ids or dangling endpoints.
    """

    def __init__(
        self,
        vertices: Iterable[Hashable],
        edges: Iterable[Union[Edge, Tuple[Hashable, Hashable, Hashable]]],
        infinite_emitters: Iterable[Hashable] = (),
    ):
        vertices = list(vertices)
        self._nx = nx.MultiDiGraph()
        for i, v in enumerate(vertices):
            if v in self._nx:
                raise GraphParseError(f"duplicate vertex id {v!r}", f"vertices[{i}]")
            self._nx.add_node(v)
        self._edges: Dict[Hashable, Edge] = {}
        for i, raw in enumerate(edges):
            edge = Edge(*raw)
            if edge.id in self._edges:
                raise GraphParseError(f"duplicate edge id {edge.id!r}", f"edges[{i}].id")
            for field in ("src", "dst"):
                if getattr(edge, field) not in self._nx:
                    raise GraphParseError(
                        f"undeclared vertex {getattr(edge, field)!r}", f"edges[{i}].{field}"
                    )
            self._edges[edge.id] = edge
            self._nx.add_edge(edge.src, edge.dst, key=edge.id)
        emitters = list(infinite_emitters)
        for i, v in enumerate(emitters):
            if v not in self._nx:
                raise GraphParseError(f"undeclared vertex {v!r}", f"infinite_emitters[{i}]")
        self.vertices: Tuple[Hashable, ...] = tuple(sorted_canonical(vertices))
        self.edges: Tuple[Edge, ...] = tuple(
            self._edges[e] for e in sorted_canonical(self._edges)
        )
        self.infinite_emitters: FrozenSet[Hashable] = frozenset(emitters)

    def __repr__(self):
        return (
            f"<Graph: vertices={len(self.vertices)}, edges={len(self.edges)}, "
            f"infinite_emitters={len(self.infinite_emitters)}>"
        )

    def __eq__(self, other):
        if isinstance(other, Graph):
            return (
                self.vertices == other.vertices
                and self.edges == other.edges
                and self.infinite_emitters == other.infinite_emitters
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.vertices, self.edges, self.infinite_emitters))

    @property
    def multigraph(self) -> nx.MultiDiGraph:
        return self._nx

    def edge(self, edge_id) -> Edge:
        try:
            return self._edges[edge_id]
        except (KeyError, TypeError):
            raise InvalidPath(f"{edge_id!r} is not an edge") from None

    def out_edges(self, v) -> List[Edge]:
        return sorted(
            (self._edges[key] for _, _, key in self._nx.out_edges(v, keys=True)),
            key=lambda e: canonical_key(e.id),
        )

    def in_edges(self, v) -> List[Edge]:
        return sorted(
            (self._edges[key] for _, _, key in self._nx.in_edges(v, keys=True)),
            key=lambda e: canonical_key(e.id),
        )

    def check_path(self, source, path: Sequence[Hashable]) -> Hashable:
        """
        Checks that ``path`` is a path starting at ``source`` and returns its range vertex.

        Raises
        ------
        InvalidPath
        """
        if source not in self._nx:
            raise InvalidPath(f"{source!r} is not a vertex")
        current = source
        for edge_id in path:
            edge = self.edge(edge_id)
            if edge.src != current:
                raise InvalidPath(f"edge {edge_id!r} does not start at {current!r}")
            current = edge.dst
        return current

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in self.edges],
            "infinite_emitters": sorted_canonical(self.infinite_emitters),
        }


def _scalar_id(value, position: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise GraphParseError("ids must be strings or integers", position)
    return value


def parse_graph(text: str) -> Graph:
    """
    Parses a graph JSON document.

    Raises
    ------
    GraphParseError
        With the ``line:column`` of a JSON syntax error or the document path of
        a schema error.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(exc.msg, f"{exc.lineno}:{exc.colno}") from exc
    if not isinstance(document, dict):
        raise GraphParseError("expected an object", "$")
    for key in ("vertices", "edges"):
        if not isinstance(document.get(key), list):
            raise GraphParseError("expected a list", key)
    emitters = document.get("infinite_emitters", [])
    if not isinstance(emitters, list):
        raise GraphParseError("expected a list", "infinite_emitters")
    vertices = [_scalar_id(v, f"vertices[{i}]") for i, v in enumerate(document["vertices"])]
    edges = []
    for i, entry in enumerate(document["edges"]):
        if not isinstance(entry, dict):
            raise GraphParseError("expected {id, src, dst}", f"edges[{i}]")
        for field in ("id", "src", "dst"):
            if field not in entry:
                raise GraphParseError("missing field", f"edges[{i}].{field}")
        edges.append(
            Edge(*(_scalar_id(entry[f], f"edges[{i}].{f}") for f in ("id", "src", "dst")))
        )
    emitters = [_scalar_id(v, f"infinite_emitters[{i}]") for i, v in enumerate(emitters)]
    graph = Graph(vertices, edges, emitters)
    graph_log.debug("parsed %r", graph)
    return graph


class VertexClasses(NamedTuple):
    sinks: Tuple[Hashable, ...]
    infinite_emitters: Tuple[Hashable, ...]
    regular: Tuple[Hashable, ...]


def classify_vertices(g: Graph) -> VertexClasses:
    """Splits the vertices into sinks, infinite emitters and regular vertices."""
    sinks, emitters, regular = [], [], []
    for v in g.vertices:
        if v in g.infinite_emitters:
            emitters.append(v)
        elif g.multigraph.out_degree(v) == 0:
            sinks.append(v)
        else:
            regular.append(v)
    return VertexClasses(tuple(sinks), tuple(emitters), tuple(regular))


def find_cycles(g: Graph) -> List[Path]:
    """
    Every cycle of ``g``, rotated to start at its smallest vertex.

    Parallel edges give distinct cycles. Cycles are ordered by length, then by
    their edge ids.
    """
    simple = nx.DiGraph(g.multigraph)
    cycles = []
    for vertex_cycle in nx.simple_cycles(simple):
        start = min(range(len(vertex_cycle)), key=lambda i: canonical_key(vertex_cycle[i]))
        vertex_cycle = vertex_cycle[start:] + vertex_cycle[:start]
        hops = [
            [
                key
                for key in sorted_canonical(
                    g.multigraph.get_edge_data(u, vertex_cycle[(i + 1) % len(vertex_cycle)])
                )
            ]
            for i, u in enumerate(vertex_cycle)
        ]
        cycles.extend(tuple(choice) for choice in itertools.product(*hops))
    return sorted(cycles, key=lambda c: (len(c), canonical_key(c)))


def cycle_vertices(g: Graph, cycle: Sequence[Hashable]) -> Tuple[Hashable, ...]:
    return tuple(g.edge(e).src for e in cycle)


def cycle_exits(g: Graph, cycle: Sequence[Hashable]) -> List[Union[Hashable, ExitMarker]]:
    """
    The exits of ``cycle``: edges leaving one of its vertices that are not cycle edges.

    A cycle vertex flagged as an infinite emitter adds
    :attr:`ExitMarker.INFINITELY_MANY` at the end of the list.
    """
    on_cycle = set(cycle)
    vertices = cycle_vertices(g, cycle)
    exits: List[Union[Hashable, ExitMarker]] = [
        e.id for v in vertices for e in g.out_edges(v) if e.id not in on_cycle
    ]
    exits = sorted_canonical(set(exits))
    if any(v in g.infinite_emitters for v in vertices):
        exits.append(ExitMarker.INFINITELY_MANY)
    return exits


class CylinderSet(NamedTuple):
    """
    The generalized cylinder C(alpha, F) of boundary paths extending ``alpha``
    from ``source`` whose next edge is not in ``excluded``.
    """

    source: Hashable
    alpha: Path = ()
    excluded: FrozenSet[Hashable] = frozenset()

    @property
    def label(self) -> str:
        base = ".".join(map(str, self.alpha)) if self.alpha else f"ε_{self.source}"
        if self.excluded:
            return f"C({base}; {{{', '.join(map(str, sorted_canonical(self.excluded)))}}})"
        return f"C({base})"

    def __repr__(self):
        return f"<CylinderSet: {self.label}>"


class Census(NamedTuple):
    kind: CensusKind
    count: Optional[int] = None

    def __repr__(self):
        if self.kind is CensusKind.FINITE:
            return f"<Census: finite({self.count})>"
        return f"<Census: {self.kind.value}>"


class Witness(NamedTuple):
    """
    An obstruction to discreteness.

    For a cycle with an exit ``f`` the cylinders C(gamma^k f) are nonempty,
    pairwise disjoint and all inside C(eps_v) for v = s(f).
    """

    kind: WitnessKind
    vertex: Hashable
    cycle: Optional[Path] = None
    exit: Optional[Union[Hashable, ExitMarker]] = None
    emitted: Tuple[Hashable, ...] = ()

    def describe(self) -> str:
        if self.kind is WitnessKind.INFINITE_EMITTER:
            return f"{self.vertex} is an infinite emitter"
        cycle = ".".join(map(str, self.cycle))
        if self.exit is ExitMarker.INFINITELY_MANY:
            return f"cycle {cycle} has infinitely many exits at {self.vertex}"
        return f"cycle {cycle} has exit {self.exit} at {self.vertex}"

    @property
    def cylinder(self) -> CylinderSet:
        """The infinite cylinder C(eps_v) holding the witness family."""
        return CylinderSet(self.vertex)

    def family(self, k: int) -> CylinderSet:
        """
        The k-th member of the witness family.

        C(gamma^k f) for a cycle witness with rotation so gamma starts at s(f);
        C(eps_v, {e_1, ..., e_k}) over the listed edges for an infinite emitter.
        """
        if k < 0:
            raise GraphException(f"witness family index must be non-negative, got {k}")
        if self.kind is WitnessKind.INFINITE_EMITTER or self.exit is ExitMarker.INFINITELY_MANY:
            return CylinderSet(self.vertex, (), frozenset(self.emitted[:k]))
        return CylinderSet(self.vertex, tuple(self.cycle) * k + (self.exit,))


class DiscretenessReport(NamedTuple):
    discrete: bool
    witness: Optional[Witness]
    rays_vacuous: bool = True

    def to_json(self) -> dict:
        return {
            "discrete": self.discrete,
            "witness": self.witness.describe() if self.witness else None,
            "rays": "vacuously satisfied: a finite graph has no rays",
        }


def _rotate_to(g: Graph, cycle: Path, vertex) -> Path:
    index = cycle_vertices(g, cycle).index(vertex)
    return tuple(cycle[index:] + cycle[:index])


def is_discrete(g: Graph) -> DiscretenessReport:
    """
    Decides whether the boundary path space of ``g`` is discrete.

    It is exactly when no vertex is an infinite emitter and no cycle has an
    exit. The condition on rays holds vacuously since finite graphs have none.
    """
    for v in sorted_canonical(g.infinite_emitters):
        witness = Witness(
            WitnessKind.INFINITE_EMITTER,
            v,
            emitted=tuple(e.id for e in g.out_edges(v)),
        )
        graph_log.debug("not discrete: %s", witness.describe())
        return DiscretenessReport(False, witness)
    for cycle in find_cycles(g):
        exits = cycle_exits(g, cycle)
        if exits:
            f = exits[0]
            vertex = g.edge(f).src
            witness = Witness(
                WitnessKind.CYCLE_WITH_EXIT, vertex, _rotate_to(g, cycle, vertex), f
            )
            graph_log.debug("not discrete: %s", witness.describe())
            return DiscretenessReport(False, witness)
    return DiscretenessReport(True, None)


class SinkPath(NamedTuple):
    """A finite boundary path ending in ``sink``; no edges encodes eps_sink."""

    edges: Path
    sink: Hashable

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def label(self) -> str:
        return ".".join(map(str, self.edges)) if self.edges else f"ε_{self.sink}"

    def sort_key(self):
        return (0, canonical_key(self.sink), len(self.edges), canonical_key(self.edges))

    def __repr__(self):
        return f"<SinkPath: {self.label}>"


class CyclePath(NamedTuple):
    """
    An infinite boundary path ``prefix`` followed by ``cycle`` forever, entering
    the cycle at its vertex number ``rotation``.
    """

    prefix: Path
    cycle: Path
    rotation: int

    @property
    def length(self) -> int:
        return len(self.prefix)

    @property
    def rotated(self) -> Path:
        return self.cycle[self.rotation :] + self.cycle[: self.rotation]

    @property
    def label(self) -> str:
        head = ".".join(map(str, self.prefix))
        return f"{head}({'.'.join(map(str, self.rotated))})^∞"

    def sort_key(self):
        return (
            1,
            len(self.cycle),
            canonical_key(self.cycle),
            len(self.prefix),
            self.rotation,
            canonical_key(self.prefix),
        )

    def edges_upto(self, n: int) -> Path:
        out = list(self.prefix[:n])
        rotated = self.rotated
        while len(out) < n:
            out.extend(rotated[: n - len(out)])
        return tuple(out)

    def __repr__(self):
        return f"<CyclePath: {self.label}>"


BoundaryPathId = Union[SinkPath, CyclePath]


class OrbitDescriptor(NamedTuple):
    kind: OrbitKind
    anchor: Union[Hashable, Path]
    size: int
    isotropy: IsotropyKind
    members: Tuple[BoundaryPathId, ...]

    def to_json(self) -> dict:
        anchor = list(self.anchor) if self.kind is OrbitKind.CYCLE else self.anchor
        return {
            "kind": self.kind.value,
            "anchor": anchor,
            "size": self.size,
            "isotropy": self.isotropy.value,
            "members": [p.label for p in self.members],
        }


def _require_discrete(g: Graph) -> Tuple[List[Path], DiscretenessReport]:
    report = is_discrete(g)
    if not report.discrete:
        raise NotDiscrete(report.witness)
    return find_cycles(g), report


def _backward_prefixes(g: Graph, end, blocked: FrozenSet) -> Iterator[Path]:
    """Every path ending at ``end`` whose edges all start outside ``blocked``."""
    stack: List[Tuple[Hashable, Path]] = [(end, ())]
    while stack:
        start, path = stack.pop()
        yield path
        for edge in g.in_edges(start):
            if edge.src not in blocked:
                stack.append((edge.src, (edge.id,) + path))


def enumerate_boundary(g: Graph) -> List[BoundaryPathId]:
    """
    Every boundary path of a graph with discrete boundary path space.

    Raises
    ------
    NotDiscrete
    """
    cycles, _ = _require_discrete(g)
    on_cycles = frozenset(v for c in cycles for v in cycle_vertices(g, c))
    paths: List[BoundaryPathId] = []
    for sink in classify_vertices(g).sinks:
        paths.extend(SinkPath(p, sink) for p in _backward_prefixes(g, sink, on_cycles))
    for cycle in cycles:
        for rotation, entry in enumerate(cycle_vertices(g, cycle)):
            paths.extend(
                CyclePath(p, cycle, rotation) for p in _backward_prefixes(g, entry, on_cycles)
            )
    return sorted_canonical(paths)


def boundary_orbits(g: Graph) -> List[OrbitDescriptor]:
    """
    The tail equivalence classes of the boundary paths: one per sink and one
    per cycle, ordered by their smallest member.

    Raises
    ------
    NotDiscrete
    """
    return _orbits_of(enumerate_boundary(g))


def _orbits_of(paths: Sequence[BoundaryPathId]) -> List[OrbitDescriptor]:
    groups: Dict[Tuple, List[BoundaryPathId]] = {}
    for p in paths:
        anchor = ("sink", p.sink) if isinstance(p, SinkPath) else ("cycle", p.cycle)
        groups.setdefault(anchor, []).append(p)
    orbits = []
    for (kind, anchor), members in groups.items():
        members = sorted_canonical(members)
        if kind == "sink":
            orbits.append(
                OrbitDescriptor(
                    OrbitKind.SINK, anchor, len(members), IsotropyKind.TRIVIAL, tuple(members)
                )
            )
        else:
            orbits.append(
                OrbitDescriptor(
                    OrbitKind.CYCLE,
                    anchor,
                    len(members),
                    IsotropyKind.INFINITE_CYCLIC,
                    tuple(members),
                )
            )
    return sorted(orbits, key=lambda o: canonical_key(o.members[0]))


class BoundaryAnalysis:
    """
    Everything known about the boundary path space of a graph.

    Attributes
    ----------
    graph : Graph
    discrete : bool
    witness : Optional[Witness]
        Present exactly when the space is not discrete.
    cycles : List[Tuple]
        From :func:`find_cycles`.
    orbits : List[OrbitDescriptor]
        Empty when the space is not discrete.
    paths : Optional[Tuple[BoundaryPathId, ...]]
        Present exactly when the space is discrete.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.report = is_discrete(graph)
        self.discrete = self.report.discrete
        self.witness = self.report.witness
        self.cycles = find_cycles(graph)
        if self.discrete:
            self.paths: Optional[Tuple[BoundaryPathId, ...]] = tuple(enumerate_boundary(graph))
            self.orbits = _orbits_of(self.paths)
        else:
            self.paths = None
            self.orbits = []
        self._orbit_index = {p: i for i, o in enumerate(self.orbits) for p in o.members}
        self._groupoid = None

    def __repr__(self):
        return (
            f"<BoundaryAnalysis: discrete={self.discrete}, orbits={len(self.orbits)}, "
            f"paths={len(self.paths) if self.paths is not None else None}>"
        )

    @property
    def acyclic(self) -> bool:
        return not self.cycles

    def require_discrete(self) -> None:
        if not self.discrete:
            raise NotDiscrete(self.witness)

    def has_path(self, p) -> bool:
        try:
            return p in self._orbit_index
        except TypeError:
            return False

    def orbit_index(self, p) -> int:
        try:
            return self._orbit_index[p]
        except (KeyError, TypeError):
            raise UnknownPath(f"{p!r} is not a boundary path of the graph") from None

    def cycle_length(self, p) -> Optional[int]:
        self.orbit_index(p)
        return len(p.cycle) if isinstance(p, CyclePath) else None

    def phase(self, p) -> int:
        """Position of ``p`` along its cycle orbit: prefix length minus entry rotation."""
        self.orbit_index(p)
        if isinstance(p, SinkPath):
            return p.length
        return len(p.prefix) - p.rotation

    def path_start(self, p: BoundaryPathId):
        if isinstance(p, SinkPath):
            return self.graph.edge(p.edges[0]).src if p.edges else p.sink
        if p.prefix:
            return self.graph.edge(p.prefix[0]).src
        return cycle_vertices(self.graph, p.cycle)[p.rotation]

    def groupoid(self) -> BoundaryPathGroupoid:
        """The boundary path groupoid of a discrete analysis."""
        if self._groupoid is None:
            self._groupoid = BoundaryPathGroupoid(self)
        return self._groupoid

    def to_json(self) -> dict:
        classes = classify_vertices(self.graph)
        return {
            "discrete": self.discrete,
            "witness": self.witness.describe() if self.witness else None,
            "rays": "vacuously satisfied: a finite graph has no rays",
            "acyclic": self.acyclic,
            "sinks": list(classes.sinks),
            "infinite_emitters": list(classes.infinite_emitters),
            "cycles": [
                {"edges": list(c), "exits": [_exit_json(x) for x in cycle_exits(self.graph, c)]}
                for c in self.cycles
            ],
            "orbits": [o.to_json() for o in self.orbits],
            "paths": [p.label for p in self.paths] if self.paths is not None else None,
        }


def _exit_json(x):
    return x.value if isinstance(x, ExitMarker) else x


def analyze(g: Graph) -> BoundaryAnalysis:
    analysis = BoundaryAnalysis(g)
    graph_log.verbose("analyzed %r: %r", g, analysis)
    return analysis


def cylinder_intersect(a: CylinderSet, b: CylinderSet) -> Optional[CylinderSet]:
    """
    Intersects two cylinders.

    C(alpha) meets C(beta) in the longer of the two when one path extends the
    other, and is empty otherwise. Excluded edges carry over to the normal form.

    Returns
    -------
    Optional[CylinderSet]
        None for the empty intersection.
    """
    if a.source != b.source:
        return None
    if len(a.alpha) > len(b.alpha):
        a, b = b, a
    if b.alpha[: len(a.alpha)] != a.alpha:
        return None
    if len(a.alpha) == len(b.alpha):
        return CylinderSet(a.source, a.alpha, a.excluded | b.excluded)
    if b.alpha[len(a.alpha)] in a.excluded:
        return None
    return b


def _path_edges(p: BoundaryPathId, n: int) -> Path:
    if isinstance(p, SinkPath):
        return p.edges[:n]
    return p.edges_upto(n)


def cylinder_contains(analysis: BoundaryAnalysis, c: CylinderSet, p: BoundaryPathId) -> bool:
    """Membership of an enumerated boundary path in a cylinder."""
    analysis.orbit_index(p)
    if analysis.path_start(p) != c.source:
        return False
    n = len(c.alpha)
    head = _path_edges(p, n + 1)
    if head[:n] != tuple(c.alpha):
        return False
    return len(head) == n or head[n] not in c.excluded


def _infinite_region(g: Graph) -> FrozenSet:
    """Vertices from which an infinite emitter or a cycle with an exit is reachable."""
    sources = set(g.infinite_emitters)
    for cycle in find_cycles(g):
        if cycle_exits(g, cycle):
            sources.update(cycle_vertices(g, cycle))
    reverse = g.multigraph.reverse(copy=False)
    region = set(sources)
    for v in sources:
        region.update(nx.descendants(reverse, v))
    return frozenset(region)


def cylinder_census(g: Graph, c: CylinderSet) -> Census:
    """
    Counts the boundary paths in a cylinder.

    The count is infinite exactly when the continuation cone meets an
    infinite emitter or a cycle with an exit.

    Raises
    ------
    InvalidPath
        If ``alpha`` is not a path from ``source`` or an excluded edge does not
        start at its range.
    """
    end = g.check_path(c.source, c.alpha)
    for f in c.excluded:
        if g.edge(f).src != end:
            raise InvalidPath(f"excluded edge {f!r} does not start at {end!r}")
    region = _infinite_region(g)
    if end in g.infinite_emitters:
        return Census(CensusKind.INFINITE)
    allowed = [e for e in g.out_edges(end) if e.id not in c.excluded]
    if not c.excluded and end in region:
        return Census(CensusKind.INFINITE)
    if any(e.dst in region for e in allowed):
        return Census(CensusKind.INFINITE)

    on_cycles = {v for cycle in find_cycles(g) for v in cycle_vertices(g, cycle)}
    memo: Dict[Hashable, int] = {}

    def count(v) -> int:
        if v in memo:
            return memo[v]
        if v in on_cycles:
            memo[v] = 1
        else:
            out = g.out_edges(v)
            memo[v] = 1 if not out else sum(count(e.dst) for e in out)
        return memo[v]

    if not g.out_edges(end):
        total = 1
    elif end in on_cycles and not c.excluded:
        total = 1
    else:
        total = sum(count(e.dst) for e in allowed)
    if total == 0:
        return Census(CensusKind.EMPTY, 0)
    return Census(CensusKind.FINITE, total)


def shift(analysis: BoundaryAnalysis, p: BoundaryPathId, k: int) -> BoundaryPathId:
    """
    The shift map applied ``k`` times: drop the first ``k`` edges of ``p``.

    Raises
    ------
    InvalidPath
        If ``p`` is a finite path shorter than ``k``.
    """
    analysis.orbit_index(p)
    if k < 0:
        raise InvalidPath("shift count must be non-negative")
    if isinstance(p, SinkPath):
        if k > p.length:
            raise InvalidPath(f"cannot shift {p.label} by {k}")
        return SinkPath(p.edges[k:], p.sink)
    if k <= len(p.prefix):
        return CyclePath(p.prefix[k:], p.cycle, p.rotation)
    return CyclePath((), p.cycle, (p.rotation + k - len(p.prefix)) % len(p.cycle))


def tail_equivalent(analysis: BoundaryAnalysis, p: BoundaryPathId, q: BoundaryPathId) -> bool:
    """Whether ``p`` and ``q`` agree after dropping finite initial subpaths."""
    analysis.orbit_index(p)
    analysis.orbit_index(q)
    if type(p) is not type(q):
        return False
    if isinstance(p, SinkPath):
        return shift(analysis, p, p.length) == shift(analysis, q, q.length)
    tail = shift(analysis, p, p.length)
    return any(
        shift(analysis, q, q.length + j) == tail for j in range(len(q.cycle))
    )


def isolating_cylinder(analysis: BoundaryAnalysis, p: BoundaryPathId) -> CylinderSet:
    """
    A cylinder whose only boundary path is ``p``.

    C(alpha) for a finite path alpha, C(alpha gamma) for alpha gamma^inf.
    """
    analysis.orbit_index(p)
    if isinstance(p, SinkPath):
        return CylinderSet(analysis.path_start(p), p.edges)
    return CylinderSet(analysis.path_start(p), p.prefix + p.rotated)


def closed_paths(g: Graph, max_length: int) -> List[Path]:
    """Every closed path of length 1 to ``max_length``."""
    found = []
    for v in g.vertices:
        stack: List[Tuple[Hashable, Path]] = [(v, ())]
        while stack:
            current, path = stack.pop()
            if path and current == v:
                found.append(path)
            if len(path) < max_length:
                for e in g.out_edges(current):
                    stack.append((e.dst, path + (e.id,)))
    return sorted(set(found), key=lambda p: (len(p), canonical_key(p)))


def is_cycle_power(g: Graph, path: Sequence[Hashable]) -> bool:
    """Whether a closed path is a rotation of some cycle repeated."""
    path = tuple(path)
    if not path or g.check_path(g.edge(path[0]).src, path) != g.edge(path[0]).src:
        return False
    start = g.edge(path[0]).src
    for cycle in find_cycles(g):
        if len(path) % len(cycle) or start not in cycle_vertices(g, cycle):
            continue
        if _rotate_to(g, cycle, start) * (len(path) // len(cycle)) == path:
            return True
    return False


def finite_boundary_groupoid(analysis: BoundaryAnalysis) -> FiniteGroupoid:
    """
    The boundary path groupoid of an acyclic discrete graph as an explicit table.

    Arrows are the :class:`BPArrow` triples (p, n, q) from q to p, n = |p| - |q|.

    Raises
    ------
    NotDiscrete
    NotAcyclic
    """
    analysis.require_discrete()
    if not analysis.acyclic:
        raise NotAcyclic("the boundary groupoid of a graph with cycles is infinite")

    def arrow(p, q):
        return BPArrow(p, p.length - q.length, q)

    arrows, compositions, inverses = [], [], []
    for orbit in analysis.orbits:
        members = orbit.members
        for p, q in itertools.product(members, repeat=2):
            arrows.append((arrow(p, q), q, p))
            inverses.append((arrow(p, q), arrow(q, p)))
        for p, q, r in itertools.product(members, repeat=3):
            compositions.append((arrow(p, q), arrow(q, r), arrow(p, r)))
    return FiniteGroupoid(analysis.paths, arrows, compositions, inverses)
