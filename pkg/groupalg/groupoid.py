"""Discrete groupoids: explicit finite arrow tables and boundary path groupoids.

Arrows compose right to left: ``compose(a, b)`` is "a after b" and is defined
exactly when the source of ``a`` is the target of ``b``.
"""
from __future__ import annotations

import abc
import itertools
import json
from collections import defaultdict
from typing import (
    TYPE_CHECKING,
    Any,
    Dict,
    Hashable,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from .enums import OrbitKind, ViolationKind
from .errors import (
    GroupoidException,
    GroupoidParseError,
    InvalidGroupoid,
    NotComposable,
    UnknownArrow,
    UnknownPath,
    UnknownUnit,
)
from .log import algebra_log
from .rings import GroupDescriptor
from .utils import canonical_key, sorted_canonical

if TYPE_CHECKING:
    from .graph import BoundaryAnalysis, BoundaryPathId

__all__ = [
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
]


class Orbit(NamedTuple):
    representative: Hashable
    members: Tuple[Hashable, ...]
    kind: OrbitKind = OrbitKind.EXPLICIT

    def __contains__(self, unit) -> bool:
        return unit in self.members

    @property
    def size(self) -> int:
        return len(self.members)


class Violation(NamedTuple):
    kind: ViolationKind
    detail: str
    arrows: Tuple[Hashable, ...] = ()

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "detail": self.detail, "arrows": list(self.arrows)}


class ValidationReport(NamedTuple):
    violations: Tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": [v.to_json() for v in self.violations]}


class DiscreteGroupoid(abc.ABC):
    """
    Common interface of the two concrete discrete groupoid models.

    Both models have a finite unit set; the boundary path model may have
    infinitely many arrows.
    """

    @property
    @abc.abstractmethod
    def units(self) -> Tuple[Hashable, ...]:
        """The units in canonical order."""

    @abc.abstractmethod
    def is_unit(self, x) -> bool:
        ...

    @abc.abstractmethod
    def is_arrow(self, a) -> bool:
        ...

    @abc.abstractmethod
    def source(self, a):
        """d(a), the unit a starts at."""

    @abc.abstractmethod
    def target(self, a):
        """r(a), the unit a ends at."""

    @abc.abstractmethod
    def identity(self, x):
        """The identity arrow at the unit ``x``."""

    @abc.abstractmethod
    def compose(self, a, b):
        """The composite ``a`` after ``b``."""

    @abc.abstractmethod
    def inverse(self, a):
        ...

    @abc.abstractmethod
    def orbits(self) -> List[Orbit]:
        ...

    @abc.abstractmethod
    def isotropy(self, x) -> GroupDescriptor:
        ...

    @abc.abstractmethod
    def arrows_between(self, x, y, bound: Optional[int] = None) -> List[Any]:
        """Arrows from ``x`` to ``y``; ``bound`` limits infinite hom-sets."""

    def require_unit(self, x) -> None:
        if not self.is_unit(x):
            raise UnknownUnit(f"{x!r} is not a unit of {self!r}")

    def require_arrow(self, a) -> None:
        if not self.is_arrow(a):
            raise UnknownArrow(f"{a!r} is not an arrow of {self!r}")

    def is_identity(self, a) -> bool:
        return self.source(a) == self.target(a) and self.identity(self.source(a)) == a

    def orbit_index(self, x) -> int:
        self.require_unit(x)
        for index, orbit in enumerate(self.orbits()):
            if x in orbit:
                return index
        raise UnknownUnit(f"{x!r} lies in no orbit")


class FiniteGroupoid(DiscreteGroupoid):
    """
    An explicit finite groupoid given by its arrow table.

    Parameters
    ----------
    objects : Iterable
        Object (unit) ids.
    arrows : Iterable[Tuple[id, src, tgt]]
        Arrow ids with their source and target objects.
    compose : Iterable[Tuple[a, b, c]]
        ``c`` is the composite ``a`` after ``b``.
    inverse : Iterable[Tuple[a, b]]
        ``b`` is the inverse of ``a``.
    check : bool
        Validate every groupoid axiom and raise :class:`InvalidGroupoid` on failure.
    """

    def __init__(
        self,
        objects: Iterable[Hashable],
        arrows: Iterable[Tuple[Hashable, Hashable, Hashable]],
        compose: Iterable[Tuple[Hashable, Hashable, Hashable]],
        inverse: Iterable[Tuple[Hashable, Hashable]],
        *,
        check: bool = True,
    ):
        self._shape: List[Violation] = []
        objects = list(objects)
        self._objects = tuple(sorted_canonical(set(objects)))
        self._object_set = frozenset(objects)
        if len(self._object_set) != len(objects):
            self._shape.append(
                Violation(ViolationKind.BAD_ENDPOINTS, "duplicate object ids", ())
            )
        self._arrows: Dict[Hashable, Tuple[Hashable, Hashable]] = {}
        for arrow_id, src, tgt in arrows:
            if arrow_id in self._arrows:
                self._shape.append(
                    Violation(
                        ViolationKind.UNKNOWN_ARROW,
                        f"duplicate arrow id {arrow_id!r}",
                        (arrow_id,),
                    )
                )
            if src not in self._object_set or tgt not in self._object_set:
                self._shape.append(
                    Violation(
                        ViolationKind.BAD_ENDPOINTS,
                        f"arrow {arrow_id!r} has an undeclared endpoint",
                        (arrow_id,),
                    )
                )
            self._arrows[arrow_id] = (src, tgt)
        self._compose: Dict[Tuple[Hashable, Hashable], Hashable] = {}
        for a, b, c in compose:
            self._compose[(a, b)] = c
        self._inverse: Dict[Hashable, Hashable] = dict(inverse)
        self._arrow_order = tuple(sorted_canonical(self._arrows))
        self._identities = self._find_identities()
        self._orbits: Optional[List[Orbit]] = None
        if check:
            report = validate(self)
            if not report.ok:
                raise InvalidGroupoid(report)

    def __repr__(self):
        return f"<FiniteGroupoid: objects={len(self._objects)}, arrows={len(self._arrows)}>"

    def __eq__(self, other):
        if isinstance(other, FiniteGroupoid):
            return (
                self._object_set == other._object_set
                and self._arrows == other._arrows
                and self._compose == other._compose
                and self._inverse == other._inverse
            )
        return NotImplemented

    def __hash__(self):
        return hash((self._object_set, frozenset(self._arrows.items())))

    def _find_identities(self) -> Dict[Hashable, Hashable]:
        identities = {}
        for a in self._arrow_order:
            src, tgt = self._arrows[a]
            if src == tgt and src not in identities and self._compose.get((a, a)) == a:
                identities[src] = a
        return identities

    @property
    def units(self) -> Tuple[Hashable, ...]:
        return self._objects

    @property
    def arrows(self) -> Tuple[Hashable, ...]:
        return self._arrow_order

    def is_unit(self, x) -> bool:
        try:
            return x in self._object_set
        except TypeError:
            return False

    def is_arrow(self, a) -> bool:
        try:
            return a in self._arrows
        except TypeError:
            return False

    def source(self, a):
        self.require_arrow(a)
        return self._arrows[a][0]

    def target(self, a):
        self.require_arrow(a)
        return self._arrows[a][1]

    def identity(self, x):
        self.require_unit(x)
        try:
            return self._identities[x]
        except KeyError:
            raise GroupoidException(f"object {x!r} has no identity arrow") from None

    def compose(self, a, b):
        self.require_arrow(a)
        self.require_arrow(b)
        if self._arrows[a][0] != self._arrows[b][1]:
            raise NotComposable(f"d({a!r}) != r({b!r})")
        try:
            return self._compose[(a, b)]
        except KeyError:
            raise NotComposable(f"no composite recorded for ({a!r}, {b!r})") from None

    def inverse(self, a):
        self.require_arrow(a)
        try:
            return self._inverse[a]
        except KeyError:
            raise GroupoidException(f"no inverse recorded for {a!r}") from None

    def arrows_between(self, x, y, bound: Optional[int] = None) -> List[Hashable]:
        self.require_unit(x)
        self.require_unit(y)
        return [a for a in self._arrow_order if self._arrows[a] == (x, y)]

    def orbits(self) -> List[Orbit]:
        if self._orbits is None:
            parent = {x: x for x in self._objects}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            for src, tgt in self._arrows.values():
                if src in parent and tgt in parent:
                    ra, rb = find(src), find(tgt)
                    if ra != rb:
                        parent[max(ra, rb, key=canonical_key)] = min(ra, rb, key=canonical_key)
            classes = defaultdict(list)
            for x in self._objects:
                classes[find(x)].append(x)
            self._orbits = sorted(
                (Orbit(members[0], tuple(members)) for members in classes.values()),
                key=lambda o: canonical_key(o.representative),
            )
        return list(self._orbits)

    def isotropy_elements(self, x) -> Tuple[Hashable, ...]:
        """The loops at ``x``, identity first, numbered as the isotropy group ids."""
        identity = self.identity(x)
        return (identity,) + tuple(a for a in self.arrows_between(x, x) if a != identity)

    def isotropy(self, x) -> GroupDescriptor:
        loops = self.isotropy_elements(x)
        index = {a: i for i, a in enumerate(loops)}
        return GroupDescriptor.finite(
            [[index[self.compose(a, b)] for b in loops] for a in loops]
        )

    def to_json(self) -> dict:
        return {
            "objects": list(self._objects),
            "arrows": [
                {"id": a, "src": self._arrows[a][0], "tgt": self._arrows[a][1]}
                for a in self._arrow_order
            ],
            "compose": [
                [a, b, self._compose[(a, b)]]
                for a, b in sorted_canonical(self._compose)
            ],
            "inverse": [[a, self._inverse[a]] for a in sorted_canonical(self._inverse)],
        }


def validate(g: FiniteGroupoid) -> ValidationReport:
    """
    Checks every groupoid axiom of an explicit arrow table.

    Returns
    -------
    ValidationReport
        Empty when the table is a groupoid.
    """
    violations: List[Violation] = list(g._shape)
    arrows, comp, inv = g._arrows, g._compose, g._inverse

    for (a, b), c in sorted(comp.items(), key=lambda item: canonical_key(item[0])):
        unknown = [x for x in (a, b, c) if x not in arrows]
        if unknown:
            violations.append(
                Violation(
                    ViolationKind.UNKNOWN_ARROW,
                    f"composite ({a!r}, {b!r}) -> {c!r} uses unknown arrows",
                    tuple(unknown),
                )
            )
            continue
        if arrows[a][0] != arrows[b][1]:
            violations.append(
                Violation(
                    ViolationKind.BAD_COMPOSABILITY,
                    f"{a!r} o {b!r} is defined but src({a!r}) != tgt({b!r})",
                    (a, b),
                )
            )
        elif arrows[c] != (arrows[b][0], arrows[a][1]):
            violations.append(
                Violation(
                    ViolationKind.BAD_ENDPOINTS,
                    f"{a!r} o {b!r} = {c!r} has the wrong source or target",
                    (a, b, c),
                )
            )

    into = defaultdict(list)
    for a in g.arrows:
        into[arrows[a][1]].append(a)
    for a in g.arrows:
        for b in into[arrows[a][0]]:
            if (a, b) not in comp:
                violations.append(
                    Violation(
                        ViolationKind.MISSING_COMPOSITE,
                        f"{a!r} o {b!r} is composable but undefined",
                        (a, b),
                    )
                )

    for x in g.units:
        e = g._identities.get(x)
        if e is None:
            violations.append(
                Violation(ViolationKind.MISSING_IDENTITY, f"object {x!r} has no identity", ())
            )
            continue
        for a in g.arrows:
            src, tgt = arrows[a]
            if (src == x and comp.get((a, e)) != a) or (tgt == x and comp.get((e, a)) != a):
                violations.append(
                    Violation(
                        ViolationKind.BAD_IDENTITY,
                        f"{e!r} does not act as the identity on {a!r}",
                        (e, a),
                    )
                )

    for a in g.arrows:
        for b in into[arrows[a][0]]:
            ab = comp.get((a, b))
            if ab is None or ab not in arrows:
                continue
            for c in into[arrows[b][0]]:
                bc = comp.get((b, c))
                left, right = comp.get((ab, c)), (comp.get((a, bc)) if bc is not None else None)
                if bc is not None and left is not None and right is not None and left != right:
                    violations.append(
                        Violation(
                            ViolationKind.NON_ASSOCIATIVE,
                            f"({a!r} o {b!r}) o {c!r} != {a!r} o ({b!r} o {c!r})",
                            (a, b, c),
                        )
                    )

    for a in g.arrows:
        b = inv.get(a)
        if b is None or b not in arrows:
            violations.append(
                Violation(ViolationKind.MISSING_INVERSE, f"{a!r} has no inverse", (a,))
            )
            continue
        src, tgt = arrows[a]
        if comp.get((b, a)) != g._identities.get(src) or comp.get((a, b)) != g._identities.get(
            tgt
        ):
            violations.append(
                Violation(
                    ViolationKind.BAD_INVERSE,
                    f"{b!r} is not a two-sided inverse of {a!r}",
                    (a, b),
                )
            )

    if violations:
        algebra_log.debug("groupoid %r has %s violation(s)", g, len(violations))
    return ValidationReport(tuple(violations))


class BPArrow(NamedTuple):
    """An arrow (p, n, q) of a boundary path groupoid, from q to p."""

    p: "BoundaryPathId"
    n: int
    q: "BoundaryPathId"

    def sort_key(self):
        return (canonical_key(self.p), self.n, canonical_key(self.q))

    @property
    def label(self) -> str:
        return f"({self.p.label}, {self.n}, {self.q.label})"

    def __repr__(self):
        return f"<BPArrow: {self.label}>"


def bp_arrow_valid(
    analysis: "BoundaryAnalysis", p: "BoundaryPathId", n: int, q: "BoundaryPathId"
) -> bool:
    """
    Whether (p, n, q) is an arrow of the boundary path groupoid.

    Sink orbits force n = |p| - |q|; a cycle orbit of cycle length l allows
    exactly the n congruent to phase(p) - phase(q) modulo l.

    Raises
    ------
    UnknownPath
        If ``p`` or ``q`` is not an enumerated boundary path of ``analysis``.
    """
    for path in (p, q):
        if not analysis.has_path(path):
            raise UnknownPath(f"{path!r} is not a boundary path of the graph")
    if isinstance(n, bool) or not isinstance(n, int):
        return False
    if analysis.orbit_index(p) != analysis.orbit_index(q):
        return False
    length = analysis.cycle_length(p)
    if length is None:
        return n == p.length - q.length
    return (n - (analysis.phase(p) - analysis.phase(q))) % length == 0


class BoundaryPathGroupoid(DiscreteGroupoid):
    """
    The boundary path groupoid of a finite graph with discrete boundary path space.

    Units are the canonical :class:`~groupalg.graph.BoundaryPathId` encodings,
    arrows are :class:`BPArrow` triples.
    """

    def __init__(self, analysis: "BoundaryAnalysis"):
        analysis.require_discrete()
        self.analysis = analysis

    def __repr__(self):
        return f"<BoundaryPathGroupoid: units={len(self.units)}>"

    def __eq__(self, other):
        if isinstance(other, BoundaryPathGroupoid):
            return self.analysis.graph == other.analysis.graph
        return NotImplemented

    def __hash__(self):
        return hash(self.analysis.graph)

    @property
    def units(self) -> Tuple["BoundaryPathId", ...]:
        return self.analysis.paths

    def is_unit(self, x) -> bool:
        return self.analysis.has_path(x)

    def is_arrow(self, a) -> bool:
        if not isinstance(a, BPArrow) or not (self.is_unit(a.p) and self.is_unit(a.q)):
            return False
        return bp_arrow_valid(self.analysis, a.p, a.n, a.q)

    def source(self, a):
        self.require_arrow(a)
        return a.q

    def target(self, a):
        self.require_arrow(a)
        return a.p

    def identity(self, x) -> BPArrow:
        self.require_unit(x)
        return BPArrow(x, 0, x)

    def compose(self, a: BPArrow, b: BPArrow) -> BPArrow:
        if a.q != b.p:
            raise NotComposable(f"d({a.label}) != r({b.label})")
        return BPArrow(a.p, a.n + b.n, b.q)

    def inverse(self, a: BPArrow) -> BPArrow:
        return BPArrow(a.q, -a.n, a.p)

    def orbits(self) -> List[Orbit]:
        return [
            Orbit(o.members[0], o.members, o.kind) for o in self.analysis.orbits
        ]

    def isotropy(self, x) -> GroupDescriptor:
        self.require_unit(x)
        if self.analysis.cycle_length(x) is None:
            return GroupDescriptor.trivial()
        return GroupDescriptor.infinite_cyclic()

    def arrows_between(self, x, y, bound: Optional[int] = None) -> List[BPArrow]:
        """
        Arrows from ``x`` to ``y`` with ``|n| <= bound``.

        ``bound`` may only be omitted for sink orbits, whose hom-sets are singletons.
        """
        self.require_unit(x)
        self.require_unit(y)
        if self.analysis.orbit_index(x) != self.analysis.orbit_index(y):
            return []
        length = self.analysis.cycle_length(x)
        if length is None:
            n = y.length - x.length
            return [BPArrow(y, n, x)] if bound is None or abs(n) <= bound else []
        if bound is None:
            raise GroupoidException("cycle orbits have infinite hom-sets; pass a bound")
        return [
            BPArrow(y, n, x)
            for n in range(-bound, bound + 1)
            if bp_arrow_valid(self.analysis, y, n, x)
        ]

    def transversal_shift(self, u) -> int:
        """
        The n of the canonical arrow (u, n, x) from the orbit representative x to u.

        Sink orbits force n = |u| - |x|; cycle orbits use the least admissible n >= 0.
        """
        orbit = self.analysis.orbits[self.analysis.orbit_index(u)]
        x = orbit.members[0]
        length = self.analysis.cycle_length(u)
        if length is None:
            return u.length - x.length
        return (self.analysis.phase(u) - self.analysis.phase(x)) % length


def orbits(g: DiscreteGroupoid) -> List[Orbit]:
    """The orbits of ``g`` ordered by representative, the smallest unit of each orbit."""
    return g.orbits()


def isotropy(g: DiscreteGroupoid, x) -> GroupDescriptor:
    """
    The isotropy group at the unit ``x``.

    Raises
    ------
    UnknownUnit
        If ``x`` is not a unit of ``g``.
    """
    return g.isotropy(x)


def is_invariant(g: DiscreteGroupoid, units: Iterable) -> bool:
    """Whether ``units`` is invariant, that is a union of orbits."""
    subset = set(units)
    for x in subset:
        g.require_unit(x)
    return all(
        set(orbit.members) <= subset or not (set(orbit.members) & subset)
        for orbit in g.orbits()
    )


def compose(g: DiscreteGroupoid, a, b):
    """
    The composite of ``a`` after ``b`` in ``g``.

    Raises
    ------
    NotComposable
        If d(a) != r(b).
    """
    g.require_arrow(a)
    g.require_arrow(b)
    return g.compose(a, b)


def restrict(g: FiniteGroupoid, units: Iterable) -> FiniteGroupoid:
    """The reduction of ``g`` to the arrows with source and target in ``units``."""
    if not isinstance(g, FiniteGroupoid):
        raise GroupoidException("only explicit groupoids can be restricted to a table")
    subset = set(units)
    for x in subset:
        g.require_unit(x)
    kept = [a for a in g.arrows if g.source(a) in subset and g.target(a) in subset]
    kept_set = set(kept)
    return FiniteGroupoid(
        subset,
        [(a, g.source(a), g.target(a)) for a in kept],
        [(a, b, c) for (a, b), c in g._compose.items() if a in kept_set and b in kept_set],
        [(a, g.inverse(a)) for a in kept],
    )


def _scalar_id(value, position: str):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise GroupoidParseError("ids must be strings or integers", position)
    return value


def load_groupoid(text: str) -> FiniteGroupoid:
    """
    Parses a groupoid JSON document without validating the groupoid axioms.

    Call :func:`validate` on the result, or rebuild it with ``check=True``.

    Raises
    ------
    GroupoidParseError
        If the document is not JSON or does not follow the groupoid schema.
    """
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupoidParseError(exc.msg, f"{exc.lineno}:{exc.colno}") from exc
    if not isinstance(document, dict):
        raise GroupoidParseError("expected an object", "$")
    for key in ("objects", "arrows", "compose", "inverse"):
        if not isinstance(document.get(key), list):
            raise GroupoidParseError("expected a list", key)
    objects = [_scalar_id(x, f"objects[{i}]") for i, x in enumerate(document["objects"])]
    arrows = []
    for i, entry in enumerate(document["arrows"]):
        if not isinstance(entry, dict) or not {"id", "src", "tgt"} <= entry.keys():
            raise GroupoidParseError("expected {id, src, tgt}", f"arrows[{i}]")
        arrows.append(
            tuple(_scalar_id(entry[k], f"arrows[{i}].{k}") for k in ("id", "src", "tgt"))
        )
    compositions = []
    for i, entry in enumerate(document["compose"]):
        if not isinstance(entry, list) or len(entry) != 3:
            raise GroupoidParseError("expected [a, b, composite]", f"compose[{i}]")
        compositions.append(tuple(_scalar_id(x, f"compose[{i}]") for x in entry))
    inverses = []
    for i, entry in enumerate(document["inverse"]):
        if not isinstance(entry, list) or len(entry) != 2:
            raise GroupoidParseError("expected [a, inverse]", f"inverse[{i}]")
        inverses.append(tuple(_scalar_id(x, f"inverse[{i}]") for x in entry))
    return FiniteGroupoid(objects, arrows, compositions, inverses, check=False)


def group_groupoid(group: GroupDescriptor, obj: Hashable = 0) -> FiniteGroupoid:
    """A finite group as a one-object groupoid; arrow ids are ``"<obj>:g<k>"``."""
    names = [f"{obj}:g{k}" for k in group.elements()]
    return FiniteGroupoid(
        [obj],
        [(name, obj, obj) for name in names],
        [
            (names[a], names[b], names[group.mul(a, b)])
            for a, b in itertools.product(group.elements(), repeat=2)
        ],
        [(names[a], names[group.inverse(a)]) for a in group.elements()],
    )


def pair_group_groupoid(objects: Sequence[Hashable], group: GroupDescriptor) -> FiniteGroupoid:
    """
    The pair groupoid on ``objects`` times a finite group.

    Arrow ``"<y><-<x>:g<k>"`` goes from ``x`` to ``y``.
    """

    def name(y, x, k):
        return f"{y}<-{x}:g{k}"

    objects = list(objects)
    elements = list(group.elements())
    return FiniteGroupoid(
        objects,
        [(name(y, x, k), x, y) for x in objects for y in objects for k in elements],
        [
            (name(z, y, k), name(y, x, m), name(z, x, group.mul(k, m)))
            for x, y, z in itertools.product(objects, repeat=3)
            for k, m in itertools.product(elements, repeat=2)
        ],
        [
            (name(y, x, k), name(x, y, group.inverse(k)))
            for x in objects
            for y in objects
            for k in elements
        ],
    )


def pair_groupoid(objects: Sequence[Hashable]) -> FiniteGroupoid:
    """The pair groupoid: exactly one arrow ``"<y><-<x>"`` from each object x to each y."""
    objects = list(objects)
    return FiniteGroupoid(
        objects,
        [(f"{y}<-{x}", x, y) for x in objects for y in objects],
        [
            (f"{z}<-{y}", f"{y}<-{x}", f"{z}<-{x}")
            for x, y, z in itertools.product(objects, repeat=3)
        ],
        [(f"{y}<-{x}", f"{x}<-{y}") for x in objects for y in objects],
    )


def disjoint_union(*groupoids: FiniteGroupoid) -> FiniteGroupoid:
    """
    Juxtaposes explicit groupoids with pairwise disjoint object and arrow ids.

    Raises
    ------
    GroupoidException
        If two of the groupoids share an object or arrow id.
    """
    objects, arrows, compositions, inverses = [], [], [], []
    for g in groupoids:
        if set(objects) & set(g.units) or {a for a, _, _ in arrows} & set(g.arrows):
            raise GroupoidException("disjoint_union needs disjoint object and arrow ids")
        objects.extend(g.units)
        arrows.extend((a, g.source(a), g.target(a)) for a in g.arrows)
        compositions.extend((a, b, c) for (a, b), c in g._compose.items())
        inverses.extend((a, g.inverse(a)) for a in g.arrows)
    return FiniteGroupoid(objects, arrows, compositions, inverses)
