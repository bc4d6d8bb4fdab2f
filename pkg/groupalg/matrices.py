"""
Finitely supported matrices, the orbit-wise matrix decomposition of a
groupoid algebra, and the finite ideal and submodule oracles.
"""
from __future__ import annotations

import itertools
from collections import deque
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    List,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from .convolution import ConvElement, delta, encode_arrow, involute
from .enums import Direction
from .errors import (
    GroupAlgException,
    GroupoidException,
    IndexMismatch,
    IndexNotInSet,
    MatrixException,
)
from .groupoid import BoundaryPathGroupoid, BPArrow, DiscreteGroupoid, FiniteGroupoid
from .log import algebra_log
from .rings import GroupDescriptor, RingDescriptor, group_ring, require_commutative
from .utils import SparseMap, canonical_key, sorted_canonical

__all__ = [
    "DEFAULT_BOUND",
    "MAX_ORACLE_INDEX",
    "FinSuppMatrix",
    "matrix_mul",
    "OrbitChart",
    "DecompositionIso",
    "build_iso",
    "iso_map",
    "CheckResult",
    "VerificationReport",
    "verify_iso",
    "left_ideals",
    "right_ideals",
    "OracleReport",
    "column_submodule_check",
    "row_submodule_check",
]

DEFAULT_BOUND = 3
MAX_ORACLE_INDEX = 3


class FinSuppMatrix:
    """
    A square matrix over ``ring`` indexed by ``index_set`` with finitely many nonzero entries.

    Raises
    ------
    IndexNotInSet
        If an entry index is not in ``index_set``.
    RingMismatch
        If an entry is not an element of ``ring``.
    """

    __slots__ = ("ring", "index_set", "entries", "_indices")

    def __init__(
        self,
        ring: RingDescriptor,
        index_set: Iterable[Hashable],
        entries: Union[Mapping, Iterable] = (),
    ):
        self.ring = ring
        self.index_set = tuple(sorted_canonical(set(index_set)))
        self._indices = frozenset(self.index_set)
        items = entries.items() if isinstance(entries, Mapping) else entries
        kept = {}
        for (i, j), value in items:
            for index in (i, j):
                if index not in self._indices:
                    raise IndexNotInSet(f"{index!r} is not in the index set")
            ring.check(value)
            if not ring.is_zero(value):
                kept[(i, j)] = value
        self.entries = SparseMap(kept)

    @classmethod
    def _trusted(cls, ring, index_set: Tuple, entries: Dict) -> FinSuppMatrix:
        matrix = cls.__new__(cls)
        matrix.ring = ring
        matrix.index_set = index_set
        matrix._indices = frozenset(index_set)
        matrix.entries = SparseMap({k: v for k, v in entries.items() if not ring.is_zero(v)})
        return matrix

    @classmethod
    def unit(cls, ring: RingDescriptor, index_set: Iterable, i, j, value=None) -> FinSuppMatrix:
        """The matrix unit E_{i,j}, or ``value`` times it."""
        return cls(ring, index_set, {(i, j): ring.one() if value is None else value})

    @classmethod
    def zero(cls, ring: RingDescriptor, index_set: Iterable) -> FinSuppMatrix:
        return cls(ring, index_set)

    def __repr__(self):
        terms = ", ".join(
            f"({i!r}, {j!r}): {self.ring.render(v)}" for (i, j), v in self.entries.items()
        )
        return f"<FinSuppMatrix: ring={self.ring.spec}, entries={{{terms}}}>"

    def __eq__(self, other):
        if isinstance(other, FinSuppMatrix):
            return (
                self.ring == other.ring
                and self._indices == other._indices
                and self.entries == other.entries
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self._indices, self.entries))

    def __bool__(self):
        return bool(self.entries)

    def __getitem__(self, key):
        return self.entries.get(key, self.ring.zero())

    def __mul__(self, other: FinSuppMatrix) -> FinSuppMatrix:
        return matrix_mul(self, other)

    def __add__(self, other: FinSuppMatrix) -> FinSuppMatrix:
        return self.add(other)

    def __neg__(self) -> FinSuppMatrix:
        return self.neg()

    def _check(self, other: FinSuppMatrix) -> None:
        if self.ring != other.ring:
            raise IndexMismatch(f"matrices over {self.ring} and {other.ring}")
        if self._indices != other._indices:
            raise IndexMismatch("matrices over different index sets")

    def add(self, other: FinSuppMatrix) -> FinSuppMatrix:
        self._check(other)
        acc = dict(self.entries)
        for key, v in other.entries.items():
            acc[key] = self.ring.add(acc[key], v) if key in acc else v
        return FinSuppMatrix._trusted(self.ring, self.index_set, acc)

    def neg(self) -> FinSuppMatrix:
        return FinSuppMatrix._trusted(
            self.ring, self.index_set, {k: self.ring.neg(v) for k, v in self.entries.items()}
        )

    def scale(self, r) -> FinSuppMatrix:
        self.ring.check(r)
        return FinSuppMatrix._trusted(
            self.ring, self.index_set, {k: self.ring.mul(r, v) for k, v in self.entries.items()}
        )

    def transpose(self) -> FinSuppMatrix:
        return FinSuppMatrix._trusted(
            self.ring, self.index_set, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def star(self) -> FinSuppMatrix:
        """Transpose followed by the ring involution on every entry."""
        return FinSuppMatrix._trusted(
            self.ring,
            self.index_set,
            {(j, i): self.ring.involution(v) for (i, j), v in self.entries.items()},
        )

    def column(self, p) -> FinSuppMatrix:
        """The product with E_{p,p} on the right: only column ``p`` survives."""
        if p not in self._indices:
            raise IndexNotInSet(f"{p!r} is not in the index set")
        return FinSuppMatrix._trusted(
            self.ring, self.index_set, {k: v for k, v in self.entries.items() if k[1] == p}
        )

    def row(self, p) -> FinSuppMatrix:
        if p not in self._indices:
            raise IndexNotInSet(f"{p!r} is not in the index set")
        return FinSuppMatrix._trusted(
            self.ring, self.index_set, {k: v for k, v in self.entries.items() if k[0] == p}
        )

    def to_json(self) -> dict:
        return {
            "ring": self.ring.spec,
            "index_set": [_index_json(i) for i in self.index_set],
            "entries": [
                {"row": _index_json(i), "col": _index_json(j), "value": self.ring.encode(v)}
                for (i, j), v in self.entries.items()
            ],
        }


def _index_json(index):
    return getattr(index, "label", index)


def matrix_mul(a: FinSuppMatrix, b: FinSuppMatrix) -> FinSuppMatrix:
    """
    The matrix product of two finitely supported matrices.

    Raises
    ------
    IndexMismatch
        If the rings or index sets differ.
    """
    a._check(b)
    ring = a.ring
    rows_of_b: Dict[Hashable, List] = {}
    for (k, j), v in b.entries.items():
        rows_of_b.setdefault(k, []).append((j, v))
    acc: Dict[Tuple, Any] = {}
    for (i, k), u in a.entries.items():
        for j, v in rows_of_b.get(k, ()):
            term = ring.mul(u, v)
            acc[(i, j)] = ring.add(acc[(i, j)], term) if (i, j) in acc else term
    return FinSuppMatrix._trusted(ring, a.index_set, acc)


class OrbitChart(NamedTuple):
    """
    The data identifying one orbit's corner with a matrix ring.

    Attributes
    ----------
    representative
        The smallest unit x of the orbit.
    members : Tuple
        The orbit, in canonical order; the matrix index set.
    transversal : Mapping
        Unit u to the arrow t_u from x to u; t_x is the identity.
    isotropy : GroupDescriptor
    target : RingDescriptor
        The group ring of the isotropy group over the coefficient ring.
    loops : Tuple
        Explicit groupoids only: the loops at x numbered like the isotropy group.
    cycle_length : Optional[int]
        Boundary path cycle orbits only: the length of the cycle.
    """

    representative: Hashable
    members: Tuple[Hashable, ...]
    transversal: Mapping
    isotropy: GroupDescriptor
    target: RingDescriptor
    loops: Tuple[Hashable, ...] = ()
    cycle_length: Optional[int] = None


class DecompositionIso:
    """
    The isomorphism of a groupoid algebra with the direct sum over orbits of
    matrix rings over the isotropy group rings.
    """

    def __init__(
        self, groupoid: DiscreteGroupoid, ring: RingDescriptor, charts: Sequence[OrbitChart]
    ):
        self.groupoid = groupoid
        self.ring = ring
        self.charts = tuple(charts)
        self._orbit_of = {u: i for i, chart in enumerate(self.charts) for u in chart.members}

    def __repr__(self):
        sizes = ", ".join(f"M{len(c.members)}({c.target.spec})" for c in self.charts)
        return f"<DecompositionIso: {sizes or '0'}>"

    def replace_transversal(self, unit, arrow) -> DecompositionIso:
        """A copy with t_unit replaced by ``arrow``, without any consistency checks."""
        index = self._orbit_of[unit]
        charts = list(self.charts)
        transversal = dict(charts[index].transversal)
        transversal[unit] = arrow
        charts[index] = charts[index]._replace(transversal=transversal)
        return DecompositionIso(self.groupoid, self.ring, charts)

    def zero_matrix(self, index: int) -> FinSuppMatrix:
        chart = self.charts[index]
        return FinSuppMatrix._trusted(chart.target, chart.members, {})

    def _phi(self, chart: OrbitChart, loop, coeff):
        """The isotropy loop ``loop`` at x, times ``coeff``, as a target ring element."""
        if chart.target == self.ring:
            if not self.groupoid.is_identity(loop):
                raise GroupoidException(
                    f"{loop!r} is not the identity at {chart.representative!r}"
                )
            return coeff
        if chart.cycle_length is not None:
            if loop.p != chart.representative or loop.q != chart.representative:
                raise GroupoidException(f"{loop!r} is not a loop at the representative")
            return chart.target.monomial(loop.n // chart.cycle_length, coeff)
        try:
            k = chart.loops.index(loop)
        except ValueError:
            raise GroupoidException(
                f"{loop!r} is not in the isotropy group at {chart.representative!r}"
            ) from None
        return chart.target.monomial(k, coeff)

    def _psi(self, chart: OrbitChart, key):
        """The loop at x for a basis key of the target ring."""
        if chart.cycle_length is not None:
            x = chart.representative
            return BPArrow(x, key * chart.cycle_length, x)
        return chart.loops[key]

    def forward(self, f: ConvElement) -> Dict[int, FinSuppMatrix]:
        if f.ring != self.ring or not (f.groupoid is self.groupoid or f.groupoid == self.groupoid):
            raise IndexMismatch("element is not over the groupoid and ring of the isomorphism")
        g = self.groupoid
        acc: Dict[int, Dict[Tuple, Any]] = {}
        for arrow, coeff in f.coeffs.items():
            u, v = g.source(arrow), g.target(arrow)
            index = self._orbit_of[u]
            chart = self.charts[index]
            t_u, t_v = chart.transversal[u], chart.transversal[v]
            loop = g.compose(g.inverse(t_v), g.compose(arrow, t_u))
            value = self._phi(chart, loop, coeff)
            entries = acc.setdefault(index, {})
            entries[(v, u)] = (
                chart.target.add(entries[(v, u)], value) if (v, u) in entries else value
            )
        out = {}
        for index, entries in sorted(acc.items()):
            chart = self.charts[index]
            matrix = FinSuppMatrix._trusted(chart.target, chart.members, entries)
            if matrix:
                out[index] = matrix
        return out

    def backward(self, matrices: Mapping[int, FinSuppMatrix]) -> ConvElement:
        g = self.groupoid
        acc: Dict[Any, Any] = {}
        for index, matrix in matrices.items():
            chart = self.charts[index]
            if matrix.ring != chart.target or set(matrix.index_set) != set(chart.members):
                raise IndexMismatch(f"matrix does not match orbit {index}")
            for (v, u), value in matrix.entries.items():
                t_u, t_v = chart.transversal[u], chart.transversal[v]
                if chart.target == self.ring:
                    terms = [(g.identity(chart.representative), value)]
                else:
                    terms = [(self._psi(chart, key), c) for key, c in value.items()]
                for loop, c in terms:
                    arrow = g.compose(t_v, g.compose(loop, g.inverse(t_u)))
                    acc[arrow] = self.ring.add(acc[arrow], c) if arrow in acc else c
        return ConvElement._trusted(self.ring, g, acc)

    def basis(self, bound: int = DEFAULT_BOUND) -> List:
        """Every arrow of an explicit groupoid, or every boundary arrow with |n| <= bound."""
        g = self.groupoid
        if isinstance(g, FiniteGroupoid):
            return list(g.arrows)
        arrows = []
        for chart in self.charts:
            for v, u in itertools.product(chart.members, repeat=2):
                arrows.extend(g.arrows_between(u, v, bound))
        return sorted_canonical(arrows)

    def to_json(self) -> dict:
        return {
            "ring": self.ring.spec,
            "orbits": [
                {
                    "representative": _index_json(c.representative),
                    "size": len(c.members),
                    "members": [_index_json(u) for u in c.members],
                    "transversal": {
                        str(_index_json(u)): encode_arrow(c.transversal[u]) for u in c.members
                    },
                    "isotropy": c.isotropy.label,
                    "ring": c.target.spec,
                }
                for c in self.charts
            ],
        }


def build_iso(g: DiscreteGroupoid, ring: RingDescriptor) -> DecompositionIso:
    """
    Builds the orbit-wise decomposition isomorphism.

    Transversals are deterministic: the smallest arrow id from x to u for
    explicit groupoids, the least admissible n >= 0 for boundary path groupoids.
    The positive generator of a cycle orbit's isotropy, once around the cycle,
    maps to x.
    """
    require_commutative(ring)
    charts = []
    for orbit in g.orbits():
        x = orbit.representative
        isotropy = g.isotropy(x)
        target = group_ring(ring, isotropy)
        if isinstance(g, BoundaryPathGroupoid):
            transversal = {u: BPArrow(u, g.transversal_shift(u), x) for u in orbit.members}
            length = g.analysis.cycle_length(x)
            charts.append(OrbitChart(x, orbit.members, transversal, isotropy, target, (), length))
        else:
            transversal = {
                u: g.identity(x) if u == x else g.arrows_between(x, u)[0] for u in orbit.members
            }
            loops = g.isotropy_elements(x)
            charts.append(OrbitChart(x, orbit.members, transversal, isotropy, target, loops))
    iso = DecompositionIso(g, ring, charts)
    algebra_log.debug("built %r", iso)
    return iso


def iso_map(
    iso: DecompositionIso,
    f: Union[ConvElement, Mapping[int, FinSuppMatrix]],
    direction: Direction = Direction.FORWARD,
) -> Union[Dict[int, FinSuppMatrix], ConvElement]:
    """
    Applies the decomposition isomorphism.

    Forward, delta_g for g from u to v in orbit i goes to E_{v,u} times the
    image of t_v^-1 g t_u in the isotropy group ring; the result maps orbit
    indices to matrices, omitting zero matrices. Backward inverts this.

    Raises
    ------
    UnknownArrow
        If an arrow is outside the groupoid.
    IndexMismatch
        If the input is over another groupoid, ring or orbit index set.
    """
    if Direction(direction) is Direction.FORWARD:
        return iso.forward(f)
    return iso.backward(f)


class CheckResult(NamedTuple):
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "counterexample": self.counterexample,
        }


class VerificationReport(NamedTuple):
    ring: str
    bound: int
    basis_size: int
    checks: Dict[str, CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks.values())

    @property
    def failures(self) -> List[str]:
        return [name for name, c in self.checks.items() if not c.passed]

    def to_json(self) -> dict:
        return {
            "ring": self.ring,
            "bound": self.bound,
            "basis_size": self.basis_size,
            "passed": self.passed,
            "checks": {name: c.to_json() for name, c in self.checks.items()},
        }


def _label(arrow) -> str:
    return getattr(arrow, "label", repr(arrow))


def _run_check(name: str, cases: Iterable, test: Callable[[Any], bool]) -> CheckResult:
    checked = 0
    for case in cases:
        checked += 1
        try:
            ok = test(case)
            problem = "images differ"
        except GroupAlgException as exc:
            ok = False
            problem = f"{type(exc).__name__}: {exc}"
        if not ok:
            labels = case if isinstance(case, tuple) else (case,)
            detail = f"{', '.join(_label(a) for a in labels)}: {problem}"
            algebra_log.debug("verification check %s failed at %s", name, detail)
            return CheckResult(False, checked, detail)
    return CheckResult(True, checked)


def _target_basis(iso: DecompositionIso, bound: int) -> List[Tuple[int, Any, Any, Any]]:
    out = []
    for index, chart in enumerate(iso.charts):
        if chart.target == iso.ring:
            keys = [None]
        elif chart.cycle_length is not None:
            keys = range(-bound, bound + 1)
        else:
            keys = list(chart.isotropy.elements())
        for v, u in itertools.product(chart.members, repeat=2):
            for key in keys:
                out.append((index, v, u, key))
    return out


def verify_iso(iso: DecompositionIso, bound: int = DEFAULT_BOUND) -> VerificationReport:
    """
    Checks the decomposition isomorphism exhaustively on basis arrows.

    Boundary path arrows are limited to |n| <= ``bound``. Four checks run:
    ``bijective`` (distinct basis images, every target matrix unit reached),
    ``multiplicative`` (every pair of basis arrows), ``involution``
    (delta_{g^-1} maps to the conjugate transpose) and ``round_trip``
    (backward after forward is the identity).
    """
    if bound < 1:
        raise MatrixException("bound must be at least 1")
    g, ring = iso.groupoid, iso.ring
    basis = iso.basis(bound)
    one = ring.one()

    def image(arrow):
        return iso.forward(delta(g, ring, arrow))

    def product(left: Dict, right: Dict) -> Dict:
        out = {}
        for index in set(left) & set(right):
            m = matrix_mul(left[index], right[index])
            if m:
                out[index] = m
        return out

    def injective(_):
        images = [tuple(sorted(image(a).items())) for a in basis]
        return len(set(images)) == len(images) and all(images)

    def reached(case):
        index, v, u, key = case
        chart = iso.charts[index]
        value = one if key is None else chart.target.monomial(key, one)
        unit = {index: FinSuppMatrix._trusted(chart.target, chart.members, {(v, u): value})}
        return iso.forward(iso.backward(unit)) == unit

    def multiplicative(pair):
        a, b = pair
        left = delta(g, ring, a) * delta(g, ring, b)
        return iso.forward(left) == product(image(a), image(b))

    def involutive(arrow):
        star = {i: m.star() for i, m in image(arrow).items()}
        return iso.forward(involute(delta(g, ring, arrow))) == star

    def round_trip(arrow):
        f = delta(g, ring, arrow)
        return iso.backward(iso.forward(f)) == f

    targets = _target_basis(iso, bound)
    injectivity = _run_check("bijective", [()], injective)
    checks = {
        "bijective": injectivity
        if not injectivity.passed
        else _run_check("bijective", targets, reached)._replace(
            checked=len(basis) + len(targets)
        ),
        "multiplicative": _run_check(
            "multiplicative", itertools.product(basis, repeat=2), multiplicative
        ),
        "involution": _run_check("involution", basis, involutive),
        "round_trip": _run_check("round_trip", basis, round_trip),
    }
    report = VerificationReport(ring.spec, bound, len(basis), checks)
    algebra_log.verbose("verified %r: %s", iso, "passed" if report.passed else report.failures)
    return report


def _extend(members: FrozenSet, g, add: Callable, zero) -> FrozenSet:
    """``members`` plus the cyclic subgroup generated by ``g``."""
    multiples = [zero]
    m = g
    while m != zero:
        multiples.append(m)
        m = add(m, g)
    return frozenset(add(x, c) for x in members for c in multiples)


def _generated(seed: Iterable, add: Callable, actions: Sequence[Callable], zero) -> FrozenSet:
    """The smallest subset containing ``seed`` closed under addition and ``actions``."""
    members = frozenset((zero,))
    queue = []
    for s in seed:
        if s not in members:
            members = _extend(members, s, add, zero)
            queue.append(s)
    # the queued elements generate members; each one's images must land inside
    while queue:
        s = queue.pop()
        for act in actions:
            t = act(s)
            if t not in members:
                members = _extend(members, t, add, zero)
                queue.append(t)
    return members


def _lattice(
    elements: Sequence, add: Callable, actions: Sequence[Callable], zero
) -> List[FrozenSet]:
    """Every subset closed under addition and ``actions``, as sums of cyclic ones."""
    cyclic = {_generated((a,), add, actions, zero) for a in elements}
    start = frozenset((zero,))
    found = {start}
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for c in cyclic:
            if c <= current:
                continue
            bigger = frozenset(add(m, n) for m in current for n in c)
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
    return sorted(found, key=lambda s: (len(s), sorted(canonical_key(x) for x in s)))


def _ideals(ring: RingDescriptor, left: bool) -> List[FrozenSet]:
    elements = list(ring.elements())
    if left:
        actions = [lambda s, r=r: ring.mul(r, s) for r in elements]
    else:
        actions = [lambda s, r=r: ring.mul(s, r) for r in elements]
    return _lattice(elements, ring.add, actions, ring.zero())


def left_ideals(ring: RingDescriptor) -> List[FrozenSet]:
    """
    Every left ideal of a finite ring, smallest first.

    Raises
    ------
    InfiniteRing
    """
    return _ideals(ring, left=True)


def right_ideals(ring: RingDescriptor) -> List[FrozenSet]:
    """
    Every right ideal of a finite ring, smallest first.

    Raises
    ------
    InfiniteRing
    """
    return _ideals(ring, left=False)


class OracleReport(NamedTuple):
    """
    Submodules of a column (or row) space matched with the ideals of the ring.

    ``correspondence[i]`` is the index in ``ideals`` of the ideal whose
    column space is ``submodules[i]``, or None when there is none.
    """

    ring: str
    side: str
    index_set: Tuple
    p: Any
    ideals: List[FrozenSet]
    submodules: List[FrozenSet]
    correspondence: List[Optional[int]]
    bijective: bool
    inclusion_preserving: bool

    @property
    def passed(self) -> bool:
        return self.bijective and self.inclusion_preserving

    def to_json(self, ring: Optional[RingDescriptor] = None) -> dict:
        def encode(x):
            return ring.encode(x) if ring is not None else str(x)

        return {
            "ring": self.ring,
            "side": self.side,
            "index_set": list(self.index_set),
            "p": self.p,
            "ideal_count": len(self.ideals),
            "submodule_count": len(self.submodules),
            "ideals": [[encode(x) for x in sorted_canonical(i)] for i in self.ideals],
            "correspondence": list(self.correspondence),
            "bijective": self.bijective,
            "inclusion_preserving": self.inclusion_preserving,
            "passed": self.passed,
        }


def _submodule_check(ring: RingDescriptor, index_set: Sequence, p, side: str) -> OracleReport:
    index_set = list(index_set)
    if len(set(index_set)) != len(index_set):
        raise IndexMismatch("index set has repeated entries")
    if p not in index_set:
        raise IndexNotInSet(f"{p!r} is not in the index set {index_set!r}")
    if not 1 <= len(index_set) <= MAX_ORACLE_INDEX:
        raise MatrixException(f"the oracle supports index sets of size 1 to {MAX_ORACLE_INDEX}")
    elements = list(ring.elements())
    n, zero = len(index_set), ring.zero()

    def add(v, w):
        return tuple(ring.add(a, b) for a, b in zip(v, w))

    def matrix_unit_action(i, j, r):
        # (r E_{i,j}) v for columns, v (E_{j,i} r) for rows; either way slot i gets r*v_j or v_j*r
        def act(v):
            value = ring.mul(r, v[j]) if side == "column" else ring.mul(v[j], r)
            return tuple(value if k == i else zero for k in range(n))

        return act

    actions = [
        matrix_unit_action(i, j, r) for i in range(n) for j in range(n) for r in elements
    ]
    vectors = list(itertools.product(elements, repeat=n))
    submodules = _lattice(vectors, add, actions, tuple(zero for _ in range(n)))
    ideals = _ideals(ring, left=side == "column")

    correspondence: List[Optional[int]] = []
    for module in submodules:
        entries = frozenset(x for v in module for x in v)
        if entries in ideals and module == frozenset(itertools.product(entries, repeat=n)):
            correspondence.append(ideals.index(entries))
        else:
            correspondence.append(None)
    bijective = None not in correspondence and sorted(correspondence) == list(range(len(ideals)))
    inclusion_preserving = bijective and all(
        (submodules[a] <= submodules[b])
        == (ideals[correspondence[a]] <= ideals[correspondence[b]])
        for a, b in itertools.product(range(len(submodules)), repeat=2)
    )
    algebra_log.debug(
        "%s oracle over %s: %s submodules, %s ideals",
        side,
        ring.spec,
        len(submodules),
        len(ideals),
    )
    return OracleReport(
        ring.spec,
        side,
        tuple(index_set),
        p,
        ideals,
        submodules,
        correspondence,
        bijective,
        bool(inclusion_preserving),
    )


def column_submodule_check(ring: RingDescriptor, index_set: Sequence, p) -> OracleReport:
    """
    Matches the submodules of the column space M_J(S) E_{p,p} with the left ideals of S.

    Raises
    ------
    InfiniteRing
        If ``ring`` is infinite.
    IndexNotInSet
        If ``p`` is not in ``index_set``.
    """
    return _submodule_check(ring, index_set, p, "column")


def row_submodule_check(ring: RingDescriptor, index_set: Sequence, p) -> OracleReport:
    """
    Matches the right submodules of the row space E_{p,p} M_J(S) with the right ideals of S.

    Raises
    ------
    InfiniteRing
    IndexNotInSet
    """
    return _submodule_check(ring, index_set, p, "row")
