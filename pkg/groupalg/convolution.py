"""The convolution algebra of a discrete groupoid over a coefficient ring."""
from __future__ import annotations

from collections import defaultdict
from typing import Any, Dict, Iterable, Mapping, Optional, Sequence

from .errors import GroupoidException, GroupoidMismatch, NotABisection
from .groupoid import BPArrow, DiscreteGroupoid, FiniteGroupoid
from .log import algebra_log
from .rings import RingDescriptor, require_commutative
from .utils import SparseMap, sorted_canonical

__all__ = [
    "ConvElement",
    "convolve",
    "convolve_by_definition",
    "involute",
    "char_fn",
    "corner",
    "orbit_split",
    "add",
    "neg",
    "sub",
    "scale",
    "zero",
    "delta",
    "local_unit",
    "encode_arrow",
]


class ConvElement:
    """
    A finitely supported function from the arrows of ``groupoid`` to ``ring``.

    Parameters
    ----------
    ring : RingDescriptor
    groupoid : DiscreteGroupoid
    coeffs : Mapping
        Arrow to coefficient; zero coefficients are dropped.

    Raises
    ------
    UnknownArrow
        If a keyed arrow is not an arrow of ``groupoid``.
    RingMismatch
        If a coefficient is not an element of ``ring``.
    NoncommutativeCoefficients
        If ``ring`` is not commutative.
    """

    __slots__ = ("ring", "groupoid", "coeffs")

    def __init__(self, ring: RingDescriptor, groupoid: DiscreteGroupoid, coeffs: Mapping = ()):
        require_commutative(ring)
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        kept = {}
        for arrow, value in items:
            groupoid.require_arrow(arrow)
            ring.check(value)
            value = ring.canonical(value)
            if not ring.is_zero(value):
                kept[arrow] = value
        self.ring = ring
        self.groupoid = groupoid
        self.coeffs = SparseMap(kept)

    @classmethod
    def _trusted(cls, ring, groupoid, coeffs: Dict) -> ConvElement:
        element = cls.__new__(cls)
        element.ring = ring
        element.groupoid = groupoid
        element.coeffs = SparseMap({a: v for a, v in coeffs.items() if not ring.is_zero(v)})
        return element

    def __repr__(self):
        terms = " + ".join(
            f"{self.ring.render(v)}·δ[{_arrow_label(a)}]" for a, v in self.coeffs.items()
        )
        return f"<ConvElement: {terms or '0'}>"

    def __eq__(self, other):
        if isinstance(other, ConvElement):
            return (
                self.ring == other.ring
                and _same_groupoid(self.groupoid, other.groupoid)
                and self.coeffs == other.coeffs
            )
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __add__(self, other: ConvElement) -> ConvElement:
        return add(self, other)

    def __sub__(self, other: ConvElement) -> ConvElement:
        return sub(self, other)

    def __neg__(self) -> ConvElement:
        return neg(self)

    def __mul__(self, other: ConvElement) -> ConvElement:
        return convolve(self, other)

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def support(self) -> tuple:
        return tuple(self.coeffs)

    def __getitem__(self, arrow):
        return self.coeffs.get(arrow, self.ring.zero())

    def to_json(self) -> dict:
        return {
            "ring": self.ring.spec,
            "terms": [
                {"arrow": encode_arrow(a), "coefficient": self.ring.encode(v)}
                for a, v in self.coeffs.items()
            ],
        }


def _arrow_label(arrow) -> str:
    return arrow.label if isinstance(arrow, BPArrow) else str(arrow)


def encode_arrow(arrow) -> Any:
    if isinstance(arrow, BPArrow):
        return {"p": arrow.p.label, "n": arrow.n, "q": arrow.q.label}
    return arrow


def _same_groupoid(a: DiscreteGroupoid, b: DiscreteGroupoid) -> bool:
    return a is b or a == b


def _check_compatible(f: ConvElement, g: ConvElement) -> None:
    if f.ring != g.ring:
        raise GroupoidMismatch(f"elements over {f.ring} and {g.ring}")
    if not _same_groupoid(f.groupoid, g.groupoid):
        raise GroupoidMismatch(f"elements over {f.groupoid!r} and {g.groupoid!r}")


def convolve(f: ConvElement, g: ConvElement) -> ConvElement:
    """
    The convolution product f * g.

    Every pair (a, b) from the two supports with d(a) = r(b) contributes
    f(a) g(b) at the composite ab.

    Raises
    ------
    GroupoidMismatch
        If the elements live over different rings or groupoids.
    """
    _check_compatible(f, g)
    ring, groupoid = f.ring, f.groupoid
    by_target = defaultdict(list)
    for b, value in g.coeffs.items():
        by_target[groupoid.target(b)].append((b, value))
    acc: Dict[Any, Any] = {}
    for a, fa in f.coeffs.items():
        for b, gb in by_target.get(groupoid.source(a), ()):
            c = groupoid.compose(a, b)
            term = ring.mul(fa, gb)
            acc[c] = ring.add(acc[c], term) if c in acc else term
    return ConvElement._trusted(ring, groupoid, acc)


def convolve_by_definition(f: ConvElement, g: ConvElement) -> ConvElement:
    """
    Evaluates (f * g)(x) as the sum over h with d(h) = d(x) of f(x h^-1) g(h).

    Only explicit groupoids have the finite arrow set this needs.
    """
    _check_compatible(f, g)
    groupoid = f.groupoid
    if not isinstance(groupoid, FiniteGroupoid):
        raise GroupoidException("convolution by definition needs an explicit groupoid")
    ring = f.ring
    acc = {}
    for x in groupoid.arrows:
        total = ring.zero()
        for h in groupoid.arrows:
            if groupoid.source(h) == groupoid.source(x):
                xh = groupoid.compose(x, groupoid.inverse(h))
                total = ring.add(total, ring.mul(f[xh], g[h]))
        acc[x] = total
    return ConvElement._trusted(ring, groupoid, acc)


def involute(f: ConvElement) -> ConvElement:
    """f*(a) = f(a^-1)."""
    return ConvElement._trusted(
        f.ring, f.groupoid, {f.groupoid.inverse(a): v for a, v in f.coeffs.items()}
    )


def char_fn(g: DiscreteGroupoid, ring: RingDescriptor, arrows: Iterable) -> ConvElement:
    """
    The characteristic function of a bisection.

    Raises
    ------
    NotABisection
        Naming two arrows with a common source or a common target.
    """
    require_commutative(ring)
    seen_source, seen_target = {}, {}
    arrows = sorted_canonical(set(arrows))
    for a in arrows:
        g.require_arrow(a)
        for seen, end, word in (
            (seen_source, g.source(a), "source"),
            (seen_target, g.target(a), "target"),
        ):
            if end in seen:
                raise NotABisection(
                    f"{_arrow_label(seen[end])} and {_arrow_label(a)} share the {word} {end!r}"
                )
            seen[end] = a
    one = ring.one()
    return ConvElement._trusted(ring, g, {a: one for a in arrows})


def _unit_set(g: DiscreteGroupoid, units: Iterable) -> frozenset:
    units = frozenset(units)
    for x in units:
        g.require_unit(x)
    return units


def corner(f: ConvElement, units: Iterable) -> ConvElement:
    """
    chi_U * f * chi_U: the part of ``f`` supported on arrows with source and target in U.

    Raises
    ------
    UnknownUnit
    """
    groupoid = f.groupoid
    units = _unit_set(groupoid, units)
    return ConvElement._trusted(
        f.ring,
        groupoid,
        {
            a: v
            for a, v in f.coeffs.items()
            if groupoid.source(a) in units and groupoid.target(a) in units
        },
    )


def orbit_split(f: ConvElement) -> Dict[int, ConvElement]:
    """
    Splits ``f`` along the orbit partition.

    Returns
    -------
    Dict[int, ConvElement]
        Orbit index (position in ``groupoid.orbits()``) to the restriction of
        ``f``; orbits where ``f`` vanishes are left out.
    """
    groupoid = f.groupoid
    parts: Dict[int, Dict] = defaultdict(dict)
    for a, v in f.coeffs.items():
        parts[groupoid.orbit_index(groupoid.source(a))][a] = v
    return {
        index: ConvElement._trusted(f.ring, groupoid, coeffs)
        for index, coeffs in sorted(parts.items())
    }


def zero(g: DiscreteGroupoid, ring: RingDescriptor) -> ConvElement:
    require_commutative(ring)
    return ConvElement._trusted(ring, g, {})


def delta(
    g: DiscreteGroupoid, ring: RingDescriptor, arrow, coeff: Optional[Any] = None
) -> ConvElement:
    """The point mass ``coeff`` times delta at ``arrow``; ``coeff`` defaults to 1."""
    return ConvElement(ring, g, {arrow: ring.one() if coeff is None else coeff})


def add(f: ConvElement, g: ConvElement) -> ConvElement:
    _check_compatible(f, g)
    ring = f.ring
    acc = dict(f.coeffs)
    for a, v in g.coeffs.items():
        acc[a] = ring.add(acc[a], v) if a in acc else v
    return ConvElement._trusted(ring, f.groupoid, acc)


def neg(f: ConvElement) -> ConvElement:
    return ConvElement._trusted(
        f.ring, f.groupoid, {a: f.ring.neg(v) for a, v in f.coeffs.items()}
    )


def sub(f: ConvElement, g: ConvElement) -> ConvElement:
    return add(f, neg(g))


def scale(r, f: ConvElement) -> ConvElement:
    """Left multiplication by the ring element ``r``."""
    f.ring.check(r)
    return ConvElement._trusted(
        f.ring, f.groupoid, {a: f.ring.mul(r, v) for a, v in f.coeffs.items()}
    )


def local_unit(
    g: DiscreteGroupoid, ring: RingDescriptor, elements: Sequence[ConvElement]
) -> ConvElement:
    """
    An idempotent chi_U with e * f = f * e = f for every f in ``elements``.

    U collects the sources and targets of all supports.
    """
    units = set()
    for f in elements:
        if f.ring != ring or not _same_groupoid(f.groupoid, g):
            raise GroupoidMismatch("local_unit needs elements over the given groupoid and ring")
        for a in f.coeffs:
            units.add(g.source(a))
            units.add(g.target(a))
    e = char_fn(g, ring, (g.identity(x) for x in units))
    algebra_log.trace("local unit over %s unit(s)", len(units))
    return e
