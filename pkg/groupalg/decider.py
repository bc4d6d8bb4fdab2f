"""
Chain condition verdicts for groupoid algebras.

A groupoid algebra over R is categorically (equivalently, locally) noetherian
exactly when the groupoid is discrete and every isotropy group ring R G_x is
noetherian, and likewise for artinian. Left and right verdicts agree since the
algebra has an involution.
"""
from __future__ import annotations

from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .enums import OrbitKind, TriState
from .errors import InvalidGroupoid, UnknownUnit
from .graph import BoundaryAnalysis, Graph, Witness, analyze
from .groupoid import DiscreteGroupoid, FiniteGroupoid, validate
from .log import decide_log
from .rings import (
    ChainFlags,
    GroupDescriptor,
    RingDescriptor,
    group_ring,
    group_ring_flags,
    require_commutative,
)

__all__ = [
    "Reason",
    "Summand",
    "OrbitData",
    "ChainVerdict",
    "decide_orbits",
    "decide_groupoid",
    "decide_graph",
    "decide_corner",
]


class Reason(NamedTuple):
    """A rule application: ``rule`` is a stable tag, ``clause`` the condition it settles."""

    rule: str
    clause: str
    detail: str

    def to_json(self) -> dict:
        return {"rule": self.rule, "clause": self.clause, "detail": self.detail}

    def __str__(self):
        return f"[{self.rule}] {self.clause}: {self.detail}"


class Summand(NamedTuple):
    """One matrix ring M_size(ring) of the orbit decomposition."""

    kind: OrbitKind
    size: int
    isotropy: str
    ring: Optional[RingDescriptor] = None

    @property
    def ring_label(self) -> str:
        if self.ring is not None:
            return self.ring.spec
        if self.isotropy == "C1":
            return "R"
        if self.isotropy == "Cinf":
            return "R[x,x^-1]"
        return f"R[{self.isotropy}]"

    def __str__(self):
        return f"M{self.size}({self.ring_label})"

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "size": self.size, "ring": self.ring_label}


class OrbitData(NamedTuple):
    kind: OrbitKind
    size: int
    isotropy: GroupDescriptor


class ChainVerdict(NamedTuple):
    categorically_noetherian: TriState
    categorically_artinian: TriState
    locally_noetherian: TriState
    locally_artinian: TriState
    reasons: Tuple[Reason, ...]
    decomposition: Optional[Tuple[Summand, ...]]
    witness: Optional[Witness] = None

    @property
    def noetherian(self) -> TriState:
        return self.categorically_noetherian

    @property
    def artinian(self) -> TriState:
        return self.categorically_artinian

    def describe(self) -> str:
        lines = [
            f"noetherian: {self.noetherian.value}",
            f"artinian: {self.artinian.value}",
        ]
        if self.decomposition is not None:
            summands = " + ".join(str(s) for s in self.decomposition) or "0"
            lines.append(f"decomposition: {summands}")
        if self.witness is not None:
            lines.append(f"witness: {self.witness.describe()}")
        lines.extend(f"  {reason}" for reason in self.reasons)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "noetherian": self.noetherian.value,
            "artinian": self.artinian.value,
            "categorically_noetherian": self.categorically_noetherian.value,
            "categorically_artinian": self.categorically_artinian.value,
            "locally_noetherian": self.locally_noetherian.value,
            "locally_artinian": self.locally_artinian.value,
            "decomposition": [s.to_json() for s in self.decomposition]
            if self.decomposition is not None
            else None,
            "witness": self.witness.describe() if self.witness is not None else None,
            "reasons": [r.to_json() for r in self.reasons],
        }


_SYMMETRY = Reason(
    "involution-symmetry",
    "left=right",
    "the involution f*(g) = f(g^-1) swaps left and right modules",
)
_LOCAL_UNITS = Reason(
    "local-units",
    "categorical=local",
    "with local units the categorical and local conditions coincide",
)


def _isotropy_reasons(isotropy: GroupDescriptor, flags: ChainFlags) -> List[Reason]:
    result = group_ring_flags(flags, isotropy)
    label = isotropy.label
    if isotropy.is_trivial:
        return [Reason("trivial-isotropy", "R G_x = R", f"flags {flags!r}")]
    return [
        Reason(
            "hall-noetherian",
            "noetherian",
            f"R[{label}] is noetherian: {result.noetherian.value} "
            f"(R noetherian: {flags.noetherian.value}, {label} polycyclic-by-finite)",
        ),
        Reason(
            "connell-artinian",
            "artinian",
            f"R[{label}] is artinian: {result.artinian.value} "
            f"(R artinian: {flags.artinian.value}, {label} finite: "
            f"{TriState.of(isotropy.is_finite).value})",
        ),
    ]


def _verdict(
    noetherian: TriState,
    artinian: TriState,
    reasons: Iterable[Reason],
    orbits: Sequence[OrbitData],
    ring: Optional[RingDescriptor],
    witness: Optional[Witness] = None,
) -> ChainVerdict:
    if ring is not None:
        require_commutative(ring)
    decomposition = None
    if noetherian is TriState.YES:
        decomposition = tuple(
            Summand(
                o.kind,
                o.size,
                o.isotropy.label,
                group_ring(ring, o.isotropy) if ring is not None else None,
            )
            for o in orbits
        )
    verdict = ChainVerdict(
        noetherian,
        artinian,
        noetherian,
        artinian,
        tuple(reasons) + (_SYMMETRY, _LOCAL_UNITS),
        decomposition,
        witness,
    )
    decide_log.debug("verdict noetherian=%s artinian=%s", noetherian.value, artinian.value)
    return verdict


def decide_orbits(
    orbits: Iterable[OrbitData], ring_flags: ChainFlags, *, ring: Optional[RingDescriptor] = None
) -> ChainVerdict:
    """
    The orbit-wise rule: every isotropy group ring must satisfy the condition.

    With no orbits both conditions hold vacuously.
    """
    orbits = list(orbits)
    noetherian = artinian = TriState.YES
    reasons: List[Reason] = []
    seen = set()
    for o in orbits:
        flags = group_ring_flags(ring_flags, o.isotropy)
        noetherian &= flags.noetherian
        artinian &= flags.artinian
        if o.isotropy not in seen:
            seen.add(o.isotropy)
            reasons.extend(_isotropy_reasons(o.isotropy, ring_flags))
    if not orbits:
        reasons.append(Reason("vacuous", "no orbits", "the zero algebra satisfies both"))
    return _verdict(noetherian, artinian, reasons, orbits, ring)


def _orbit_data(g: DiscreteGroupoid) -> List[OrbitData]:
    return [
        OrbitData(orbit.kind, orbit.size, g.isotropy(orbit.representative))
        for orbit in g.orbits()
    ]


def decide_groupoid(
    g: DiscreteGroupoid, ring_flags: ChainFlags, *, ring: Optional[RingDescriptor] = None
) -> ChainVerdict:
    """
    Decides the chain conditions for the algebra of a discrete groupoid.

    Explicit groupoids are finite, hence discrete; boundary path groupoids are
    discrete by construction.

    Raises
    ------
    InvalidGroupoid
        If an explicit groupoid fails validation.
    """
    if isinstance(g, FiniteGroupoid):
        report = validate(g)
        if not report.ok:
            raise InvalidGroupoid(report)
    verdict = decide_orbits(_orbit_data(g), ring_flags, ring=ring)
    clause = Reason(
        "discreteness:explicit-finite" if isinstance(g, FiniteGroupoid) else "discreteness:graph",
        "discrete",
        "finite groupoids carry the discrete topology"
        if isinstance(g, FiniteGroupoid)
        else "boundary path space checked discrete",
    )
    return verdict._replace(reasons=(clause,) + verdict.reasons)


def decide_graph(
    g: Graph, ring_flags: ChainFlags, *, ring: Optional[RingDescriptor] = None
) -> ChainVerdict:
    """
    Decides the chain conditions for the Leavitt path algebra of a finite graph.

    Noetherian exactly when R is noetherian, no vertex is an infinite emitter
    and no cycle has an exit. Artinian exactly when moreover R is artinian and
    the graph is acyclic.
    """
    analysis = g if isinstance(g, BoundaryAnalysis) else analyze(g)
    discrete = TriState.of(analysis.discrete)
    acyclic = TriState.of(analysis.acyclic)
    noetherian = ring_flags.noetherian & discrete
    artinian = ring_flags.artinian & discrete & acyclic
    emitters = sorted(map(str, analysis.graph.infinite_emitters))
    exits = analysis.witness is not None and analysis.witness.cycle is not None
    reasons = [
        Reason(
            "discreteness:no-infinite-emitters",
            "noetherian",
            f"infinite emitters: {', '.join(emitters) if emitters else 'none'}",
        ),
        Reason(
            "discreteness:cycles-without-exits",
            "noetherian",
            analysis.witness.describe() if exits else "no cycle has an exit",
        ),
        Reason(
            "discreteness:rays-vacuous",
            "noetherian",
            "a finite graph has no rays",
        ),
        Reason(
            "coefficient-noetherian",
            "noetherian",
            f"R is noetherian: {ring_flags.noetherian.value}",
        ),
        Reason(
            "acyclic-artinian",
            "artinian",
            f"acyclic: {acyclic.value}; R is artinian: {ring_flags.artinian.value}",
        ),
    ]
    orbits = [
        OrbitData(
            o.kind,
            o.size,
            GroupDescriptor.trivial()
            if o.kind is OrbitKind.SINK
            else GroupDescriptor.infinite_cyclic(),
        )
        for o in analysis.orbits
    ]
    decide_log.verbose("deciding %r with %r", analysis, ring_flags)
    return _verdict(noetherian, artinian, reasons, orbits, ring, analysis.witness)


def decide_corner(
    g: DiscreteGroupoid,
    units: Iterable,
    ring_flags: ChainFlags,
    *,
    ring: Optional[RingDescriptor] = None,
) -> ChainVerdict:
    """
    The chain conditions of the unital corner chi_U R G chi_U.

    The corner is the direct sum, over orbits meeting U, of matrix rings of
    size |U ∩ orbit| over the isotropy group rings.

    Raises
    ------
    UnknownUnit
    """
    units = set(units)
    for x in units:
        if not g.is_unit(x):
            raise UnknownUnit(f"{x!r} is not a unit of {g!r}")
    orbits = []
    for orbit in g.orbits():
        size = len(units.intersection(orbit.members))
        if size:
            orbits.append(OrbitData(orbit.kind, size, g.isotropy(orbit.representative)))
    verdict = decide_orbits(orbits, ring_flags, ring=ring)
    return verdict._replace(
        reasons=(Reason("corner", "unital", f"corner over {len(units)} unit(s)"),)
        + verdict.reasons
    )
