"""Coefficient rings, group rings and the chain-condition flag calculus.

Elements are plain immutable Python values:

* ``Z`` and ``Zmod:n`` elements are :class:`int` (residues kept in ``[0, n)``),
* ``Q`` elements are :class:`fractions.Fraction` (always reduced),
* Laurent and group ring elements are :class:`~groupalg.utils.SparseMap`
  from exponents / group element ids to base ring elements, never storing a zero.
"""
from __future__ import annotations

import itertools
from collections import namedtuple
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, NamedTuple, Optional, Tuple

from .enums import ArithOp, GroupKind, RingKind, TriState
from .errors import (
    InfiniteRing,
    InvalidGroupTable,
    InvalidRingSpec,
    NoncommutativeCoefficients,
    RingException,
    RingMismatch,
)
from .log import ring_log
from .utils import SparseMap

__all__ = [
    "MAX_ISOMORPHISM_ORDER",
    "GroupDescriptor",
    "RingDescriptor",
    "ChainFlags",
    "FIELD_FLAGS",
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
]

MAX_ISOMORPHISM_ORDER = 8


class GroupDescriptor(NamedTuple):
    """
    A finite group given by its multiplication table, or the infinite cyclic group.

    Finite group elements are the ids ``0 .. k-1`` with ``0`` the identity.
    The infinite cyclic group is written additively on :class:`int`.
    Use the classmethod constructors, which validate the group axioms.
    """

    kind: GroupKind
    table: Tuple[Tuple[int, ...], ...] = ()

    @classmethod
    def finite(cls, table: Iterable[Iterable[int]]) -> GroupDescriptor:
        """
        Builds a finite group from a multiplication table.

        Raises
        ------
        InvalidGroupTable
            If the table is not square, refers to unknown ids, id 0 is not the
            identity, associativity fails or an element has no inverse.
        """
        rows = tuple(tuple(int(x) for x in row) for row in table)
        order = len(rows)
        if order == 0:
            raise InvalidGroupTable("a group has at least one element")
        for a, row in enumerate(rows):
            if len(row) != order:
                raise InvalidGroupTable(f"row {a} has {len(row)} entries, expected {order}")
            for x in row:
                if not 0 <= x < order:
                    raise InvalidGroupTable(f"row {a} refers to unknown element {x}")
        for a in range(order):
            if rows[0][a] != a or rows[a][0] != a:
                raise InvalidGroupTable(f"element 0 is not an identity for {a}")
        for a, b, c in itertools.product(range(order), repeat=3):
            if rows[rows[a][b]][c] != rows[a][rows[b][c]]:
                raise InvalidGroupTable(f"({a}*{b})*{c} != {a}*({b}*{c})")
        for a in range(order):
            if not any(rows[a][b] == 0 and rows[b][a] == 0 for b in range(order)):
                raise InvalidGroupTable(f"element {a} has no inverse")
        return cls(GroupKind.FINITE, rows)

    @classmethod
    def trivial(cls) -> GroupDescriptor:
        return cls(GroupKind.FINITE, ((0,),))

    @classmethod
    def cyclic(cls, k: int) -> GroupDescriptor:
        if k < 1:
            raise InvalidGroupTable(f"cyclic group order must be positive, got {k}")
        return cls(GroupKind.FINITE, tuple(tuple((a + b) % k for b in range(k)) for a in range(k)))

    @classmethod
    def symmetric3(cls) -> GroupDescriptor:
        perms = sorted(itertools.permutations(range(3)))
        index = {p: i for i, p in enumerate(perms)}
        # (p*q)(i) = p(q(i))
        return cls.finite(
            [[index[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
        )

    @classmethod
    def infinite_cyclic(cls) -> GroupDescriptor:
        return cls(GroupKind.INFINITE_CYCLIC, ())

    @property
    def is_finite(self) -> bool:
        return self.kind is GroupKind.FINITE

    @property
    def order(self) -> Optional[int]:
        """Number of elements, ``None`` for the infinite cyclic group."""
        return len(self.table) if self.is_finite else None

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def identity(self) -> int:
        return 0

    @property
    def is_abelian(self) -> bool:
        if not self.is_finite:
            return True
        return all(
            self.table[a][b] == self.table[b][a]
            for a, b in itertools.combinations(range(len(self.table)), 2)
        )

    def contains(self, g: Any) -> bool:
        if isinstance(g, bool) or not isinstance(g, int):
            return False
        return not self.is_finite or 0 <= g < len(self.table)

    def elements(self) -> range:
        if not self.is_finite:
            raise InfiniteRing("the infinite cyclic group has no finite element list")
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        if self.is_finite:
            return self.table[a][b]
        return a + b

    def inverse(self, a: int) -> int:
        if self.is_finite:
            return next(b for b in range(len(self.table)) if self.table[a][b] == 0)
        return -a

    def element_order(self, a: int) -> Optional[int]:
        if not self.is_finite:
            return 1 if a == 0 else None
        n, x = 1, a
        while x != 0:
            x = self.table[x][a]
            n += 1
        return n

    @property
    def is_cyclic(self) -> bool:
        if not self.is_finite:
            return True
        return any(self.element_order(a) == self.order for a in self.elements())

    @property
    def label(self) -> str:
        if not self.is_finite:
            return "Cinf"
        if self.is_cyclic:
            return f"C{self.order}"
        if self.order == 6:
            return "S3"
        return f"G{self.order}"

    def is_isomorphic(self, other: GroupDescriptor) -> bool:
        """
        Decides isomorphism by a bounded search over bijections fixing the identity.

        Raises
        ------
        RingException
            If either group is finite with more than ``MAX_ISOMORPHISM_ORDER`` elements.
        """
        if self.is_finite != other.is_finite:
            return False
        if not self.is_finite:
            return True
        if self.order != other.order:
            return False
        if self.order > MAX_ISOMORPHISM_ORDER:
            raise RingException(f"isomorphism search is limited to order {MAX_ISOMORPHISM_ORDER}")
        if sorted(map(self.element_order, self.elements())) != sorted(
            map(other.element_order, other.elements())
        ):
            return False
        rest = list(range(1, self.order))
        for images in itertools.permutations(rest):
            phi = (0,) + images
            if any(self.element_order(a) != other.element_order(phi[a]) for a in rest):
                continue
            if all(
                phi[self.table[a][b]] == other.table[phi[a]][phi[b]]
                for a in rest
                for b in rest
            ):
                return True
        return False

    def __repr__(self):
        return f"<GroupDescriptor: {self.label}>"


class RingDescriptor(NamedTuple):
    """
    A coefficient ring from the closed universe Z, Q, Z/n, R[x, x^-1] and RG.

    Build descriptors with :data:`Z`, :data:`Q`, :func:`integers_mod`,
    :func:`laurent`, :func:`group_ring` or :func:`parse_ring_spec` rather
    than calling the constructor directly.
    """

    kind: RingKind
    modulus: int = 0
    base: Optional["RingDescriptor"] = None
    group: Optional[GroupDescriptor] = None

    @property
    def is_sparse(self) -> bool:
        return self.kind in (RingKind.LAURENT, RingKind.GROUP_RING)

    @property
    def key_group(self) -> GroupDescriptor:
        """The group indexing a Laurent or group ring element."""
        if self.kind is RingKind.LAURENT:
            return GroupDescriptor.infinite_cyclic()
        return self.group

    @property
    def commutative(self) -> bool:
        if self.kind is RingKind.GROUP_RING:
            return self.base.commutative and self.group.is_abelian
        if self.kind is RingKind.LAURENT:
            return self.base.commutative
        return True

    @property
    def is_finite(self) -> bool:
        if self.kind is RingKind.INTEGERS_MOD:
            return True
        if self.kind is RingKind.GROUP_RING:
            return self.group.is_finite and self.base.is_finite
        return False

    @property
    def size(self) -> int:
        if not self.is_finite:
            raise InfiniteRing(f"{self.spec} is infinite")
        if self.kind is RingKind.INTEGERS_MOD:
            return self.modulus
        return self.base.size ** self.group.order

    @property
    def spec(self) -> str:
        """The ring spec string understood by :func:`parse_ring_spec`."""
        if self.kind is RingKind.INTEGERS_MOD:
            return f"Zmod:{self.modulus}"
        if self.kind is RingKind.LAURENT:
            return f"Laurent:{self.base.spec}"
        if self.kind is RingKind.GROUP_RING:
            return f"GroupRing:{self.base.spec}:{self.group.label}"
        return self.kind.value

    def __repr__(self):
        return f"<RingDescriptor: {self.spec}>"

    def __str__(self):
        return self.spec

    # -- elements ------------------------------------------------------------

    def contains(self, x: Any) -> bool:
        """Whether ``x`` is a canonical element of this ring."""
        if self.kind is RingKind.INTEGERS:
            return isinstance(x, int) and not isinstance(x, bool)
        if self.kind is RingKind.RATIONALS:
            return isinstance(x, Fraction)
        if self.kind is RingKind.INTEGERS_MOD:
            return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.modulus
        if not isinstance(x, SparseMap):
            return False
        group = self.key_group
        return all(
            group.contains(k) and self.base.contains(v) and not self.base.is_zero(v)
            for k, v in x.items()
        )

    def check(self, *xs: Any) -> None:
        for x in xs:
            if not self.contains(x):
                raise RingMismatch(f"{x!r} is not an element of {self.spec}")

    def zero(self):
        if self.kind is RingKind.RATIONALS:
            return Fraction(0)
        if self.is_sparse:
            return SparseMap()
        return 0

    def one(self):
        return self.from_int(1)

    def from_int(self, k: int):
        if self.kind is RingKind.RATIONALS:
            return Fraction(k)
        if self.kind is RingKind.INTEGERS_MOD:
            return k % self.modulus
        if self.is_sparse:
            return self.monomial(0, self.base.from_int(k))
        return int(k)

    def monomial(self, key: int, coeff):
        """``coeff`` times the basis element ``key`` (x^key, or the group element)."""
        if self.base.is_zero(coeff):
            return SparseMap()
        return SparseMap({key: coeff})

    def element(self, value: Any):
        """
        Coerces a convenient Python value into a canonical element.

        Integers are accepted by every ring, :class:`str` and :class:`Fraction`
        by ``Q``, and ``{key: value}`` dictionaries by Laurent and group rings.
        """
        if isinstance(value, bool):
            raise RingMismatch(f"{value!r} is not an element of {self.spec}")
        if self.is_sparse:
            if isinstance(value, int):
                return self.from_int(value)
            if not hasattr(value, "items"):
                raise RingMismatch(f"{value!r} is not an element of {self.spec}")
            group = self.key_group
            pairs = []
            for k, v in value.items():
                if not group.contains(k):
                    raise RingMismatch(f"{k!r} is not a basis key of {self.spec}")
                pairs.append((k, self.base.element(v)))
            return self._accumulate(pairs)
        if self.kind is RingKind.RATIONALS:
            if isinstance(value, (int, Fraction, str)):
                try:
                    return Fraction(value)
                except (ValueError, ZeroDivisionError) as exc:
                    raise RingMismatch(f"{value!r} is not a rational number") from exc
            raise RingMismatch(f"{value!r} is not an element of {self.spec}")
        if isinstance(value, int):
            return self.from_int(value)
        raise RingMismatch(f"{value!r} is not an element of {self.spec}")

    def canonical(self, x):
        """Re-canonicalises an element; the identity on canonical input."""
        if self.kind is RingKind.INTEGERS_MOD:
            return x % self.modulus
        if self.kind is RingKind.RATIONALS:
            return Fraction(x)
        if self.is_sparse:
            return self._accumulate((k, self.base.canonical(v)) for k, v in x.items())
        return int(x)

    def is_zero(self, x) -> bool:
        if self.is_sparse:
            return len(x) == 0
        return x == 0

    def _accumulate(self, pairs: Iterable[Tuple[Any, Any]]) -> SparseMap:
        acc: Dict[Any, Any] = {}
        base = self.base
        for k, v in pairs:
            acc[k] = base.add(acc[k], v) if k in acc else v
        return SparseMap((k, v) for k, v in acc.items() if not base.is_zero(v))

    def add(self, a, b):
        if self.kind is RingKind.INTEGERS_MOD:
            return (a + b) % self.modulus
        if self.is_sparse:
            return self._accumulate(itertools.chain(a.items(), b.items()))
        return a + b

    def neg(self, a):
        if self.kind is RingKind.INTEGERS_MOD:
            return (-a) % self.modulus
        if self.is_sparse:
            return SparseMap((k, self.base.neg(v)) for k, v in a.items())
        return -a

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.kind is RingKind.INTEGERS_MOD:
            return (a * b) % self.modulus
        if self.is_sparse:
            group, base = self.key_group, self.base
            return self._accumulate(
                (group.mul(g, h), base.mul(u, v)) for g, u in a.items() for h, v in b.items()
            )
        return a * b

    def eq(self, a, b) -> bool:
        return a == b

    def involution(self, a):
        """The conjugation sum a_g g -> sum a_g g^-1; the identity on Z, Q and Z/n."""
        if not self.is_sparse:
            return a
        group, base = self.key_group, self.base
        return SparseMap((group.inverse(k), base.involution(v)) for k, v in a.items())

    def elements(self) -> Iterator:
        """
        Enumerates a finite ring in canonical order.

        Raises
        ------
        InfiniteRing
            If the ring is infinite.
        """
        if not self.is_finite:
            raise InfiniteRing(f"{self.spec} is infinite")
        if self.kind is RingKind.INTEGERS_MOD:
            yield from range(self.modulus)
            return
        base_elements = list(self.base.elements())
        keys = list(self.group.elements())
        for coeffs in itertools.product(base_elements, repeat=len(keys)):
            yield SparseMap(
                (k, c) for k, c in zip(keys, coeffs) if not self.base.is_zero(c)
            )

    def encode(self, x):
        """JSON encoding: integers as decimal strings, sparse elements as key maps."""
        if self.is_sparse:
            return {str(k): self.base.encode(v) for k, v in x.items()}
        return str(x)

    def render(self, x) -> str:
        """Human readable form, ``x`` as the Laurent variable and ``g<k>`` for group ids."""
        if not self.is_sparse:
            return str(x)
        if not x:
            return "0"
        terms = []
        for k, v in x.items():
            if self.kind is RingKind.LAURENT or not self.group.is_finite:
                basis = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            else:
                basis = "" if k == 0 else f"g{k}"
            coeff = self.base.render(v)
            if not basis:
                terms.append(coeff)
            elif coeff == "1":
                terms.append(basis)
            else:
                terms.append(f"({coeff}){basis}" if " " in coeff else f"{coeff}{basis}")
        return " + ".join(terms)


Z = RingDescriptor(RingKind.INTEGERS)
Q = RingDescriptor(RingKind.RATIONALS)


def integers_mod(n: int) -> RingDescriptor:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise InvalidRingSpec(f"Zmod needs a modulus n >= 2, got {n!r}")
    return RingDescriptor(RingKind.INTEGERS_MOD, modulus=n)


def require_commutative(base: RingDescriptor) -> None:
    """
    Raises
    ------
    NoncommutativeCoefficients
        If ``base`` cannot serve as coefficients of a groupoid or group ring.
    """
    if not base.commutative:
        raise NoncommutativeCoefficients(f"{base.spec} is not commutative")


def laurent(base: RingDescriptor) -> RingDescriptor:
    require_commutative(base)
    return RingDescriptor(RingKind.LAURENT, base=base)


def group_ring_over(base: RingDescriptor, group: GroupDescriptor) -> RingDescriptor:
    """The literal group ring ``base[group]``, without any simplification."""
    require_commutative(base)
    return RingDescriptor(RingKind.GROUP_RING, base=base, group=group)


def group_ring(base: RingDescriptor, group: GroupDescriptor) -> RingDescriptor:
    """
    The group ring ``base[group]`` in its simplest shape.

    The trivial group gives ``base`` itself and the infinite cyclic group gives
    the Laurent ring ``base[x, x^-1]``.
    """
    if group.is_trivial:
        require_commutative(base)
        return base
    if not group.is_finite:
        return laurent(base)
    return group_ring_over(base, group)


def _parse_group(token: str, text: str) -> GroupDescriptor:
    if token == "Cinf":
        return GroupDescriptor.infinite_cyclic()
    if token == "S3":
        return GroupDescriptor.symmetric3()
    if token.startswith("C") and token[1:].isdigit() and int(token[1:]) >= 1:
        return GroupDescriptor.cyclic(int(token[1:]))
    raise InvalidRingSpec(f"unknown group {token!r} in ring spec {text!r}")


def parse_ring_spec(text: str) -> RingDescriptor:
    """
    Parses ``Z``, ``Q``, ``Zmod:<n>``, ``Laurent:<base>`` or ``GroupRing:<base>:C<k>``.

    ``GroupRing`` also accepts ``Cinf`` (infinite cyclic) and ``S3`` as group.

    Raises
    ------
    InvalidRingSpec
        If the spec is not understood.
    """
    spec = text.strip() if isinstance(text, str) else text
    if not isinstance(spec, str) or not spec:
        raise InvalidRingSpec(f"empty ring spec {text!r}")
    ring_log.trace("parsing ring spec %r", spec)
    if spec == "Z":
        return Z
    if spec == "Q":
        return Q
    head, _, rest = spec.partition(":")
    if head == "Zmod":
        if not rest.isdigit():
            raise InvalidRingSpec(f"Zmod needs a modulus, got {text!r}")
        return integers_mod(int(rest))
    if head == "Laurent" and rest:
        return laurent(parse_ring_spec(rest))
    if head == "GroupRing" and ":" in rest:
        base_spec, _, group_token = rest.rpartition(":")
        return group_ring_over(parse_ring_spec(base_spec), _parse_group(group_token, text))
    raise InvalidRingSpec(f"unknown ring spec {text!r}")


def ring_arith(desc: RingDescriptor, op: ArithOp, *args):
    """
    Applies one arithmetic operation, checking every argument belongs to ``desc``.

    Raises
    ------
    RingMismatch
        If an argument is not a canonical element of ``desc``.
    """
    op = ArithOp(op)
    arity = {
        ArithOp.ADD: 2,
        ArithOp.MUL: 2,
        ArithOp.EQ: 2,
        ArithOp.NEG: 1,
        ArithOp.ZERO: 0,
        ArithOp.ONE: 0,
    }[op]
    if len(args) != arity:
        raise RingMismatch(f"{op.value} takes {arity} argument(s), got {len(args)}")
    desc.check(*args)
    if op is ArithOp.ADD:
        return desc.add(*args)
    if op is ArithOp.MUL:
        return desc.mul(*args)
    if op is ArithOp.EQ:
        return desc.eq(*args)
    if op is ArithOp.NEG:
        return desc.neg(*args)
    if op is ArithOp.ZERO:
        return desc.zero()
    return desc.one()


def laurent_mul(base: RingDescriptor, f: SparseMap, g: SparseMap) -> SparseMap:
    """
    Multiplies two Laurent polynomials over ``base``.

    Raises
    ------
    RingMismatch
        If ``f`` or ``g`` has coefficients outside ``base``.
    """
    ring = laurent(base)
    ring.check(f, g)
    return ring.mul(f, g)


class ChainFlags(namedtuple("ChainFlags", "noetherian artinian")):
    """
    Noetherian / artinian flags of a ring.

    Artinian rings are noetherian (Hopkins-Levitzki), so ``artinian = YES``
    with ``noetherian != YES`` is rejected.
    """

    __slots__ = ()

    def __new__(cls, noetherian: TriState, artinian: TriState):
        noetherian, artinian = TriState(noetherian), TriState(artinian)
        if artinian is TriState.YES and noetherian is not TriState.YES:
            raise RingException("artinian rings are noetherian; incoherent chain flags")
        return super().__new__(cls, noetherian, artinian)

    def __and__(self, other: ChainFlags) -> ChainFlags:
        return ChainFlags(self.noetherian & other.noetherian, self.artinian & other.artinian)

    def __repr__(self):
        return (
            "<ChainFlags: "
            f"noetherian={self.noetherian.value}, artinian={self.artinian.value}>"
        )


FIELD_FLAGS = ChainFlags(TriState.YES, TriState.YES)


def group_ring_flags(base_flags: ChainFlags, group: GroupDescriptor) -> ChainFlags:
    """
    Flags of ``RG`` from the flags of ``R``.

    Artinian iff R is artinian and G is finite (Connell); finite and infinite
    cyclic groups are polycyclic-by-finite, so RG is noetherian iff R is (Hall).
    """
    return ChainFlags(
        base_flags.noetherian,
        base_flags.artinian & TriState.of(group.is_finite),
    )


def chain_flags(desc: RingDescriptor) -> ChainFlags:
    """Flags of a descriptor by structural recursion over its constructors."""
    if desc.kind is RingKind.INTEGERS:
        return ChainFlags(TriState.YES, TriState.NO)
    if desc.kind in (RingKind.RATIONALS, RingKind.INTEGERS_MOD):
        return FIELD_FLAGS
    if desc.kind is RingKind.LAURENT:
        # R[x, x^-1] is the group ring of the infinite cyclic group
        return group_ring_flags(chain_flags(desc.base), GroupDescriptor.infinite_cyclic())
    return group_ring_flags(chain_flags(desc.base), desc.group)
