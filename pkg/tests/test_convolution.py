import itertools
import random
from fractions import Fraction

import pytest

from groupalg import (
    BPArrow,
    ConvElement,
    Q,
    Z,
    char_fn,
    convolve,
    convolve_by_definition,
    corner,
    delta,
    finite_boundary_groupoid,
    integers_mod,
    involute,
    local_unit,
    orbit_split,
    parse_ring_spec,
)
from groupalg.convolution import scale, zero
from groupalg.errors import (
    GroupoidException,
    GroupoidMismatch,
    NoncommutativeCoefficients,
    NotABisection,
    RingMismatch,
    UnknownArrow,
    UnknownUnit,
)

TRIPLES_PER_CASE = 500


def _is_bisection(g, arrows):
    return len({g.source(a) for a in arrows}) == len(arrows) == len(
        {g.target(a) for a in arrows}
    )


def _bounded_arrows(g, bound=2):
    return [a for x in g.units for y in g.units for a in g.arrows_between(x, y, bound=bound)]


@pytest.mark.parametrize("ring_name", ["Z", "Q", "Zmod:4"])
@pytest.mark.parametrize("name", ["pair", "z2", "mixed", "s3", "pair_c2", "pair3"])
def test_algebra_laws(explicit_groupoids, coefficient_rings, random_element, name, ring_name):
    g, ring = explicit_groupoids[name], coefficient_rings[ring_name]
    rng = random.Random(f"{name}/{ring_name}")
    for _ in range(TRIPLES_PER_CASE):
        f, h, k = (random_element(rng, ring, g, g.arrows) for _ in range(3))
        assert (f * h) * k == f * (h * k)
        assert f * (h + k) == f * h + f * k
        assert (f + h) * k == f * k + h * k
        assert involute(involute(f)) == f
        assert involute(f * h) == involute(h) * involute(f)
        assert convolve_by_definition(f, h) == f * h


@pytest.mark.parametrize("name", ["loop_with_entry", "two_cycle", "parallel"])
def test_algebra_laws_on_boundary_groupoids(analyses, random_element, name):
    g = analyses[name].groupoid()
    arrows = _bounded_arrows(g)
    rng = random.Random(name)
    for _ in range(40):
        f, h, k = (random_element(rng, Q, g, arrows) for _ in range(3))
        assert (f * h) * k == f * (h * k)
        assert f * (h - k) == f * h - f * k
        assert involute(f * h) == involute(h) * involute(f)


SMALL_GROUPOIDS = ["pair", "z2", "mixed", "s3", "pair_c2", "pair3"]
SMALL_GRAPHS = ["a2", "a3", "two_sinks", "parallel"]


@pytest.fixture(scope="module")
def small_groupoids(explicit_groupoids, analyses):
    groupoids = {name: explicit_groupoids[name] for name in SMALL_GROUPOIDS}
    groupoids.update((name, finite_boundary_groupoid(analyses[name])) for name in SMALL_GRAPHS)
    assert all(len(g.units) <= 4 for g in groupoids.values())
    return groupoids


def _bisections(g):
    return [
        s
        for r in range(len(g.units) + 1)
        for s in itertools.combinations(g.arrows, r)
        if _is_bisection(g, s)
    ]


def test_bisections_of_the_pair_groupoid(pair):
    assert len(_bisections(pair)) == 7


@pytest.mark.parametrize("name", SMALL_GROUPOIDS + SMALL_GRAPHS)
def test_bisection_products(small_groupoids, name):
    g = small_groupoids[name]
    bisections = _bisections(g)
    for v, w in itertools.product(bisections, repeat=2):
        product = {g.compose(a, b) for a in v for b in w if g.source(a) == g.target(b)}
        assert convolve(char_fn(g, Z, v), char_fn(g, Z, w)) == char_fn(g, Z, product)


@pytest.mark.parametrize("name", SMALL_GROUPOIDS + SMALL_GRAPHS)
def test_unit_bisection_products(small_groupoids, name):
    g = small_groupoids[name]
    subsets = [
        frozenset(s) for r in range(len(g.units) + 1) for s in itertools.combinations(g.units, r)
    ]

    def chi(units):
        return char_fn(g, Z, [g.identity(x) for x in units])

    for v, w in itertools.product(subsets, repeat=2):
        product = convolve(chi(v), chi(w))
        assert product == chi(v & w)
        assert (product == chi(v)) == (v <= w)


def test_small_examples(z2, analyses):
    plus = delta(z2, Z, "e") + delta(z2, Z, "s")
    minus = delta(z2, Z, "e") - delta(z2, Z, "s")
    assert plus * minus == zero(z2, Z)
    assert delta(z2, Z, "s") * delta(z2, Z, "s") == delta(z2, Z, "e")
    assert plus * plus == scale(2, plus)

    loop = analyses["loop"].groupoid()
    (p,) = loop.units
    x = delta(loop, Z, BPArrow(p, 1, p))
    assert x * delta(loop, Z, BPArrow(p, -1, p)) == delta(loop, Z, loop.identity(p))
    assert (x * x).support == (BPArrow(p, 2, p),)


def test_coefficients_are_checked(pair):
    assert not ConvElement(Z, pair, {"1<-1": 0})
    assert ConvElement(integers_mod(4), pair, {"1<-1": 2})["1<-1"] == 2
    assert ConvElement(Q, pair, {"1<-1": Fraction(1, 2)})["2<-2"] == Fraction(0)
    with pytest.raises(RingMismatch):
        ConvElement(Z, pair, {"1<-1": Fraction(1, 2)})
    with pytest.raises(UnknownArrow):
        ConvElement(Z, pair, {"3<-1": 1})


def test_mismatched_operands(pair, z2):
    with pytest.raises(GroupoidMismatch):
        delta(pair, Z, "1<-1") * delta(z2, Z, "e")
    with pytest.raises(GroupoidMismatch):
        delta(pair, Z, "1<-1") + delta(pair, Q, "1<-1")


def test_convolution_by_definition_needs_a_table(analyses):
    loop = analyses["loop"].groupoid()
    e = delta(loop, Z, loop.identity(loop.units[0]))
    with pytest.raises(GroupoidException):
        convolve_by_definition(e, e)


def test_char_fn_rejects_non_bisections(pair):
    with pytest.raises(NotABisection) as exc:
        char_fn(pair, Z, ["1<-1", "1<-2"])
    assert "1<-1" in str(exc.value) and "1<-2" in str(exc.value)


def test_corner(mixed, random_element):
    rng = random.Random("corner")
    units = ["a", "c"]
    chi = char_fn(mixed, Q, [mixed.identity(x) for x in units])
    for _ in range(30):
        f = random_element(rng, Q, mixed, mixed.arrows, max_terms=5)
        assert corner(f, units) == chi * f * chi
    with pytest.raises(UnknownUnit):
        corner(zero(mixed, Q), ["zz"])


def test_orbit_split(mixed, random_element):
    rng = random.Random("split")
    orbits = mixed.orbits()
    for _ in range(30):
        f = random_element(rng, Z, mixed, mixed.arrows, max_terms=6)
        parts = orbit_split(f)
        total = zero(mixed, Z)
        for index, part in parts.items():
            assert part
            assert all(mixed.source(a) in orbits[index] for a in part.support)
            total = total + part
        assert total == f


def test_local_unit(explicit_groupoids, random_element):
    rng = random.Random("local-unit")
    g = explicit_groupoids["pair3"]
    for _ in range(30):
        elements = [random_element(rng, Z, g, g.arrows) for _ in range(2)]
        e = local_unit(g, Z, elements)
        assert e * e == e
        for f in elements:
            assert e * f == f == f * e


def test_to_json(pair, analyses):
    assert delta(pair, Z, "2<-1", 3).to_json() == {
        "ring": "Z",
        "terms": [{"arrow": "2<-1", "coefficient": "3"}],
    }
    a3 = analyses["a3"].groupoid()
    eps, _, e1e2 = a3.units
    document = delta(a3, Q, BPArrow(e1e2, 2, eps), Fraction(-1, 2)).to_json()
    assert document["terms"] == [
        {"arrow": {"p": "e1.e2", "n": 2, "q": "ε_v3"}, "coefficient": "-1/2"}
    ]


def test_coefficients_must_commute(pair):
    s3 = parse_ring_spec("GroupRing:Z:S3")
    with pytest.raises(NoncommutativeCoefficients):
        ConvElement(s3, pair, {})
    with pytest.raises(NoncommutativeCoefficients):
        delta(pair, s3, "1<-1")
    with pytest.raises(NoncommutativeCoefficients):
        zero(pair, s3)
    with pytest.raises(NoncommutativeCoefficients):
        char_fn(pair, s3, ["1<-1"])
    assert delta(pair, parse_ring_spec("GroupRing:Z:C3"), "1<-1")
