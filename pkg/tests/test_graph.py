import random

import pytest

from groupalg import (
    CensusKind,
    CyclePath,
    CylinderSet,
    ExitMarker,
    Graph,
    OrbitKind,
    SinkPath,
    WitnessKind,
    analyze,
    bp_arrow_valid,
    classify_vertices,
    closed_paths,
    cycle_exits,
    cylinder_census,
    cylinder_contains,
    cylinder_intersect,
    enumerate_boundary,
    find_cycles,
    finite_boundary_groupoid,
    is_cycle_power,
    is_discrete,
    isolating_cylinder,
    parse_graph,
    shift,
    tail_equivalent,
    validate,
)
from groupalg.errors import GraphException, GraphParseError, InvalidPath, NotAcyclic, NotDiscrete

from .conftest import ACYCLIC_GRAPHS, DISCRETE_GRAPHS, NON_DISCRETE_GRAPHS, random_graph

FIGURE_EIGHT = Graph(["v"], [("a", "v", "v"), ("b", "v", "v")])


@pytest.mark.parametrize(
    "text, position",
    [
        ("[]", "$"),
        ('{"vertices": []}', "edges"),
        ('{"vertices": ["v", "v"], "edges": []}', "vertices[1]"),
        ('{"vertices": ["v"], "edges": [{"id": "e", "src": "v", "dst": "w"}]}', "edges[0].dst"),
        ('{"vertices": ["v"], "edges": [{"id": "e", "src": "v"}]}', "edges[0].dst"),
        ('{"vertices": [null], "edges": []}', "vertices[0]"),
        ('{"vertices": ["v"], "edges": [], "infinite_emitters": ["w"]}', "infinite_emitters[0]"),
    ],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(GraphParseError) as exc:
        parse_graph(text)
    assert exc.value.position == position
    assert str(exc.value).startswith(position)


def test_parse_syntax_error():
    with pytest.raises(GraphParseError) as exc:
        parse_graph('{"vertices": ["v",]}')
    line, _, column = exc.value.position.partition(":")
    assert line == "1" and column.isdigit()


def test_graph_round_trips_through_json(graphs):
    import json

    for g in graphs.values():
        assert parse_graph(json.dumps(g.to_json())) == g


def test_classify_vertices(graphs):
    assert classify_vertices(graphs["a3"]) == (("v3",), (), ("v1", "v2"))
    assert classify_vertices(graphs["infinite_emitter"]) == (("w",), ("v",), ())
    assert classify_vertices(graphs["loop"]) == ((), (), ("v",))


def test_find_cycles(graphs):
    assert find_cycles(graphs["a3"]) == []
    assert find_cycles(graphs["loop"]) == [("e",)]
    assert find_cycles(graphs["two_cycle"]) == [("g1", "g2")]
    assert find_cycles(graphs["two_cycles"]) == [("h",), ("g1", "g2")]
    assert find_cycles(FIGURE_EIGHT) == [("a",), ("b",)]


def test_cycle_exits(graphs):
    assert cycle_exits(graphs["loop"], ("e",)) == []
    assert cycle_exits(graphs["loop_with_exit"], ("e",)) == ["f"]
    assert cycle_exits(FIGURE_EIGHT, ("a",)) == ["b"]
    emitting_loop = Graph(["v"], [("e", "v", "v")], ["v"])
    assert cycle_exits(emitting_loop, ("e",)) == [ExitMarker.INFINITELY_MANY]


@pytest.mark.parametrize("name", DISCRETE_GRAPHS)
def test_discrete_graphs(graphs, name):
    report = is_discrete(graphs[name])
    assert report.discrete and report.witness is None
    assert report.rays_vacuous


def test_cycle_with_exit_witness(graphs):
    witness = is_discrete(graphs["loop_with_exit"]).witness
    assert witness.kind is WitnessKind.CYCLE_WITH_EXIT
    assert (witness.vertex, witness.cycle, witness.exit) == ("v", ("e",), "f")
    assert witness.describe() == "cycle e has exit f at v"


def test_infinite_emitter_witness(graphs):
    witness = is_discrete(graphs["infinite_emitter"]).witness
    assert witness.kind is WitnessKind.INFINITE_EMITTER
    assert witness.vertex == "v"
    assert witness.describe() == "v is an infinite emitter"
    census = cylinder_census(graphs["infinite_emitter"], witness.cylinder)
    assert census.kind is CensusKind.INFINITE


def test_witness_family(graphs):
    g = graphs["loop_with_exit"]
    witness = is_discrete(g).witness
    assert cylinder_census(g, witness.cylinder).kind is CensusKind.INFINITE
    family = [witness.family(k) for k in range(6)]
    assert family[2] == CylinderSet("v", ("e", "e", "f"))
    for k, c in enumerate(family):
        assert cylinder_census(g, c) == (CensusKind.FINITE, 1)
        assert cylinder_intersect(witness.cylinder, c) == c
        for other in family[k + 1 :]:
            assert cylinder_intersect(c, other) is None
    with pytest.raises(GraphException):
        witness.family(-1)


@pytest.mark.parametrize("name", NON_DISCRETE_GRAPHS)
def test_enumeration_needs_discreteness(graphs, name):
    with pytest.raises(NotDiscrete) as exc:
        enumerate_boundary(graphs[name])
    assert exc.value.witness is not None


def test_sink_paths(analyses):
    assert [p.label for p in analyses["a3"].paths] == ["ε_v3", "e2", "e1.e2"]
    assert [p.label for p in analyses["parallel"].paths] == ["ε_w", "e1", "e2"]
    orbit, = analyses["a3"].orbits
    assert (orbit.kind, orbit.anchor, orbit.size) == (OrbitKind.SINK, "v3", 3)
    assert [o.size for o in analyses["two_sinks"].orbits] == [2, 2]


def test_cycle_paths(analyses):
    assert analyses["loop"].paths == (CyclePath((), ("e",), 0),)
    assert [p.label for p in analyses["loop_with_entry"].paths] == ["(e)^∞", "f(e)^∞"]
    assert [p.label for p in analyses["two_cycle"].paths] == ["(g1.g2)^∞", "(g2.g1)^∞"]
    orbits = analyses["two_cycles"].orbits
    assert [(o.kind, o.anchor, o.size) for o in orbits] == [
        (OrbitKind.CYCLE, ("h",), 2),
        (OrbitKind.CYCLE, ("g1", "g2"), 2),
    ]


@pytest.mark.parametrize("name", DISCRETE_GRAPHS)
def test_census_matches_enumeration(graphs, analyses, name):
    g, analysis = graphs[name], analyses[name]
    cylinders = [CylinderSet(v) for v in g.vertices]
    cylinders += [CylinderSet(e.src, (e.id,)) for e in g.edges]
    for c in cylinders:
        members = [p for p in analysis.paths if cylinder_contains(analysis, c, p)]
        census = cylinder_census(g, c)
        assert census.kind is (CensusKind.FINITE if members else CensusKind.EMPTY)
        assert census.count == len(members)


@pytest.mark.parametrize("name", DISCRETE_GRAPHS)
def test_isolating_cylinders(graphs, analyses, name):
    analysis = analyses[name]
    for p in analysis.paths:
        c = isolating_cylinder(analysis, p)
        assert [q for q in analysis.paths if cylinder_contains(analysis, c, q)] == [p]
        assert cylinder_census(graphs[name], c) == (CensusKind.FINITE, 1)


def test_excluded_edges(graphs):
    g = graphs["parallel"]
    assert cylinder_census(g, CylinderSet("v", (), frozenset({"e1"}))) == (CensusKind.FINITE, 1)
    both = CylinderSet("v", (), frozenset({"e1", "e2"}))
    assert cylinder_census(g, both).kind is CensusKind.EMPTY
    exiting = graphs["loop_with_exit"]
    no_loop = CylinderSet("v", (), frozenset({"e"}))
    assert cylinder_census(exiting, no_loop) == (CensusKind.FINITE, 1)
    with pytest.raises(InvalidPath):
        cylinder_census(g, CylinderSet("w", (), frozenset({"e1"})))
    with pytest.raises(InvalidPath):
        cylinder_census(g, CylinderSet("w", ("e1",)))


def test_cylinder_intersect():
    a = CylinderSet("v", ("e1",))
    assert cylinder_intersect(CylinderSet("v"), a) == a
    assert cylinder_intersect(CylinderSet("v", (), frozenset({"e1"})), a) is None
    assert cylinder_intersect(a, CylinderSet("v", ("e2",))) is None
    assert cylinder_intersect(a, CylinderSet("w", ("e1",))) is None
    same = cylinder_intersect(
        CylinderSet("v", (), frozenset({"e1"})), CylinderSet("v", (), frozenset({"e2"}))
    )
    assert same.excluded == frozenset({"e1", "e2"})


@pytest.mark.parametrize("name", DISCRETE_GRAPHS)
def test_tail_equivalence_is_orbit_equivalence(analyses, name):
    analysis = analyses[name]
    for p in analysis.paths:
        for q in analysis.paths:
            same_orbit = analysis.orbit_index(p) == analysis.orbit_index(q)
            assert tail_equivalent(analysis, p, q) is same_orbit


def test_shift(analyses):
    a3 = analyses["a3"]
    eps, e2, e1e2 = a3.paths
    assert shift(a3, e1e2, 1) == e2
    assert shift(a3, e1e2, 2) == eps
    with pytest.raises(InvalidPath):
        shift(a3, e2, 2)
    two_cycle = analyses["two_cycle"]
    p0, p1 = two_cycle.paths
    assert shift(two_cycle, p0, 1) == p1
    assert shift(two_cycle, p0, 2) == p0
    entry = analyses["loop_with_entry"]
    assert shift(entry, entry.paths[1], 1) == entry.paths[0]


def test_closed_paths_and_cycle_powers(graphs):
    closed = closed_paths(FIGURE_EIGHT, 2)
    assert closed == [("a",), ("b",), ("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")]
    assert [is_cycle_power(FIGURE_EIGHT, p) for p in closed] == [
        True,
        True,
        True,
        False,
        False,
        True,
    ]
    two_cycle = graphs["two_cycle"]
    assert closed_paths(two_cycle, 3) == [("g1", "g2"), ("g2", "g1")]
    assert all(is_cycle_power(two_cycle, p) for p in closed_paths(two_cycle, 4))
    assert not is_cycle_power(graphs["a3"], ("e1",))


@pytest.mark.parametrize("name", ACYCLIC_GRAPHS)
def test_finite_boundary_groupoid(analyses, name):
    analysis = analyses[name]
    g = finite_boundary_groupoid(analysis)
    assert validate(g).ok
    assert len(g.arrows) == sum(o.size ** 2 for o in analysis.orbits)
    assert sorted(o.size for o in g.orbits()) == sorted(o.size for o in analysis.orbits)
    assert all(g.isotropy(x).is_trivial for x in g.units)


def test_finite_boundary_groupoid_uses_boundary_arrows(analyses):
    for name in ACYCLIC_GRAPHS:
        analysis = analyses[name]
        explicit, boundary = finite_boundary_groupoid(analysis), analysis.groupoid()
        for a in explicit.arrows:
            assert bp_arrow_valid(analysis, a.p, a.n, a.q)
            assert boundary.is_arrow(a)
            assert explicit.source(a) == boundary.source(a)
            assert explicit.target(a) == boundary.target(a)
            for b in explicit.arrows:
                if explicit.source(a) == explicit.target(b):
                    assert explicit.compose(a, b) == boundary.compose(a, b)


def test_finite_boundary_groupoid_with_dotted_edge_ids():
    # the path e then f and the single edge "e.f" share a label
    g = Graph(["a", "b", "c"], [("e", "a", "b"), ("f", "b", "c"), ("e.f", "a", "c")])
    analysis = analyze(g)
    labels = [p.label for p in analysis.paths]
    assert labels.count("e.f") == 2
    explicit = finite_boundary_groupoid(analysis)
    assert validate(explicit).ok
    assert len(explicit.units) == 4
    assert len(explicit.arrows) == 16
    assert [o.size for o in explicit.orbits()] == [4]


def test_finite_boundary_groupoid_errors(analyses):
    with pytest.raises(NotAcyclic):
        finite_boundary_groupoid(analyses["loop"])
    with pytest.raises(NotDiscrete):
        finite_boundary_groupoid(analyses["loop_with_exit"])


def test_analysis_json(analyses):
    document = analyses["loop_with_exit"].to_json()
    assert document["discrete"] is False
    assert document["witness"] == "cycle e has exit f at v"
    assert document["cycles"] == [{"edges": ["e"], "exits": ["f"]}]
    assert document["paths"] is None
    document = analyses["a3"].to_json()
    assert document["orbits"][0]["members"] == ["ε_v3", "e2", "e1.e2"]
    assert document["sinks"] == ["v3"]
    assert isinstance(analyses["a3"].paths[0], SinkPath)


def _head(p, n):
    return p.edges[:n] if isinstance(p, SinkPath) else p.edges_upto(n)


def _random_cylinders(rng, analysis):
    edge_ids = [e.id for e in analysis.graph.edges]
    cylinders = []
    for p in analysis.paths:
        for n in range(3):
            alpha = _head(p, n)
            excluded = frozenset(e for e in edge_ids if rng.random() < 0.3)
            cylinders.append(CylinderSet(analysis.path_start(p), alpha, excluded))
            cylinders.append(CylinderSet(analysis.path_start(p), alpha))
    rng.shuffle(cylinders)
    return cylinders[:12]


def test_cylinder_intersect_matches_membership():
    rng = random.Random(20261018)
    checked = 0
    for _ in range(200):
        analysis = analyze(random_graph(rng))
        if not analysis.discrete:
            continue
        cylinders = _random_cylinders(rng, analysis)

        def members(c):
            return {p for p in analysis.paths if cylinder_contains(analysis, c, p)}

        for a in cylinders:
            for b in cylinders:
                meet = cylinder_intersect(a, b)
                expected = members(a) & members(b)
                if meet is None:
                    assert not expected, (a, b)
                else:
                    assert members(meet) == expected, (a, b, meet)
                checked += 1
    assert checked > 200
