from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

import pytest

from groupalg import (
    ConvElement,
    Graph,
    GroupDescriptor,
    Q,
    Z,
    analyze,
    group_groupoid,
    integers_mod,
    load_groupoid,
    pair_group_groupoid,
    pair_groupoid,
    parse_graph,
)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

GRAPH_NAMES = (
    "a2",
    "a3",
    "loop",
    "loop_with_entry",
    "loop_with_exit",
    "two_sinks",
    "two_cycle",
    "two_cycles",
    "parallel",
    "infinite_emitter",
)
DISCRETE_GRAPHS = (
    "a2",
    "a3",
    "loop",
    "loop_with_entry",
    "two_sinks",
    "two_cycle",
    "two_cycles",
    "parallel",
)
ACYCLIC_GRAPHS = ("a2", "a3", "two_sinks", "parallel")
NON_DISCRETE_GRAPHS = ("loop_with_exit", "infinite_emitter")


def fixture_path(name: str) -> str:
    return str(FIXTURES / f"{name}.json")


def load_graph(name: str):
    return parse_graph((FIXTURES / f"{name}.json").read_text(encoding="utf-8"))


def random_graph(rng: random.Random) -> Graph:
    """Up to four vertices and five edges, loops and parallel edges allowed."""
    vertices = [f"v{i}" for i in range(rng.randint(1, 4))]
    edges = [
        (f"e{i}", rng.choice(vertices), rng.choice(vertices)) for i in range(rng.randint(0, 5))
    ]
    emitters = [v for v in vertices if rng.random() < 0.1]
    return Graph(vertices, edges, emitters)


@pytest.fixture(scope="session")
def graphs():
    return {name: load_graph(name) for name in GRAPH_NAMES}


@pytest.fixture(scope="session")
def analyses(graphs):
    return {name: analyze(g) for name, g in graphs.items()}


@pytest.fixture(scope="session")
def pair():
    return load_groupoid((FIXTURES / "pair.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def z2():
    return load_groupoid((FIXTURES / "z2.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def mixed():
    return load_groupoid((FIXTURES / "mixed.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def explicit_groupoids(pair, z2, mixed):
    """Six explicit groupoids with at most 12 arrows each."""
    return {
        "pair": pair,
        "z2": z2,
        "mixed": mixed,
        "s3": group_groupoid(GroupDescriptor.symmetric3(), "x"),
        "pair_c2": pair_group_groupoid(["p", "q"], GroupDescriptor.cyclic(2)),
        "pair3": pair_groupoid([1, 2, 3]),
    }


@pytest.fixture(scope="session")
def coefficient_rings():
    return {"Z": Z, "Q": Q, "Zmod:4": integers_mod(4)}


def random_coefficient(rng: random.Random, ring):
    if ring == Q:
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    if ring == Z:
        return rng.randint(-3, 3)
    return rng.randrange(ring.modulus)


@pytest.fixture
def random_element():
    def make(rng: random.Random, ring, groupoid, arrows, max_terms: int = 3) -> ConvElement:
        chosen = rng.sample(list(arrows), rng.randint(0, min(max_terms, len(arrows))))
        return ConvElement(ring, groupoid, {a: random_coefficient(rng, ring) for a in chosen})

    return make
