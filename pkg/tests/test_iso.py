from __future__ import annotations

import random

import networkx as nx
import pytest

from conftest import random_graph
from flagub.constructions import cycle, cycle_join, j_graph, j_star
from flagub.graph import Graph
from flagub.iso import are_isomorphic, canonical_form, canonical_graph, find_isomorphism


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_isomorphism_map_is_verified(rng):
    g = j_graph(12, 3)
    h = shuffled(g, rng)
    phi = find_isomorphism(g, h)
    assert phi is not None
    assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)


def test_known_non_isomorphic_pairs():
    assert not are_isomorphic(cycle(6), Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]))
    assert not are_isomorphic(cycle_join([6, 4]), j_graph(10, 2))
    assert are_isomorphic(cycle_join([5, 5]), j_graph(10, 2))


def test_canonical_form_invariant_under_relabel(rng):
    for g in (j_graph(12, 2), j_star(10, 2), cycle_join([4, 5, 6])):
        for _ in range(3):
            assert canonical_form(shuffled(g, rng)) == canonical_form(g)


@pytest.mark.parametrize("seed", range(4))
def test_agrees_with_networkx(seed):
    rng = random.Random(seed)
    for _ in range(40):
        n = rng.randint(1, 9)
        p = rng.random()
        g = random_graph(n, p, rng)
        h = shuffled(g, rng) if rng.random() < 0.5 else random_graph(n, p, rng)
        expected = nx.is_isomorphic(to_nx(g), to_nx(h))
        assert are_isomorphic(g, h) == expected
        assert (canonical_form(g) == canonical_form(h)) == expected


def test_regular_graphs_distinguished():
    # two 3-regular graphs on 8 vertices that colour refinement cannot split
    cube = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4), (0, 4), (1, 5), (2, 6), (3, 7)])
    mobius = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
    assert not are_isomorphic(cube, mobius)
    assert canonical_graph(cube) != canonical_graph(mobius)
