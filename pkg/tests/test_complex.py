from __future__ import annotations

from itertools import combinations
from pathlib import Path

import pytest

from flagub.complex import (
    SimplicialComplex,
    clique_complex,
    homology,
    is_eulerian,
    is_homology_manifold,
    is_homology_sphere,
    is_weak_pseudomanifold,
    read_complex,
)
from flagub.constructions import cycle, cycle_join, j_graph, radical_graph
from flagub.errors import GraphFormatError, NotPure
from flagub.graph import Graph
from flagub.snf import smith_invariants

DATA = Path(__file__).parent / "data"


def simplex_boundary(d: int) -> SimplicialComplex:
    return SimplicialComplex.from_facets(combinations(range(d + 1), d))


def test_f_vector_of_clique_complex():
    k = clique_complex(j_graph(8, 2))
    assert k.f_vector == (1, 8, 24, 32, 16)
    assert k.dimension == 3
    assert k.is_flag() and k.is_pure()


def test_boundary_of_triangle_not_flag():
    k = simplex_boundary(2)
    assert not k.is_flag()
    assert homology(k).is_sphere(1)


def test_snf_known_matrices():
    assert smith_invariants([{0: 2, 1: 4}, {0: 6, 1: 8}]) == [2, 4]
    assert smith_invariants([{0: 2}, {1: 3}]) == [1, 6]
    assert smith_invariants([]) == []
    assert smith_invariants([{0: 0}]) == []


def test_snf_against_determinant_products(rng):
    # product of invariant factors equals |det| for a nonsingular square matrix
    for _ in range(30):
        k = rng.randint(1, 5)
        a = [[rng.randint(-6, 6) for _ in range(k)] for _ in range(k)]
        det = _det([row[:] for row in a])
        inv = smith_invariants([{j: v for j, v in enumerate(row) if v} for row in a])
        if det == 0:
            assert len(inv) < k
        else:
            prod = 1
            for x in inv:
                prod *= x
            assert prod == abs(det)
            assert all(inv[i + 1] % inv[i] == 0 for i in range(len(inv) - 1))


def _det(a):
    from fractions import Fraction

    m = [[Fraction(x) for x in row] for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, n):
            f = m[i][c] / m[c][c]
            for j in range(c, n):
                m[i][j] -= f * m[c][j]
    return int(det)


def test_homology_of_circle_and_spheres():
    assert homology(clique_complex(cycle(7))).is_sphere(1)
    for d in range(1, 7):
        h = homology(simplex_boundary(d))
        assert h.is_sphere(d - 1), d


def test_rp2_has_two_torsion():
    k = read_complex(DATA / "rp2.txt")
    h = homology(k)
    assert h.torsion_of(1) == (2,)
    assert h.rank(1) == 0 and h.rank(2) == 0
    # every link is a sphere, so RP^2 is a homology manifold but not a sphere
    assert is_homology_manifold(k).is_manifold
    assert not is_homology_sphere(k)
    assert is_eulerian(k) is False


def test_empty_and_point():
    empty = SimplicialComplex(0, [[()]])
    assert homology(empty).is_sphere(-1)
    point = SimplicialComplex.from_facets([(0,)])
    assert homology(point).is_acyclic()


def test_manifold_certificate_names_smallest_failure():
    # two triangles sharing a vertex: only vertex 0 has a bad link
    g = Graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    k = SimplicialComplex.from_facets([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    cert = is_homology_manifold(k)
    assert not cert.is_manifold
    assert cert.failing_face == (0,)
    assert clique_complex(g).facets != k.facets


def test_disconnected_manifold_reports_connectivity():
    k = clique_complex(Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]))
    cert = is_homology_manifold(k)
    assert cert.is_manifold and not cert.connected
    assert not is_homology_sphere(k)


def test_two_cycle_part_is_not_manifold():
    g = radical_graph([8, 8]).with_edges(
        remove=[(0, 7), (3, 4), (8, 15), (11, 12)], add=[(0, 3), (4, 7), (8, 11), (12, 15)]
    )
    assert not is_homology_manifold(clique_complex(g))


def test_spheres_and_eulerian():
    for g in (j_graph(8, 2), j_graph(11, 2), cycle_join([4, 5])):
        k = clique_complex(g)
        assert is_homology_sphere(k)
        assert is_eulerian(k)
        assert is_weak_pseudomanifold(k)


def test_non_pure_rejected():
    k = SimplicialComplex.from_facets([(0, 1, 2), (2, 3)])
    with pytest.raises(NotPure):
        is_homology_manifold(k)
    with pytest.raises(NotPure):
        is_eulerian(k)
    assert not is_weak_pseudomanifold(k)


def test_link_of_vertex_in_octahedron():
    k = clique_complex(j_graph(8, 2).induced(range(8))[0])
    lk = k.link((0,))
    assert homology(lk).is_sphere(2)


def test_complex_text_round_trip_and_errors():
    k = read_complex(DATA / "rp2.txt")
    assert SimplicialComplex.from_text(k.to_text()) == k
    with pytest.raises(GraphFormatError):
        SimplicialComplex.from_text("3\n2 1\n")
    with pytest.raises(GraphFormatError):
        SimplicialComplex.from_text("")
