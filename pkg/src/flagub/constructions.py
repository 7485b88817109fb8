"""Builders for the named graph families.

Vertices are assigned to parts in contiguous blocks, larger parts first;
cycles follow ascending vertex order inside a block and close with the
wrap edge.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import TooFewVertices
from .graph import Graph


def balanced_sizes(n: int, r: int) -> tuple[int, ...]:
    """Part sizes ``floor(n/r)`` / ``ceil(n/r)``, larger parts first."""
    if r < 1:
        raise ValueError("r must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    q, rem = divmod(n, r)
    return tuple([q + 1] * rem + [q] * (r - rem))


def is_balanced(sizes: Sequence[int]) -> bool:
    return not sizes or max(sizes) - min(sizes) <= 1


def blocks(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    out, start = [], 0
    for s in sizes:
        out.append(tuple(range(start, start + s)))
        start += s
    return out


def natural_partition(n: int, r: int) -> list[tuple[int, ...]]:
    """The contiguous part blocks used by :func:`turan` and :func:`j_graph`."""
    return blocks(balanced_sizes(n, r))


def multipartite(sizes: Sequence[int]) -> Graph:
    parts = blocks(sizes)
    edges = []
    for a, b in combinations(parts, 2):
        edges.extend((u, v) for u in a for v in b)
    return Graph(sum(sizes), edges)


def cycle_edges(vertices: Sequence[int]) -> list[tuple[int, int]]:
    k = len(vertices)
    if k < 3:
        return []
    return [(vertices[i], vertices[(i + 1) % k]) for i in range(k)]


def cycle(length: int) -> Graph:
    if length < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(length, cycle_edges(range(length)))


def turan(n: int, r: int) -> Graph:
    return multipartite(balanced_sizes(n, r))


def k3r(r: int) -> Graph:
    return turan(3 * r, r)


def radical_graph(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with a cycle inside every part.

    Parts must have at least 4 vertices.  ``radical_graph(balanced_sizes(n, r))``
    is ``J_r(n)``.
    """
    if any(s < 4 for s in sizes):
        raise TooFewVertices(f"every part needs >= 4 vertices, got {tuple(sizes)}")
    g = multipartite(sizes)
    extra = []
    for part in blocks(sizes):
        extra.extend(cycle_edges(part))
    return g.with_edges(add=extra)


def j_graph(n: int, r: int) -> Graph:
    """Turán graph ``T_r(n)`` with every part made into a cycle."""
    if r < 1:
        raise ValueError("r must be positive")
    if n < 4 * r:
        raise TooFewVertices(f"J_r(n) needs n >= 4r (n={n}, r={r})")
    return radical_graph(balanced_sizes(n, r))


def graph_join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them."""
    off = g.n
    edges = list(g.edge_set)
    edges.extend((u + off, v + off) for u, v in h.edge_set)
    edges.extend((u, v + off) for u in range(g.n) for v in range(h.n))
    return Graph(g.n + h.n, edges)


def suspension(g: Graph) -> Graph:
    """Join with two non-adjacent apexes, placed last."""
    return graph_join(g, Graph(2))


def j_star(n: int, r: int) -> Graph:
    """``J_r(n-2)`` plus two non-adjacent apexes (indices ``n-2``, ``n-1``)."""
    if r < 1:
        raise ValueError("r must be positive")
    if n - 2 < 4 * r:
        raise TooFewVertices(f"J*_r(n) needs n - 2 >= 4r (n={n}, r={r})")
    return suspension(j_graph(n - 2, r))


def cycle_join(lengths: Sequence[int]) -> Graph:
    """Join of cycles ``C_a * C_b * ...`` in the given order."""
    g = Graph(0)
    for k in lengths:
        g = graph_join(g, cycle(k))
    return g


FAMILIES = ("turan", "jr", "jr-star", "k3r", "cycle", "join")
