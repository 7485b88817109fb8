"""Immutable simple graphs with clique counting and K_3^r detection.

Vertices are ``0..n-1``.  Adjacency is held both as sorted neighbour tuples
and as integer bitmasks; the bitmasks drive every enumeration kernel.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import GraphFormatError, NotAClique


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable; the edit helpers return new graphs.
    """

    __slots__ = ("_n", "_edges", "_nbrs", "_masks")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphFormatError(f"vertex count must be non-negative, got {n}")
        es = set()
        for e in edges:
            u, v = e
            if u == v:
                raise GraphFormatError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u}, {v}) out of range for n={n}")
            es.add((u, v) if u < v else (v, u))
        masks = [0] * n
        for u, v in es:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self._n = n
        self._edges = frozenset(es)
        self._masks = tuple(masks)
        self._nbrs = tuple(tuple(iter_bits(m)) for m in masks)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        edges = [(u, v) for u in range(n) for v in iter_bits(masks[u] >> (u + 1) << (u + 1))]
        return cls(n, edges)

    # -- basic queries ---------------------------------------------------
    @property
    def n(self) -> int:
        return self._n

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self._edges))

    @property
    def edge_set(self) -> frozenset:
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def nbr_mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._nbrs]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._masks[u] >> v & 1)

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return not any(self.has_edge(a, b) for a, b in combinations(vs, 2))

    # -- derived graphs ---------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph plus the map new index -> original vertex."""
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        es = [(index[u], index[v]) for u, v in self._edges if u in index and v in index]
        return Graph(len(keep), es), keep

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self._n)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Graph(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def with_edges(self, add: Iterable[Sequence[int]] = (), remove: Iterable[Sequence[int]] = ()) -> "Graph":
        es = set(self._edges)
        for u, v in remove:
            es.discard((u, v) if u < v else (v, u))
        for u, v in add:
            es.add((u, v) if u < v else (v, u))
        return Graph(self._n, es)

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        v = self._n
        return Graph(v + 1, list(self._edges) + [(u, v) for u in neighbors])

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced(u for u in range(self._n) if u != v)[0]

    def complement(self) -> "Graph":
        return Graph(self._n, [(u, v) for u, v in combinations(range(self._n), 2) if not self.has_edge(u, v)])

    # -- dunder -----------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        return hash((self._n, self._edges))

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"

    # -- serialisation ----------------------------------------------------
    def to_text(self) -> str:
        lines = [f"{self._n} {self.m}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        lines = [ln for ln in text.split("\n") if ln.strip()]
        if not lines:
            raise GraphFormatError("empty graph file")
        head = lines[0].split()
        if len(head) != 2:
            raise GraphFormatError("first line must be 'n m'")
        n, m = _ints(head, lines[0])
        if len(lines) - 1 != m:
            raise GraphFormatError(f"header promises {m} edges, found {len(lines) - 1}")
        seen = set()
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphFormatError(f"bad edge line {ln!r}")
            u, v = _ints(parts, ln)
            if not 0 <= u < v < n:
                raise GraphFormatError(f"edge line {ln!r} must satisfy 0 <= u < v < n")
            if (u, v) in seen:
                raise GraphFormatError(f"duplicate edge {u} {v}")
            seen.add((u, v))
        return cls(n, seen)

    def to_json(self) -> dict:
        return {"n": self._n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj) -> "Graph":
        if isinstance(obj, str):
            obj = json.loads(obj)
        try:
            n = int(obj["n"])
            raw = [tuple(e) for e in obj["edges"]]
        except (KeyError, TypeError) as exc:
            raise GraphFormatError(f"bad graph JSON: {exc}") from exc
        norm = [(min(e), max(e)) for e in raw]
        if len(set(norm)) != len(norm):
            raise GraphFormatError("duplicate edge in JSON graph")
        return cls(n, norm)


def _ints(tokens, line) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise GraphFormatError(f"non-integer token in line {line!r}") from None


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


@dataclass(frozen=True)
class Clique:
    """A strictly sorted vertex tuple that is a clique of ``host``."""

    vertices: tuple[int, ...]

    @classmethod
    def of(cls, host: Graph, vertices: Iterable[int]) -> "Clique":
        vs = tuple(sorted(set(vertices)))
        for v in vs:
            if not 0 <= v < host.n:
                raise NotAClique(f"vertex {v} not in graph")
        for a, b in combinations(vs, 2):
            if not host.has_edge(a, b):
                raise NotAClique(f"{a} and {b} are not adjacent")
        return cls(vs)

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)


@dataclass(frozen=True)
class CliqueVector:
    """Exact clique counts ``(e_0, e_1, ..., e_w)``."""

    counts: tuple[int, ...]

    @property
    def omega(self) -> int:
        """Largest ``i`` with ``e_i > 0`` among the stored entries."""
        for i in range(len(self.counts) - 1, -1, -1):
            if self.counts[i]:
                return i
        return 0

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        return self.counts[i] if i < len(self.counts) else 0

    def __len__(self):
        return len(self.counts)

    def __iter__(self):
        return iter(self.counts)

    def as_list(self) -> list[int]:
        return list(self.counts)


def clique_vector(g: Graph, k_max: int | None = None) -> CliqueVector:
    """Count cliques of every size by pivoted recursive expansion.

    Each branch of the recursion ends with ``held`` forced vertices and
    ``piv`` optional pivot vertices and stands for ``C(piv, j)`` distinct
    cliques of size ``held + j``; no clique is materialised.
    """
    if k_max is not None and k_max < 0:
        raise ValueError("k_max must be >= 0")
    n = g.n
    limit = n if k_max is None else min(k_max, n)
    masks = g.masks
    counts = [0] * (n + 2)
    binom = [[comb(p, j) for j in range(p + 1)] for p in range(n + 1)]

    def expand(cand: int, held: int, piv: int) -> None:
        if held > limit:
            return
        if not cand:
            row = binom[piv]
            top = min(piv, limit - held)
            for j in range(top + 1):
                counts[held + j] += row[j]
            return
        best, best_deg = -1, -1
        for u in iter_bits(cand):
            d = (cand & masks[u]).bit_count()
            if d > best_deg:
                best, best_deg = u, d
        expand(cand & masks[best], held, piv + 1)
        rest = cand & ~masks[best] & ~(1 << best)
        cand &= ~(1 << best)
        for v in iter_bits(rest):
            expand(cand & masks[v], held + 1, piv)
            cand &= ~(1 << v)

    expand((1 << n) - 1, 0, 0)
    last = max((i for i, c in enumerate(counts) if c), default=0)
    out = counts[: max(last, 1) + 1]
    if k_max is not None:
        out = out[: k_max + 1]
    return CliqueVector(tuple(out))


def iter_cliques(g: Graph, size: int | None = None) -> Iterator[tuple[int, ...]]:
    """Enumerate cliques as sorted tuples (all sizes >= 1, or one size).

    Order is lexicographic on the sorted tuples.
    """
    masks = g.masks
    n = g.n

    def rec(prefix: list[int], cand: int) -> Iterator[tuple[int, ...]]:
        for v in iter_bits(cand):
            prefix.append(v)
            if size is None or len(prefix) == size:
                yield tuple(prefix)
            if size is None or len(prefix) < size:
                yield from rec(prefix, cand & masks[v] & ~((2 << v) - 1))
            prefix.pop()

    if size == 0:
        yield ()
        return
    yield from rec([], (1 << n) - 1)


def find_clique(g: Graph, k: int) -> tuple[int, ...] | None:
    """Lexicographically first ``k``-clique, or None."""
    return next(iter_cliques(g, k), None)


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    masks = g.masks
    out = []

    def bk(r: list[int], p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot_pool = p | x
        u = max(iter_bits(pivot_pool), key=lambda w: (p & masks[w]).bit_count())
        for v in iter_bits(p & ~masks[u]):
            r.append(v)
            bk(r, p & masks[v], x & masks[v])
            r.pop()
            p &= ~(1 << v)
            x |= 1 << v

    if g.n == 0:
        return [()]
    bk([], (1 << g.n) - 1, 0)
    return sorted(out)


def link_graph(g: Graph, sigma) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the common neighbourhood of the clique ``sigma``.

    Returns the link and the map new index -> original vertex.
    """
    vs = sigma.vertices if isinstance(sigma, Clique) else tuple(sigma)
    Clique.of(g, vs)
    common = (1 << g.n) - 1
    for v in vs:
        common &= g.nbr_mask(v)
    return g.induced(iter_bits(common))


def degree_into(g: Graph, v: int, w: Iterable[int]) -> int:
    """``|N(v) & W|``."""
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    wm = w if isinstance(w, int) else mask_of(w)
    return (g.nbr_mask(v) & wm).bit_count()


def contains_k3r(g: Graph, r: int, independent: bool = True):
    """Search for ``r`` vertex triples, pairwise completely joined.

    With ``independent`` (the default) each triple must also be an
    independent set, so the witness induces ``K_3^r``.  Without it only
    the cross edges are required, i.e. plain subgraph containment.
    Triples are returned in increasing order of their smallest vertex;
    the search is exhaustive, so ``None`` proves absence.
    """
    if r < 1:
        raise ValueError("r must be positive")
    masks = g.masks
    n = g.n

    def triples(cand: int, lower: int) -> Iterator[tuple[int, int, int]]:
        verts = [v for v in iter_bits(cand) if v > lower]
        for i, a in enumerate(verts):
            for j in range(i + 1, len(verts)):
                b = verts[j]
                if independent and masks[a] >> b & 1:
                    continue
                for c in verts[j + 1:]:
                    if independent and (masks[a] >> c & 1 or masks[b] >> c & 1):
                        continue
                    yield a, b, c

    def rec(chosen: list, cand: int, lower: int):
        if len(chosen) == r:
            return tuple(chosen)
        if cand.bit_count() < 3 * (r - len(chosen)):
            return None
        for t in triples(cand, lower):
            nxt = cand & masks[t[0]] & masks[t[1]] & masks[t[2]]
            chosen.append(t)
            found = rec(chosen, nxt, t[0])
            if found:
                return found
            chosen.pop()
        return None

    # The first triple fixes the smallest vertex overall; later triples
    # have larger minima, which removes the r! part orderings.
    return rec([], (1 << n) - 1, -1)


def is_k3r_witness(g: Graph, triples, independent: bool = True) -> bool:
    flat = [v for t in triples for v in t]
    if len(set(flat)) != len(flat) or any(len(t) != 3 for t in triples):
        return False
    for i, t in enumerate(triples):
        if independent and not g.is_independent(t):
            return False
        for s in triples[i + 1:]:
            if not all(g.has_edge(a, b) for a in t for b in s):
                return False
    return True


def read_graph(path) -> Graph:
    """Read a graph from the text format or the JSON alternative."""
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return Graph.from_json(text)
    return Graph.from_text(text)


def write_graph(g: Graph, path, fmt: str = "text") -> None:
    with open(path, "w", newline="\n") as fh:
        if fmt == "json":
            json.dump(g.to_json(), fh)
            fh.write("\n")
        else:
            fh.write(g.to_text())
