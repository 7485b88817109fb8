"""Isomorphism testing and canonical forms by colour refinement.

Both routines refine a vertex colouring until it is equitable, then
individualise a vertex of the first non-singleton colour class and
recurse.  Colour ids are assigned from sorted signatures, so they do not
depend on the input labelling.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .graph import Graph


def _signatures(g: Graph, colors: Sequence[int]) -> list[tuple]:
    return [(colors[v], tuple(sorted(colors[u] for u in g.neighbors(v)))) for v in range(g.n)]


def refine(g: Graph, colors: Sequence[int] | None = None) -> list[int]:
    """Stable (equitable) colouring refining ``colors``."""
    cur = list(colors) if colors is not None else [0] * g.n
    ncls = len(set(cur))
    while True:
        sigs = _signatures(g, cur)
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        nxt = [table[s] for s in sigs]
        k = len(table)
        cur = nxt
        if k == ncls:
            return cur
        ncls = k


def _refine_pair(g: Graph, cg: list[int], h: Graph, ch: list[int]):
    ncls = len(set(cg))
    while True:
        sg, sh = _signatures(g, cg), _signatures(h, ch)
        if Counter(sg) != Counter(sh):
            return None
        table = {s: i for i, s in enumerate(sorted(set(sg)))}
        cg = [table[s] for s in sg]
        ch = [table[s] for s in sh]
        if len(table) == ncls:
            return cg, ch
        ncls = len(table)


def _first_target(colors: Sequence[int]) -> int | None:
    counts = Counter(colors)
    multi = [c for c, k in counts.items() if k > 1]
    return min(multi) if multi else None


def find_isomorphism(g: Graph, h: Graph) -> dict[int, int] | None:
    """An edge-preserving bijection ``g -> h`` or None.

    Any returned map has been checked edge by edge.
    """
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return None

    def search(cg, ch):
        pair = _refine_pair(g, cg, h, ch)
        if pair is None:
            return None
        cg, ch = pair
        target = _first_target(cg)
        if target is None:
            inv = {c: w for w, c in enumerate(ch)}
            phi = {v: inv[cg[v]] for v in range(g.n)}
            if all(h.has_edge(phi[u], phi[v]) for u, v in g.edge_set):
                return phi
            return None
        v = min(x for x in range(g.n) if cg[x] == target)
        fresh = max(cg) + 1
        for w in (x for x in range(h.n) if ch[x] == target):
            cg2, ch2 = list(cg), list(ch)
            cg2[v] = fresh
            ch2[w] = fresh
            found = search(cg2, ch2)
            if found is not None:
                return found
        return None

    phi = search([0] * g.n, [0] * h.n)
    if phi is not None:
        assert sorted(phi.values()) == list(range(h.n))
        assert all(h.has_edge(phi[u], phi[v]) for u, v in g.edge_set)
    return phi


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None


def _homogeneous(g: Graph, colors: Sequence[int]) -> bool:
    # Every cell is a clique or a coclique and every pair of cells is
    # completely joined or not at all; then all leaves below look alike.
    cells: dict[int, int] = {}
    for v, c in enumerate(colors):
        cells[c] = cells.get(c, 0) | (1 << v)
    masks = g.masks
    for v, c in enumerate(colors):
        row = masks[v]
        for d, cm in cells.items():
            inter = row & cm
            if c == d:
                if inter and inter != cm & ~(1 << v):
                    return False
            elif inter and inter != cm:
                return False
    return True


def canonical_labeling(g: Graph) -> tuple[tuple, list[int]]:
    """Canonical certificate and a labelling achieving it.

    The certificate is ``(n, sorted relabelled edges)``; two graphs are
    isomorphic iff their certificates are equal.  ``labeling[v]`` is the
    canonical position of vertex ``v``.
    """
    n = g.n
    best: list = [None, None]
    autos: list[list[int]] = []

    def leaf(colors):
        # discrete colouring: colour ids are 0..n-1 after refinement
        lab = list(colors)
        cert = tuple(sorted((min(lab[u], lab[v]), max(lab[u], lab[v])) for u, v in g.edge_set))
        return cert, lab

    def orbit_of(v, prefix):
        # orbit of v under found automorphisms fixing the prefix pointwise
        gens = [a for a in autos if all(a[p] == p for p in prefix)]
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for a in gens:
                y = a[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen

    def search(colors, prefix):
        colors = refine(g, colors)
        target = _first_target(colors)
        if target is None or _homogeneous(g, colors):
            if target is not None:
                # break remaining ties by vertex id; any order gives the same certificate
                order = sorted(range(n), key=lambda x: (colors[x], x))
                colors = [0] * n
                for pos, x in enumerate(order):
                    colors[x] = pos
            cert, lab = leaf(colors)
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, lab
            elif cert == best[0]:
                inv = [0] * n
                for x, p in enumerate(best[1]):
                    inv[p] = x
                autos.append([inv[lab[x]] for x in range(n)])
            return
        cell = [x for x in range(n) if colors[x] == target]
        fresh = max(colors) + 1
        done: set[int] = set()
        for v in cell:
            if v in done:
                continue
            c2 = list(colors)
            c2[v] = fresh
            search(c2, prefix + [v])
            done |= orbit_of(v, prefix)

    if n == 0:
        return (0, ()), []
    search([0] * n, [])
    return (n, best[0]), best[1]


def canonical_form(g: Graph) -> tuple:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    cert = canonical_form(g)
    return Graph(cert[0], cert[1])
