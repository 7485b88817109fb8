"""Extremality certificates and a local-search maximiser for clique functions.

A partition is a sequence ``(V_0, V_1, ..., V_r)`` of vertex collections;
``V_0`` is the exceptional set and may be empty.  Part indices in reports
are the same 0..r indices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, floor
from typing import Iterable, Sequence

from .constructions import balanced_sizes, j_graph, natural_partition, turan
from .errors import (
    BadInput,
    BadPartition,
    KPlusOneClique,
    NonImprovingMove,
    NotExtremal,
    NotSingleCycle,
    TooLargeForExact,
)
from .facevectors import CliqueFunction, eval_clique_function, growth_constant, sigma_shift_delta
from .graph import Graph, clique_vector, find_clique, iter_bits, mask_of

log = logging.getLogger(__name__)

Parts = tuple[tuple[int, ...], ...]


def default_eta(r: int) -> Fraction:
    return Fraction(1, 14 * r**r)


def epsilon_for(eta: Fraction, r: int) -> Fraction:
    return Fraction(eta) ** 2 / (120 * r ** (r + 3))


@dataclass(frozen=True)
class ExtremalConstants:
    """Constants of the stability argument.

    ``eta`` and ``epsilon`` follow their closed forms; ``growth`` is the
    Dehn-Sommerville constant ``C_r``.  The remaining constants only have
    existence proofs and are plain configuration (``None`` = unset).
    """

    r: int
    eta: Fraction
    epsilon: Fraction
    growth: int
    alpha: Fraction | None = None
    beta: Fraction | None = None
    delta: Fraction | None = None
    m0: int | None = None
    m1: int | None = None
    m2: int | None = None

    @classmethod
    def for_r(cls, r: int, **overrides) -> "ExtremalConstants":
        eta = Fraction(overrides.pop("eta", default_eta(r)))
        return cls(r=r, eta=eta, epsilon=epsilon_for(eta, r), growth=growth_constant(r), **overrides)

    @property
    def partition_min_n(self) -> Fraction:
        """Smallest ``n`` for which the partition builder is guaranteed to succeed."""
        return 2 * self.r / self.eta


def normalize_partition(n: int, parts: Sequence[Iterable[int]], with_v0: bool = True) -> Parts:
    ps = tuple(tuple(sorted(set(p))) for p in parts)
    if with_v0 and len(ps) < 2:
        raise BadPartition("need V_0 plus at least one part")
    seen: set[int] = set()
    for p in ps:
        for v in p:
            if not 0 <= v < n:
                raise BadPartition(f"vertex {v} out of range")
            if v in seen:
                raise BadPartition(f"vertex {v} appears in two parts")
            seen.add(v)
    if len(seen) != n:
        raise BadPartition(f"partition covers {len(seen)} of {n} vertices")
    return ps


@dataclass(frozen=True)
class ConditionResult:
    passed: bool
    witnesses: tuple = ()


@dataclass(frozen=True)
class VertexType:
    kind: str  # "Type1", "Type2" or "Untyped"
    g: int | None = None
    h: int | None = None


@dataclass(frozen=True)
class PartitionCertificate:
    parts: Parts
    eta: Fraction
    r: int
    conditions: dict
    vertex_types: dict

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions.values())

    def __bool__(self):
        return self.passed

    def failed(self) -> list[str]:
        return [k for k, c in self.conditions.items() if not c.passed]

    def to_json(self) -> dict:
        return {
            "extremal": self.passed,
            "eta": str(self.eta),
            "r": self.r,
            "parts": [list(p) for p in self.parts],
            "conditions": {
                k: {"passed": c.passed, "witnesses": [_jsonable(w) for w in c.witnesses]}
                for k, c in self.conditions.items()
            },
            "vertex_types": {str(v): {"kind": t.kind, "g": t.g, "h": t.h} for v, t in self.vertex_types.items()},
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return x


def classify_vertex(degs: Sequence[int], sizes: Sequence[int], eta: Fraction, r: int) -> VertexType:
    """Type of an exceptional vertex from its degrees into ``V_1..V_r``.

    ``degs`` and ``sizes`` are indexed 1..r (index 0 ignored).  Type 1 wins
    when both apply.
    """
    idx = range(1, r + 1)
    for g in idx:
        if degs[g] > 2:
            continue
        for h in idx:
            if h != g and degs[h] <= (1 - eta / 2) * sizes[h]:
                return VertexType("Type1", g, h)
    for g, h in combinations(idx, 2):
        if degs[g] <= 3 * r * eta * sizes[g] and degs[h] <= 3 * r * eta * sizes[h]:
            return VertexType("Type2", g, h)
    return VertexType("Untyped")


def check_extremal(h: Graph, parts: Sequence[Iterable[int]], eta, r: int | None = None) -> PartitionCertificate:
    """Evaluate the five (eta, r)-extremality conditions on a given partition."""
    eta = Fraction(eta)
    if not 0 <= eta < 1:
        raise BadInput("eta must lie in [0, 1)")
    ps = normalize_partition(h.n, parts)
    if r is None:
        r = len(ps) - 1
    if len(ps) != r + 1:
        raise BadPartition(f"expected {r + 1} parts (V_0..V_r), got {len(ps)}")
    n = h.n
    pm = [mask_of(p) for p in ps]
    sizes = [len(p) for p in ps]

    # (a) sizes
    wa = []
    v0_bound = eta * n / (30 * r**r)
    if sizes[0] > v0_bound:
        wa.append(("V0", sizes[0], v0_bound))
    lo = floor((1 - eta / (30 * r)) * Fraction(n, r))
    hi = ceil((1 + eta / (30 * r)) * Fraction(n, r))
    for i in range(1, r + 1):
        if not lo <= sizes[i] <= hi:
            wa.append((i, sizes[i], lo, hi))

    # (b) triangle-free parts, (c) internal degree <= 2
    wb, wc = [], []
    for i in range(1, r + 1):
        sub, back = h.induced(ps[i])
        tri = find_clique(sub, 3)
        if tri is not None:
            wb.append((i, tuple(back[x] for x in tri)))
        for v in ps[i]:
            d = (h.nbr_mask(v) & pm[i]).bit_count()
            if d > 2:
                wc.append((i, v, d))

    # (d) cross degrees
    wd = []
    for i in range(1, r + 1):
        for v in ps[i]:
            row = h.nbr_mask(v)
            for j in range(1, r + 1):
                if j == i:
                    continue
                d = (row & pm[j]).bit_count()
                need = (1 - eta) * sizes[j]
                if d < need:
                    wd.append((v, i, j, d, need))

    # (e) exceptional vertices are typed
    types = {}
    we = []
    for v in ps[0]:
        row = h.nbr_mask(v)
        degs = [0] + [(row & pm[j]).bit_count() for j in range(1, r + 1)]
        t = classify_vertex(degs, sizes, eta, r)
        types[v] = t
        if t.kind == "Untyped":
            we.append(v)

    conditions = {
        "a": ConditionResult(not wa, tuple(wa)),
        "b": ConditionResult(not wb, tuple(wb)),
        "c": ConditionResult(not wc, tuple(wc)),
        "d": ConditionResult(not wd, tuple(wd)),
        "e": ConditionResult(not we, tuple(we)),
    }
    return PartitionCertificate(ps, eta, r, conditions, types)


def is_radical(h: Graph, parts: Sequence[Iterable[int]]) -> bool:
    """(0, r)-extremal with every internal degree exactly 2."""
    cert = check_extremal(h, parts, 0)
    if not cert.passed:
        return False
    for p in cert.parts[1:]:
        pm = mask_of(p)
        if any((h.nbr_mask(v) & pm).bit_count() != 2 for v in p):
            return False
    return True


def build_extremal_partition(h: Graph, x_parts: Sequence[Iterable[int]], eta) -> PartitionCertificate:
    """Refine a balanced r-partition into a candidate extremal partition.

    Vertices badly connected to some other part are pulled out; those
    deficient towards exactly one part are reassigned to it, the rest
    form ``V_0``.  The certificate of the result is returned.
    """
    eta = Fraction(eta)
    xs = normalize_partition(h.n, x_parts, with_v0=False)
    r = len(xs)
    if r < 1:
        raise BadPartition("need at least one part")
    if sorted(len(x) for x in xs) != sorted(balanced_sizes(h.n, r)):
        raise BadPartition(f"X-parts {[len(x) for x in xs]} are not balanced")
    xm = [mask_of(x) for x in xs]
    thresh = [(1 - Fraction(2, 3) * eta) * len(x) for x in xs]

    def deficient(v: int) -> list[int]:
        row = h.nbr_mask(v)
        return [k for k in range(r) if (row & xm[k]).bit_count() <= thresh[k]]

    owner = {v: i for i, x in enumerate(xs) for v in x}
    y0 = set()
    for v in range(h.n):
        if any(k != owner[v] for k in deficient(v)):
            y0.add(v)
    v0, new_parts = [], [set(x) - y0 for x in xs]
    for v in sorted(y0):
        d = deficient(v)
        if len(d) == 1:
            new_parts[d[0]].add(v)
        else:
            v0.append(v)
    return check_extremal(h, [v0] + new_parts, eta, r)


@dataclass(frozen=True)
class GreedyK3r:
    witness: tuple | None
    failed_level: int | None = None
    rejected: str | None = None

    @property
    def found(self) -> bool:
        return self.witness is not None


def _smallest_independent_triple(h: Graph, cand: Sequence[int]):
    for a, b, c in combinations(cand, 3):
        if not (h.has_edge(a, b) or h.has_edge(a, c) or h.has_edge(b, c)):
            return (a, b, c)
    return None


def find_k3r_greedy(h: Graph, parts: Sequence[Iterable[int]], w: Sequence[int], a_sets: Sequence[Iterable[int]]) -> GreedyK3r:
    """Extend the triple ``w`` in ``V_1`` part by part through ``A_2..A_r``.

    At each level the next triple is the lexicographically smallest
    independent triple inside ``A_l`` that is joined to everything chosen
    so far.  The result is either a verified witness or the level at which
    the common neighbourhood ran dry.
    """
    from .graph import is_k3r_witness

    ps = normalize_partition(h.n, parts)
    r = len(ps) - 1
    w = tuple(sorted(set(w)))
    if len(w) != 3 or not set(w) <= set(ps[1]):
        raise BadInput("w must be three distinct vertices of V_1")
    if len(a_sets) != r - 1:
        raise BadInput(f"expected {r - 1} sets A_2..A_r, got {len(a_sets)}")
    a_list = [tuple(sorted(set(a))) for a in a_sets]
    for i, a in enumerate(a_list, start=2):
        if not set(a) <= set(ps[i]):
            raise BadInput(f"A_{i} is not contained in V_{i}")
    if not h.is_independent(w):
        return GreedyK3r(None, None, "w contains an edge, so it cannot be a K_3^r part")
    chosen = [w]
    common = h.nbr_mask(w[0]) & h.nbr_mask(w[1]) & h.nbr_mask(w[2])
    for level, a in enumerate(a_list, start=2):
        cand = [v for v in a if common >> v & 1]
        t = _smallest_independent_triple(h, cand)
        if t is None:
            return GreedyK3r(None, level)
        chosen.append(t)
        common &= h.nbr_mask(t[0]) & h.nbr_mask(t[1]) & h.nbr_mask(t[2])
    witness = tuple(chosen)
    assert is_k3r_witness(h, witness)
    return GreedyK3r(witness)


@dataclass(frozen=True)
class ZykovChain:
    ratios: tuple[Fraction, ...]
    monotone: bool


def zykov_ratios(h: Graph, r: int) -> ZykovChain:
    """Ratios ``e_k(h) / e_k(T_r(n))`` for ``k = 1..r`` on a K_{r+1}-free graph."""
    if r < 1:
        raise ValueError("r must be positive")
    if h.n < r:
        raise ValueError("need at least r vertices")
    e = clique_vector(h, r + 1)
    if e[r + 1]:
        raise KPlusOneClique(f"graph contains K_{r + 1}", find_clique(h, r + 1))
    t = clique_vector(turan(h.n, r), r)
    ratios = tuple(Fraction(e[k], t[k]) for k in range(1, r + 1))
    mono = all(a >= b for a, b in zip(ratios, ratios[1:]))
    if not mono:
        log.error("non-monotone clique ratio chain %s on a K_%d-free graph", ratios, r + 1)
    return ZykovChain(ratios, mono)


def partition_cost(h: Graph, parts: Sequence[Iterable[int]]) -> int:
    """Edits turning ``h`` into the complete multipartite graph on ``parts``."""
    ps = [tuple(p) for p in parts]
    pm = [mask_of(p) for p in ps]
    intra = sum((h.nbr_mask(v) & pm[i]).bit_count() for i, p in enumerate(ps) for v in p) // 2
    sizes = [len(p) for p in ps]
    cross_pairs = sum(a * b for a, b in combinations(sizes, 2))
    return intra + cross_pairs - (h.m - intra)


def closeness_to_turan(h: Graph, r: int, mode: str = "exact", exact_limit: int = 14) -> tuple[int, Parts]:
    """Edit distance from ``h`` to ``T_r(n)`` over balanced partitions.

    ``exact`` enumerates partitions up to swapping equal-sized parts and
    returns the lexicographically first optimum; ``heuristic`` runs
    steepest-descent swaps from a greedy seed and returns an upper bound.
    """
    n = h.n
    sizes = balanced_sizes(n, r)
    masks = h.masks
    if mode == "exact":
        if n > exact_limit:
            raise TooLargeForExact(f"n={n} exceeds the exact-mode bound {exact_limit}")
        best = [None, None]
        fill = [0] * r
        pmask = [0] * r
        assign = [0] * n

        def rec(v: int, intra: int) -> None:
            if best[0] is not None and intra >= best[0]:
                return
            if v == n:
                best[0], best[1] = intra, list(assign)
                return
            opened: set[int] = set()
            for i in range(r):
                if fill[i] == sizes[i]:
                    continue
                if fill[i] == 0:
                    if sizes[i] in opened:
                        continue
                    opened.add(sizes[i])
                add = (masks[v] & pmask[i]).bit_count()
                fill[i] += 1
                pmask[i] |= 1 << v
                assign[v] = i
                rec(v + 1, intra + add)
                fill[i] -= 1
                pmask[i] &= ~(1 << v)

        rec(0, 0)
        parts = tuple(tuple(v for v in range(n) if best[1][v] == i) for i in range(r))
    elif mode == "heuristic":
        cap = list(sizes)
        groups: list[list[int]] = [[] for _ in range(r)]
        gm = [0] * r
        for v in range(n):
            choices = [i for i in range(r) if len(groups[i]) < cap[i]]
            i = min(choices, key=lambda i: ((masks[v] & gm[i]).bit_count(), i))
            groups[i].append(v)
            gm[i] |= 1 << v
        while True:
            best_delta, best_swap = 0, None
            for a, b in combinations(range(r), 2):
                for u in groups[a]:
                    for w in groups[b]:
                        adj = masks[u] >> w & 1
                        delta = ((masks[w] & gm[a]).bit_count() + (masks[u] & gm[b]).bit_count() - 2 * adj
                                 - (masks[u] & gm[a]).bit_count() - (masks[w] & gm[b]).bit_count())
                        if delta < best_delta:
                            best_delta, best_swap = delta, (a, b, u, w)
            if best_swap is None:
                break
            a, b, u, w = best_swap
            groups[a].remove(u)
            groups[b].remove(w)
            groups[a].append(w)
            groups[b].append(u)
            gm[a] ^= (1 << u) | (1 << w)
            gm[b] ^= (1 << u) | (1 << w)
        parts = tuple(tuple(sorted(g)) for g in groups)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return partition_cost(h, parts), parts


# ---------------------------------------------------------------------------
# local search


@dataclass(frozen=True)
class Move:
    kind: str
    gain: Fraction
    pre: tuple[int, ...]
    post: tuple[int, ...]
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"kind": self.kind, "gain": str(self.gain), "pre": list(self.pre), "post": list(self.post),
                "detail": _jsonable(self.detail)}


@dataclass
class MoveLog:
    moves: list[Move] = field(default_factory=list)
    parts: Parts = ()

    def __len__(self):
        return len(self.moves)

    def __iter__(self):
        return iter(self.moves)

    def kinds(self) -> list[str]:
        return [m.kind for m in self.moves]

    def to_json(self) -> dict:
        return {"moves": [m.to_json() for m in self.moves], "parts": [list(p) for p in self.parts]}


MOVE_ORDER = ("EdgeAdd", "Type1Relocate", "Type2Relocate", "PathRepair", "Rebalance")


class _State:
    def __init__(self, g: Graph, parts: Parts):
        self.n = g.n
        self.edges = set(g.edge_set)
        self.parts = [set(p) for p in parts]

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)

    def frozen_parts(self) -> Parts:
        return tuple(tuple(sorted(p)) for p in self.parts)

    def copy(self) -> "_State":
        s = _State.__new__(_State)
        s.n = self.n
        s.edges = set(self.edges)
        s.parts = [set(p) for p in self.parts]
        return s

    def add(self, u, v):
        self.edges.add((min(u, v), max(u, v)))

    def remove(self, u, v):
        self.edges.discard((min(u, v), max(u, v)))

    def adj(self, u, v) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def intra(self, i: int) -> list[tuple[int, int]]:
        p = self.parts[i]
        return sorted(e for e in self.edges if e[0] in p and e[1] in p)

    def part_of(self, v: int) -> int:
        for i, p in enumerate(self.parts):
            if v in p:
                return i
        raise KeyError(v)


def _relocate(st: _State, v: int, j: int) -> _State:
    new = st.copy()
    for e in [e for e in new.edges if v in e]:
        new.edges.discard(e)
    new.parts[0].discard(v)
    for i in range(1, len(new.parts)):
        if i != j:
            for u in new.parts[i]:
                new.add(v, u)
    new.parts[j].add(v)
    return new


def _path_repair(st: _State, i: int) -> tuple[_State, str]:
    part = sorted(st.parts[i])
    es = st.intra(i)
    deg = {v: 0 for v in part}
    nb: dict[int, set] = {v: set() for v in part}
    for a, b in es:
        deg[a] += 1
        deg[b] += 1
        nb[a].add(b)
        nb[b].add(a)
    for a, b in combinations(part, 2):
        if deg[a] <= 1 and deg[b] <= 1 and b not in nb[a] and not (nb[a] & nb[b]):
            # joining two path ends; a 4-cycle or longer at worst
            new = st.copy()
            new.add(a, b)
            return new, "extend"
    # rewire the part into a single path with the same edge count, then extend it
    new = st.copy()
    for a, b in es:
        new.remove(a, b)
    k = len(es)
    for t in range(k):
        new.add(part[t], part[t + 1])
    if k + 1 < len(part):
        new.add(part[k], part[k + 1])
    else:
        new.add(part[0], part[-1])
    return new, "rewire"


def _rebalance(st: _State, a: int, b: int) -> _State:
    new = st.copy()
    x = max(new.parts[a])
    nb_a = sorted(u for u in new.parts[a] if new.adj(x, u))
    for u in nb_a:
        new.remove(x, u)
    new.parts[a].discard(x)
    splice = len(nb_a) == 2 and not new.adj(*nb_a) and not any(
        new.adj(nb_a[0], w) and new.adj(nb_a[1], w) for w in new.parts[a])
    if len(nb_a) == 2 and splice:
        new.add(*nb_a)
    elif new.intra(a) != [] or nb_a:
        # cannot splice without a triangle: rebuild the part as one cycle
        part = sorted(new.parts[a])
        for e in new.intra(a):
            new.remove(*e)
        for t in range(len(part)):
            new.add(part[t], part[(t + 1) % len(part)])
    for u in new.parts[a]:
        new.add(x, u)
    # x joins part b by subdividing its smallest internal edge
    for u in new.parts[b]:
        new.remove(x, u)
    p, q = new.intra(b)[0]
    new.remove(p, q)
    new.add(p, x)
    new.add(q, x)
    new.parts[b].add(x)
    return new


def maximize_clique_fn(n: int, r: int, F: CliqueFunction, start: Graph, parts: Sequence[Iterable[int]] | None = None,
                       eta=None, max_moves: int | None = None) -> tuple[Graph, MoveLog]:
    """Improve an extremal start graph by local moves until it is r-radical.

    Move classes are tried in the fixed order of :data:`MOVE_ORDER`.  A class
    whose structural trigger is present must contain a strictly improving
    candidate (scanned in lexicographic order); otherwise
    :class:`NonImprovingMove` is raised.  Every accepted move keeps the graph
    (eta, r)-extremal, which is re-certified after each step.
    """
    if start.n != n:
        raise BadInput(f"start graph has {start.n} vertices, expected {n}")
    if not 2 <= F.order <= r:
        raise BadInput(f"clique function order {F.order} must lie in [2, r={r}]")
    eta = default_eta(r) if eta is None else Fraction(eta)
    if parts is None:
        parts = [()] + natural_partition(n, r)
    cert = check_extremal(start, parts, eta, r)
    if not cert.passed:
        raise NotExtremal(f"start graph fails conditions {cert.failed()}", cert)
    k = F.order
    st = _State(start, cert.parts)
    g = start
    cv = clique_vector(g)
    value = eval_clique_function(F, cv)
    moves = MoveLog()
    cap = max_moves if max_moves is not None else 4 * n * n + 16
    cprime = F.multipartite_coefficients()

    def attempt(kind: str, candidates) -> bool:
        nonlocal st, g, cv, value, cert
        tried = False
        for new, detail in candidates:
            tried = True
            ng = new.graph()
            ncv = clique_vector(ng)
            nvalue = eval_clique_function(F, ncv)
            gain = nvalue - value
            if gain <= 0:
                continue
            ncert = check_extremal(ng, new.frozen_parts(), eta, r)
            if not ncert.passed:
                raise NotExtremal(f"{kind} left the extremal class (conditions {ncert.failed()})", ncert)
            moves.moves.append(Move(kind, gain, cv.counts, ncv.counts, detail))
            st, g, cv, value, cert = new, ng, ncv, nvalue, ncert
            return True
        if tried:
            moves.parts = st.frozen_parts()
            raise NonImprovingMove(f"{kind} is applicable but no candidate increases F (n={n} may be below the"
                                   f" size where the gain is guaranteed)", kind, None, moves)
        return False

    def edge_adds():
        owner = {v: i for i, p in enumerate(st.parts) for v in p}
        for u in range(n):
            if owner[u] == 0:
                continue
            for v in range(u + 1, n):
                if owner[v] not in (0, owner[u]) and not st.adj(u, v):
                    new = st.copy()
                    new.add(u, v)
                    yield new, {"edge": (u, v)}

    def relocations(kind: str):
        for v in sorted(st.parts[0]):
            t = cert.vertex_types.get(v)
            if t is None or t.kind != kind:
                continue
            small = [i for i in range(1, r + 1) if len(st.parts[i]) * r < n]
            j = min(small, key=lambda i: (len(st.parts[i]), i))
            yield _relocate(st, v, j), {"vertex": v, "to_part": j, "type": (t.g, t.h)}

    def repairs():
        for i in range(1, r + 1):
            if len(st.intra(i)) < len(st.parts[i]):
                new, how = _path_repair(st, i)
                yield new, {"part": i, "how": how}

    def rebalances():
        sizes = [len(p) for p in st.parts]
        for a in range(1, r + 1):
            for b in range(1, r + 1):
                if a != b and sizes[a] - sizes[b] >= 2:
                    sz = sizes[1:]
                    predicted = sum(cprime[j] * sigma_shift_delta(sz, j, a - 1, b - 1) for j in range(k + 1))
                    yield _rebalance(st, a, b), {"from": a, "to": b, "sizes": tuple(sz), "predicted_gain": predicted}

    while True:
        if len(moves) >= cap:
            raise RuntimeError(f"move cap {cap} reached")
        if attempt("EdgeAdd", edge_adds()):
            continue
        if attempt("Type1Relocate", relocations("Type1")):
            continue
        if attempt("Type2Relocate", relocations("Type2")):
            continue
        if attempt("PathRepair", repairs()):
            continue
        if attempt("Rebalance", rebalances()):
            continue
        break
    moves.parts = st.frozen_parts()
    if not is_radical(g, moves.parts):
        raise RuntimeError("local search stopped on a graph that is not r-radical")
    return g, moves


def radical_implies_j(h: Graph, parts: Sequence[Iterable[int]]) -> dict[int, int]:
    """Explicit isomorphism from a radical graph with cycle parts onto ``J_r(n)``.

    Raises :class:`NotSingleCycle` naming the first part that is a union of
    two or more cycles.
    """
    ps = normalize_partition(h.n, parts)
    if not is_radical(h, ps):
        raise BadInput("graph is not r-radical with respect to the given partition")
    r = len(ps) - 1
    walks = []
    for i in range(1, r + 1):
        part = ps[i]
        pm = mask_of(part)
        start = part[0]
        order = [start]
        prev, cur = None, start
        while True:
            nxt = min(u for u in iter_bits(h.nbr_mask(cur) & pm) if u != prev)
            if nxt == start:
                break
            order.append(nxt)
            prev, cur = cur, nxt
        if len(order) != len(part):
            raise NotSingleCycle(
                f"part V_{i} splits into several cycles (the one through {start} has length {len(order)})", i)
        walks.append((len(part), i, order))
    walks.sort(key=lambda t: (-t[0], t[1]))
    targets = natural_partition(h.n, r)
    phi = {}
    for (size, _, order), block in zip(walks, targets):
        assert size == len(block)
        for v, t in zip(order, block):
            phi[v] = t
    target = j_graph(h.n, r)
    if not all(target.has_edge(phi[u], phi[v]) for u, v in h.edge_set) or h.m != target.m:
        raise AssertionError("constructed map is not an isomorphism")
    return phi


def parse_partition(text: str) -> Parts:
    """One line per part, ``V_0`` first; blank lines are empty parts."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    try:
        return tuple(tuple(int(x) for x in ln.split()) for ln in lines)
    except ValueError as exc:
        raise BadPartition(f"bad partition line: {exc}") from None


def format_partition(parts: Sequence[Iterable[int]]) -> str:
    return "".join(" ".join(map(str, sorted(p))) + "\n" for p in parts)


def read_partition(path) -> Parts:
    with open(path) as fh:
        return parse_partition(fh.read())
