"""Bound verifiers over certified complexes, plus pseudomanifold search.

Verifier reports and search findings are plain JSON-serialisable objects.
A violation of an open conjecture is reported as a finding, never raised.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .complex import SimplicialComplex, homology, is_homology_manifold
from .constructions import graph_join, j_graph, j_star, natural_partition
from .errors import BadInput, BadReplacement, BudgetExceeded
from .facevectors import FaceVectorSet, growth_constant
from .graph import Graph, clique_vector, iter_bits
from .iso import are_isomorphic, canonical_labeling

SCHEMA = 1


def sha256_text(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def compact_skeleton(m: SimplicialComplex) -> Graph:
    """1-skeleton restricted to the vertices that occur, relabelled 0..n-1."""
    g = m.one_skeleton()
    return g.induced(m.vertices())[0]


@dataclass
class VerificationReport:
    subject: str
    family: dict
    kind: str
    comparisons: list = field(default_factory=list)
    verdict: str = "AllHold"
    violation: object = None
    reason: str | None = None
    isomorphic: bool | None = None
    input_hashes: dict = field(default_factory=dict)
    reproduce: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict == "AllHold"

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return str(x)
            if isinstance(x, dict):
                return {k: enc(v) for k, v in x.items()}
            if isinstance(x, (list, tuple)):
                return [enc(v) for v in x]
            return x

        return {
            "schema": SCHEMA,
            "subject": self.subject,
            "family": enc(self.family),
            "kind": self.kind,
            "comparisons": enc(self.comparisons),
            "verdict": self.verdict,
            "violation": enc(self.violation),
            "reason": self.reason,
            "isomorphic": self.isomorphic,
            "input_hashes": self.input_hashes,
            "reproduce": self.reproduce,
        }


def _report(op: str, m: SimplicialComplex, r: int, kind: str, family: dict) -> VerificationReport:
    text = m.to_text()
    digest = sha256_text(text)
    return VerificationReport(
        subject=f"complex:{digest[:12]}",
        family=family,
        kind=kind,
        input_hashes={"complex": digest},
        reproduce={"op": op, "r": r, "kind": kind, "complex": text},
    )


def _certify_flag_manifold(m: SimplicialComplex, dim: int, sphere: bool = False) -> str | None:
    """Reason the complex is not a flag homology manifold of dimension ``dim`` (or ``None``)."""
    if m.dimension != dim:
        return f"dimension {m.dimension}, expected {dim}"
    if not m.is_pure():
        return "complex is not pure"
    if not m.is_flag():
        return "complex is not flag"
    cert = is_homology_manifold(m)
    if not cert:
        return f"link of face {cert.failing_face} is not a homology sphere"
    if sphere and not homology(m).is_sphere(dim):
        return "homology differs from a sphere"
    return None


def _compare(report: VerificationReport, kind: str, values, bounds, indices) -> None:
    for i in indices:
        v = values[i] if i < len(values) else 0
        b = bounds[i] if i < len(bounds) else 0
        report.comparisons.append({"kind": kind, "index": i, "value": v, "bound": b, "slack": b - v})
        if v > b and report.verdict == "AllHold":
            report.verdict = "ViolationAt"
            report.violation = {"kind": kind, "index": i}


def verify_upper_bounds(m: SimplicialComplex, r: int) -> VerificationReport:
    """Compare f, h, g and gamma of ``m`` against ``J_r(n)`` index by index."""
    d = 2 * r
    rep = _report("upper-bounds", m, r, "f,h,g,gamma", {"r": r})
    why = _certify_flag_manifold(m, d - 1)
    n = len(m.vertices())
    if why is None and n < 4 * r:
        why = f"n={n} is below 4r"
    if why is not None:
        rep.verdict, rep.reason = "NotApplicable", why
        return rep
    rep.family["n"] = n
    mine = FaceVectorSet.from_f(m.f_vector)
    target = j_graph(n, r)
    ref = FaceVectorSet.of_graph(target)
    # f is indexed from f_{-1}; shift by one so index i means f_i
    _compare(rep, "f", mine.f[1:], ref.f[1:], range(1, d))
    _compare(rep, "h", mine.h, ref.h, range(2, d - 1))
    _compare(rep, "g", mine.g, ref.g, range(2, r + 1))
    if mine.gamma is not None:
        _compare(rep, "gamma", mine.gamma, ref.gamma, range(2, r + 1))
    if any(c["slack"] == 0 for c in rep.comparisons):
        rep.isomorphic = are_isomorphic(compact_skeleton(m), target)
    return rep


def verify_ratio_chain(m: SimplicialComplex, r: int, kind: str = "f") -> VerificationReport:
    """Exact ratios ``v_i(M) / v_i(J_r(n))`` and the first place the chain increases."""
    if kind not in ("f", "h", "g", "gamma"):
        raise BadInput(f"unknown vector kind {kind!r}")
    rep = _report("ratio-chain", m, r, kind, {"r": r})
    why = _certify_flag_manifold(m, 2 * r - 1)
    n = len(m.vertices())
    if why is None and n < 4 * r:
        why = f"n={n} is below 4r"
    mine = FaceVectorSet.from_f(m.f_vector) if why is None else None
    if why is None and kind == "gamma" and mine.gamma is None:
        why = "h-vector is not palindromic"
    if why is not None:
        rep.verdict, rep.reason = "NotApplicable", why
        return rep
    rep.family["n"] = n
    ref = FaceVectorSet.of_graph(j_graph(n, r))
    # index 1 is n, n-d, n-d-1 or n-2d, so the chain starts at ratio 1
    mv, rv = mine.vector(kind), ref.vector(kind)
    prev = None
    for i in range(1, max(len(mv), len(rv))):
        v = mv[i] if i < len(mv) else 0
        b = rv[i] if i < len(rv) else 0
        ratio = Fraction(v, b) if b else None
        rep.comparisons.append({"kind": kind, "index": i, "value": v, "bound": b, "slack": b - v, "ratio": ratio})
        if ratio is None:
            continue
        if prev is not None and ratio > prev and rep.verdict == "AllHold":
            rep.verdict = "ViolationAt"
            rep.violation = {"kind": kind, "index": i}
        prev = ratio
    return rep


def verify_even_dim(m: SimplicialComplex, r: int) -> VerificationReport:
    """Compare f and gamma of a flag homology 2r-sphere against ``J*_r(n)``."""
    d = 2 * r + 1
    rep = _report("even-dim", m, r, "f,gamma", {"r": r})
    why = _certify_flag_manifold(m, d - 1, sphere=True)
    n = len(m.vertices())
    if why is None and n - 2 < 4 * r:
        why = f"n={n} is too small for J*_r(n)"
    if why is not None:
        rep.verdict, rep.reason = "NotApplicable", why
        return rep
    rep.family["n"] = n
    mine = FaceVectorSet.from_f(m.f_vector)
    target = j_star(n, r)
    ref = FaceVectorSet.of_graph(target)
    _compare(rep, "f", mine.f[1:], ref.f[1:], range(0, d))
    _compare(rep, "gamma", mine.gamma or (), ref.gamma or (), range(1, r + 1))
    if any(c["slack"] == 0 for c in rep.comparisons if c["index"] > 0):
        rep.isomorphic = are_isomorphic(compact_skeleton(m), target)
    return rep


VERIFIERS = {
    "upper-bounds": lambda m, r, kind=None: verify_upper_bounds(m, r),
    "ratio-chain": lambda m, r, kind="f": verify_ratio_chain(m, r, kind),
    "even-dim": lambda m, r, kind=None: verify_even_dim(m, r),
}


def rerun(report: dict | VerificationReport) -> VerificationReport:
    """Re-execute a report from its embedded reproduction block."""
    data = report.to_json() if isinstance(report, VerificationReport) else report
    block = data["reproduce"]
    m = SimplicialComplex.from_text(block["complex"])
    if sha256_text(block["complex"]) != data["input_hashes"]["complex"]:
        raise BadInput("reproduction block does not match the recorded input hash")
    return VERIFIERS[block["op"]](m, block["r"], block.get("kind"))


# ---------------------------------------------------------------------------
# non-uniqueness swap


def is_suspension(g: Graph) -> bool:
    """True when two non-adjacent vertices are each adjacent to every other vertex."""
    full = [v for v in range(g.n) if g.degree(v) == g.n - 2]
    return any(not g.has_edge(a, b) for a, b in combinations(full, 2))


def non_suspension_sphere_8() -> SimplicialComplex:
    """A flag 2-sphere on 8 vertices that is not a suspension.

    Built from the octahedron by subdividing two edges.
    """
    octa = [(0, 2, 4), (0, 2, 5), (0, 3, 4), (0, 3, 5), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5)]
    facets = set(octa)

    def subdivide(a, b, w):
        for f in [f for f in facets if a in f and b in f]:
            facets.discard(f)
            facets.add(tuple(sorted(w if x == a else x for x in f)))
            facets.add(tuple(sorted(w if x == b else x for x in f)))

    subdivide(0, 2, 6)
    subdivide(0, 4, 7)
    return SimplicialComplex.from_facets(sorted(facets), 8)


def non_uniqueness_variant(r: int, n: int, replacement: SimplicialComplex) -> Graph:
    """Swap the suspended cycle ``V_i + {a, b}`` inside ``J*_r(n)`` for another flag 2-sphere.

    The first part whose size plus two matches the replacement is used.
    The result has the clique vector of ``J*_r(n)``.
    """
    parts = natural_partition(n - 2, r)
    if n - 2 < 4 * r:
        raise BadInput(f"J*_r(n) needs n - 2 >= 4r (n={n}, r={r})")
    k = len(replacement.vertices())
    idx = next((i for i, p in enumerate(parts) if len(p) + 2 == k), None)
    if idx is None:
        raise BadReplacement(f"replacement has {k} vertices; needs one of {sorted({len(p) + 2 for p in parts})}")
    why = _certify_flag_manifold(replacement, 2, sphere=True)
    if why is not None:
        raise BadReplacement(f"replacement is not a flag homology 2-sphere: {why}")
    base = j_graph(n - 2, r)
    rest = [v for i, p in enumerate(parts) if i != idx for v in p]
    others = base.induced(rest)[0]
    return graph_join(others, compact_skeleton(replacement))


# ---------------------------------------------------------------------------
# pseudomanifold search


def _max_common(g: Graph, d: int) -> bool:
    """Hereditary part of the test: no d+1 clique, each (d-1)-clique extends in <= 2 ways."""
    masks = g.masks
    ok = True

    def rec(clique_size: int, common: int, start: int) -> bool:
        if clique_size == d - 1:
            return common.bit_count() <= 2
        for v in iter_bits(common >> start << start):
            if not rec(clique_size + 1, common & masks[v], v + 1):
                return False
        return True

    all_mask = (1 << g.n) - 1
    ok = rec(0, all_mask, 0)
    return ok and len(clique_vector(g, d + 1)) <= d + 1


def _is_flag_pseudomanifold(g: Graph, d: int) -> bool:
    if g.n == 0:
        return False
    cv = clique_vector(g)
    if cv.omega != d:
        return False
    from .graph import maximal_cliques

    if any(len(c) != d for c in maximal_cliques(g)):
        return False
    masks = g.masks
    from .graph import iter_cliques

    for c in iter_cliques(g, d - 1):
        common = (1 << g.n) - 1
        for v in c:
            common &= masks[v]
        if common.bit_count() != 2:
            return False
    return True


def canonical_children(g: Graph, accept=None) -> Iterator[Graph]:
    """Canonical-augmentation children of ``g`` (one vertex more), one per isomorphism class.

    ``g`` must be its own canonical representative for the augmentation
    to be complete; ``accept`` filters children before canonisation.
    """
    n = g.n
    parent_form = canonical_labeling(g)[0]
    seen = set()
    for s in range(1 << n):
        h = g.add_vertex(list(iter_bits(s)))
        if accept is not None and not accept(h):
            continue
        form, lab = canonical_labeling(h)
        if form in seen:
            continue
        last = lab.index(n)
        # deleting the new vertex gives g back, so only other choices need a check
        if last != n and canonical_labeling(h.delete_vertex(last))[0] != parent_form:
            continue
        seen.add(form)
        yield Graph(form[0], form[1])


def enumerate_graphs(n_max: int, accept=None, budget: int | None = None) -> Iterator[Graph]:
    """All graphs on up to ``n_max`` vertices satisfying a hereditary ``accept``, up to isomorphism.

    Graphs come out in depth-first order of the augmentation tree.
    """
    visited = 0
    stack = [Graph(0)]
    while stack:
        g = stack.pop()
        visited += 1
        if budget is not None and visited > budget:
            raise BudgetExceeded(f"node budget {budget} exhausted", visited - 1)
        yield g
        if g.n < n_max:
            kids = list(canonical_children(g, accept))
            stack.extend(reversed(kids))


def _finding(g: Graph, d: int, mode: str) -> dict:
    r = d // 2
    cv = clique_vector(g)
    f = list(cv.counts[1:])
    n = g.n
    bound = list(clique_vector(j_graph(n, r)).counts[1:]) if n >= 4 * r else None
    slack = None
    violation = False
    if bound is not None:
        width = max(len(f), len(bound))
        f_pad = f + [0] * (width - len(f))
        b_pad = bound + [0] * (width - len(bound))
        slack = [b - v for v, b in zip(f_pad, b_pad)]
        violation = any(s < 0 for s in slack)
    fr = cv[r + 1]
    return {
        "schema": SCHEMA,
        "d": d,
        "mode": mode,
        "n": n,
        "edges": [list(e) for e in g.edges],
        "f": f,
        "bound": bound,
        "slack": slack,
        "violation": violation,
        "ratio": str(Fraction(fr, n ** (r + 1))),
    }


def search_pseudomanifolds(d: int, n_max: int, mode: str = "exhaustive", budget: int | None = None,
                           seed: int = 0, n_limit: int = 10) -> Iterator[dict]:
    """Stream flag weak (d-1)-pseudomanifolds on at most ``n_max`` vertices.

    Each finding records the face numbers, the per-index slack against
    ``J_{d/2}(n)`` and the ratio ``f_r / n^{r+1}``.  ``budget`` counts
    visited graphs; exhausting it raises :class:`BudgetExceeded` after the
    findings produced so far.
    """
    if d < 2 or d % 2:
        raise BadInput("d must be a positive even integer")
    if mode == "exhaustive":
        if n_max > n_limit:
            raise BadInput(f"exhaustive search is limited to n_max <= {n_limit}")
        accept = lambda h: _max_common(h, d)  # noqa: E731
        for g in enumerate_graphs(n_max, accept, budget):
            if _is_flag_pseudomanifold(g, d):
                yield _finding(g, d, mode)
    elif mode == "random":
        if budget is None:
            raise BadInput("random mode needs a budget")
        rng = random.Random(seed)
        seen = set()
        visited = 0
        while True:
            g = Graph(0)
            while g.n < n_max:
                if visited >= budget:
                    raise BudgetExceeded(f"node budget {budget} exhausted", visited)
                visited += 1
                child = None
                for _ in range(4 * (g.n + 1)):
                    h = g.add_vertex([v for v in range(g.n) if rng.random() < 0.5])
                    if _max_common(h, d):
                        child = h
                        break
                if child is None:
                    break
                g = child
                if _is_flag_pseudomanifold(g, d):
                    form = canonical_labeling(g)[0]
                    if form not in seen:
                        seen.add(form)
                        yield _finding(Graph(form[0], form[1]), d, mode)
    else:
        raise BadInput(f"unknown mode {mode!r}")


def write_findings(findings: Iterable[dict], path) -> int:
    """Append findings as JSON lines; returns the number written."""
    count = 0
    with open(path, "a") as fh:
        for item in findings:
            fh.write(json.dumps(item, sort_keys=True) + "\n")
            fh.flush()
            count += 1
    return count


def growth_probe(r: int, ns: Sequence[int]) -> list[dict]:
    """``e_{r+1}(J_r(n))`` and its ratio to ``n^r`` for each ``n``."""
    rows = []
    cap = growth_constant(r)
    for n in ns:
        e = clique_vector(j_graph(n, r), r + 1)[r + 1]
        ratio = Fraction(e, n**r)
        rows.append({"n": n, "e": e, "ratio": ratio, "within_bound": ratio <= cap})
    return rows
