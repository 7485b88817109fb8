"""Acceptance criteria, one test per criterion.

Each test records a ``PASS``/``FAIL`` line; the lines are printed in the
pytest terminal summary and also when this file is run as a script.
"""

from __future__ import annotations

import random
import sys
import time
from collections import Counter
from fractions import Fraction
from pathlib import Path

import pytest

from flagub.complex import clique_complex, homology, is_homology_manifold, is_homology_sphere, read_complex
from flagub.constructions import balanced_sizes, blocks, cycle, cycle_join, j_graph, j_star, radical_graph, turan
from flagub.errors import NotSingleCycle
from flagub.extremal import check_extremal, default_eta, is_radical, maximize_clique_fn, radical_implies_j, zykov_ratios
from flagub.facevectors import (
    CliqueFunction,
    FaceVectorSet,
    dehn_sommerville_holds,
    f_to_h,
    h_to_gamma,
    multipartite_clique_count,
    sigma_shift_delta,
)
from flagub.graph import Graph, clique_vector, contains_k3r, link_graph
from flagub.harness import compact_skeleton, non_suspension_sphere_8, non_uniqueness_variant, search_pseudomanifolds
from flagub.iso import are_isomorphic, canonical_form

sys.path.insert(0, str(Path(__file__).parent))
from conftest import brute_clique_counts  # noqa: E402

DATA = Path(__file__).parent / "data"
LINES: list[str] = []


def record(number: int, title: str, ok: bool, started: float, detail: str = "") -> None:
    took = time.perf_counter() - started
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({took:.2f}s){' - ' + detail if detail else ''}"
    LINES.append(line)
    print(line)


def flag_manifold_corpus():
    """Flag homology 3-manifolds used by several criteria, all with n <= 14."""
    out = [(f"J_2({n})", j_graph(n, 2)) for n in range(8, 15)]
    for a in range(4, 11):
        for b in range(a, 15 - a):
            out.append((f"C_{a}*C_{b}", cycle_join([a, b])))
    return out


def test_criterion_01_cross_polytope():
    t0 = time.perf_counter()
    g = j_graph(8, 2)
    cv = clique_vector(g).as_list()
    h = f_to_h(cv, 4)
    gamma = h_to_gamma(h)
    sphere = is_homology_sphere(clique_complex(g))
    took = time.perf_counter() - t0
    ok = (cv == [1, 8, 24, 32, 16] == brute_clique_counts(g) and h == [1, 4, 6, 4, 1] and gamma == [1, 0, 0]
          and sphere and took < 1)
    record(1, "cross-polytope golden values", ok, t0, f"f={cv} h={h} gamma={gamma}")
    assert ok


def test_criterion_02_gamma_identity():
    t0 = time.perf_counter()
    bad = []
    checked = 0
    for r in (2, 3):
        d = 2 * r
        for n in range(4 * r, 31):
            gamma = FaceVectorSet.of_graph(j_graph(n, r)).gamma
            ref = clique_vector(turan(n - 4 * r, r)) if n > 4 * r else clique_vector(Graph(0))
            want = [ref[i] for i in range(r + 1)]
            checked += 1
            if list(gamma) != want or gamma[1] != n - 2 * d:
                bad.append((r, n))
    took = time.perf_counter() - t0
    ok = not bad and took < 60
    record(2, "gamma_i(J_r(n)) = e_i(T_r(n-4r)) and gamma_1 = n-2d", ok, t0, f"{checked} cases, failures {bad}")
    assert ok


def test_criterion_03_dehn_sommerville():
    t0 = time.perf_counter()
    bad = []
    count = 0
    for r in (1, 2, 3):
        for n in range(4 * r, 4 * r + 10):
            count += 1
            if not FaceVectorSet.of_graph(j_graph(n, r)).palindromic:
                bad.append(f"J_{r}({n})")
    corpus = [(name, clique_complex(g)) for name, g in flag_manifold_corpus()]
    corpus += [("RP2", read_complex(DATA / "rp2.txt")), ("J*_2(10)", clique_complex(j_star(10, 2))),
               ("C_5", clique_complex(cycle(5)))]
    odd_manifolds = 0
    for name, k in corpus:
        if k.dimension % 2 == 1 and is_homology_manifold(k):
            odd_manifolds += 1
            if not dehn_sommerville_holds(f_to_h(k.f_vector, k.dimension + 1)):
                bad.append(name)
    ok = not bad and odd_manifolds > 0
    record(3, "Dehn-Sommerville on J_r(n) and odd-dimensional corpus manifolds", ok, t0,
           f"{count} constructions, {odd_manifolds} certified manifolds, failures {bad}")
    assert ok


def test_criterion_04_links_k3r_free():
    t0 = time.perf_counter()
    bad = []
    links = 0
    for name, g in flag_manifold_corpus():
        if not is_homology_manifold(clique_complex(g)):
            bad.append(f"{name} not a manifold")
            continue
        for v in range(g.n):
            lk, _ = link_graph(g, (v,))
            links += 1
            if contains_k3r(lk, 2) is not None or contains_k3r(lk, 2, independent=False) is not None:
                bad.append(f"{name} vertex {v}")
    took = time.perf_counter() - t0
    ok = not bad and took < 120
    record(4, "vertex links of flag 3-manifolds are K_3^2-free", ok, t0, f"{links} links, failures {bad[:5]}")
    assert ok


def test_criterion_05_multipartite_formula():
    t0 = time.perf_counter()
    bad = []
    cases = 0
    for r in range(1, 5):
        for n in range(4 * r, 25):
            cv = clique_vector(j_graph(n, r))
            sizes = balanced_sizes(n, r)
            for l in range(0, 2 * r + 1):
                cases += 1
                if multipartite_clique_count(sizes, sizes, l) != cv[l]:
                    bad.append((r, n, l))
            if n <= 12 and cv.as_list() != brute_clique_counts(j_graph(n, r)):
                bad.append((r, n, "brute"))
    ok = not bad
    record(5, "multipartite clique formula equals enumeration", ok, t0, f"{cases} (r, n, l) cases, failures {bad[:5]}")
    assert ok


def perturbations(n, r, count, eta, seed):
    """Seeded perturbations of J_r(n) that are (eta, r)-extremal."""
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 200 * count:
            break
        shift = rng.randint(0, 2)
        sizes = list(balanced_sizes(n, r))
        sizes[0] += shift
        sizes[-1] -= shift
        g = radical_graph(sizes)
        parts = [()] + blocks(sizes)
        remove = []
        if rng.random() < 0.5:
            part = parts[rng.randint(1, r)]
            a = rng.randrange(len(part))
            remove.append((part[a], part[(a + 1) % len(part)]))
        for _ in range(rng.randint(0, 3)):
            i, j = rng.sample(range(1, r + 1), 2)
            remove.append((rng.choice(parts[i]), rng.choice(parts[j])))
        g = g.with_edges(remove=remove)
        if check_extremal(g, parts, eta, r).passed:
            out.append((g, parts))
    return out, tries


def run_maximizer_campaign(eta, per_r=50, seed=0):
    stats = Counter()
    bad = []
    for r in (2, 3):
        n = 24
        starts, _ = perturbations(n, r, per_r, eta if eta is not None else default_eta(r), seed + r)
        if len(starts) < per_r:
            bad.append(f"only {len(starts)} extremal perturbations for r={r}")
        for F in {CliqueFunction.e(2), CliqueFunction.e(r)}:
            target = F(j_graph(n, r))
            for g, parts in starts:
                res, log = maximize_clique_fn(n, r, F, g, parts, eta=eta)
                stats["runs"] += 1
                stats.update(log.kinds())
                if not is_radical(res, log.parts) or F(res) != target:
                    bad.append(f"r={r} F={F} not optimal")
                if any(m.gain <= 0 for m in log):
                    bad.append("non-positive gain")
                for a, b in zip(log.moves, log.moves[1:]):
                    if a.post != b.pre:
                        bad.append("log chain broken")
                cprime = F.multipartite_coefficients()
                for m in log:
                    if m.kind == "Rebalance":
                        sz = m.detail["sizes"]
                        src, dst = m.detail["from"] - 1, m.detail["to"] - 1
                        pred = sum(cprime[j] * sigma_shift_delta(sz, j, src, dst) for j in range(F.order + 1))
                        if pred != m.gain:
                            bad.append(f"rebalance gain {m.gain} vs {pred}")
    return stats, bad


def test_criterion_06_maximizer_convergence():
    t0 = time.perf_counter()
    stats, bad = run_maximizer_campaign(None)
    wide, bad_wide = run_maximizer_campaign(Fraction(1, 4), seed=100)
    took = time.perf_counter() - t0
    ok = not bad and not bad_wide and took < 300 and wide["EdgeAdd"] > 0
    record(6, "maximizer reaches J_r(24) from extremal perturbations", ok, t0,
           f"default eta {dict(stats)}; eta=1/4 {dict(wide)}; failures {(bad + bad_wide)[:5]}")
    assert ok


def test_criterion_07_radical_is_j():
    t0 = time.perf_counter()
    bad = []
    for r in (2, 3):
        for n in range(4 * r, 21):
            g = j_graph(n, r)
            perm = list(range(n))
            random.Random(n * r).shuffle(perm)
            h = g.relabel(perm)
            parts = [()] + [tuple(perm[v] for v in p) for p in blocks(balanced_sizes(n, r))]
            phi = radical_implies_j(h, parts)
            if not all(g.has_edge(phi[u], phi[v]) for u, v in h.edges):
                bad.append((r, n))
    two = radical_graph([8, 8]).with_edges(
        remove=[(0, 7), (3, 4), (8, 15), (11, 12)], add=[(0, 3), (4, 7), (8, 11), (12, 15)])
    try:
        radical_implies_j(two, [()] + blocks([8, 8]))
        bad.append("two-cycle graph accepted")
    except NotSingleCycle:
        pass
    if is_homology_manifold(clique_complex(two)):
        bad.append("two-cycle complex is a manifold")
    ok = not bad
    record(7, "radical graphs with single-cycle parts are J_r(n)", ok, t0, f"failures {bad}")
    assert ok


def test_criterion_08_zykov_chain():
    t0 = time.perf_counter()
    rng = random.Random(8)
    bad = []
    for _ in range(1000):
        r = rng.randint(1, 4)
        n = rng.randint(r, 20)
        k = rng.randint(1, r)
        cuts = sorted(rng.sample(range(1, n), k - 1)) if k > 1 else []
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [n])]
        owner = [i for i, s in enumerate(sizes) for _ in range(s)]
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if owner[u] != owner[v] and rng.random() < p]
        z = zykov_ratios(Graph(n, edges), r)
        if not z.monotone:
            bad.append((n, r))
    for r in range(1, 5):
        for n in range(r, 21):
            if set(zykov_ratios(turan(n, r), r).ratios) != {1}:
                bad.append(("turan", n, r))
    took = time.perf_counter() - t0
    ok = not bad and took < 60
    record(8, "Zykov ratio chain is non-increasing", ok, t0, f"1000 random graphs, failures {bad[:5]}")
    assert ok


def test_criterion_09_homology():
    t0 = time.perf_counter()
    from itertools import combinations

    from flagub.complex import SimplicialComplex

    checks = {
        "circle": homology(clique_complex(cycle(6))).is_sphere(1),
        "octahedron": homology(clique_complex(j_star(6, 1))).is_sphere(2),
    }
    for d in range(1, 7):
        checks[f"boundary simplex {d}"] = homology(SimplicialComplex.from_facets(combinations(range(d + 1), d))).is_sphere(d - 1)
    rp2 = homology(read_complex(DATA / "rp2.txt"))
    checks["RP2"] = rp2.torsion_of(1) == (2,) and not any(rp2.betti.values())
    bad = [k for k, v in checks.items() if not v]
    record(9, "reduced integer homology of standard complexes", not bad, t0, f"failures {bad}")
    assert not bad


def test_criterion_10_non_uniqueness():
    t0 = time.perf_counter()
    sphere = non_suspension_sphere_8()
    g = non_uniqueness_variant(2, 14, sphere)
    ref = j_star(14, 2)
    same = clique_vector(g) == clique_vector(ref)
    iso = are_isomorphic(g, ref)
    ok = same and not iso and is_homology_sphere(sphere) and sphere.is_flag()
    record(10, "same face numbers as J*_2(14) without isomorphism", ok, t0,
           f"clique vector {clique_vector(g).as_list()}, isomorphic={iso}")
    assert ok


def cycle_unions(n):
    def parts(rest, low):
        if rest == 0:
            yield ()
            return
        for p in range(low, rest + 1):
            for tail in parts(rest - p, p):
                yield (p,) + tail

    for split in parts(n, 4):
        edges, start = [], 0
        for p in split:
            edges += [(start + i, start + (i + 1) % p) for i in range(p)]
            start += p
        yield Graph(n, edges)


def test_criterion_11_pseudomanifold_search():
    t0 = time.perf_counter()
    found2 = list(search_pseudomanifolds(2, 8))
    got = {canonical_form(Graph(f["n"], f["edges"])) for f in found2}
    want = {canonical_form(g) for n in range(1, 9) for g in cycle_unions(n)}
    found4 = [f for f in search_pseudomanifolds(4, 8) if f["n"] == 8]
    j8 = [f for f in found4 if are_isomorphic(Graph(8, f["edges"]), j_graph(8, 2))]
    took = time.perf_counter() - t0
    ok = got == want and len(found2) == len(want) and len(j8) == 1 and j8[0]["slack"] == [0, 0, 0, 0] and took < 600
    record(11, "pseudomanifold search recovers cycle unions and J_2(8)", ok, t0,
           f"d=2: {len(found2)} found / {len(want)} expected; d=4 n=8 findings {len(found4)}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
