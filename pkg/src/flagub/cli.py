"""Command line entry point.

Exit codes: 0 completed (or the checked property holds), 2 a violation or
finding was recorded, 1 an error or a failed ``check``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import complex as cx
from .constructions import cycle, cycle_join, j_graph, j_star, k3r, natural_partition, turan
from .errors import BudgetExceeded, FlagubError
from .extremal import check_extremal, format_partition, maximize_clique_fn, read_partition
from .facevectors import CliqueFunction, FaceVectorSet
from .graph import Graph, read_graph
from .harness import VERIFIERS, growth_probe, search_pseudomanifolds, write_findings

OK, FAIL, FINDING = 0, 1, 2


def _emit(obj, out=None) -> None:
    text = json.dumps(obj, indent=2, default=str)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def load_complex(path) -> cx.SimplicialComplex:
    """Read a graph (text or JSON) as its clique complex, or a facet-list complex."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return cx.clique_complex(Graph.from_json(text))
    first = stripped.split("\n", 1)[0].split()
    if len(first) == 2:
        return cx.clique_complex(Graph.from_text(text))
    return cx.SimplicialComplex.from_text(text)


def _build(args) -> Graph:
    fam = args.family
    if fam == "turan":
        return turan(args.n, args.r)
    if fam == "jr":
        return j_graph(args.n, args.r)
    if fam == "jr-star":
        return j_star(args.n, args.r)
    if fam == "k3r":
        return k3r(args.r)
    if fam == "cycle":
        return cycle(args.n)
    if fam == "join":
        if not args.lengths:
            raise FlagubError("join needs --lengths a,b,...")
        return cycle_join([int(x) for x in args.lengths.split(",")])
    raise FlagubError(f"unknown family {fam}")


def cmd_construct(args) -> int:
    g = _build(args)
    text = json.dumps(g.to_json()) + "\n" if args.format == "json" else g.to_text()
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_check(args) -> int:
    if args.what == "extremal":
        if args.partition is None or args.r is None:
            raise FlagubError("extremal check needs --partition and --r")
        g = read_graph(args.input)
        eta = Fraction(args.eta) if args.eta else Fraction(1, 14 * args.r**args.r)
        cert = check_extremal(g, read_partition(args.partition), eta, args.r)
        _emit(cert.to_json())
        return OK if cert.passed else FAIL
    k = load_complex(args.input)
    if args.what == "flag-manifold":
        cert = cx.is_homology_manifold(k)
        out = cert.to_json()
        out["flag"] = k.is_flag()
        ok = cert.is_manifold and out["flag"]
    elif args.what == "sphere":
        ok = cx.is_homology_sphere(k)
        out = {"homology_sphere": ok, "dimension": k.dimension, "homology": cx.homology(k).to_json()}
    elif args.what == "eulerian":
        ok = cx.is_eulerian(k)
        out = {"eulerian": ok, "dimension": k.dimension}
    else:
        ok = cx.is_weak_pseudomanifold(k)
        out = {"weak_pseudomanifold": ok, "dimension": k.dimension}
    _emit(out)
    return OK if ok else FAIL


def cmd_stats(args) -> int:
    k = load_complex(args.input)
    kinds = [s.strip() for s in args.vectors.split(",") if s.strip()]
    bad = [s for s in kinds if s not in ("f", "h", "g", "gamma")]
    if bad:
        raise FlagubError(f"unknown vector kinds {bad}")
    _emit(FaceVectorSet.from_f(k.f_vector).to_json(kinds))
    return OK


def cmd_verify(args) -> int:
    k = load_complex(args.input)
    rep = VERIFIERS[args.conjecture](k, args.r, args.kind)
    _emit(rep.to_json(), args.out)
    if rep.verdict == "NotApplicable":
        print(f"not applicable: {rep.reason}", file=sys.stderr)
        return FAIL
    return FINDING if rep.verdict == "ViolationAt" else OK


def cmd_search(args) -> int:
    if not args.pseudo:
        raise FlagubError("only --pseudo search is available")
    stream = search_pseudomanifolds(args.d, args.n_max, args.mode, args.budget, args.seed)
    violations = 0

    def tally(items):
        nonlocal violations
        for it in items:
            violations += it["violation"]
            yield it

    written = 0
    status = OK
    try:
        if args.out:
            written = write_findings(tally(stream), args.out)
        else:
            for it in tally(stream):
                print(json.dumps(it, sort_keys=True))
                written += 1
    except BudgetExceeded as exc:
        print(f"budget exhausted after {exc.visited} nodes; partial results kept", file=sys.stderr)
        status = FAIL
    print(f"{written} findings, {violations} violations", file=sys.stderr)
    return FINDING if violations else status


def cmd_probe(args) -> int:
    if not args.growth:
        raise FlagubError("only --growth probing is available")
    rows = growth_probe(args.r, range(args.n_min, args.n_max + 1))
    for row in rows:
        print(json.dumps({k: str(v) if isinstance(v, Fraction) else v for k, v in row.items()}))
    return OK if all(row["within_bound"] for row in rows) else FINDING


def cmd_maximize(args) -> int:
    coeffs = [Fraction(c) for c in args.coeffs.split(",")]
    F = CliqueFunction(tuple(coeffs))
    start = read_graph(args.start) if args.start else turan(args.n, args.r)
    if args.partition:
        parts = read_partition(args.partition)
    else:
        parts = [()] + natural_partition(args.n, args.r)
    eta = Fraction(args.eta) if args.eta else None
    g, moves = maximize_clique_fn(args.n, args.r, F, start, parts, eta=eta)
    out = {"graph": g.to_json(), "partition": format_partition(moves.parts).splitlines(),
           "value": str(F(g)), **moves.to_json()}
    _emit(out, args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="flagub", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build a named graph family")
    c.add_argument("--family", required=True, choices=["turan", "jr", "jr-star", "k3r", "cycle", "join"])
    c.add_argument("--n", type=int)
    c.add_argument("--r", type=int)
    c.add_argument("--lengths", help="cycle lengths for --family join, comma separated")
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--out")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("check", help="certify a topological or extremal property")
    c.add_argument("--input", required=True)
    c.add_argument("--what", required=True,
                   choices=["flag-manifold", "sphere", "eulerian", "pseudomanifold", "extremal"])
    c.add_argument("--partition")
    c.add_argument("--eta")
    c.add_argument("--r", type=int)
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("stats", help="print f/h/g/gamma vectors")
    c.add_argument("--input", required=True)
    c.add_argument("--vectors", default="f,h,g,gamma")
    c.set_defaults(func=cmd_stats)

    c = sub.add_parser("verify", help="compare a complex against the extremal bounds")
    c.add_argument("--conjecture", required=True, choices=sorted(VERIFIERS))
    c.add_argument("--input", required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--kind", choices=["f", "h", "g", "gamma"], default="f")
    c.add_argument("--out")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("search", help="search flag weak pseudomanifolds")
    c.add_argument("--pseudo", action="store_true")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--n-max", type=int, required=True)
    c.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--budget", type=int)
    c.add_argument("--out")
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("probe", help="clique growth of J_r(n)")
    c.add_argument("--growth", action="store_true")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n-min", type=int, required=True)
    c.add_argument("--n-max", type=int, required=True)
    c.set_defaults(func=cmd_probe)

    c = sub.add_parser("maximize", help="local search for a clique function")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--coeffs", required=True, help="c_k,...,c_0")
    c.add_argument("--start")
    c.add_argument("--partition")
    c.add_argument("--eta")
    c.add_argument("--out")
    c.set_defaults(func=cmd_maximize)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FlagubError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return FAIL
