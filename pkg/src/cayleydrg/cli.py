"""Command-line front end: construct, analyze, decompose, is-cayley,
verify-paper.

Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
3 timeout. JSON output always has sorted keys.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .catalog import run_all
from .grammar import ParseError, parse_group_spec, parse_words
from .graph6 import graph6_decode, graph6_encode
from .graphs import Graph, cayley_graph, metrics, named_graph
from .groups import ConnectionSet
from .spectral import intersection_array, spectrum, srg_parameters
from .structure import krausz_decomposition, connection_structure
from .symmetry import automorphism_group, regular_subgroup_search

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3

MAX_DECISION_N = 700


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _die(msg: str, code: int = EXIT_USAGE) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return code


def _read_graph(args) -> Graph:
    if getattr(args, "named", None):
        return named_graph(args.named)
    src = args.input
    if src is None:
        raise ValueError("provide a graph6 string, a file, or --named NAME")
    if src == "-":
        text = sys.stdin.read().strip()
    else:
        try:
            with open(src) as fh:
                text = fh.read().strip()
        except OSError:
            text = src  # treat the argument as a literal graph6 string
    if not text:
        raise ValueError("empty graph6 input")
    return graph6_decode(text)


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def cmd_construct(args) -> int:
    if args.named:
        g = named_graph(args.named)
    else:
        if not args.group or not args.set:
            return _die("construct needs --named NAME or --group SPEC --set WORDS")
        group = parse_group_spec(args.group)
        words = parse_words(args.set)
        conn = ConnectionSet.from_words(group, words, invclose=args.invclose)
        g = cayley_graph(group, conn)
    if args.out == "json":
        _emit_json(_graph_json(g))
    else:
        print(graph6_encode(g))
    return EXIT_OK


def cmd_analyze(args) -> int:
    g = _read_graph(args)
    m = metrics(g, with_clique=args.clique)
    out = {"metrics": m.to_json()}
    srg = srg_parameters(g)
    out["srg"] = None if srg is None else srg.to_json()
    if m.connected:
        ia = intersection_array(g)
        out["intersection_array"] = None if ia is None else ia.to_json()
    else:
        out["intersection_array"] = None
    sp = spectrum(g)
    out["spectrum"] = sp.to_json()
    out["least_eigenvalue"] = round(sp.least, 9) if sp.pairs else None
    if m.connected and g.n >= 4 and g.m >= 1:
        kd = krausz_decomposition(g)
        out["line_graph"] = (
            {"is_line_graph": False} if kd is None else {
                "is_line_graph": True,
                "root_n": kd.root.n,
                "root_m": kd.root.m,
                "root_bipartite": kd.root_bipartite,
                "cells": len(kd.cliques),
            }
        )
    else:
        out["line_graph"] = {"is_line_graph": None,
                             "reason": "recognition needs a connected graph on >= 4 vertices"}
    _emit_json(out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    out = {}
    if args.group and args.set:
        group = parse_group_spec(args.group)
        conn = ConnectionSet.from_words(group, parse_words(args.set),
                                        invclose=args.invclose)
        rep = connection_structure(group, conn, args.dgon)
        out["connection_structure"] = rep.to_json(group)
        g = cayley_graph(group, conn)
    else:
        g = _read_graph(args)
    if g.n >= 4:
        kd = krausz_decomposition(g)
        out["krausz"] = None if kd is None else kd.to_json()
    else:
        out["krausz"] = None
    _emit_json(out)
    return EXIT_OK


def cmd_is_cayley(args) -> int:
    g = _read_graph(args)
    if g.n > MAX_DECISION_N:
        return _die(f"the Cayley decision is limited to {MAX_DECISION_N} vertices "
                    f"(got {g.n}); the automorphism search would not finish at desk scale")
    out = {}
    res = regular_subgroup_search(g, budget_s=args.budget)
    out["status"] = "cayley" if res.status == "cayley" else res.status
    if res.status == "none":
        out["status"] = "not_cayley"
        out["proof"] = res.reason
    if res.certificate is not None:
        out["certificate"] = res.certificate.to_json()
    # report the arithmetic obstruction when the graph is a recognizable
    # line graph whose root supports it
    if g.n >= 4 and g.m:
        try:
            kd = krausz_decomposition(g)
        except ValueError:
            kd = None
        if kd is not None:
            from .analysis import line_graph_abelian_obstruction

            try:
                rep = line_graph_abelian_obstruction(kd.root)
            except ValueError:
                rep = None
            if rep is not None and rep.applicable:
                out["obstruction"] = rep.to_json()
    _emit_json(out)
    return EXIT_TIMEOUT if out["status"] == "timeout" else EXIT_OK


def cmd_verify_paper(args) -> int:
    try:
        reports, ok = run_all(parallel=args.parallel, case_filter=args.case)
    except ValueError as exc:
        return _die(str(exc))
    for r in reports:
        print(f"{r.status.upper():8s} {r.case}")
    n_pass = sum(r.passed for r in reports)
    print(f"{n_pass}/{len(reports)} cases pass")
    if args.json:
        payload = json.dumps([r.to_json() for r in reports], sort_keys=True, indent=2)
        if args.json == "-":
            print(payload)
        else:
            with open(args.json, "w") as fh:
                fh.write(payload + "\n")
    if any(r.status == "timeout" for r in reports):
        return EXIT_TIMEOUT
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cayleydrg",
        description="Construct Cayley graphs and verify their regularity, "
                    "spectral, and symmetry structure.",
    )
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a graph and print it")
    p.add_argument("--group", help='group spec, e.g. "SD(7,3,2)" or "Z3 x Z3"')
    p.add_argument("--set", help='connection set words, e.g. "b, a^-1 b a"')
    p.add_argument("--invclose", action="store_true",
                   help="close the set under inversion")
    p.add_argument("--named", help='named graph, e.g. "heawood" or "kneser(5,2)"')
    p.add_argument("--out", choices=("graph6", "json"), default="graph6")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("analyze", help="metrics, SRG/DRG structure, spectrum")
    p.add_argument("input", nargs="?", help="graph6 string, file, or - for stdin")
    p.add_argument("--named", help="analyze a named graph instead")
    p.add_argument("--clique", action="store_true",
                   help="also compute the clique number (n <= 100)")
    p.set_defaults(fn=cmd_analyze)

    p = sub.add_parser("decompose", help="Krausz decomposition / connection-set structure")
    p.add_argument("input", nargs="?", help="graph6 string, file, or - for stdin")
    p.add_argument("--named", help="decompose a named graph")
    p.add_argument("--group", help="group spec for a connection-set report")
    p.add_argument("--set", help="connection set words")
    p.add_argument("--invclose", action="store_true")
    p.add_argument("--dgon", type=int, default=2,
                   help="polygon diameter d for the order-2d conditions (default 2)")
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("is-cayley", help="decide Cayley-ness by regular subgroup search")
    p.add_argument("input", nargs="?", help="graph6 string, file, or - for stdin")
    p.add_argument("--named", help="decide a named graph")
    p.add_argument("--budget", type=float, default=60.0, help="seconds before timeout")
    p.set_defaults(fn=cmd_is_cayley)

    p = sub.add_parser("verify-paper", help="run the whole verification catalog")
    p.add_argument("--case", help='fnmatch filter, e.g. "chang_*"')
    p.add_argument("--parallel", type=int, default=0, help="worker threads")
    p.add_argument("--json", help="write full JSON reports to a file (- for stdout)")
    p.set_defaults(fn=cmd_verify_paper)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        return _die(str(exc))
    except (ValueError, KeyError) as exc:
        return _die(str(exc))


if __name__ == "__main__":
    sys.exit(main())
