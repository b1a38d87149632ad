"""Command-line front end: gen, check, solve, verify, convert."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from . import families, harness
from .graph import (
    Graph,
    GraphFormatError,
    is_connected,
    is_k_connected,
    parse_edge_list_text,
    parse_graph6,
    to_edge_list_text,
    to_graph6,
    vertex_connectivity,
)
from .hsq import DEFAULT_BUDGET, BudgetExceeded, solve
from .patterns import exception_family_match, find_induced, multipartite_structure, pattern_by_name
from .sweep import SweepTooLarge

EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BAD_GRAPH = 3
EXIT_BUDGET = 4

DEFAULT_PREDICATES = "connected,4conn,clawfree,z1free,p4free,multipartite,family"


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def parse_graph_text(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list_text(text)


def iter_graphs(text: str, fmt: str) -> Iterator[Graph]:
    """Graphs in a stream: graph6 one per line, edge lists as consecutive 'n m' blocks."""
    if fmt == "graph6":
        for ln in text.splitlines():
            if ln.strip():
                yield parse_graph6(ln.strip())
        return
    rows = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    i = 0
    while i < len(rows):
        head = rows[i].split()
        if len(head) != 2 or not all(t.lstrip("-").isdigit() for t in head):
            raise GraphFormatError(f"bad edge list header {rows[i]!r}")
        m = int(head[1])
        if m < 0 or i + 1 + m > len(rows):
            raise GraphFormatError("edge list ends before all declared edges")
        yield parse_edge_list_text("\n".join(rows[i : i + 1 + m]))
        i += 1 + m


def format_graph(g: Graph, fmt: str) -> str:
    return to_graph6(g) if fmt == "graph6" else to_edge_list_text(g).rstrip("\n")


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# -- predicates ---------------------------------------------------------------


def evaluate_predicate(g: Graph, name: str):
    key = name.strip().lower()
    if key == "connected":
        return is_connected(g)
    if key == "kappa":
        return vertex_connectivity(g)
    if key.endswith("conn") and key[:-4].isdigit():
        return is_k_connected(g, int(key[:-4]))
    if key == "multipartite":
        ps = multipartite_structure(g)
        return None if ps is None else list(ps.parts)
    if key == "family":
        fam = exception_family_match(g)
        return None if fam is None else {"tag": fam.tag, "params": list(fam.params)}
    if key.endswith("free"):
        try:
            pat = pattern_by_name(key[:-4].rstrip("-_"))
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc)) from None
        return find_induced(g, pat) is None
    raise UsageError(f"unknown predicate {name!r}")


# -- subcommands --------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        gen = families.generate(args.spec)
    except families.FamilySpecError as exc:
        raise UsageError(str(exc)) from None
    print(format_graph(gen.graph, args.format))
    return 0


def cmd_check(args) -> int:
    g = parse_graph_text(_read_text(args.input), args.format)
    out = {"n": g.n, "m": g.num_edges}
    for name in args.predicates.split(","):
        if name.strip():
            out[name.strip()] = evaluate_predicate(g, name)
    _emit(out)
    return 0


def cmd_solve(args) -> int:
    g = parse_graph_text(_read_text(args.input), args.format)
    verdict = solve(g, method=args.method, budget=args.budget)
    _emit(verdict.to_dict())
    return 0


def cmd_verify(args) -> int:
    ids = [c.strip().upper() for c in args.checks.split(",") if c.strip()]
    if not ids or ids == ["ALL"]:
        ids = list(harness.CATALOGUE)
    unknown = [c for c in ids if c not in harness.CATALOGUE]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(harness.CATALOGUE)}")
    settings = harness.Settings(
        budget=args.budget, workers=args.workers, seed=args.seed, long_run=args.long_run, samples=args.samples
    )
    reports = harness.run_all(ids, settings)
    print(harness.reports_to_json(reports))
    if args.markdown:
        with open(args.markdown, "w", encoding="utf-8") as fh:
            fh.write(harness.reports_to_markdown(reports))
    return 0 if all(r.ok for r in reports) else EXIT_CHECK_FAILED


def cmd_convert(args) -> int:
    text = _read_text(args.input)
    out = [format_graph(g, args.to) for g in iter_graphs(text, args.source)]
    if out:
        print("\n".join(out))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hsquare", description="Hamiltonian squares in 4-connected graphs")
    sub = p.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named graph, e.g. G2:m=4 or EXC:ii,m=3")
    gen.add_argument("spec")
    gen.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    gen.set_defaults(func=cmd_gen)

    chk = sub.add_parser("check", help="evaluate structural predicates on one graph")
    chk.add_argument("input", nargs="?", default="-", help="file path or - for standard input")
    chk.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    chk.add_argument("--predicates", default=DEFAULT_PREDICATES)
    chk.set_defaults(func=cmd_check)

    sol = sub.add_parser("solve", help="decide whether one graph has a hamiltonian square")
    sol.add_argument("input", nargs="?", default="-")
    sol.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    sol.add_argument("--method", choices=("oracle", "auto"), default="auto")
    sol.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sol.set_defaults(func=cmd_solve)

    ver = sub.add_parser("verify", help="run verification checks and print JSON reports")
    ver.add_argument("checks", nargs="?", default="all", help="comma-separated check ids or 'all'")
    ver.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    ver.add_argument("--workers", type=int, default=1)
    ver.add_argument("--seed", type=int, default=harness.DEFAULT_SEED)
    ver.add_argument("--samples", type=int, default=500)
    ver.add_argument("--long-run", action="store_true", help="extend labelled sweeps to n = 8")
    ver.add_argument("--markdown", metavar="PATH", help="also write a markdown digest")
    ver.set_defaults(func=cmd_verify)

    conv = sub.add_parser("convert", help="transcode a stream of graphs")
    conv.add_argument("input", nargs="?", default="-")
    conv.add_argument("--from", dest="source", choices=("graph6", "edgelist"), default="graph6")
    conv.add_argument("--to", choices=("graph6", "edgelist"), default="edgelist")
    conv.set_defaults(func=cmd_convert)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for name in ("budget", "workers", "samples"):
        if getattr(args, name, 1) is not None and getattr(args, name, 1) < 1:
            print(f"hsquare: error: --{name} must be positive", file=sys.stderr)
            return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hsquare: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphFormatError as exc:
        print(f"hsquare: malformed graph: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    except BudgetExceeded as exc:
        print(f"hsquare: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except SweepTooLarge as exc:
        print(f"hsquare: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"hsquare: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
