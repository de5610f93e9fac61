"""Command-line entry point: ``parsimony {solve,verify,gen,survey}``.

Exit codes: 0 ok, 1 verification failure or bound violation, 2 unreadable
or malformed input, 3 search budget exhausted, 4 well-formed input that is
not a simple subcubic graph (degree above 3, loop, repeated edge).
``PARSIMONY_BUDGET`` sets the default node budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .formats import ParseError, format_edgelist, format_graph6, read_graph
from .generators import NAMED, PermutationSpec, permutation_graph, random_cubic, random_subcubic
from .graph import INFINITE, GraphError, odd_girth
from .solver import format_fraction, heuristic_colouring, exact_s
from .structure import ALL_LEMMAS, Verdict, verify_all

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3
EXIT_INVALID = 4


def _load(args):
    return read_graph(args.input, args.format)


def _report_table(report) -> str:
    go = odd_girth(report.graph)
    lines = [
        f"n        {report.n}",
        f"m        {report.m}",
        f"g_odd    {'inf' if go == INFINITE else go}",
        f"s        {report.s}",
        f"gamma    {format_fraction(report.gamma)}",
        f"method   {report.method}{'' if report.optimal or report.method != 'exact' else ' (budget exhausted)'}",
        f"nodes    {report.nodes}",
        f"witness  {''.join(report.witness.symbols())}",
    ]
    return "\n".join(lines)


def _solve(g, args):
    start = heuristic_colouring(g, seed=args.seed)
    if args.heuristic:
        return start
    return exact_s(g, budget=args.budget, incumbent=start)


def cmd_solve(args) -> int:
    g = _load(args)
    report = _solve(g, args)
    print(report.dumps() if args.json else _report_table(report))
    if not args.heuristic and not report.optimal:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args)
    report = exact_s(g, budget=args.budget, incumbent=heuristic_colouring(g, seed=args.seed))
    if not report.optimal:
        print(f"budget exhausted after {report.nodes} nodes; s <= {report.s}", file=sys.stderr)
        return EXIT_BUDGET
    lemmas = args.lemmas.split(",") if args.lemmas else list(ALL_LEMMAS)
    unknown = set(lemmas) - set(ALL_LEMMAS)
    if unknown:
        print(f"unknown lemma ids: {sorted(unknown)}", file=sys.stderr)
        return EXIT_PARSE
    certs = verify_all(g, report, lemmas)
    if args.json:
        print(json.dumps({"s": report.s, "gamma": format_fraction(report.gamma),
                          "certificates": [c.to_json() for c in certs]}, sort_keys=True))
    else:
        print(f"s={report.s} gamma={format_fraction(report.gamma)}")
        for c in certs:
            extra = f" {json.dumps(c.witness, sort_keys=True)}" if c.witness else ""
            print(f"{c.lemma:9s} {c.verdict.value.upper():8s} {c.detail}{extra}")
    return EXIT_FAIL if any(c.verdict is Verdict.FAIL for c in certs) else EXIT_OK


def cmd_gen(args) -> int:
    kind = args.kind
    if kind in NAMED:
        g = NAMED[kind]()
    elif kind == "cubic":
        g = random_cubic(args.n, args.seed)
    elif kind == "subcubic":
        g = random_subcubic(args.n, args.m, args.seed)
    elif kind == "permutation":
        sigma = tuple(int(t) for t in args.sigma.split(","))
        g = permutation_graph(PermutationSpec((len(sigma) - 1) // 2, sigma, args.drop))
    else:
        print(f"unknown graph kind {kind!r}", file=sys.stderr)
        return EXIT_PARSE
    sys.stdout.write(format_graph6(g) + "\n" if args.format == "graph6" else format_edgelist(g))
    return EXIT_OK


def cmd_survey(args) -> int:
    from .survey import BoundViolation, UNKNOWN, named_corpus, random_corpus, run_survey, summarise

    items = random_corpus(args.count, args.min_n, args.max_n, args.seed)
    if args.named:
        items += named_corpus(args.named.split(","))
    try:
        rows = run_survey(items, budget=args.budget, jobs=args.jobs)
    except BoundViolation as exc:
        bundle = Path(args.bundle)
        bundle.write_text(json.dumps(exc.bundle(), sort_keys=True, indent=1) + "\n")
        print(f"{exc}; reproduction bundle written to {bundle}", file=sys.stderr)
        return EXIT_FAIL
    text = "".join(r.dumps() + "\n" for r in rows)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if args.figure:
        from .plotting import plot_survey

        plot_survey(rows, args.figure)
    summary = summarise(rows)
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return EXIT_BUDGET if summary[UNKNOWN] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="parsimony", description="Delta-minimum edge-colourings of subcubic graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("--input", "-i", required=True, help="graph file")
        sp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
        sp.add_argument("--seed", type=int, default=0, help="seed for the heuristic start")
        sp.add_argument("--budget", type=int, default=None, help="node budget for the exact search")
        sp.add_argument("--json", action="store_true", help="emit JSON")

    sp = sub.add_parser("solve", help="compute s(G) and gamma(G)")
    graph_input(sp)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exact", dest="heuristic", action="store_false", help="branch and bound (default)")
    mode.add_argument("--heuristic", dest="heuristic", action="store_true", help="Kempe local search only")
    sp.set_defaults(func=cmd_solve, heuristic=False)

    sp = sub.add_parser("verify", help="solve exactly and check the structural lemmas on the witness")
    graph_input(sp)
    sp.add_argument("--lemmas", default=None, help=f"comma list from {','.join(ALL_LEMMAS)}")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gen", help="print a graph")
    sp.add_argument("kind", help=f"one of {', '.join(sorted(NAMED))}, cubic, subcubic, permutation")
    sp.add_argument("--n", type=int, default=10)
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sigma", default="0,2,4,1,3", help="matching for permutation graphs")
    sp.add_argument("--drop", type=int, default=None, help="matching edge to delete")
    sp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("survey", help="check the odd-girth bound on random cubic graphs")
    sp.add_argument("--count", type=int, default=200, help="number of random graphs")
    sp.add_argument("--min-n", type=int, default=10)
    sp.add_argument("--max-n", type=int, default=20)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--named", default="", help="comma list of named graphs to add")
    sp.add_argument("--output", "-o", default=None, help="JSON-lines output (default stdout)")
    sp.add_argument("--figure", default=None, help="write a summary figure (PNG/PDF/SVG)")
    sp.add_argument("--bundle", default="survey-violation.json", help="where to write a counterexample")
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_survey)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"invalid graph: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (ParseError, UnicodeDecodeError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
