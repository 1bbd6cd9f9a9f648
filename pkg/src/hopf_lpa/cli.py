"""Command line front end: ``hopf-lpa {classify,graph,validate,sweep}``."""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .classifier import explain
from .cross_check import (
    Limits,
    default_sweep,
    evaluate,
    load_manifest,
    parse_instance,
    report_json,
    run_sweep,
)
from .digraph import MultiDigraph
from .errors import HopfError, InvalidSpec, MissingWindow
from .groups import DEFAULT_MAX_ORDER, TRIVIAL, IntegerGroup
from .graph_monoid import DEFAULT_MAX_VISITED
from .hopf_graph import DEFAULT_MAX_EDGES, SymbolicGraph


def dumps(doc) -> str:
    return json.dumps(doc, ensure_ascii=False, indent=2) + "\n"


def _emit(text: str, output):
    if output and output != "-":
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
        return
    buf = getattr(sys.stdout, "buffer", None)
    if buf is not None:
        sys.stdout.flush()
        buf.write(text.encode("utf-8"))
        buf.flush()
    else:
        sys.stdout.write(text)


def _limits(args):
    return Limits(max_order=args.max_order, max_edges=args.max_edges,
                  monoid_budget=args.monoid_budget)


def _instance(args):
    G, r = parse_instance(args.group, args.ramification, _limits(args))
    if args.window is not None and not isinstance(G, IntegerGroup):
        raise InvalidSpec("--window only applies to the integer group")
    return G, r


def cmd_classify(args, *, run_checks=True):
    G, r = _instance(args)
    sg, cls, bundle, report = evaluate(G, r, window=args.window, limits=_limits(args),
                                       run_checks=run_checks)
    if args.format == "text":
        lines = explain(G, r, sg, cls)
        if report is not None:
            lines.append(f"cross-check: {len(report.triples)} properties compared, "
                         f"{len(report.disagreements)} disagreements, "
                         f"{len(report.skipped)} skipped")
            for t in report.disagreements:
                lines.append(f"  DISAGREE {t.name}: formula {t.theorem!r}, graph {t.direct!r}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(dumps(report_json(G, r, sg, cls, report, group_spec=args.group)), args.output)
    return 1 if report is not None and report.disagreements else 0


def cmd_validate(args):
    G, r = _instance(args)
    sg, cls, bundle, report = evaluate(G, r, window=args.window, limits=_limits(args))
    if args.format == "text":
        lines = [f"{'ok  ' if t.agree else 'FAIL'} {t.name}: formula {t.theorem!r}, "
                 f"graph {t.direct!r}" for t in report.triples]
        lines += [f"skip {name}: {why}" for name, why in report.skipped]
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(dumps(report.to_json()), args.output)
    return 1 if report.disagreements else 0


def _trivial_graph():
    # one vertex, not tied to any group element
    return MultiDigraph(["trivial"], [], keys=[None])


def cmd_graph(args):
    G, r = _instance(args)
    if isinstance(G, IntegerGroup) and args.window is None:
        raise MissingWindow("the integer Hopf graph is infinite; pass --window N")
    sg, cls, bundle, _ = evaluate(G, r, window=args.window, limits=_limits(args),
                                  run_checks=False)
    g = bundle.subgraph(args.subgraph)
    if g == TRIVIAL:
        g = _trivial_graph()
    if isinstance(g, SymbolicGraph):
        raise MissingWindow(f"{args.subgraph} is infinite here: {g.description}")
    if args.format == "json":
        _emit(dumps(g.to_json()), args.output)
    else:
        _emit(g.to_dot(args.subgraph), args.output)
    return 0


def cmd_sweep(args):
    items = load_manifest(args.manifest) if args.manifest else default_sweep()
    result = run_sweep(items, jobs=args.jobs, limits=_limits(args))
    if args.summary_only:
        result = {k: v for k, v in result.items() if k != "instances"}
    _emit(dumps(result), args.output)
    s = result["summary"]
    print(f"{s['instances']} instances, {s['triples']} comparisons, "
          f"{s['disagreements']} disagreements, IBN oracle decisive "
          f"{s['ibn_oracle_decisive']}/{s['ibn_oracle_runs']}", file=sys.stderr)
    return 1 if s["disagreements"] else 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="hopf-lpa",
        description="Hopf graphs of groups with ramification data and the classification "
                    "of their Leavitt path algebras.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    caps = argparse.ArgumentParser(add_help=False)
    caps.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                      help="largest group order accepted (default %(default)s)")
    caps.add_argument("--max-edges", type=int, default=DEFAULT_MAX_EDGES,
                      help="largest graph accepted (default %(default)s)")
    caps.add_argument("--monoid-budget", type=int, default=DEFAULT_MAX_VISITED,
                      help="visited-element budget of the monoid search (default %(default)s)")
    caps.add_argument("-o", "--output", default="-", help="output file (default stdout)")

    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("-g", "--group", required=True,
                      help="trivial | cyclic:N | symmetric:N | dihedral:N | product(A, B) | "
                           "table:FILE | integers")
    inst.add_argument("-r", "--ramification", default="",
                      help='semicolon list of rep=mult, e.g. "(1 2 3)=1"; empty for zero')
    inst.add_argument("--window", type=int, default=None,
                      help="radius of the rendered window (integers only)")

    c = sub.add_parser("classify", parents=[inst, caps], help="classify one instance")
    c.add_argument("--format", choices=["json", "text"], default="json")
    c.set_defaults(func=cmd_classify)

    gr = sub.add_parser("graph", parents=[inst, caps], help="export a graph")
    gr.add_argument("--subgraph", choices=["gamma", "delta", "lambda"], default="gamma")
    gr.add_argument("--format", choices=["dot", "json"], default="dot")
    gr.set_defaults(func=cmd_graph)

    v = sub.add_parser("validate", parents=[inst, caps],
                       help="compare formulas with direct graph computations")
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("sweep", parents=[caps], help="cross-check many instances")
    s.add_argument("--manifest", help="JSON list of {group, ramification}; default built-in sweep")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--summary-only", action="store_true",
                   help="omit per-instance reports from the output")
    s.set_defaults(func=cmd_sweep)
    return p


def _report_error(exc: HopfError):
    print(f"error: {exc.message}", file=sys.stderr)
    caret = exc.caret()
    if caret:
        print(caret, file=sys.stderr)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "graph" and args.format not in ("dot", "json"):
        parser.error("graph output is dot or json")
    warnings.simplefilter("default")
    try:
        return args.func(args)
    except HopfError as exc:
        _report_error(exc)
        return exc.exit_code
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
