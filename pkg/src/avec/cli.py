"""Command line front end.

Subcommands: gen (graph families to file or stdout), analyze (bound
report for a graph file), audit (ball-size audit), replay (step-by-step
certificate for the constructive bounds), sweep (CSV over a family).

Exit codes: 0 success, 1 a certified inequality or audit failed,
2 bad usage or bad input.
"""

import argparse
import json
import sys
from fractions import Fraction

from .bounds import (
    CSV_HEADER,
    analyze,
    audit_balls,
    audit_json,
    report_csv_row,
    report_json,
)
from .errors import (
    AvecError,
    ConstructionInvariantViolated,
    InvalidArgument,
    LemmaBoundViolated,
)
from .generators import ChainSpec, LabeledGraph, chain, reiman
from .io import format_edgelist, read_graph, to_graph6, write_graph
from .replay import VARIANT_GIRTH6, VARIANT_MAXDEG, replay, trace_json


def _emit_graph(labeled, args):
    g = labeled.graph
    if args.out:
        write_graph(g, args.out, args.format)
        print(json.dumps(labeled.meta, indent=2))
    elif args.format == "graph6":
        print(to_graph6(g))
    else:
        sys.stdout.write(format_edgelist(g))
    return 0


def _cmd_gen_reiman(args):
    return _emit_graph(reiman(args.q), args)


def _cmd_gen_chain(args):
    head = None
    if args.head:
        hg = read_graph(args.head)
        if hg.m == 0:
            raise InvalidArgument(f"head file {args.head} has no edges")
        hu, hv = hg.edge_list[0]
        head = LabeledGraph(
            graph=hg,
            labels=tuple(str(v) for v in range(hg.n)),
            designated={"u": hu, "v": hv},
            meta={"construction": "file", "path": args.head},
        )
    return _emit_graph(chain(ChainSpec(args.delta, args.ell, head)), args)


def _cmd_analyze(args):
    report = analyze(read_graph(args.path))
    if args.csv:
        print(CSV_HEADER)
        print(report_csv_row(report))
    else:
        print(json.dumps(report_json(report), indent=2))
    return 0 if not report.violations else 1


def _cmd_audit(args):
    record = audit_balls(read_graph(args.path))
    print(json.dumps(audit_json(record), indent=2))
    return 0 if record.passed else 1


def _fmt_val(x):
    if x is None:
        return "-"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _cmd_replay(args):
    g = read_graph(args.path)
    anchor = args.anchor
    if args.variant == VARIANT_MAXDEG and anchor is None:
        top = g.max_degree()
        anchor = min(v for v in range(g.n) if g.degree(v) == top)
    trace = replay(g, args.variant, anchor)
    if args.trace:
        with open(args.trace, "w", encoding="ascii") as fh:
            fh.write(json.dumps(trace_json(trace), indent=2))
            fh.write("\n")
    head = (
        f"replay variant={trace.variant} n={trace.n} delta={trace.delta}"
        f" max_degree={trace.max_degree}"
        f" matching_size={len(trace.matching.edges)}"
    )
    if trace.matching.anchor is not None:
        head += f" anchor={trace.matching.anchor}"
    print(head)
    for c in trace.checks:
        mark = "ok" if c.passed else "FAIL"
        print(f"  [{mark}] {c.name}: {_fmt_val(c.lhs)} vs {_fmt_val(c.rhs)}")
    print("structural:")
    for c in trace.structural:
        mark = "ok" if c.passed else "FAIL"
        print(f"  [{mark}] {c.name}: {_fmt_val(c.lhs)} vs {_fmt_val(c.rhs)}")
    print(f"overall: {'pass' if trace.overall_pass else 'FAIL'}")
    return 0 if trace.overall_pass else 1


def _parse_range(text):
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise InvalidArgument(f"range must look like A..B, got {text!r}")
    a, b = int(lo), int(hi)
    if a > b:
        raise InvalidArgument(f"empty range {text!r}")
    return a, b


def _cmd_sweep(args):
    a, b = _parse_range(args.ell_range)
    ells = [ell for ell in range(a, b + 1) if ell % 2 == 0 and ell >= 2]
    if not ells:
        raise InvalidArgument(f"no even ell >= 2 in {args.ell_range}")
    rows = []
    ok = True
    for ell in ells:
        labeled = chain(ChainSpec(args.delta, ell))
        report = analyze(labeled.graph, chain_params=(args.delta, ell))
        rows.append(report_csv_row(report))
        state = "pass" if not report.violations else "FAIL"
        ok = ok and not report.violations
        print(
            f"chain delta={args.delta} ell={ell}:"
            f" n={report.n} avec={report.ex_total}/{report.n} {state}"
        )
    with open(args.csv, "w", encoding="ascii") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row + "\n")
    print(f"wrote {args.csv}")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="avec",
        description="Exact eccentricity statistics, extremal generators, "
        "bound reports, and proof replays.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    out_opts = argparse.ArgumentParser(add_help=False)
    out_opts.add_argument("--out", metavar="PATH", help="write the graph here")
    out_opts.add_argument(
        "--format", choices=("edgelist", "graph6"), default="edgelist"
    )

    gen = sub.add_parser("gen", help="generate a graph family member")
    gsub = gen.add_subparsers(dest="family", required=True)
    g_r = gsub.add_parser("reiman", parents=[out_opts], help="incidence graph over GF(q)")
    g_r.add_argument("--q", type=int, required=True, help="prime power >= 2")
    g_r.set_defaults(func=_cmd_gen_reiman)
    g_c = gsub.add_parser("chain", parents=[out_opts], help="chained incidence copies")
    g_c.add_argument("--delta", type=int, required=True, help="minimum degree >= 3")
    g_c.add_argument("--ell", type=int, required=True, help="even copy count >= 2")
    g_c.add_argument("--head", metavar="PATH", help="custom first copy (edge list)")
    g_c.set_defaults(func=_cmd_gen_chain)

    ana = sub.add_parser("analyze", help="bound report for a graph file")
    ana.add_argument("path")
    fmt = ana.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON report (default)")
    fmt.add_argument("--csv", action="store_true", help="CSV header plus one row")
    ana.set_defaults(func=_cmd_analyze)

    aud = sub.add_parser("audit", help="ball-size audit for a graph file")
    aud.add_argument("path")
    aud.set_defaults(func=_cmd_audit)

    rep = sub.add_parser("replay", help="step-by-step bound certificate")
    rep.add_argument("path")
    rep.add_argument(
        "--variant", choices=(VARIANT_GIRTH6, VARIANT_MAXDEG), required=True
    )
    rep.add_argument(
        "--anchor",
        type=int,
        help="maxdeg anchor vertex (default: smallest of maximum degree)",
    )
    rep.add_argument("--trace", metavar="PATH", help="write the JSON trace here")
    rep.set_defaults(func=_cmd_replay)

    swp = sub.add_parser("sweep", help="CSV bound report over a family")
    swp.add_argument("--family", choices=("chain",), required=True)
    swp.add_argument("--delta", type=int, required=True)
    swp.add_argument("--ell-range", required=True, metavar="A..B")
    swp.add_argument("--csv", required=True, metavar="PATH")
    swp.set_defaults(func=_cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConstructionInvariantViolated, LemmaBoundViolated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (AvecError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
