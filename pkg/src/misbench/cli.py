"""Command-line interface.

Subcommands::

    mis              count maximal independent sets by size
    mibs             census of maximal induced bipartite subgraphs
    bounds           closed-form count bounds at one (n, k)
    curves           CSV of per-vertex bound exponents over k/n
    solve            numeric witnesses (eps/delta, two-sum crossover)
    pipeline         decomposition / cell / transversal analysis report
    search           exhaustive scan of small-graph isomorphism classes
    verify-theorem2  size-capped bound with equality classification

Graphs are read from a file argument (or stdin with ``-``) in graph6 or
edge-list format, autodetected by default.  Results are JSON on stdout
(CSV for ``curves``); floats carry 12 significant digits.  Exit codes:
0 success, 1 semantic failure, 2 input/parse error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, extremal
from .corpus import min_mis
from .graphio import FormatError, load_graphs
from .graphs import Graph, GuardError, mask_of
from .mibs import enumerate_mibs
from .misenum import enumerate_mis, enumerate_mis_branching, enumerate_mis_bruteforce
from .pipeline import analyze_instance

CURVE_HEADER = "x,eppstein,nielsen,interp,corollary1_eta"


def _round_floats(obj):
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round_floats(v) for v in obj]
    return obj


def _emit(payload) -> None:
    print(json.dumps(_round_floats(payload), sort_keys=True, indent=2))


def _read_graphs(args) -> list[Graph]:
    if args.path == "-":
        text = sys.stdin.read()
    else:
        with open(args.path, encoding="ascii") as fh:
            text = fh.read()
    graphs = load_graphs(text, args.format)
    if not graphs:
        raise FormatError("input contains no graphs")
    return graphs


def _single_or_array(reports: list[dict]):
    return reports[0] if len(reports) == 1 else reports


def _parse_vertex_list(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError as exc:
        raise FormatError(f"expected comma-separated integers, got {text!r}") from exc


def cmd_mis(args) -> int:
    reports = []
    for g in _read_graphs(args):
        if args.method == "brute":
            fam = enumerate_mis_bruteforce(g)
        elif args.method == "branch":
            cap = g.n if args.k_cap is None else args.k_cap
            fam, nodes = enumerate_mis_branching(g, cap)
        else:
            fam = enumerate_mis(g)
        report = {"mis": fam.count, "profile": list(fam.profile.counts)}
        if args.method == "branch":
            report["branch_nodes"] = nodes
            report["k_cap"] = cap
        reports.append(report)
    _emit(_single_or_array(reports))
    return 0


def cmd_mibs(args) -> int:
    reports = []
    for g in _read_graphs(args):
        census = enumerate_mibs(g)
        reports.append(
            {
                "mibs": census.distinct_count,
                "ordered_pairs": census.ordered_pair_count,
                "nonmaximal_pairs": census.nonmaximal_candidates,
                "a_size_histogram": [
                    {"a_size": size, "records": cnt}
                    for size, cnt in sorted(census.a_size_histogram().items())
                ],
            }
        )
    _emit(_single_or_array(reports))
    return 0


def _bound_entry(b) -> dict:
    return {
        "ln": b.ln_value,
        "value": b.as_float(),
        "exact": str(b.exact) if b.exact is not None else None,
    }


def cmd_bounds(args) -> int:
    n, k = args.n, args.k
    payload = {
        "n": n,
        "k": k,
        "eta": args.eta,
        "moon_moser": _bound_entry(bounds.moon_moser(n)),
        "eppstein": _bound_entry(bounds.eppstein(n, k)),
        "nielsen": _bound_entry(bounds.nielsen(n, k)),
        "interpolated": _bound_entry(bounds.interpolated(n, k, args.eta)),
        "induction_residual": bounds.induction_identity_residual(n, k, args.eta)
        if 0 < args.eta < 1 and k >= 1 and n >= (5 - args.eta)
        else None,
    }
    _emit(payload)
    return 0


def cmd_curves(args) -> int:
    rows = bounds.curve_rows(args.eta, args.points)
    lines = [CURVE_HEADER]
    for row in rows:
        lines.append(
            ",".join(
                f"{row[col]:.12g}"
                for col in ("x", "eppstein", "nielsen", "interp", "corollary1_eta")
            )
        )
    text = "\n".join(lines)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_solve(args) -> int:
    if args.two_sum_eta is not None:
        witness = bounds.find_two_sum_witness(args.two_sum_eta)
        r = witness.report
        _emit(
            {
                "eta": witness.eta,
                "xi": witness.xi,
                "n": witness.n,
                "p_cut": witness.p_cut,
                "ln_sum1": r.ln_sum1,
                "ln_sum2": r.ln_sum2,
                "ln_max1": r.ln_max1,
                "argmax1": r.argmax1,
                "ln_max2": r.ln_max2,
                "argmax2": r.argmax2,
                "ln_target": r.ln_target,
                "both_below_target": witness.both_below_target,
            }
        )
        return 0
    w = bounds.solve_eps_delta(args.margin)
    _emit(
        {
            "margin": w.margin,
            "eps_star": w.eps_star,
            "f_value": w.f_value,
            "base": w.base,
            "delta_star": w.delta_star,
        }
    )
    return 0


def cmd_pipeline(args) -> int:
    i0_list = _parse_vertex_list(args.i0)
    s_list = _parse_vertex_list(args.s) or ()
    reports = []
    for g in _read_graphs(args):
        i0 = mask_of(i0_list) if i0_list is not None else None
        reports.append(analyze_instance(g, i0, s_list))
    _emit(_single_or_array(reports))
    return 0


def cmd_search(args) -> int:
    if args.classes:
        reps = extremal.load_class_list(args.classes)
        if any(g.n != args.n for g in reps):
            raise FormatError(f"class list {args.classes} contains graphs of order != {args.n}")
    else:
        reps = extremal.generate_all(args.n, args.filter, args.workers)
    if args.save_classes:
        extremal.write_class_list(args.save_classes, reps)
    rows = extremal.tightness_scan(
        args.n, args.filter, args.selector, args.eta, args.workers, reps=reps
    )
    _emit(
        {
            "n": args.n,
            "filter": args.filter,
            "selector": args.selector,
            "eta": args.eta,
            "class_count": len(reps),
            "rows": rows,
        }
    )
    return 0


def cmd_verify_theorem2(args) -> int:
    all_rows = []
    ok = True
    for n in range(1, args.max_n + 1):
        for row in extremal.verify_equality_scan(n, args.workers):
            ok = ok and not row.violations
            all_rows.append(
                {
                    "n": row.n,
                    "k": row.k,
                    "bound": str(row.bound),
                    "max_count": row.max_count,
                    "attainers": len(row.attainers),
                    "violations": list(row.violations),
                }
            )
    _emit({"max_n": args.max_n, "holds": ok, "rows": all_rows})
    return 0 if ok else 1


def _add_graph_input(sub) -> None:
    sub.add_argument("path", nargs="?", default="-", help="graph file, or - for stdin")
    sub.add_argument(
        "--format",
        choices=("auto", "g6", "edges"),
        default="auto",
        help="input format (default: autodetect)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="misbench",
        description="Exact enumeration and bound verification for maximal independent sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mis", help="count maximal independent sets by size")
    _add_graph_input(p)
    p.add_argument("--method", choices=("pivot", "brute", "branch"), default="pivot")
    p.add_argument("--k-cap", type=int, default=None, help="size budget for --method branch")
    p.set_defaults(func=cmd_mis)

    p = sub.add_parser("mibs", help="census of maximal induced bipartite subgraphs")
    _add_graph_input(p)
    p.set_defaults(func=cmd_mibs)

    p = sub.add_parser("bounds", help="closed-form bounds at one (n, k)")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--eta", type=float, default=0.4)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("curves", help="CSV of bound exponents over k/n in [1/5, 1/3]")
    p.add_argument("--eta", type=float, default=0.4)
    p.add_argument("--points", type=int, default=28)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("solve", help="numeric witnesses for the analytic estimates")
    p.add_argument("--margin", type=float, default=0.0)
    p.add_argument(
        "--two-sum-eta",
        type=float,
        default=None,
        help="instead solve for the smallest order putting both count sums below target",
    )
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("pipeline", help="decomposition and transversal analysis")
    _add_graph_input(p)
    p.add_argument("--i0", default=None, help="root set as comma-separated vertices (default: minimum maximal independent set)")
    p.add_argument("--s", default=None, help="doubled cell indices, comma-separated (default: none)")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("search", help="scan isomorphism classes against a bound family")
    p.add_argument("-n", type=int, required=True, dest="n")
    p.add_argument("--filter", choices=sorted(extremal.FILTERS), default="none")
    p.add_argument("--selector", choices=("eppstein", "nielsen", "corollary1"), default="eppstein")
    p.add_argument("--eta", type=float, default=0.4)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--save-classes", default=None, help="write generated class list (graph6)")
    p.add_argument("--classes", default=None, help="load class list instead of generating")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser(
        "verify-theorem2", help="size-capped bound with equality classification, exhaustively"
    )
    p.add_argument("--max-n", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify_theorem2)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
