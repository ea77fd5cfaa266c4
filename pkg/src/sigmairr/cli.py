"""Command-line surface.

Subcommands: indices, sequence analyze, bounds check, bounds falsify,
enumerate, extremal, tables reproduce, tables export, stats correlate,
stats regress, plots emit.  Machine formats are canonical (sorted JSON
keys, fixed CSV column order), so identical invocations produce
byte-identical output.

Exit codes: 0 success; 1 domain/input error; 2 when ``bounds check`` runs
with ``--expect-hold`` and any probative report fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import bounds, graphs, indices, search, stats_tables
from .errors import DomainError, InputError, ResourceLimitError
from .sequences import (
    Convention,
    DegreeSequenceView,
    derive,
    is_graphical,
    is_tree_sequence,
    parse_sequence_literal,
    realize_graph_hakimi,
    realize_tree,
)

ENV_TREE_CAP = "SIGMAIRR_TREE_CAP"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # map argparse failures to exit code 1
        raise InputError(message)


def _tree_cap() -> int:
    raw = os.environ.get(ENV_TREE_CAP)
    if raw is None:
        return search.DEFAULT_TREE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{ENV_TREE_CAP} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# Rendering helpers

def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _human_table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    widths = [len(h) for h in header]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def _render(fmt: str, header, rows, payload, out: Optional[str]) -> None:
    if fmt == "json":
        _emit(_json_text(payload), out)
    elif fmt == "csv":
        _emit(_csv_text(header, rows), out)
    else:
        _emit(_human_table(header, rows), out)


# ---------------------------------------------------------------------------
# Shared argument groups

def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("human", "csv", "json"), default="human")
    p.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=int, help="exponent for the lower branch of B2")
    p.add_argument("--beta", type=int, help="exponent for the upper branch of B2")
    p.add_argument("--p", type=int, default=2, help="prime for B9 (default 2)")
    p.add_argument("--eta", type=int, help="override eta (default ceil(2*n*max_degree/m))")
    p.add_argument("--eta1", help="override eta1, a rational in (2,4], e.g. 2.5 or 5/2")
    p.add_argument(
        "--strict-max-degree-window",
        action="store_true",
        help="gate B10 with 4 <= max_degree-3 <= n/4 instead of max_degree >= 4",
    )


def _params_from_args(args) -> bounds.BoundParams:
    eta1 = None
    if args.eta1 is not None:
        try:
            eta1 = Fraction(args.eta1)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"--eta1 must be a rational literal, got {args.eta1!r}") from None
    return bounds.BoundParams(
        alpha=args.alpha,
        beta=args.beta,
        p=args.p,
        eta=args.eta,
        eta1=eta1,
        strict_max_degree_window=args.strict_max_degree_window,
    )


def _parse_family_spec(spec: str) -> graphs.Graph:
    name, _, rest = spec.partition(":")
    if not rest:
        raise InputError(f"family spec must look like 'path:5', got {spec!r}")
    try:
        params = tuple(int(x) for x in rest.split(":"))
    except ValueError:
        raise InputError(f"non-integer family parameter in {spec!r}") from None
    return graphs.build_family(name, *params)


def _load_graph(args) -> tuple[graphs.Graph, str]:
    if getattr(args, "family", None):
        return _parse_family_spec(args.family), args.family
    if getattr(args, "graph_file", None):
        try:
            with open(args.graph_file, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read graph file: {exc}") from None
        return graphs.parse_edge_list(text), args.graph_file
    raise InputError("no graph input given (use --family or --graph-file)")


def _realize_sequence(entries: tuple[int, ...]) -> tuple[graphs.Graph, str]:
    if is_tree_sequence(entries):
        return realize_tree(entries), "caterpillar realization"
    if is_graphical(entries):
        return realize_graph_hakimi(entries), "Havel-Hakimi realization"
    raise InputError(f"sequence {entries} is neither a tree sequence nor graphical")


# ---------------------------------------------------------------------------
# Subcommand: indices

def _cmd_indices(args) -> int:
    if args.sequence:
        entries = parse_sequence_literal(args.sequence)
        g, how = _realize_sequence(entries)
        label = f"sequence {args.sequence} ({how})"
    else:
        g, label = _load_graph(args)
    values = {
        "albertson": indices.albertson(g),
        "sigma": indices.sigma(g),
        "sigma_t": indices.sigma_t(g),
        "zagreb_m1": indices.zagreb_m1(g),
    }
    payload = {"input": label, "n": g.vertex_count, "m": g.edge_count, **values}
    header = ["index", "value"]
    rows = [[k, str(values[k])] for k in ("albertson", "sigma", "sigma_t", "zagreb_m1")]
    _render(args.format, header, rows, payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# Subcommand: sequence analyze

def _cmd_sequence_analyze(args) -> int:
    entries = parse_sequence_literal(args.sequence)
    view = DegreeSequenceView(entries, Convention(args.convention))
    payload = {
        "entries": list(entries),
        "convention": view.convention.value,
        "k": view.k,
        "n": view.n,
        "m": str(view.m),
        "max_entry": view.max_entry,
        "min_entry": view.min_entry,
        "mean_entry": str(view.mean_entry),
        "mean_entry_decimal": float(view.mean_entry),
        "cube_sum": view.cube_sum,
        "is_graphical": is_graphical(entries),
        "is_tree_sequence": is_tree_sequence(entries),
    }
    if view.k >= 2:
        der = derive(view)
        payload.update(
            {
                "half_diffs": [str(t) for t in der.half_diffs],
                "half_sums": [str(a) for a in der.half_sums],
                "max_half_diff": str(der.max_half_diff),
                "max_half_sum": str(der.max_half_sum),
                "mean_half_diff": str(der.mean_half_diff),
                "mean_half_sum": str(der.mean_half_sum),
            }
        )
    header = ["property", "value"]
    rows = [[k, v if isinstance(v, str) else json.dumps(v)] for k, v in payload.items()]
    _render(args.format, header, rows, payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# Subcommand: bounds check / falsify

def _bound_input_from_args(args, params: bounds.BoundParams) -> bounds.BoundInput:
    sources = [
        bool(args.sequence),
        bool(args.family or args.graph_file),
        args.table is not None,
        args.class_trees is not None,
    ]
    if sum(sources) != 1:
        raise InputError(
            "exactly one input source: --sequence, --family/--graph-file, "
            "--table/--row, or --class-trees/--class-mode"
        )
    if args.table is not None:
        if args.row is None:
            raise InputError("--table needs --row (1-based)")
        return bounds.BoundInput.from_table_row(args.table, args.row - 1, params)
    if args.class_trees is not None:
        if args.class_mode is None:
            raise InputError("--class-trees needs --class-mode min|max")
        base = args.bound.rstrip("ab")
        objective = "albertson" if base in ("B1", "B2") else "sigma"
        _, binput = search.class_extremum_input(
            search.TreeClass.all_trees(args.class_trees),
            objective,
            args.class_mode,
            params,
            max_order=_tree_cap(),
            allow_over_cap=args.allow_over_cap,
        )
        return binput
    if args.sequence:
        entries = parse_sequence_literal(args.sequence)
        convention = Convention(args.convention)
        if convention is Convention.STANDARD:
            g, how = _realize_sequence(entries)
            return bounds.BoundInput.from_graph(g, params, label=f"sequence {args.sequence} ({how})")
        view = DegreeSequenceView(entries, convention)
        return bounds.BoundInput.from_view(view, irr_value=args.irr, params=params)
    g, label = _load_graph(args)
    return bounds.BoundInput.from_graph(g, params, label=label)


def _report_rows(reports: list[bounds.BoundReport]) -> list[list[str]]:
    return [r.to_csv_row() for r in reports]


def _cmd_bounds_check(args) -> int:
    params = _params_from_args(args)
    binput = _bound_input_from_args(args, params)
    if args.bound == "all":
        reports = bounds.evaluate_all(binput)
    else:
        reports = [evaluated for bid in bounds.expand_bound_id(args.bound)
                   for evaluated in (bounds.evaluate_bound(bid, binput),)]
    payload = {"input": binput.label, "reports": [r.to_json_dict() for r in reports]}
    _render(args.format, bounds.CSV_HEADER, _report_rows(reports), payload, args.out)
    if args.expect_hold and any(r.hypotheses_met and r.holds is False for r in reports):
        return 2
    return 0


def _cmd_bounds_falsify(args) -> int:
    params = _params_from_args(args)
    if args.samples is not None:
        if args.n is None:
            raise InputError("random mode needs --n together with --samples")
        mode: search.ExhaustiveMode | search.RandomMode = search.RandomMode(
            n=args.n, samples=args.samples, seed=args.seed
        )
        mode_desc = {"mode": "random", "n": args.n, "samples": args.samples, "seed": args.seed}
    else:
        if args.nmax is None:
            raise InputError("exhaustive mode needs --nmax (or pass --samples for random mode)")
        mode = search.ExhaustiveMode(args.nmax)
        mode_desc = {"mode": "exhaustive", "nmax": args.nmax}
    found = search.falsify(
        args.bound, mode, params, max_order=_tree_cap(), allow_over_cap=args.allow_over_cap
    )
    payload = {
        "bound": args.bound,
        **mode_desc,
        "params": params.to_json_dict(),
        "counterexamples": [c.to_json_dict() for c in found],
    }
    header = ["bound_id", "n", "edges", "lhs", "rhs", "relation", "margin"]
    rows = []
    for c in found:
        r = c.report
        rows.append(
            [
                c.bound_id,
                str(c.graph.vertex_count),
                ";".join(f"{u}-{v}" for u, v in c.graph.sorted_edges()),
                r.fmt_value(r.lhs, r.lhs_exact),
                r.fmt_value(r.rhs, r.rhs_exact),
                r.relation,
                r.fmt_value(r.margin, r.lhs_exact and r.rhs_exact),
            ]
        )
    _render(args.format, header, rows, payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# Subcommand: enumerate / extremal

def _cmd_enumerate(args) -> int:
    cap = _tree_cap()
    if args.count_only:
        count = sum(1 for _ in search.enumerate_free_trees(args.n, cap, args.allow_over_cap))
        payload = {"n": args.n, "count": count}
        _render(args.format, ["n", "count"], [[str(args.n), str(count)]], payload, args.out)
        return 0
    rows = []
    items = []
    for g in search.enumerate_free_trees(args.n, cap, args.allow_over_cap):
        enc = search.canonical_form(g)
        rows.append(
            [
                ",".join(map(str, enc)),
                ";".join(f"{u}-{v}" for u, v in g.sorted_edges()),
            ]
        )
        items.append(
            {"encoding": list(enc), "edges": [list(e) for e in g.sorted_edges()]}
        )
    payload = {"n": args.n, "count": len(items), "trees": items}
    _render(args.format, ["encoding", "edges"], rows, payload, args.out)
    return 0


def _cmd_extremal(args) -> int:
    if args.degree_multiset:
        entries = parse_sequence_literal(args.degree_multiset)
        tree_class = search.TreeClass.with_degree_multiset(entries)
    elif args.max_degree is not None:
        if args.n is None:
            raise InputError("--max-degree needs --n")
        tree_class = search.TreeClass.with_max_degree(args.n, args.max_degree)
    else:
        if args.n is None:
            raise InputError("give --n, --degree-multiset, or --max-degree with --n")
        tree_class = search.TreeClass.all_trees(args.n)
    result = search.extremal(
        tree_class,
        args.objective,
        args.direction,
        max_order=_tree_cap(),
        allow_over_cap=args.allow_over_cap,
    )
    payload = result.to_json_dict()
    header = ["field", "value"]
    rows = [
        ["class", result.class_description],
        ["objective", result.objective],
        ["direction", result.direction],
        ["optimum", str(result.optimum)],
        ["witness_encoding", ",".join(map(str, result.witness_encoding))],
        ["witness_edges", ";".join(f"{u}-{v}" for u, v in result.witness.sorted_edges())],
        ["trees_examined", str(result.trees_examined)],
    ]
    _render(args.format, header, rows, payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# Subcommand: tables

def _cmd_tables_reproduce(args) -> int:
    report = stats_tables.reproduce_table(args.table)
    header = ["row", "column", "printed", "recomputed", "match", "rule"]
    rows = [
        [
            str(c.row + 1),
            c.column,
            c.printed,
            "" if c.recomputed is None else c.recomputed,
            "" if c.match is None else str(c.match).lower(),
            c.rule,
        ]
        for c in report.cells
    ]
    payload = {
        "table": report.table_id,
        "cells": [c.to_json_dict() for c in report.cells],
        "mismatched_cells": [c.to_json_dict() for c in report.mismatches()],
    }
    _render(args.format, header, rows, payload, args.out)
    return 0


def _cmd_tables_export(args) -> int:
    if args.table == 1:
        header = ["degree_sequence", "T1", "T2", "irr", "sigma"]
        rows = [
            [",".join(map(str, r.entries)), str(r.t1), str(r.t2), str(r.irr), str(r.sigma)]
            for r in stats_tables.TABLE1
        ]
        payload = {
            "table": 1,
            "rows": [
                {"entries": list(r.entries), "T1": r.t1, "T2": r.t2, "irr": r.irr, "sigma": r.sigma}
                for r in stats_tables.TABLE1
            ],
        }
    else:
        header = ["degree_sequence", "n", "irr", "sigma", "lambda", "eta", "eta1"]
        rows = [
            [
                ",".join(map(str, r.entries)),
                str(r.n),
                str(r.irr),
                str(r.sigma),
                f"{float(r.lam):g}",
                str(r.eta),
                f"{float(r.eta1):g}",
            ]
            for r in stats_tables.TABLE2
        ]
        payload = {
            "table": 2,
            "rows": [
                {
                    "entries": list(r.entries),
                    "n": r.n,
                    "irr": r.irr,
                    "sigma": r.sigma,
                    "lambda": str(r.lam),
                    "eta": r.eta,
                    "eta1": str(r.eta1),
                }
                for r in stats_tables.TABLE2
            ],
        }
    _render(args.format, header, rows, payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# Subcommand: stats

def _fmt_opt(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.12g}"


def _cmd_stats_correlate(args) -> int:
    report, comparisons = stats_tables.table_correlation(args.table)
    header = ["var_a", "var_b", "computed", "printed", "abs_diff", "within_5e-3"]
    rows = []
    for comp in comparisons:
        rows.append(
            [
                report.variables[comp.row],
                report.variables[comp.col],
                _fmt_opt(comp.computed),
                f"{comp.printed:.6f}",
                _fmt_opt(comp.abs_diff),
                str(comp.within_tolerance).lower(),
            ]
        )
    payload = {
        "table": args.table,
        "variables": list(report.variables),
        "matrix": [[None if v is None else f"{v:.12g}" for v in row] for row in report.matrix],
        "comparisons": [
            {
                "var_a": report.variables[c.row],
                "var_b": report.variables[c.col],
                "computed": None if c.computed is None else f"{c.computed:.12g}",
                "printed": f"{c.printed:.6f}",
                "abs_diff": None if c.abs_diff is None else f"{c.abs_diff:.12g}",
                "within_tolerance": c.within_tolerance,
            }
            for c in comparisons
        ],
    }
    _render(args.format, header, rows, payload, args.out)
    return 0


def _cmd_stats_regress(args) -> int:
    repro = stats_tables.regression_reproduction(args.table)
    payload = repro.to_json_dict()
    if args.predict:
        try:
            point = tuple(float(x) for x in args.predict.split(","))
        except ValueError:
            raise InputError(f"--predict expects comma-separated numbers, got {args.predict!r}") from None
        predictions = {"printed_model": f"{stats_tables.printed_model_value(args.table, point):.12g}"}
        for name, fit in repro.fits.items():
            predictions[name] = f"{stats_tables.predict(fit, point):.12g}"
        payload["predictions_at"] = list(point)
        payload["predictions"] = predictions
    header = ["field", "value"]
    rows = [
        ["printed_model_at_point", f"{repro.printed_model_at_point:.12g}"],
        ["printed_predicted", f"{repro.printed.predicted:.12g}"],
        ["abs_prediction_gap", f"{repro.abs_prediction_gap:.12g}"],
    ]
    for name, fit in sorted(repro.fits.items()):
        rows.append([f"{name}.r_squared", _fmt_opt(fit.r_squared)])
        rows.append([f"{name}.condition_number", _fmt_opt(fit.condition_number)])
        rows.append([f"{name}.rank_deficient", str(fit.rank_deficient).lower()])
        rows.append([f"{name}.matches_printed_r2", str(repro.r2_match_flags[name]).lower()])
    if args.predict:
        for name, value in sorted(payload.get("predictions", {}).items()):
            rows.append([f"predict.{name}", value])
    _render(args.format, header, rows, payload, args.out)
    return 0


# ---------------------------------------------------------------------------
# Subcommand: plots emit (raw CSV series only)

def _cmd_plots_emit(args) -> int:
    if args.figure == 1:
        header = [
            "n",
            "sigma_path", "irr_path",
            "sigma_cycle", "irr_cycle",
            "sigma_star", "irr_star",
            "sigma_monogenic", "irr_monogenic",
        ]
        rows = []
        for n in range(3, args.max_n + 1):
            fam = {
                "path": graphs.path(n),
                "cycle": graphs.cycle(n),
                "star": graphs.star(n),
                "monogenic": graphs.monogenic(n),
            }
            row = [str(n)]
            for name in ("path", "cycle", "star", "monogenic"):
                row.append(str(indices.sigma(fam[name])))
                row.append(str(indices.albertson(fam[name])))
            # column order is sigma then irr per family, matching the header
            rows.append(row)
    elif args.figure == 2:
        header = ["n", "T1", "T2", "irr", "sigma"]
        rows = [
            [str(sum(r.entries)), str(r.t1), str(r.t2), str(r.irr), str(r.sigma)]
            for r in stats_tables.TABLE1
        ]
    elif args.figure == 3:
        header = ["n", "irr", "sigma", "lambda", "eta_printed", "eta_computed", "eta1_printed"]
        rows = []
        for c_eta, r in zip(
            (c for c in stats_tables.reproduce_table(2).column("eta")),
            stats_tables.TABLE2,
        ):
            rows.append(
                [
                    str(r.n),
                    str(r.irr),
                    str(r.sigma),
                    f"{float(r.lam):g}",
                    str(r.eta),
                    c_eta.recomputed or "",
                    f"{float(r.eta1):g}",
                ]
            )
    else:
        raise InputError("figure must be 1, 2, or 3")
    _emit(_csv_text(header, rows), args.out)
    return 0


# ---------------------------------------------------------------------------
# Parser assembly

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sigmairr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indices", help="compute albertson/sigma/sigma_t/zagreb_m1")
    p.add_argument("--family", help="family spec like path:5 or double_star:3:4")
    p.add_argument("--graph-file", help="edge-list file ('# n=<int>' header, 'u v' lines)")
    p.add_argument("--sequence", help="degree sequence literal; realized before computing")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_indices)

    p = sub.add_parser("sequence", help="degree-sequence operations")
    seq_sub = p.add_subparsers(dest="subcommand", required=True)
    pa = seq_sub.add_parser("analyze", help="derived sequences, averages, realizability")
    pa.add_argument("--sequence", required=True)
    pa.add_argument("--convention", choices=("standard", "paper-table"), default="standard")
    _add_output_flags(pa)
    pa.set_defaults(func=_cmd_sequence_analyze)

    p = sub.add_parser("bounds", help="evaluate or falsify catalogued claims")
    b_sub = p.add_subparsers(dest="subcommand", required=True)

    pc = b_sub.add_parser("check", help="evaluate catalogued claims on one input")
    pc.add_argument("--bound", default="all", help="catalog id (B1..B15b) or 'all'")
    pc.add_argument("--sequence")
    pc.add_argument("--convention", choices=("standard", "paper-table"), default="standard")
    pc.add_argument("--irr", type=int, help="Albertson value for summary-convention input")
    pc.add_argument("--family")
    pc.add_argument("--graph-file")
    pc.add_argument("--table", type=int, choices=(1, 2))
    pc.add_argument("--row", type=int, help="1-based row of the embedded table")
    pc.add_argument("--class-trees", type=int, help="evaluate on a class extremum witness: order")
    pc.add_argument("--class-mode", choices=("min", "max"))
    pc.add_argument("--allow-over-cap", action="store_true")
    pc.add_argument("--expect-hold", action="store_true", help="exit 2 if a probative report fails")
    _add_param_flags(pc)
    _add_output_flags(pc)
    pc.set_defaults(func=_cmd_bounds_check)

    pf = b_sub.add_parser("falsify", help="search trees for counterexamples")
    pf.add_argument("--bound", required=True)
    pf.add_argument("--nmax", type=int, help="exhaustive mode: cover all trees with n <= nmax")
    pf.add_argument("--n", type=int, help="random mode: tree order")
    pf.add_argument("--samples", type=int, help="random mode: number of seeded samples")
    pf.add_argument("--seed", type=int, default=0)
    pf.add_argument("--allow-over-cap", action="store_true")
    _add_param_flags(pf)
    _add_output_flags(pf)
    pf.set_defaults(func=_cmd_bounds_falsify)

    p = sub.add_parser("enumerate", help="stream non-isomorphic trees of a given order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--allow-over-cap", action="store_true")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("extremal", help="exact extremal index over a tree class")
    p.add_argument("--objective", choices=tuple(sorted(search.OBJECTIVES)), default="sigma")
    p.add_argument("--direction", choices=("max", "min"), default="max")
    p.add_argument("--n", type=int)
    p.add_argument("--degree-multiset", help="sequence literal selecting trees by degree multiset")
    p.add_argument("--max-degree", type=int, help="with --n: trees whose maximum degree equals this")
    p.add_argument("--allow-over-cap", action="store_true")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("tables", help="embedded published tables")
    t_sub = p.add_subparsers(dest="subcommand", required=True)
    pr = t_sub.add_parser("reproduce", help="recompute every derivable column")
    pr.add_argument("--table", type=int, choices=(1, 2), required=True)
    _add_output_flags(pr)
    pr.set_defaults(func=_cmd_tables_reproduce)
    pe = t_sub.add_parser("export", help="emit the printed cells")
    pe.add_argument("--table", type=int, choices=(1, 2), required=True)
    _add_output_flags(pe)
    pe.set_defaults(func=_cmd_tables_export)

    p = sub.add_parser("stats", help="correlation and regression reproduction")
    s_sub = p.add_subparsers(dest="subcommand", required=True)
    pcor = s_sub.add_parser("correlate", help="correlation matrix vs the printed one")
    pcor.add_argument("--table", type=int, choices=(1, 2), required=True)
    _add_output_flags(pcor)
    pcor.set_defaults(func=_cmd_stats_correlate)
    preg = s_sub.add_parser("regress", help="printed-model check and own fits")
    preg.add_argument("--table", type=int, choices=(1, 2), required=True)
    preg.add_argument("--predict", help="comma-separated point, e.g. 350,50")
    _add_output_flags(preg)
    preg.set_defaults(func=_cmd_stats_regress)

    p = sub.add_parser("plots", help="emit plot data series")
    pl_sub = p.add_subparsers(dest="subcommand", required=True)
    pp = pl_sub.add_parser("emit", help="raw CSV series for one figure")
    pp.add_argument("--figure", type=int, choices=(1, 2, 3), required=True)
    pp.add_argument("--max-n", type=int, default=20, help="figure 1: largest family order")
    pp.add_argument("--out", metavar="PATH")
    pp.set_defaults(func=_cmd_plots_emit)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except (DomainError, InputError, ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
