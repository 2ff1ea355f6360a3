"""Command-line front end.

Subcommands: ``analyze`` (all parameters of one table), ``solve``
(optimal deterministic or nondeterministic tree), ``gen`` (write a table
family), ``verify`` (bound / construction / family check suites), and
``profile`` (empirical class profile over a directory of tables).

Exit codes: 0 success, 1 at least one non-skipped check failed, 2 usage
or input error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

from .errors import MvdError, ResourceLimitError
from .families import FAMILY_NAMES, PhiSpec, gen_family
from .limits import Limits, default_limits
from .measure import Measure, eval_attr_set, m_psi
from .params import g_param, l_param, z_param
from .solve import m_param, solve_det, solve_nondet
from .table import DecisionTable
from .tableio import load_document, parse_weights_sidecar, save_table
from .tree import export_tree, tree_to_obj
from .verify import (
    VerificationReport,
    check_bounds,
    check_construction,
    check_families,
    empirical_profile,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mvd",
        description="Exact analysis workbench for decision tables with many-valued decisions.",
    )
    parser.add_argument("--format", choices=("text", "structured"), default="text")
    parser.add_argument("--max-cols", type=int, default=None)
    parser.add_argument("--max-rows", type=int, default=None)
    parser.add_argument("--max-memo", type=int, default=None)
    parser.add_argument("--max-words", type=int, default=None)
    parser.add_argument("--max-bb-nodes", type=int, default=None)
    parser.add_argument("--max-tuples", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="print every parameter of a table")
    analyze.add_argument("table")
    analyze.add_argument("--measure", choices=("depth", "wsum", "wmax"), default="depth")
    analyze.add_argument("--weights", help="sidecar weights file (name value per line)")
    analyze.add_argument("--l-budget", type=int, action="append", default=[],
                         help="budget for the cover parameter; repeatable")

    solve = sub.add_parser("solve", help="optimal decision tree for a table")
    solve.add_argument("mode", choices=("det", "nondet"))
    solve.add_argument("table")
    solve.add_argument("--measure", choices=("depth", "wsum", "wmax"), default="depth")
    solve.add_argument("--weights")
    solve.add_argument("--emit", choices=("dot", "structured"), default=None,
                       help="also emit the witness tree")

    gen = sub.add_parser("gen", help="generate a table family")
    gen.add_argument("family", choices=FAMILY_NAMES)
    gen.add_argument("params", nargs="*", help="family parameters (tk/tkstar: k; qn: n; threshold: t1 t2 ...)")
    gen.add_argument("--phi", default="identity",
                     help="qn target: identity|double|square or comma-separated values")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--cols", type=int, default=4)
    gen.add_argument("--rows", type=int, default=8)
    gen.add_argument("--k", type=int, default=2)
    gen.add_argument("-o", "--output", required=True)

    verify = sub.add_parser("verify", help="run check suites")
    verify.add_argument("--table", action="append", default=[], help="table file; repeatable")
    verify.add_argument("--measure", choices=("depth", "wsum", "wmax"), default="depth")
    verify.add_argument("--weights")
    verify.add_argument("--family", choices=("tk", "qn", "threshold"), default=None)
    verify.add_argument("--max-k", type=int, default=3)
    verify.add_argument("--max-n", type=int, default=4)
    verify.add_argument("--phi", default="identity")
    verify.add_argument("--threshold-sets", type=int, default=10)
    verify.add_argument("--seed", type=int, default=20240601)
    verify.add_argument("--construction", choices=("m1", "m10"), default=None)
    verify.add_argument("--budget", type=int, default=1)

    profile = sub.add_parser("profile", help="empirical profile over a table directory")
    profile.add_argument("--tables", required=True, help="directory of table files")
    profile.add_argument("--measure", choices=("depth", "wsum", "wmax"), default="depth")
    profile.add_argument("--weights")
    profile.add_argument("--n-max", type=int, default=3)

    return parser


def _limits_from_args(args) -> Limits:
    lim = default_limits()
    overrides = {}
    for flag, name in (
        ("max_cols", "max_cols"), ("max_rows", "max_rows"), ("max_memo", "max_memo"),
        ("max_words", "max_words"), ("max_bb_nodes", "max_bb_nodes"), ("max_tuples", "max_tuples"),
    ):
        value = getattr(args, flag)
        if value is not None:
            overrides[name] = value
    return replace(lim, **overrides) if overrides else lim


def _load_table(path: str, args) -> tuple[DecisionTable, Measure]:
    doc = load_document(path)
    weights = doc.weights
    if args.weights:
        with open(args.weights, "r", encoding="utf-8") as handle:
            weights = parse_weights_sidecar(handle.read())
    kind = args.measure
    if kind == "depth":
        return doc.table, Measure.depth()
    if weights is None:
        raise MvdError(f"measure {kind!r} needs weights (file 'weights' line or --weights)")
    if kind == "wsum":
        return doc.table, Measure.weighted_sum(weights)
    return doc.table, Measure.weighted_max(weights)


def _phi_from_arg(text: str) -> PhiSpec:
    if "," in text or text.strip().isdigit():
        return PhiSpec.from_values(int(v) for v in text.split(","))
    return PhiSpec.named(text)


def _cmd_analyze(args, lim: Limits) -> int:
    table, measure = _load_table(args.table, args)
    budgets = args.l_budget or []
    empty = table.is_empty  # zero-row tables count as the empty table everywhere
    values: dict[str, object] = {
        "N": table.n_rows,
        "W": 0 if empty else table.n_cols,
        "W_psi": 0 if empty else eval_attr_set(measure, table.attrs),
        "m_psi": m_psi(measure, table),
        "M_rows": 0 if empty else m_param(table, measure, "rows", lim),
        "M_all": 0 if empty else m_param(table, measure, "all", lim),
        "psi_a": 0 if empty else solve_nondet(table, measure, lim).value,
        "psi_d": solve_det(table, measure, lim).value,
    }
    if table.k == 2:
        values["Z"] = z_param(table, lim)[0]
        values["G"] = g_param(table, lim)[0]
    l_values = {n: l_param(table, measure, n, lim)[0] for n in budgets}
    if args.format == "structured":
        obj = {"schema": "mvd-analyze/1", **values, "l": {str(n): v for n, v in sorted(l_values.items())}}
        print(json.dumps(obj, indent=2))
    else:
        for key, value in values.items():
            print(f"{key} {value}")
        for n in sorted(l_values):
            print(f"l({n}) {l_values[n]}")
    return EXIT_OK


def _cmd_solve(args, lim: Limits) -> int:
    table, measure = _load_table(args.table, args)
    solver = solve_det if args.mode == "det" else solve_nondet
    result = solver(table, measure, lim)
    if args.format == "structured":
        obj = {
            "schema": "mvd-solve/1",
            "mode": args.mode,
            "value": result.value,
            "tree": tree_to_obj(result.tree) if result.tree is not None else None,
            "stats": {"explored": result.stats.explored, "memo_hits": result.stats.memo_hits,
                      "seconds": result.stats.seconds},
        }
        print(json.dumps(obj, indent=2))
        return EXIT_OK
    print(f"value {result.value}")
    if args.emit and result.tree is not None:
        print(export_tree(result.tree, args.emit))
    return EXIT_OK


def _cmd_gen(args, lim: Limits) -> int:
    params: dict[str, object] = {}
    if args.family in ("tk", "tkstar"):
        if len(args.params) != 1:
            raise MvdError(f"gen {args.family} takes exactly one parameter: k")
        params["k"] = int(args.params[0])
    elif args.family == "qn":
        if len(args.params) != 1:
            raise MvdError("gen qn takes exactly one parameter: n")
        params["n"] = int(args.params[0])
        params["phi"] = _phi_from_arg(args.phi)
    elif args.family == "threshold":
        if not args.params:
            raise MvdError("gen threshold needs at least one threshold")
        params["thresholds"] = [int(t) for t in args.params]
    elif args.family == "random":
        params.update(seed=args.seed, cols=args.cols, rows=args.rows, k=args.k)
    table, weights = gen_family(args.family, lim, **params)
    fmt = "structured" if args.format == "structured" else "text"
    save_table(args.output, table, weights, fmt)
    print(f"wrote {args.output} ({table.n_rows} rows, {table.n_cols} columns)")
    return EXIT_OK


def _cmd_verify(args, lim: Limits) -> int:
    report = VerificationReport()
    for path in args.table:
        table, measure = _load_table(path, args)
        name = os.path.basename(path)
        if args.construction:
            report.extend(check_construction(table, measure, args.budget, args.construction, lim, name))
        else:
            report.extend(check_bounds(table, measure, lim, name))
    if args.family:
        report.extend(
            check_families(
                args.family,
                max_k=args.max_k,
                max_n=args.max_n,
                phi=_phi_from_arg(args.phi),
                threshold_sets=args.threshold_sets,
                seed=args.seed,
                limits=lim,
            )
        )
    report.finalize()
    if args.format == "structured":
        print(json.dumps(report.to_obj(), indent=2))
    else:
        print(report.render_text())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _cmd_profile(args, lim: Limits) -> int:
    directory = args.tables
    if not os.path.isdir(directory):
        raise MvdError(f"{directory} is not a directory")
    tables = []
    merged: dict[str, int] = {}
    for entry in sorted(os.listdir(directory)):
        path = os.path.join(directory, entry)
        if not os.path.isfile(path):
            continue
        doc = load_document(path)
        tables.append(doc.table)
        for attr, w in (doc.weights or {}).items():
            if merged.setdefault(attr, w) != w:
                raise MvdError(f"conflicting weights for {attr!r} across {directory}")
    if not tables:
        raise MvdError(f"no table files in {directory}")
    if args.weights:
        with open(args.weights, "r", encoding="utf-8") as handle:
            merged.update(parse_weights_sidecar(handle.read()))
    if args.measure == "depth":
        measure = Measure.depth()
    elif args.measure == "wsum":
        measure = Measure.weighted_sum(merged)
    else:
        raise MvdError("profiles need a bounded measure: depth or wsum")
    profile = empirical_profile(tables, measure, args.n_max, lim, label=directory)
    if args.format == "structured":
        print(json.dumps(profile.to_obj(), indent=2))
    else:
        print(profile.render_text())
    return EXIT_OK


def run_cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        lim = _limits_from_args(args)
        if args.command == "analyze":
            return _cmd_analyze(args, lim)
        if args.command == "solve":
            return _cmd_solve(args, lim)
        if args.command == "gen":
            return _cmd_gen(args, lim)
        if args.command == "verify":
            return _cmd_verify(args, lim)
        if args.command == "profile":
            return _cmd_profile(args, lim)
        parser.error(f"unknown command {args.command!r}")
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MvdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
