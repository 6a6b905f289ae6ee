"""Command-line interface.

Exit codes: 0 success; 1 a checked property failed; 2 usage, parse or
precondition error; 3 an enumeration or sampling budget ran out.  Budgets
resolve as flag over WELLDOM_BUDGET over the builtin default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .analysis import analyze, characterized_wcw_basis, characterized_wwd_basis, run_property_sweep
from .fixtures import builtin_fixtures, run_builtin_checks
from .generators import GeneratorConfig
from .graphs import Graph, ParseError, parse_graph
from .linalg import SubspaceBasis, fraction_str
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    EnumerationBudget,
    enumerate_maximal_independent_sets,
    enumerate_minimal_dominating_sets,
    weight_space_from_family,
)
from .weightspace import ConstraintConsistencyError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

# explicit budgets lift the vertex gates up to the graph6 limit and guard by
# enumerated-set count alone
OPEN_VERTEX_GATE = 62


class UsageError(Exception):
    pass


def resolve_budget(flag_value: int | None = None) -> EnumerationBudget:
    value = flag_value
    if value is None:
        raw = os.environ.get("WELLDOM_BUDGET")
        if raw is not None:
            try:
                value = int(raw)
            except ValueError:
                raise UsageError(f"WELLDOM_BUDGET must be an integer, got {raw!r}") from None
    if value is None:
        return DEFAULT_BUDGET
    if value < 1:
        raise UsageError("budget must be a positive number of sets")
    return EnumerationBudget(
        max_independent_vertices=OPEN_VERTEX_GATE,
        max_dominating_vertices=OPEN_VERTEX_GATE,
        max_sets=value,
    )


def _read_graph(path: str, fmt: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    return parse_graph(text, fmt)


def _print_basis(basis: SubspaceBasis) -> None:
    print(f"dimension: {basis.dimension}")
    for row in basis.rows:
        print("  " + " ".join(fraction_str(x) for x in row))


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.file, args.format)
    report = analyze(g, resolve_budget())
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(f"vertices: {report.vertex_count}, edges: {report.edge_count}, "
              f"connected: {report.connected}")
        present = [str(k) for k, flag in report.cycles_present.items() if flag]
        print("cycle lengths present (3..7): " + (", ".join(present) if present else "none"))
        rec = report.recognition
        if rec.applicable:
            print(f"well-covered: {rec.well_covered}, well-dominated: {rec.well_dominated} "
                  f"(clauses: {', '.join(rec.component_clauses)})")
        else:
            print(f"recognition not applicable: {rec.reason}")
        char = report.characterization
        if char.applicable:
            print(f"weight spaces: independent dim {char.wcw.dimension}, "
                  f"dominating dim {char.wwd.dimension}")
        else:
            print(f"characterization not applicable: {char.reason}")
        orc = report.oracle
        if orc.independent_available and orc.dominating_available:
            print(f"oracle: {orc.maximal_independent_count} maximal independent, "
                  f"{orc.minimal_dominating_count} minimal dominating; "
                  f"domination chain {orc.domination} <= {orc.independent_domination} "
                  f"<= {orc.independence} <= {orc.upper_domination}")
        for reason in orc.skip_reasons:
            print(f"oracle skipped: {reason}")
        passed = sum(1 for c in report.checks if c.status == "pass")
        skipped = sum(1 for c in report.checks if c.status == "skip")
        print(f"checks: {passed} passed, {len(report.failed_checks)} failed, {skipped} skipped")
    for check in report.failed_checks:
        print(f"check failed: {check.name}: {check.detail}", file=sys.stderr)
    return EXIT_CHECK_FAILED if report.failed_checks else EXIT_OK


def _weight_space_command(args: argparse.Namespace, engine, label: str) -> int:
    g = _read_graph(args.file, args.format)
    outcome = engine(g, resolve_budget())
    if args.json:
        payload = {
            "schema_version": 1,
            "space": label,
            "special_forms": [form.value for form in outcome.component_forms],
            "basis": outcome.basis.to_json_dict(),
            "notes": list(outcome.notes),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(f"special forms: {', '.join(form.value for form in outcome.component_forms)}")
        _print_basis(outcome.basis)
        for note in outcome.notes:
            print(f"note: {note}")
    return EXIT_OK


def _cmd_wcw(args: argparse.Namespace) -> int:
    return _weight_space_command(args, characterized_wcw_basis, "wcw")


def _cmd_wwd(args: argparse.Namespace) -> int:
    return _weight_space_command(args, characterized_wwd_basis, "wwd")


def _cmd_oracle(args: argparse.Namespace) -> int:
    g = _read_graph(args.file, args.format)
    budget = resolve_budget(args.budget)
    ind = enumerate_maximal_independent_sets(g, budget)
    dom = enumerate_minimal_dominating_sets(g, budget)
    wcw = weight_space_from_family(ind)
    wwd = weight_space_from_family(dom)
    ind_sizes, dom_sizes = ind.sizes(), dom.sizes()
    payload = {
        "schema_version": 1,
        "maximal_independent_count": len(ind),
        "minimal_dominating_count": len(dom),
        "domination": min(dom_sizes),
        "independent_domination": min(ind_sizes),
        "independence": max(ind_sizes),
        "upper_domination": max(dom_sizes),
        "well_covered": len(set(ind_sizes)) == 1,
        "well_dominated": len(set(dom_sizes)) == 1,
        "wcw": wcw.to_json_dict(),
        "wwd": wwd.to_json_dict(),
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for key in ("maximal_independent_count", "minimal_dominating_count", "domination",
                    "independent_domination", "independence", "upper_domination",
                    "well_covered", "well_dominated"):
            print(f"{key}: {payload[key]}")
        print("equal-weight space of maximal independent sets:")
        _print_basis(wcw)
        print("equal-weight space of minimal dominating sets:")
        _print_basis(wwd)
    return EXIT_OK


def _cmd_fixtures(args: argparse.Namespace) -> int:
    if not args.run:
        rows = [(f.name, f.graph.n, f.graph.edge_count) for f in builtin_fixtures()]
        if args.json:
            print(json.dumps(
                [{"name": n, "vertices": v, "edges": e} for n, v, e in rows], indent=2))
        else:
            for name, v, e in rows:
                print(f"{name}: {v} vertices, {e} edges")
        return EXIT_OK
    results = run_builtin_checks(resolve_budget())
    if args.json:
        print(json.dumps(
            [{"name": r.name, "ok": r.ok, "failures": list(r.failures)} for r in results],
            indent=2))
    else:
        for r in results:
            print(f"{'ok  ' if r.ok else 'FAIL'} {r.name}")
            for failure in r.failures:
                print(f"     {failure}")
    return EXIT_OK if all(r.ok for r in results) else EXIT_CHECK_FAILED


def _cmd_proptest(args: argparse.Namespace) -> int:
    cfg = GeneratorConfig(
        max_n=args.max_n,
        forbidden_cycles=args.forbid,
        seed=args.seed,
        count=args.count,
    )
    report = run_property_sweep(cfg, resolve_budget())
    print(f"graphs checked: {report.graphs_checked}")
    print(f"connected family instances: {report.family_instances}")
    print(f"failures: {len(report.failures)}")
    for failure in report.failures:
        print(f"  {failure}", file=sys.stderr)
    for skip in report.skips:
        print(f"skipped: {skip}")
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def _parse_forbid(text: str) -> frozenset[int]:
    if not text.strip():
        return frozenset()
    try:
        lengths = frozenset(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(k < 3 for k in lengths):
        raise argparse.ArgumentTypeError("cycle lengths start at 3")
    return lengths


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="welldom",
        description="Recognition, weight spaces and enumeration oracles for "
                    "well-covered and well-dominated graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_command(name: str, handler, help_text: str):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="graph file")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    add_graph_command("analyze", _cmd_analyze,
                      "full report with recognition, weight spaces, oracle and cross-checks")
    add_graph_command("wcw", _cmd_wcw,
                      "equal-weight space of the maximal independent sets")
    add_graph_command("wwd", _cmd_wwd,
                      "equal-weight space of the minimal dominating sets")
    oracle_p = add_graph_command("oracle", _cmd_oracle,
                                 "brute-force enumeration, no characterizations")
    oracle_p.add_argument("--budget", type=int, default=None,
                          help="maximum number of enumerated sets")

    fixtures_p = sub.add_parser("fixtures", help="list or verify the builtin examples")
    fixtures_p.add_argument("--run", action="store_true", help="verify expectations")
    fixtures_p.add_argument("--json", action="store_true")
    fixtures_p.set_defaults(handler=_cmd_fixtures)

    proptest_p = sub.add_parser("proptest", help="randomized property sweep")
    proptest_p.add_argument("--count", type=int, default=100)
    proptest_p.add_argument("--max-n", dest="max_n", type=int, default=10)
    proptest_p.add_argument("--seed", type=int, default=0)
    proptest_p.add_argument("--forbid", type=_parse_forbid, default=frozenset(),
                            help="comma-separated cycle lengths, e.g. 4,5,6")
    proptest_p.set_defaults(handler=_cmd_proptest)
    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstraintConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except BudgetExceededError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(cli_main())


__all__ = ["build_parser", "cli_main", "main", "resolve_budget"]
