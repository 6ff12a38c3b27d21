"""Command-line interface: gen, color, minor, decompose, discharge,
audit, theorem1, pipeline.

Exit codes: 0 success, 2 assertion failure, 3 budget exhausted,
4 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .audit import (
    audit_adjacency,
    audit_neighborhood,
    detect_sz_configs,
    edge_bound_checks,
    is_delta_critical_oracle,
)
from .color import SolveBudget, chromatic_index_exact, validate_coloring, vizing_color
from .discharge import (
    ContextError,
    apply_rules,
    check_hypotheses,
    find_configuration,
    initial_charges,
    make_context,
    verify_outcome,
)
from .embed import EmbeddingError, build_embedding, outer_face_by_vertices
from .generate import sample_k5_free
from .graph import Graph, GraphError, is_connected
from .ioformats import ParseError, format_edge_list, parse_edge_list, parse_rotation
from .minor import find_k5_minor_witness, has_k5_minor, is_planar, maximalize_k5_free
from .treedec import DecompositionError, tree_decompose_3simple

EXIT_OK = 0
EXIT_ASSERTION = 2
EXIT_BUDGET = 3
EXIT_INPUT = 4


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


class Report:
    """Structured report: ordered key/value pairs plus row lists."""

    def __init__(self) -> None:
        self.items: list[tuple[str, object]] = []
        self.rows: list[dict] = []

    def put(self, key: str, value: object) -> None:
        self.items.append((key, value))

    def row(self, **kwargs: object) -> None:
        self.rows.append(kwargs)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            data = {"items": dict(self.items), "rows": self.rows}
            return json.dumps(data, indent=2, sort_keys=True, default=str) + "\n"
        lines = [f"{k} = {v}" for k, v in self.items]
        for r in self.rows:
            lines.append("row: " + " ".join(f"{k}={v}" for k, v in r.items()))
        return "\n".join(lines) + "\n"


def _emit(report: Report, args: argparse.Namespace) -> None:
    text = report.render(args.format)
    if args.report:
        Path(args.report).write_text(text)
    else:
        sys.stdout.write(text)


def _load_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text(), path)


def _manifest(report: Report, args: argparse.Namespace, inputs: list[str]) -> None:
    report.put("tool_version", __version__)
    report.put("command", args.command)
    if getattr(args, "seed", None) is not None:
        report.put("seed", args.seed)
    report.put("budget_ms", args.budget_ms)
    for p in inputs:
        digest = hashlib.sha256(Path(p).read_bytes()).hexdigest()[:16]
        report.put(f"input:{p}", digest)


def _budget(args: argparse.Namespace) -> SolveBudget:
    return SolveBudget(time_limit_ms=args.budget_ms)


def cmd_gen(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else 0
    g = sample_k5_free(
        n_target=args.n, parts=args.parts, wagner_probability=args.wagner_prob,
        delete_fraction=args.delete, seed=seed, min_delta=args.min_delta)
    text = format_edge_list(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = Report()
    _manifest(report, args, [args.graph])
    report.put("n", g.n)
    report.put("m", g.m)
    report.put("delta", g.max_degree())
    if args.exact:
        res = chromatic_index_exact(g, _budget(args))
        if res.status == "exhausted":
            report.put("status", "budget-exhausted")
            _emit(report, args)
            return EXIT_BUDGET
        coloring = res.coloring
        report.put("chromatic_index", res.chromatic_index)
        if g.m:
            report.put("class", "class1" if res.chromatic_index == g.max_degree()
                       else "class2")
    else:
        coloring = vizing_color(g)
        report.put("palette", coloring.palette)
    assert coloring is not None
    ok, conflict = validate_coloring(g, coloring)
    report.put("valid", ok)
    if conflict:
        report.put("conflict", conflict)
    for (u, v), c in sorted(coloring.colors.items()):
        report.row(edge=f"{u}-{v}", color=c)
    _emit(report, args)
    return EXIT_OK if ok else EXIT_ASSERTION


def cmd_minor(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = Report()
    _manifest(report, args, [args.graph])
    found = has_k5_minor(g)
    report.put("k5_minor", found)
    if found:
        witness = find_k5_minor_witness(g)
        if witness is not None:
            for i, s in enumerate(witness.branch_sets):
                report.row(branch_set=i, vertices=",".join(map(str, s)))
    _emit(report, args)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = Report()
    _manifest(report, args, [args.graph])
    try:
        td = tree_decompose_3simple(g)
    except DecompositionError as exc:
        report.put("error", str(exc))
        _emit(report, args)
        return EXIT_INPUT
    report.put("bags", len(td.bags))
    for i, bag in enumerate(td.bags):
        report.row(bag=i, vertices=",".join(map(str, sorted(bag))))
    for (a, b), sep in zip(td.tree_edges, td.separators):
        report.row(tree_edge=f"{a}-{b}", separator=",".join(map(str, sorted(sep))))
    _emit(report, args)
    return EXIT_OK


def cmd_discharge(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.rotation:
        rotation = parse_rotation(Path(args.rotation).read_text(), g, args.rotation)
        emb = build_embedding(g, rotation)
    else:
        planar, emb = is_planar(g)
        if not planar or emb is None:
            raise EmbeddingError("graph is not planar; supply --rotation for an embedding")
    if args.outer_vertices:
        ids = [int(t) for t in args.outer_vertices.split(",")]
        emb = build_embedding(g, [list(r) for r in emb.rotation],
                              outer_face_by_vertices(emb, ids))
    elif args.outer_face is not None:
        emb = build_embedding(g, [list(r) for r in emb.rotation], args.outer_face)
    y = [int(t) for t in args.Y.split(",")] if args.Y else []

    report = Report()
    _manifest(report, args, [p for p in (args.graph, args.rotation) if p])
    report.put("mode", args.mode)
    report.put("outer_face", emb.outer_face)
    report.put("Y", ",".join(map(str, sorted(y))))
    hyp = check_hypotheses(g, y, args.mode, emb)
    for name, cond in hyp.conditions.items():
        report.put(f"hypothesis:{name}", "pass" if cond.passed else f"fail {cond.violations}")
    report.put("hypotheses_pass", hyp.passed)

    if args.mode == "planar-lemma1":
        ctx = make_context(emb, y)
    else:
        # rule engine still runs with a singleton Y-free context is not
        # defined; reuse the embedding with an empty Y
        from .discharge import DischargingContext
        ctx = DischargingContext(embedding=emb, Y=frozenset())
    ledger0 = initial_charges(ctx)
    ledger = apply_rules(ctx, ledger0)
    outcome = verify_outcome(ledger)
    report.put("initial_total", _frac(ledger0.total()))
    report.put("final_total", _frac(outcome.total))
    report.put("conserved", outcome.conserved)
    report.put("negative_elements", len(outcome.negative))
    members = [v for v in range(g.n) if v not in set(y)]
    config = find_configuration(g, members)
    report.put("configuration",
               f"{config.kind}{config.witness}" if config else "none")
    for el, ch in sorted(ledger.charge.items()):
        report.row(element=f"{el[0]}{el[1]}",
                   initial=_frac(ledger0.charge[el]), final=_frac(ch))
    for t in ledger.transfers:
        report.row(rule=t.rule, source=f"{t.source[0]}{t.source[1]}",
                   sink=f"{t.sink[0]}{t.sink[1]}", amount=_frac(t.amount))
    for note in ledger.notes:
        report.put("note", note)
    _emit(report, args)
    return EXIT_OK if outcome.conserved else EXIT_ASSERTION


def cmd_audit(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = Report()
    _manifest(report, args, [args.graph])
    k5_free = not has_k5_minor(g)
    findings = (audit_adjacency(g) + audit_neighborhood(g)
                + detect_sz_configs(g) + edge_bound_checks(g, k5_free))
    for f in findings:
        report.row(lemma=f.lemma, witness=",".join(map(str, f.witness)),
                   detail=f.detail)
    verdict = "certified-not-critical" if findings else "inconclusive"
    code = EXIT_OK
    if args.oracle:
        cert = is_delta_critical_oracle(g, _budget(args))
        if cert.status == "unknown":
            verdict = "budget-exhausted"
            code = EXIT_BUDGET
        elif cert.status == "critical":
            verdict = "critical(oracle)"
            if findings:
                report.put("assertion_failure",
                           "detector fired on an oracle-certified critical graph")
                code = EXIT_ASSERTION
        report.put("oracle", cert.status)
        if cert.chromatic_index is not None:
            report.put("chromatic_index", cert.chromatic_index)
    report.put("verdict", verdict)
    _emit(report, args)
    return code


def cmd_theorem1(args: argparse.Namespace) -> int:
    report = Report()
    _manifest(report, args, [])
    budget = _budget(args)
    seed = args.seed if args.seed is not None else 1
    failures = 0
    exhausted = 0
    for i in range(args.count):
        g = sample_k5_free(n_target=args.n_max, parts=args.parts,
                           wagner_probability=args.wagner_prob,
                           seed=seed + i, min_delta=7)
        t0 = time.monotonic()
        res = chromatic_index_exact(g, budget)
        elapsed = time.monotonic() - t0
        if res.status == "exhausted":
            exhausted += 1
            report.row(instance=i, n=g.n, m=g.m, delta=g.max_degree(),
                       chromatic_index="unknown", seconds=round(elapsed, 3))
            continue
        ok = res.chromatic_index == g.max_degree()
        if not ok:
            failures += 1
            report.put(f"counterexample:{i}", format_edge_list(g).replace("\n", ";"))
        report.row(instance=i, n=g.n, m=g.m, delta=g.max_degree(),
                   chromatic_index=res.chromatic_index, seconds=round(elapsed, 3),
                   class1=ok)
    report.put("count", args.count)
    report.put("class2_failures", failures)
    report.put("budget_exhausted", exhausted)
    _emit(report, args)
    if failures:
        return EXIT_ASSERTION
    if exhausted:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_pipeline(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    report = Report()
    _manifest(report, args, [args.graph])
    report.put("n", g.n)
    report.put("m", g.m)
    report.put("delta", g.max_degree())
    report.put("connected", is_connected(g))
    minor = has_k5_minor(g)
    report.put("k5_minor", minor)
    code = EXIT_OK
    if not minor and g.n >= 4 and is_connected(g):
        maximal = maximalize_k5_free(g)
        report.put("maximalized_m", maximal.m)
        try:
            td = tree_decompose_3simple(maximal)
            report.put("decomposition_bags", len(td.bags))
        except DecompositionError as exc:
            report.put("decomposition", f"skipped: {exc}")
    if g.m:
        res = chromatic_index_exact(g, _budget(args))
        if res.status == "exhausted":
            report.put("chromatic_index", "unknown")
            code = EXIT_BUDGET
        else:
            report.put("chromatic_index", res.chromatic_index)
            report.put("class", "class1" if res.chromatic_index == g.max_degree()
                       else "class2")
    k5_free = not minor
    findings = (audit_adjacency(g) + audit_neighborhood(g)
                + detect_sz_configs(g) + edge_bound_checks(g, k5_free))
    report.put("audit_findings", len(findings))
    planar, emb = is_planar(g)
    report.put("planar", planar)
    if planar and emb is not None:
        from .discharge import DischargingContext
        ctx = DischargingContext(embedding=emb, Y=frozenset())
        ledger = apply_rules(ctx, initial_charges(ctx))
        outcome = verify_outcome(ledger)
        report.put("charges_conserved", outcome.conserved)
    _emit(report, args)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k5edge",
        description="edge coloring, discharging and minor tools for "
                    "K5-minor-free graphs")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.add_argument("--report", help="write the report to this path")
    parser.add_argument("--budget-ms", type=int, default=60_000)
    parser.add_argument("--seed", type=int, default=None,
                        help="generator seed (gen defaults to 0, theorem1 to 1)")
    # the same flags are accepted after the subcommand; SUPPRESS keeps a
    # subparser from clobbering a value given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS)
    common.add_argument("--report", default=argparse.SUPPRESS)
    common.add_argument("--budget-ms", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a K5-minor-free graph",
                       parents=[common])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--parts", type=int, default=1)
    p.add_argument("--wagner-prob", type=float, default=0.0)
    p.add_argument("--delete", type=float, default=0.0)
    p.add_argument("--min-delta", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="edge-color a graph", parents=[common])
    p.add_argument("--graph", required=True)
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("minor", help="K5-minor test", parents=[common])
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_minor)

    p = sub.add_parser("decompose", help="3-simple tree decomposition", parents=[common])
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("discharge", help="run the discharging engine", parents=[common])
    p.add_argument("--graph", required=True)
    p.add_argument("--rotation")
    p.add_argument("--outer-face", type=int, default=None)
    p.add_argument("--outer-vertices",
                   help="comma-separated vertices that must lie on the outer face")
    p.add_argument("--Y", help="comma-separated Y vertices")
    p.add_argument("--mode", choices=["planar-lemma1", "k5-lemma3"],
                   default="planar-lemma1")
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("audit", help="critical-graph detectors", parents=[common])
    p.add_argument("--graph", required=True)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("theorem1", help="generated class-1 verification suite", parents=[common])
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--n-max", type=int, default=24)
    p.add_argument("--parts", type=int, default=2)
    p.add_argument("--wagner-prob", type=float, default=0.15)
    p.set_defaults(func=cmd_theorem1)

    p = sub.add_parser("pipeline", help="minor test, decompose, color, audit, discharge", parents=[common])
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_pipeline)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, GraphError, EmbeddingError, ContextError,
            DecompositionError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
