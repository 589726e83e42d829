"""Command-line front end: generation, certified checks, exact counts,
embedding pipelines, and parameter sweeps with plot-ready CSV output.

Exit codes: 0 pass/found, 1 violation or absence, 2 budget exhausted,
3 input error.
"""

from __future__ import annotations

import argparse
import csv
import io as _stdio
import json
import sys
import time
from fractions import Fraction

from . import algorithms, counters, detectors, generators
from .graph import Graph, GraphError, degree_profile
from .io import ParseError, emit_graph, load_graph, parse_graph
from .generators import ParameterError

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3


def _write_bytes(data: bytes, output: str | None) -> None:
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _emit_rows(rows: list[dict], columns: list[str], args) -> None:
    if getattr(args, "timing", False):
        columns = columns + ["runtime_ms"]
    else:
        rows = [{k: v for k, v in r.items() if k != "runtime_ms"} for r in rows]
    if args.emit == "json":
        text = json.dumps(rows, indent=2, default=str) + "\n"
    else:
        buf = _stdio.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _fmt(row.get(k)) for k in columns})
        text = buf.getvalue()
    _write_bytes(text.encode(), getattr(args, "output", None))


def _fmt(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return repr(value)
    return value


def _load(args, attr="input") -> Graph:
    return load_graph(getattr(args, attr), args.format)


def _parse_ids(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok != ""]


def _rooted_tree(args) -> generators.RootedTree:
    tree = load_graph(args.tree, "edge-list")
    return generators.RootedTree(tree, frozenset(_parse_ids(args.roots)))


def _config(args) -> algorithms.PipelineConfig:
    return algorithms.PipelineConfig(
        s=args.s,
        l=getattr(args, "l", 2) or 2,
        t=getattr(args, "t", 2) or 2,
        p=getattr(args, "p", 1) or 1,
        q=args.q,
        tau=args.tau,
        beta=args.beta,
        path_budget=args.path_budget,
        node_budget=args.budget,
        trials=args.trials,
        seed=args.seed,
    )


# ---------------------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "theta":
        g = generators.theta(args.l, args.t).graph
    elif args.kind == "prism":
        g = generators.prism(args.l)
    elif args.kind == "lift":
        rt = _rooted_tree(args)
        spec = generators.LiftSpec(frozenset(_parse_ids(args.set or "")), args.p)
        g = generators.lift(rt, spec).graph
    elif args.kind == "blowup":
        g = generators.clique_blowup(_load(args), args.t).graph
    else:
        g = generators.polarity_graph(args.q)
    _write_bytes(emit_graph(g, args.format), args.output)
    return EXIT_PASS


def cmd_check(args) -> int:
    g = _load(args)
    start = time.perf_counter()
    if args.kind == "kss":
        cert = detectors.find_biclique(g, args.s)
        row = {
            "n": g.n,
            "e": g.edge_count,
            "s": args.s,
            "passed": cert is None,
            "witness": json.dumps(
                None if cert is None else [list(cert.side_a), list(cert.side_b)]
            ),
            "seed": args.seed,
            "runtime_ms": round(1000 * (time.perf_counter() - start), 3),
        }
        _emit_rows([row], ["n", "e", "s", "passed", "witness", "seed"], args)
        return EXIT_PASS if cert is None else EXIT_VIOLATION

    if args.kind == "induced":
        pattern = load_graph(args.pattern, args.format)
        res = detectors.find_induced(g, pattern, limit=args.budget)
        row = {
            "n": g.n,
            "e": g.edge_count,
            "passed": not res.found and not res.exhausted,
            "exhausted": res.exhausted,
            "witness": json.dumps(
                None if res.embedding is None else list(res.embedding.mapping)
            ),
            "seed": args.seed,
            "runtime_ms": round(1000 * (time.perf_counter() - start), 3),
        }
        _emit_rows(
            [row], ["n", "e", "passed", "exhausted", "witness", "seed"], args
        )
        if res.found:
            return EXIT_VIOLATION
        return EXIT_BUDGET if res.exhausted else EXIT_PASS

    family = [load_graph(path, args.format) for path in args.family]
    report = detectors.witness_check(g, family, args.s, limit=args.budget)
    row = {
        "n": g.n,
        "e": g.edge_count,
        "s": args.s,
        "passed": report.passed,
        "kss_violation": report.kss_violation is not None,
        "induced_violations": len(report.induced_violations),
        "inconclusive": report.inconclusive,
        "seed": args.seed,
        "runtime_ms": round(1000 * (time.perf_counter() - start), 3),
    }
    _emit_rows(
        [row],
        [
            "n", "e", "s", "passed", "kss_violation",
            "induced_violations", "inconclusive", "seed",
        ],
        args,
    )
    if report.passed:
        return EXIT_PASS
    return EXIT_BUDGET if report.inconclusive else EXIT_VIOLATION


def cmd_count(args) -> int:
    g = _load(args)
    start = time.perf_counter()
    prof = degree_profile(g)
    row = {
        "n": g.n,
        "e": g.edge_count,
        "min_degree": prof.min_degree,
        "max_degree": prof.max_degree,
        "avg_degree": prof.avg_degree,
        "seed": args.seed,
    }
    try:
        if args.kind == "hom":
            row["count"] = str(counters.hom_closed_walks(g, args.k))
        elif args.kind == "walks":
            row["count"] = str(counters.walk_count(g, args.u, args.v, args.l))
        elif args.kind == "c4":
            row["count"] = str(counters.count_induced_c4(g, method=args.method))
        elif args.kind == "thin-thick":
            tau = args.tau if args.tau is not None else float(prof.avg_degree) ** (2 / 3)
            stats = counters.thin_thick_stats(g, tau)
            row.update(
                {
                    "count": str(stats.induced_c4_count),
                    "thin": str(stats.thin_count),
                    "thick": str(stats.thick_count),
                    "tau": tau,
                }
            )
        elif args.kind == "two-paths":
            tally = counters.two_path_tally(g)
            row["count"] = str(tally.total_by_vertex())
            row["pair_total"] = str(tally.total_by_pair())
        else:  # induced
            pattern = load_graph(args.pattern, args.format)
            row["count"] = str(
                counters.count_labeled_induced(g, pattern, budget=args.budget)
            )
    except counters.BudgetExceeded as exc:
        _error(str(exc))
        return EXIT_BUDGET
    row["runtime_ms"] = round(1000 * (time.perf_counter() - start), 3)
    columns = ["n", "e", "min_degree", "max_degree", "avg_degree", "count"]
    columns += [c for c in ("thin", "thick", "tau", "pair_total") if c in row]
    columns.append("seed")
    _emit_rows([row], columns, args)
    return EXIT_PASS


def cmd_embed(args) -> int:
    g = _load(args)
    cfg = _config(args)
    start = time.perf_counter()
    audit: dict = {"n": g.n, "e": g.edge_count, "seed": args.seed}
    exhausted = False
    if args.kind == "tree":
        tree = load_graph(args.tree, "edge-list")
        thr = args.beta_threshold
        if thr is None:
            thr = cfg.beta_threshold(g)
        res = algorithms.greedy_tree_embed(g, tree, thr, seed=args.seed)
        embedding = res.embedding
        audit["beta_threshold"] = thr
        if res.failed_step is not None:
            audit["failed_step"] = res.failed_step
    elif args.kind == "lift":
        rt = _rooted_tree(args)
        res = algorithms.find_induced_lift(g, rt, args.p, cfg)
        embedding = res.embedding
        audit.update(res.diagnostics)
        if res.spec is not None:
            audit["lift_set"] = sorted(res.spec.s)
            audit["p"] = res.spec.p
        if res.failure_stage:
            audit["failure_stage"] = res.failure_stage
    elif args.kind == "theta":
        res = algorithms.find_induced_theta(g, args.l, args.t, cfg)
        embedding = res.embedding
        exhausted = res.exhausted
    else:  # prism
        res = algorithms.find_induced_prism(g, args.l, cfg, fallback=args.fallback)
        embedding = res.embedding
        exhausted = res.exhausted
    audit["runtime_ms"] = round(1000 * (time.perf_counter() - start), 3)
    if not getattr(args, "timing", False):
        audit.pop("runtime_ms", None)
    payload = {
        "found": embedding is not None,
        "exhausted": exhausted,
        "embedding": None if embedding is None else list(embedding.mapping),
        "audit": audit,
    }
    _write_bytes(
        (json.dumps(payload, indent=2, default=str) + "\n").encode(), args.output
    )
    if embedding is not None:
        return EXIT_PASS
    return EXIT_BUDGET if exhausted else EXIT_VIOLATION


def cmd_pipeline(args) -> int:
    g = _load(args)
    if args.kind == "regularize":
        res = algorithms.almost_regularize(
            g, args.alpha, args.c, trials=args.trials, seed=args.seed
        )
        payload = {
            "success": res.success,
            "vertex_set": res.vertex_set,
            "achieved_k": None if res.achieved_k is None else str(res.achieved_k),
            "iterations": res.iterations,
            "failure_reason": res.failure_reason,
            "log": res.log,
        }
        _write_bytes(
            (json.dumps(payload, indent=2, default=str) + "\n").encode(),
            args.output,
        )
        return EXIT_PASS if res.success else EXIT_VIOLATION
    res = algorithms.find_rich_set(
        g, args.tau, args.c1, args.c2, trials=args.trials, seed=args.seed
    )
    payload = {
        "found": res.found,
        "vertex_set": res.vertex_set,
        "audit": res.audit,
    }
    _write_bytes(
        (json.dumps(payload, indent=2, default=str) + "\n").encode(), args.output
    )
    return EXIT_PASS if res.found else EXIT_VIOLATION


def cmd_sweep(args) -> int:
    family = [load_graph(path, args.format) for path in args.family or []]
    base = _load(args, "base") if args.generator == "blowup" else None
    rows = []
    inconclusive = False
    for value in _parse_ids(args.values):
        if args.generator == "polarity":
            g = generators.polarity_graph(value)
        else:
            g = generators.clique_blowup(base, value).graph
        report = detectors.witness_check(g, family, args.s, limit=args.budget)
        inconclusive = inconclusive or report.inconclusive
        rows.append(
            {
                "generator": args.generator,
                "param": value,
                "n": g.n,
                "e": g.edge_count,
                "passed": report.passed,
                "seed": args.seed,
            }
        )
    rows.sort(key=lambda r: (r["n"], r["param"]))
    _emit_rows(
        rows, ["generator", "param", "n", "e", "passed", "seed"], args
    )
    if args.plot:
        from .plotting import render_sweep_plot

        render_sweep_plot(rows, args.plot)
    if all(r["passed"] for r in rows):
        return EXIT_PASS
    return EXIT_BUDGET if inconclusive else EXIT_VIOLATION


# ---------------------------------------------------------------------------


def _error(message: str) -> None:
    sys.stderr.write(json.dumps({"error": message}) + "\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", default="graph6", choices=["graph6", "edge-list"])
    p.add_argument("--emit", default="csv", choices=["csv", "json"])
    p.add_argument("--output", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=1_000_000)
    p.add_argument("--timing", action="store_true",
                   help="include runtime_ms (breaks byte-determinism)")


def _add_cfg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--q", type=int, default=4)
    p.add_argument("--tau", type=float, default=None)
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--path-budget", dest="path_budget", type=int, default=10_000)
    p.add_argument("--trials", type=int, default=50)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indturan")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="construct a named graph")
    gen.add_argument("kind", choices=["theta", "prism", "lift", "blowup", "polarity"])
    gen.add_argument("--l", type=int, default=2)
    gen.add_argument("--t", type=int, default=2)
    gen.add_argument("--p", type=int, default=1)
    gen.add_argument("--q", type=int, default=3)
    gen.add_argument("--tree", help="edge-list file for the rooted tree")
    gen.add_argument("--roots", help="comma-separated root ids")
    gen.add_argument("--set", help="comma-separated gluing set S")
    gen.add_argument("--input", help="base graph for blowup")
    _add_common(gen)
    gen.set_defaults(func=cmd_gen)

    check = sub.add_parser("check", help="certified freeness checks")
    check.add_argument("kind", choices=["kss", "induced", "witness"])
    check.add_argument("--input", required=True)
    check.add_argument("--s", type=int, default=2)
    check.add_argument("--pattern")
    check.add_argument("--family", nargs="+", default=[])
    _add_common(check)
    check.set_defaults(func=cmd_check)

    count = sub.add_parser("count", help="exact counters")
    count.add_argument(
        "kind",
        choices=["hom", "walks", "c4", "thin-thick", "two-paths", "induced"],
    )
    count.add_argument("--input", required=True)
    count.add_argument("--k", type=int, default=4)
    count.add_argument("--l", type=int, default=2)
    count.add_argument("--u", type=int, default=0)
    count.add_argument("--v", type=int, default=0)
    count.add_argument("--tau", type=float, default=None)
    count.add_argument("--method", default="fast", choices=["fast", "subsets"])
    count.add_argument("--pattern")
    _add_common(count)
    count.set_defaults(func=cmd_count)

    embed = sub.add_parser("embed", help="embedding pipelines")
    embed.add_argument("kind", choices=["tree", "lift", "theta", "prism"])
    embed.add_argument("--input", required=True)
    embed.add_argument("--tree")
    embed.add_argument("--roots")
    embed.add_argument("--l", type=int, default=2)
    embed.add_argument("--t", type=int, default=2)
    embed.add_argument("--p", type=int, default=1)
    embed.add_argument(
        "--beta-threshold", dest="beta_threshold", type=float, default=None
    )
    embed.add_argument("--fallback", action="store_true")
    _add_cfg(embed)
    _add_common(embed)
    embed.set_defaults(func=cmd_embed)

    pipe = sub.add_parser("pipeline", help="regularization and rich sets")
    pipe.add_argument("kind", choices=["regularize", "rich-set"])
    pipe.add_argument("--input", required=True)
    pipe.add_argument("--alpha", type=float, default=0.5)
    pipe.add_argument("--c", type=float, default=0.5)
    pipe.add_argument("--tau", type=float, default=1.0)
    pipe.add_argument("--c1", type=int, default=2)
    pipe.add_argument("--c2", type=int, default=3)
    pipe.add_argument("--trials", type=int, default=50)
    _add_common(pipe)
    pipe.set_defaults(func=cmd_pipeline)

    sweep = sub.add_parser("sweep", help="grid experiments with CSV output")
    sweep.add_argument("--generator", required=True, choices=["polarity", "blowup"])
    sweep.add_argument("--values", required=True, help="comma-separated grid")
    sweep.add_argument("--base", help="base graph for blowup sweeps")
    sweep.add_argument("--family", nargs="*", default=[])
    sweep.add_argument("--s", type=int, default=2)
    sweep.add_argument("--plot", default=None, help="render a log-log figure")
    _add_common(sweep)
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ParameterError, GraphError, OSError, ValueError) as exc:
        _error(str(exc))
        return EXIT_INPUT
    except counters.BudgetExceeded as exc:
        _error(str(exc))
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
