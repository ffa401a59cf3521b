"""Command-line front end.

Subcommands: construct, census, pack, decompose, verify, figure2,
thresholds.  Every command writes machine-readable output (JSON by
default; census, figure2 and thresholds can emit CSV) and exits 0 only
when every check it ran passed.  All configuration travels through
flags, never environment variables, and any seed that influenced a
result is echoed in the output.

JSON schemas, by command:

* construct: {family, n, k, variant, edges, formula_edges, agrees,
  domain, format, graph | written}
* census: {n, engine, threads, rows: [{n, k, brute_max_edges,
  e_max_edges, moon_edges, agrees_with_e_max, agrees_with_moon}]}
* pack: {mode, n, size, triangles, exact, seed?, radius?, trace?}
* decompose: {decomposition: {...}, audit: {...}} (see the
  decomposition module's to_json docs)
* verify: one report object per lemma; always carries "passed"
* figure2 (CSV): header k,E1,E2,E3,E4, blank cell where a family is
  undefined at (n, k)
* thresholds: {n, closed_forms, transitions: [{k, before, after}]}
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bounds import (
    KAPPA0_DEFAULT,
    SampleStrategy,
    brute_turan_touching,
    turan_touching_bound,
    verify_lemma_maxf,
    verify_lemma_maxgl,
    verify_lemma_maxgsmall,
)
from .decomposition import audit, decompose
from .extremal import (
    ExtremalSpec,
    build,
    edge_formula,
    figure2_data,
    thresholds,
)
from .graph import (
    Graph,
    graph_from_json,
    graph_to_json,
    max_matching,
    read_graph6,
    write_graph6,
)
from .identities import run_identity_grid
from .packing import (
    ENUM_CAP,
    check_packing,
    greedy_packing,
    max_packing_exact,
    rotation_improve,
)

__all__ = ["main"]

_FAMILY_DOMAINS = {
    "E1": "0 <= 3k <= n",
    "E2": "4k < n-1",
    "E3": "n >= 2k+1",
    "E4": "3k >= n-2 (complete graph) or 6k-n+4 >= 0",
}


def _emit(args: argparse.Namespace, text: str) -> None:
    """Write payload text to --out if given, else stdout."""
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_json(obj: object) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _as_obj(report) -> object:
    """Normalize the to_json conventions (dict or JSON string)."""
    dumped = report.to_json()
    return json.loads(dumped) if isinstance(dumped, str) else dumped


def _read_graph(path: str) -> Graph:
    """Load a graph from a file ('-' for stdin), graph6 or graph JSON."""
    text = sys.stdin.read() if path == "-" else open(path).read()
    text = text.strip()
    if not text:
        raise ValueError(f"no graph in {path!r}")
    if text.startswith("{"):
        return graph_from_json(text)
    return read_graph6(text.splitlines()[0])


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    def cell(x: object) -> str:
        if x is None:
            return ""
        if isinstance(x, bool):
            return "true" if x else "false"
        return str(x)

    lines = [",".join(header)]
    lines.extend(",".join(cell(x) for x in row) for row in rows)
    return "\n".join(lines) + "\n"


# ===================================================================
# Subcommands
# ===================================================================


def _cmd_construct(args: argparse.Namespace) -> int:
    spec = ExtremalSpec(args.family, args.n, args.k, args.variant)
    g = build(spec)
    formula = edge_formula(args.family, args.n, args.k)
    payload = (
        write_graph6(g) + "\n" if args.format == "graph6" else graph_to_json(g) + "\n"
    )
    summary = {
        "family": args.family,
        "n": args.n,
        "k": args.k,
        "variant": args.variant,
        "edges": g.edge_count(),
        "formula_edges": formula,
        "agrees": g.edge_count() == formula,
        "domain": _FAMILY_DOMAINS[args.family],
        "format": args.format,
    }
    if args.out:
        _emit(args, payload)
        summary["written"] = args.out
    else:
        summary["graph"] = payload.strip()
    _print_json(summary)
    return 0 if summary["agrees"] else 1


def _cmd_census(args: argparse.Namespace) -> int:
    from .census import census_rows

    rows = census_rows(args.n, args.k, threads=args.threads, engine=args.engine)
    if args.format == "csv":
        header = (
            "n",
            "k",
            "brute_max_edges",
            "e_max_edges",
            "moon_edges",
            "agrees_with_e_max",
            "agrees_with_moon",
        )
        text = _csv(header, [[r.as_dict()[h] for h in header] for r in rows])
        _emit(args, text)
    else:
        doc = {
            "n": args.n,
            "engine": args.engine,
            "threads": args.threads,
            "rows": [r.as_dict() for r in rows],
        }
        _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0


def _cmd_pack(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    if args.mode == "exact":
        res = max_packing_exact(g)
        check_packing(g, res.triangles)
        _print_json(
            {
                "mode": "exact",
                "n": g.n,
                "size": res.size,
                "triangles": [list(t) for t in res.triangles],
                "exact": True,
            }
        )
        return 0
    packing = greedy_packing(g, args.seed)
    full = (1 << g.n) - 1
    matching = max_matching(g, full & ~check_packing(g, packing))
    trace = [{"packing_size": len(packing), "outside_matching_size": len(matching)}]
    while True:
        improved = rotation_improve(g, packing, matching, args.radius)
        if improved is None:
            break
        packing, matching = improved
        trace.append(
            {"packing_size": len(packing), "outside_matching_size": len(matching)}
        )
    _print_json(
        {
            "mode": "local",
            "n": g.n,
            "seed": args.seed,
            "radius": args.radius,
            "size": len(packing),
            "triangles": [list(t) for t in packing],
            "exact": False,
            "trace": trace,
        }
    )
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    g = _read_graph(args.path)
    d = decompose(g, cap=args.cap)
    report = audit(g, d)
    _print_json({"decomposition": _as_obj(d), "audit": _as_obj(report)})
    return 0 if report.passed else 1


def _cmd_figure2(args: argparse.Namespace) -> int:
    rows = figure2_data(args.n)
    text = _csv(("k", "E1", "E2", "E3", "E4"), rows)
    _emit(args, text)
    if args.out:
        _print_json({"written": args.out, "rows": len(rows)})
    return 0


def _cmd_thresholds(args: argparse.Namespace) -> int:
    th = thresholds(args.n)
    if args.format == "csv":
        rows = [(t.k, "|".join(t.before), "|".join(t.after)) for t in th.transitions]
        text = _csv(("k", "before", "after"), rows)
        _emit(args, text)
        return 0
    doc = {
        "n": th.n,
        "closed_forms": list(th.closed_forms),
        "transitions": [
            {"k": t.k, "before": list(t.before), "after": list(t.after)}
            for t in th.transitions
        ],
    }
    _emit(args, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    return 0


# -- verify dispatch ------------------------------------------------


def _verify_done(doc: object, passed: bool) -> int:
    _print_json(doc)
    return 0 if passed else 1


def _cmd_verify_maxf(args: argparse.Namespace) -> int:
    if args.k is not None:
        ks = [args.k]
    else:
        ks = list(range((args.n - 2) // 3 + 1))
    reports = [verify_lemma_maxf(args.n, k) for k in ks]
    passed = all(r.passed for r in reports)
    doc = {
        "lemma": "maxf",
        "n": args.n,
        "passed": passed,
        "reports": [_as_obj(r) for r in reports],
    }
    return _verify_done(doc, passed)


def _cmd_verify_identities(args: argparse.Namespace) -> int:
    report = run_identity_grid(
        max_coord=args.grid, max_x=args.x, samples=args.samples, seed=args.seed
    )
    return _verify_done(_as_obj(report), report.passed)


def _cmd_verify_turan(args: argparse.Namespace) -> int:
    a_values = [args.a] if args.a is not None else list(range(args.h // 2 + 1))
    rows = []
    passed = True
    for a in a_values:
        brute = brute_turan_touching(args.h, a)
        formula = turan_touching_bound(args.h, a)
        rows.append({"h": args.h, "a": a, "brute": brute, "formula": formula})
        passed = passed and brute == formula
    doc = {"lemma": "turan", "h": args.h, "passed": passed, "rows": rows}
    return _verify_done(doc, passed)


def _cmd_verify_maxgsmall(args: argparse.Namespace) -> int:
    report = verify_lemma_maxgsmall(
        args.n,
        SampleStrategy(samples=args.samples, seed=args.seed),
        report_only=args.report_only,
    )
    return _verify_done(_as_obj(report), report.passed)


def _cmd_verify_maxgl(args: argparse.Namespace) -> int:
    report = verify_lemma_maxgl(
        args.n,
        None if args.all_k else args.k,
        kappa0=args.kappa0,
        strategy=SampleStrategy(samples=args.samples, seed=args.seed),
    )
    return _verify_done(_as_obj(report), report.passed)


# ===================================================================
# Parser
# ===================================================================


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tripack",
        description="Extremal triangle-packing toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build one extremal family graph")
    p.add_argument("family", choices=("E1", "E2", "E3", "E4"))
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--variant", type=int, default=None)
    p.add_argument("--format", choices=("graph6", "json"), default="graph6")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("census", help="exhaustive max-edges scan, n <= 8")
    p.add_argument("n", type=int)
    p.add_argument(
        "--k", type=int, action="append", default=None, help="repeatable; default all"
    )
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--engine", choices=("auto", "python", "jit"), default="auto")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("pack", help="maximum triangle packing of a graph file")
    p.add_argument("path", help="graph6 or graph JSON; '-' for stdin")
    p.add_argument("--mode", choices=("exact", "local"), default="exact")
    p.add_argument("--radius", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_pack)

    p = sub.add_parser("decompose", help="canonical decomposition plus audit")
    p.add_argument("path", help="graph6 or graph JSON; '-' for stdin")
    p.add_argument("--cap", type=int, default=ENUM_CAP)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="run one lemma verification")
    vsub = p.add_subparsers(dest="lemma", required=True)

    v = vsub.add_parser("maxf", help="profile bound vs family formulas, exhaustive")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, default=None, help="default: sweep all valid k")
    v.set_defaults(func=_cmd_verify_maxf)

    v = vsub.add_parser("identities", help="exact identity and inequality grid")
    v.add_argument("--grid", type=int, default=6, help="max profile coordinate")
    v.add_argument("--x", type=int, default=4, help="max shift magnitude")
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=_cmd_verify_identities)

    v = vsub.add_parser("turan", help="touching-triangle bound vs brute force")
    v.add_argument("--h", type=int, required=True)
    v.add_argument("--a", type=int, default=None, help="default: all a <= h/2")
    v.set_defaults(func=_cmd_verify_turan)

    v = vsub.add_parser("maxgsmall", help="small-regime bound vs family formulas")
    v.add_argument("--n", type=int, default=8406)
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report-only", action="store_true")
    v.set_defaults(func=_cmd_verify_maxgsmall)

    v = vsub.add_parser("maxgl", help="large-regime bound vs family formulas")
    v.add_argument("--n", type=int, default=7_200_000)
    group = v.add_mutually_exclusive_group(required=True)
    group.add_argument("--k", type=int, default=None)
    group.add_argument("--all-k", action="store_true")
    v.add_argument("--kappa0", type=int, default=KAPPA0_DEFAULT)
    v.add_argument("--samples", type=int, default=100_000)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=_cmd_verify_maxgl)

    p = sub.add_parser("figure2", help="per-k family edge counts as CSV")
    p.add_argument("n", type=int)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_figure2)

    p = sub.add_parser("thresholds", help="family crossover points")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_thresholds)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
