"""Command-line surface: count | hadwiger | tstar | peel | bounds | construct
| check-wood | verify.

Graph files are read as graph6 (.g6/.graph6/.txt) or edge-list JSON
(.json), forced by --graph-format if the extension lies.  Exit codes:
0 success, 1 computation error (cap exceeded, malformed input file),
2 usage error.  Output is deterministic for a fixed argv (randomized
campaigns take --seed, default 0).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds, constructions, minors, peeling, turan, verify
from .graphs import (Graph, GraphFormatError, count_k_cliques, mask_of,
                     parse_graph, serialize_graph)


def _load_graph(path: str, fmt: str | None) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    if fmt is None:
        fmt = "edge-list-json" if path.endswith(".json") else "graph6"
    return parse_graph(text, fmt)


def _emit(args, payload: dict, text_lines: list[str]):
    if args.format == "json":
        print(json.dumps(payload))
    elif args.format == "csv":
        keys = list(payload)
        print(",".join(keys))
        print(",".join(str(payload[k]) for k in keys))
    else:
        for line in text_lines:
            print(line)


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int,
                   default=int(os.environ.get("MINORCLIQUE_THREADS", "1")),
                   help="worker cap (computations here are sequential; accepted for compatibility)")
    p.add_argument("--max-vertices", type=int, default=minors.DEFAULT_VERTEX_CAP,
                   help="cap for exact minor search")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="minorclique")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="exact k-clique count of a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--graph-format", choices=("graph6", "edge-list-json"))
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("hadwiger", help="largest clique-minor order (exhaustive)")
    p.add_argument("--graph", required=True)
    p.add_argument("--graph-format", choices=("graph6", "edge-list-json"))
    _add_common(p)

    p = sub.add_parser("tstar", help="optimizer graph and count at (t, k)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("peel", help="run the peeling rounds and print the trace")
    p.add_argument("--graph", required=True)
    p.add_argument("--graph-format", choices=("graph6", "edge-list-json"))
    p.add_argument("--clique", required=True,
                   help="comma-separated vertex labels of the clique to encode")
    p.add_argument("--t", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("bounds", help="evaluate every applicable bound at (t, k, n)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--M", type=float, default=None)
    p.add_argument("--eps", type=float, default=1.0 / 6.0)
    _add_common(p)

    p = sub.add_parser("construct", help="build a construction and print the graph")
    p.add_argument("--kind", choices=constructions.KINDS)
    p.add_argument("--spec-json", help="full spec as JSON instead of flags")
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--out-format", choices=("graph6", "edge-list-json"),
                   default="graph6")
    _add_common(p)

    p = sub.add_parser("check-wood", help="construction vs conjectured ceiling at (t, lambda)")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    _add_common(p)

    p = sub.add_parser("verify", help="run the oracle/property campaigns")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    _add_common(p)

    return ap


def _cmd_count(args) -> int:
    g = _load_graph(args.graph, args.graph_format)
    c = count_k_cliques(g, args.k)
    _emit(args, {"n": g.n, "k": args.k, "count": str(c)},
          [f"{c} cliques of order {args.k} on {g.n} vertices"])
    return 0


def _cmd_hadwiger(args) -> int:
    g = _load_graph(args.graph, args.graph_format)
    h = minors.hadwiger_number(g, cap=args.max_vertices)
    _emit(args, {"n": g.n, "hadwiger": h}, [f"hadwiger number {h}"])
    return 0


def _cmd_tstar(args) -> int:
    r = turan.t_star(args.t, args.k)
    if args.format == "json":
        print(r.to_json())
    else:
        _emit(args, {"t": r.t, "k": r.k, "omega": r.omega_star,
                     "parts": "|".join(map(str, r.spec.parts)), "count": str(r.count)},
              [f"T* at (t={r.t}, k={r.k}): {r.omega_star} parts {r.spec.parts}, "
               f"count {r.count}"])
    return 0


def _cmd_peel(args) -> int:
    g = _load_graph(args.graph, args.graph_format)
    try:
        clique = mask_of(int(x) for x in args.clique.split(","))
    except ValueError:
        raise GraphFormatError("--clique must be comma-separated integers") from None
    tr = peeling.peel(g, clique, args.t)
    if args.format in ("json", "csv"):
        sys.stdout.write(peeling.trace_to_jsonl(tr))
    else:
        for st in tr.steps:
            print(f"step {st.index}: anchor {st.vertex}, order {st.order}, "
                  f"missing {st.missing_degree}, extra {list(st.extra)}")
        print(f"stop: {tr.stop_reason} at r={tr.r}")
    return 0


def _cmd_bounds(args) -> int:
    rep = bounds.bound_report(args.t, args.k, args.n)
    general, refined = bounds.key_lemma1_lower(
        r=min(bounds.r0_bound(args.t), args.k), r_l=0, t=args.t,
        M=args.M, eps=args.eps)
    if args.format == "json":
        print(rep.to_json())
    elif args.format == "csv":
        print(bounds.grid_csv([args.t], [args.k], args.n), end="")
    else:
        print(f"(t={args.t}, k={args.k}, n={args.n}) regime {rep.regime}")
        for name, lv in sorted(rep.entries.items()):
            print(f"  log2 {name:8s} = " + ("zero" if lv.zero else f"{lv.log2:.6f}"))
        for flag in rep.flags:
            print(f"  note: {flag}")
        print(f"  disk-count floor at r=min(r0,k): {general:.3f}")
    return 0


def _cmd_construct(args) -> int:
    if args.spec_json:
        spec = constructions.spec_from_json(args.spec_json)
    else:
        if not args.kind or args.t is None or args.n is None:
            raise ValueError("construct needs --spec-json or --kind/--t/--n")
        spec = constructions.ConstructionSpec(kind=args.kind, t=args.t,
                                              n=args.n, k=args.k)
    g = constructions.build(spec)
    print(serialize_graph(g, args.out_format))
    return 0


def _cmd_check_wood(args) -> int:
    r = constructions.wood_counterexample_check(args.t, args.lam)
    if args.format == "json":
        print(r.to_json())
    else:
        verdict = "inconclusive" if r.verdict is None else str(r.verdict).lower()
        print(f"t={r.t} k={r.k}: construction log2 "
              + ("zero" if r.construction_count.zero else f"{r.construction_count.log2:.6f}")
              + f", ceiling log2 {r.conjecture_bound.log2:.6f}, verdict {verdict}")
    return 0


def _cmd_verify(args) -> int:
    report = verify.verify_suite(args.profile, seed=args.seed)
    if args.format == "json":
        print(json.dumps(report))
    else:
        for chk in report["checks"]:
            status = "pass" if chk["passed"] else "FAIL"
            extras = " ".join(f"{k}={v}" for k, v in chk["counters"].items())
            print(f"[{status}] {chk['name']}: {extras}")
            for f in chk["failures"]:
                print(f"    {f}")
        print(f"overall: {'pass' if report['passed'] else 'FAIL'}")
    return 0


_DISPATCH = {
    "count": _cmd_count,
    "hadwiger": _cmd_hadwiger,
    "tstar": _cmd_tstar,
    "peel": _cmd_peel,
    "bounds": _cmd_bounds,
    "construct": _cmd_construct,
    "check-wood": _cmd_check_wood,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, GraphFormatError, minors.VertexCapExceeded, OSError,
            KeyError, ZeroDivisionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
