"""Command-line front end: ``planarlab <subcommand> ...``.

Exit codes: 0 success, 2 usage or input error, 3 negative fourreg
decision, 4 enumeration bound exceeded.  JSON output has sorted keys.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import addable as add_mod
from . import census as cen
from . import detectors as det
from .errors import BoundExceeded, EmptyClass
from .graphs import LabeledGraph, PlanarMultigraph, from_graph6, multigraph_from_json, \
    multigraph_to_json, to_graph6
from .planarity import NonPlanarWitness, embed
from .sampling import greedy_planar, make_rng

EXIT_OK, EXIT_USAGE, EXIT_NO, EXIT_BOUND = 0, 2, 3, 4
TABLE_ALIASES = {"component": "component_table", "connectivity": "connectivity_table",
                 "subgraph": "subgraph_table", "kappa": "kappa_bounds"}
DETECT_KINDS = ("appear", "2appear", "6appear", "census")


class InputError(ValueError):
    pass


# ---------------------------------------------------------------- io helpers


def _read_text(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg) as fh:
            return fh.read().strip()
    return arg.strip()


def read_simple(arg: str) -> LabeledGraph:
    text = _read_text(arg)
    try:
        if text.startswith("{"):
            g = multigraph_from_json(text)
            if not g.is_simple():
                raise InputError("expected a simple graph")
            return g.support()
        return from_graph6(text)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse graph: {exc}") from exc


def read_multi(arg: str) -> PlanarMultigraph:
    text = _read_text(arg)
    try:
        if text.startswith("{"):
            return multigraph_from_json(text)
        return from_graph6(text).to_multigraph()
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot parse graph: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def emit(args, text: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _graph_json(g: LabeledGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.sorted_edges()], "graph6": to_graph6(g)}


# ---------------------------------------------------------------- subcommands


def cmd_planarity(args) -> int:
    g = read_multi(args.input)
    e = embed(g)
    if isinstance(e, NonPlanarWitness):
        out = {"planar": False, "witness": {"kind": e.kind, "edges": [list(x) for x in e.edges],
                                            "branch_vertices": list(e.branch_vertices)}}
    else:
        fs = e.faces()
        out = {"planar": True, "face_count": e.face_count(),
               "face_sizes": sorted(len(f) for f in fs),
               "rotation": {str(v): list(e.at(v)) for v in range(1, g.n + 1)}}
    emit(args, dumps(out))
    return EXIT_OK


def cmd_addable(args) -> int:
    g = read_simple(args.input)
    try:
        a = add_mod.addable_set(g)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    emit(args, dumps({"n": g.n, "m": g.m, "count": len(a),
                      "nonedges": [list(e) for e in sorted(a.nonedges)]}))
    return EXIT_OK


def cmd_min_add(args) -> int:
    if args.shards > 1:
        # one shard of the isomorphism classes; merge shards by taking the minimum
        from .errors import max_n
        if args.n > max_n():
            raise BoundExceeded(f"n={args.n} exceeds the enumeration bound {max_n()}")
        if args.m > add_mod.max_planar_edges(args.n):
            raise EmptyClass(f"P({args.n},{args.m}) is empty")
        gs = add_mod.planar_classes(args.n, args.m)[args.shard::args.shards]
        best = min(((len(add_mod.addable_set(g)), to_graph6(g)) for g in gs), default=None)
        out = {"n": args.n, "m": args.m, "shard": args.shard, "shards": args.shards,
               "value": None if best is None else best[0],
               "witness_graph6": None if best is None else best[1]}
    else:
        c = add_mod.min_addable(args.n, args.m)
        out = {"n": c.n, "m": c.m, "value": c.value, "witness_graph6": to_graph6(c.witness),
               "lower_bound": add_mod.lower_bound_add(c.n, c.m)}
    emit(args, dumps(out))
    return EXIT_OK


def cmd_detect(args) -> int:
    host = read_simple(args.host)
    if args.kind == "census":
        sc = det.structure_census(host)
        emit(args, dumps({"pendant_edges": sc.pendant_edges,
                          "short_cycles": [[list(e) for e in sorted(c)] for c in sc.short_cycles],
                          "good_triangles": [list(t) for t in sc.good_triangles],
                          "isolated_vertices": sc.isolated_vertices}))
        return EXIT_OK
    if args.pattern is None:
        raise InputError("--pattern is required for appearance detection")
    h = read_simple(args.pattern)
    try:
        if args.kind == "appear":
            recs = det.find_appearances_filtered(h, host, args.d1) if args.d1 is not None \
                else det.find_appearances(h, host)
        elif args.kind == "2appear":
            recs = det.find_two_appearances(h, host)
        else:
            recs = det.find_six_appearances(h, host)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    emit(args, dumps([r.to_json() for r in recs]))
    return EXIT_OK


def _constraints(args) -> cen.ClassConstraints:
    try:
        return cen.ClassConstraints(args.n, args.m, args.d1, args.d2, args.D1, args.D2)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_census(args) -> int:
    if args.table is not None:
        if args.n_max is None:
            raise InputError("--table needs --n-max")
        emit(args, cen.trend_tables(args.n_max, TABLE_ALIASES.get(args.table, args.table),
                                    args.allow_large).rstrip("\n"))
        return EXIT_OK
    if args.n is None:
        raise InputError("census needs --n (or --table with --n-max)")
    c = _constraints(args)
    if args.dominance:
        r = cen.kappa_dominance_check(args.n, args.allow_large)
        emit(args, dumps({"n": r.n, "total": r.total, "ok": r.ok,
                          "p_connected": str(r.p_connected), "mean_kappa": str(r.mean_kappa),
                          "checks": [{"label": a, "value": b, "bound": x, "ok": ok}
                                     for a, b, x, ok in r.checks]}))
        return EXIT_OK if r.ok else 1
    preds = []
    for text in args.predicate or []:
        try:
            preds.append(cen.Predicate.parse(text))
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    row = cen.census_row(c, preds, args.shard, args.shards, args.allow_large)
    if len(preds) == 1:
        count = row.predicate_counts[preds[0].name]
        out = {"count": count, "total": row.total,
               "p": None if row.total == 0 else cen._frac(count, row.total)}
        if args.shards > 1:
            out.update(shard=args.shard, shards=args.shards)
    else:
        out = row.to_json()
        if args.shards > 1:
            out.update(shard=args.shard, shards=args.shards)
    emit(args, dumps(out))
    return EXIT_OK


def cmd_fourreg(args) -> int:
    from .fourreg import is_four_embeddable

    h = read_simple(args.input)
    want = bool(args.witness or args.simple_witness)
    try:
        res = is_four_embeddable(h, want_witness=want)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = {"n": h.n, "m": h.m, "embeddable": res.embeddable}
    if res.embeddable and want:
        if args.witness:
            with open(args.witness, "w") as fh:
                fh.write(multigraph_to_json(res.multigraph) + "\n")
        if args.simple_witness:
            with open(args.simple_witness, "w") as fh:
                fh.write(multigraph_to_json(res.simple) + "\n")
        out["witness_vertices"] = res.simple.n
    emit(args, dumps(out))
    return EXIT_OK if res.embeddable else EXIT_NO


def cmd_construct(args) -> int:
    if args.family == "spine":
        try:
            if args.n is not None and args.m is not None:
                p = add_mod.spine_params_for(args.n, args.m)
            else:
                if args.core is None:
                    raise InputError("spine needs --core or --n/--m")
                p = add_mod.SpineParams(args.core, args.inserted, args.isolated, args.extra_edge)
            g = add_mod.build_spine_graph(p)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        out = _graph_json(g) | {"m": g.m, "addable": len(add_mod.addable_set(g)),
                                "params": {"core": p.core, "inserted": p.inserted,
                                           "isolated": p.isolated, "extra_edge": p.extra_edge}}
    elif args.family == "regular":
        from .fourreg import regular_supergraph

        if args.input is None:
            raise InputError("regular needs --input")
        h = read_simple(args.input)
        try:
            g = regular_supergraph(h, args.degree)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        out = _graph_json(g) | {"degree": args.degree}
    else:
        if args.n is None:
            raise InputError("random needs --n")
        g = greedy_planar(args.n, make_rng(args.seed), args.max_degree, args.m)
        out = _graph_json(g) | {"seed": args.seed}
    emit(args, dumps(out))
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="planarlab", description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=None, help="seed for randomized samplers")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add(name: str, helptext: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=helptext, description=helptext)
        p.add_argument("--output", help="write the report here instead of stdout")
        p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)
        return p

    p = add("planarity", "planarity test with a rotation system or a Kuratowski witness")
    p.add_argument("--input", required=True, help="graph6 string, or a file with graph6 / JSON edge list")
    p.set_defaults(func=cmd_planarity)

    p = add("addable", "list the addable non-edges of a planar graph")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_addable)

    p = add("min-add", "exact add(n, m) by exhaustive scan of planar classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=int, default=0)
    p.set_defaults(func=cmd_min_add)

    p = add("detect", "appearance, 2-appearance, 6-appearance or structure census of a host")
    p.add_argument("--kind", choices=DETECT_KINDS, required=True)
    p.add_argument("--pattern", help="pattern graph on 1..h (graph6)")
    p.add_argument("--host", required=True, help="host graph (graph6)")
    p.add_argument("--d1", type=int, default=None, help="cut-edge degree filter for appear")
    p.set_defaults(func=cmd_detect)

    p = add("census", "exact census of P(n, d1, d2, D1, D2), optionally with m edges")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--d1", type=int, default=0)
    p.add_argument("--d2", type=int)
    p.add_argument("--D1", type=int, default=0)
    p.add_argument("--D2", type=int)
    p.add_argument("--predicate", action="append",
                   help="connected | kappa_leq:L | has_component_iso:G6 | has_subgraph_iso:G6 | "
                        "has_induced_order_preserving:G6")
    p.add_argument("--table", choices=sorted(TABLE_ALIASES) + sorted(cen.TABLES))
    p.add_argument("--n-max", type=int)
    p.add_argument("--dominance", action="store_true", help="check the kappa inequalities at --n")
    p.add_argument("--shards", type=int, default=1)
    p.add_argument("--shard", type=int, default=0)
    p.add_argument("--allow-large", action="store_true", help="permit n = 8 (long running)")
    p.set_defaults(func=cmd_census)

    p = add("fourreg", "is the graph a subgraph of a 4-regular planar graph?")
    p.add_argument("--input", required=True)
    p.add_argument("--witness", help="write the 4-regular planar multigraph on V(h) (JSON)")
    p.add_argument("--simple-witness", help="write the simple 4-regular planar supergraph (JSON)")
    p.set_defaults(func=cmd_fourreg)

    p = add("construct", "build a spine graph, a regular supergraph or a seeded random planar graph")
    p.add_argument("--family", choices=("spine", "regular", "random"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--core", type=int)
    p.add_argument("--inserted", type=int, default=0)
    p.add_argument("--isolated", type=int, default=0)
    p.add_argument("--extra-edge", action="store_true")
    p.add_argument("--input")
    p.add_argument("--degree", type=int, choices=(3, 5), default=3)
    p.add_argument("--max-degree", type=int)
    p.set_defaults(func=cmd_construct)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if getattr(args, "shards", 1) < 1 or not 0 <= getattr(args, "shard", 0) < getattr(args, "shards", 1):
        print("error: need 0 <= --shard < --shards", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (InputError, EmptyClass) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
