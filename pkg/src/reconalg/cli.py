"""Command-line front end.

Every subcommand accepts either --r/--a (the group route) or
--labels a1,a2,... (the label route); text output on stdout, JSON with
--json (byte-deterministic: sorted keys, fixed separators).  Exit codes:
0 success / all verifications pass, 1 verification failure, 2 usage
error, 3 resource cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import cfrac, grading, homology, moduli, pathalg, quiver, relations

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _resolve_input(args) -> tuple[int, int, list[int]]:
    """Return (r, a, labels) from either input route."""
    if args.labels is not None and (args.r is not None or args.a is not None):
        raise SystemExit(EXIT_USAGE)
    if args.labels is not None:
        labels = [int(x) for x in args.labels.split(",")]
        cfrac.validate_labels(labels)
        r, a = cfrac.hj_value(labels)
        return r, a, labels
    if args.r is None or args.a is None:
        print("error: provide --r and --a, or --labels", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    cfrac.validate_group_params(args.r, args.a)
    return args.r, args.a, cfrac.hj_expand(args.r, args.a)


def _add_input_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--labels", type=str, help="comma-separated labels a1,a2,...")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def cmd_expand(args) -> int:
    r, a, labels = _resolve_input(args)
    if args.json:
        _emit_json({"r": r, "a": a, "labels": labels})
    else:
        print(f"[{','.join(map(str, labels))}]")
    return EXIT_OK


def cmd_series(args) -> int:
    r, a, _ = _resolve_input(args)
    series = cfrac.ij_series(r, a)
    if args.json:
        _emit_json({"r": r, "a": a, "i": list(series.i), "j": list(series.j)})
    else:
        print("t: " + " ".join(f"{t:>6}" for t in range(series.n + 2)))
        print("i: " + " ".join(f"{x:>6}" for x in series.i))
        print("j: " + " ".join(f"{x:>6}" for x in series.j))
    return EXIT_OK


def cmd_quiver(args) -> int:
    r, a, labels = _resolve_input(args)
    q = quiver.build_quiver(labels)
    if args.dot:
        print(quiver.quiver_to_dot(q), end="")
    elif args.json:
        _emit_json(quiver.quiver_to_json_dict(q))
    else:
        print(f"vertices: {q.num_vertices}  arrows: {len(q.arrows)}  gamma: {q.gamma}")
        for x in q.arrows:
            print(f"  {x.name:<8} {x.kind:<13} {x.tail} -> {x.head}  bidegree {x.bidegree}")
    return EXIT_OK


def cmd_relations(args) -> int:
    r, a, labels = _resolve_input(args)
    q = quiver.build_quiver(labels)
    rels = relations.generate_relations(q)
    if args.tex:
        print(relations.relations_to_tex(q, rels), end="")
    elif args.json:
        _emit_json(relations.relations_to_json_dict(q, rels))
    else:
        print(f"{len(rels)} relations")
        for rel in rels:
            lhs = " ".join(q.arrows[i].name for i in rel.lhs.arrows)
            rhs = " ".join(q.arrows[i].name for i in rel.rhs.arrows)
            print(f"  {lhs} = {rhs}")
    return EXIT_OK


def cmd_specials(args) -> int:
    _, _, labels = _resolve_input(args)
    q = quiver.build_quiver(labels)
    print(grading.specials_dot(q), end="")
    return EXIT_OK


def cmd_generators(args) -> int:
    r, a, _ = _resolve_input(args)
    gens = cfrac.invariant_generators(r, a)
    if args.json:
        _emit_json({"r": r, "a": a, "generators": [[m.ex, m.ey] for m in gens]})
    else:
        print(" ".join(str(m) for m in gens))
    return EXIT_OK


def cmd_dual(args) -> int:
    r, a, _ = _resolve_input(args)
    dual_labels = cfrac.riemenschneider_dual(r, a)
    rb, b = cfrac.dual_pair(r, a)
    if args.json:
        _emit_json({"r": r, "a": a, "dual_labels": dual_labels, "reversed_pair": [rb, b]})
    else:
        print(f"labels of {r}/{r - a}: [{','.join(map(str, dual_labels))}]")
        print(f"reversed expansion belongs to ({rb},{b})")
    return EXIT_OK


def cmd_verify_endo(args) -> int:
    r, a, _ = _resolve_input(args)
    degree = args.degree if args.degree is not None else 2 * r + 2
    try:
        report = pathalg.verify_endomorphism_presentation(
            r, a, degree, max_nodes=args.max_nodes
        )
    except pathalg.ResourceLimitExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    if args.json:
        _emit_json(asdict(report))
    else:
        status = "pass" if report.ok else "FAIL"
        print(f"verify-endo r={r} a={a} D={report.D}: {status} "
              f"({report.cells_checked} cells)")
        for failure in report.failures[:20]:
            print(f"  {failure}")
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def cmd_resolve(args) -> int:
    r, a, labels = _resolve_input(args)
    degree = args.degree if args.degree is not None else 2 * r + 2
    q = pathalg.build_quiver_cached(r, a)
    rels = relations.generate_relations(q)
    try:
        engine = pathalg.ClassEngine(q, rels, degree, max_nodes=args.max_nodes)
    except pathalg.ResourceLimitExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    vertices = [args.vertex] if args.vertex is not None else list(range(q.num_vertices))
    reports = []
    for t in vertices:
        cx = homology.resolution_of_simple(q, rels, t)
        reports.append(homology.verify_exactness(q, cx, engine, degree))
    gd = homology.global_dimension(r, a)
    ok = all(rep.ok for rep in reports)
    if args.json:
        _emit_json(
            {
                "r": r,
                "a": a,
                "gldim": gd.value,
                "pd": {str(k): v for k, v in gd.pd_table.items()},
                "shapes": {str(k): v for k, v in gd.shapes.items()},
                "reports": [asdict(rep) for rep in reports],
            }
        )
    else:
        for rep in reports:
            status = "exact" if rep.ok else "FAIL"
            print(
                f"vertex {rep.vertex}: shape {gd.shapes[rep.vertex]} pd={rep.pd} "
                f"{status} (D={rep.D}, margin={rep.margin}, "
                f"{rep.bidegrees_checked} bidegrees)"
            )
            for failure in rep.failures[:20]:
                print(f"  {failure}")
        print(f"gldim: {gd.value}")
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_gldim(args) -> int:
    r, a, _ = _resolve_input(args)
    gd = homology.global_dimension(r, a)
    if args.json:
        _emit_json({"r": r, "a": a, "gldim": gd.value,
                    "pd": {str(k): v for k, v in gd.pd_table.items()}})
    else:
        print(gd.value)
    return EXIT_OK


def cmd_moduli(args) -> int:
    r, a, _ = _resolve_input(args)
    atlas = moduli.charts(r, a)
    graph = moduli.dual_graph(r, a)
    transitions = [moduli.transition_check(r, a, t) for t in range(1, len(atlas))]
    ok = all(transitions)
    if args.dot:
        print(moduli.dual_graph_dot(r, a), end="")
    elif args.json:
        _emit_json(
            {
                "r": r,
                "a": a,
                "charts": [
                    {"index": c.index, "coord_c": list(c.coord_c), "coord_d": list(c.coord_d)}
                    for c in atlas
                ],
                "transitions": transitions,
                "dual_graph": list(graph.node_labels),
            }
        )
    else:
        for c in atlas:
            print(f"chart {c.index}: c = x^{c.coord_c[0]} y^{c.coord_c[1]}, "
                  f"d = x^{c.coord_d[0]} y^{c.coord_d[1]} (det {c.determinant()})")
        print(f"transitions: {'pass' if ok else 'FAIL'}")
        print("dual graph: " + " -- ".join(str(x) for x in graph.node_labels))
    return EXIT_OK if ok else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reconalg",
        description="Reconstruction algebras of type A: construction and verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    specs = [
        ("expand", cmd_expand, "continued-fraction labels"),
        ("series", cmd_series, "i/j-series table"),
        ("quiver", cmd_quiver, "quiver arrows and bidegrees"),
        ("relations", cmd_relations, "defining relations"),
        ("specials", cmd_specials, "labeled endomorphism diagram (DOT)"),
        ("generators", cmd_generators, "invariant-ring generators"),
        ("dual", cmd_dual, "dual expansion and reversed pair"),
        ("verify-endo", cmd_verify_endo, "verify graded dimensions against the weight oracle"),
        ("resolve", cmd_resolve, "resolutions of vertex simples, exactness, gldim"),
        ("gldim", cmd_gldim, "global dimension"),
        ("moduli", cmd_moduli, "chart atlas, transitions, dual graph"),
    ]
    for name, func, help_text in specs:
        p = sub.add_parser(name, help=help_text)
        _add_input_args(p)
        if name in ("verify-endo", "resolve"):
            p.add_argument("--degree", type=int, help="total-degree truncation bound")
            p.add_argument("--max-nodes", type=int, default=pathalg.DEFAULT_MAX_NODES)
        if name == "resolve":
            p.add_argument("--vertex", type=int, help="restrict to one vertex simple")
        if name == "quiver":
            p.add_argument("--dot", action="store_true")
        if name == "relations":
            p.add_argument("--tex", action="store_true")
        if name == "moduli":
            p.add_argument("--dot", action="store_true", help="dual graph as DOT")
        p.set_defaults(func=func)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
