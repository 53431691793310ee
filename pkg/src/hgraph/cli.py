"""Command-line entry point; every command prints one JSON document on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures, fo
from .core_graph import SimpleGraph
from .delineation_order import EdgeOrderedForest, adjacency_matrix, start_edges, vertex_order
from .errors import HGraphError, InputError, ResourceLimitError
from .framework import HRepresentation, intersection_graph, is_non_crossing, is_proper, validate
from .mixedthin_builder import build_proper_mixed_thin_report, class_bound, circ_arc_to_if_proper_2mixed
from .properization import properize_report, reduce_is_instance
from .tree_thinness import forest_thin_order, thin_bound
from .twinwidth import bruteforce_twinwidth, validate_sequence
from .width_reps import (
    MixedThinRepresentation,
    ThinRepresentation,
    check_mixed_thin,
    check_proper_thin,
    check_thin,
)


def _json_default(x):
    if isinstance(x, (set, frozenset, tuple)):
        return list(x)
    return str(x)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, default=_json_default, sort_keys=False))


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _source(args) -> dict:
    if getattr(args, "fixture", None):
        return fixtures.load_raw(args.fixture)
    if not getattr(args, "input", None):
        raise InputError("give an input file or --fixture NAME")
    return _read_json(args.input)


def _rep(args) -> HRepresentation:
    data = _source(args)
    if "sets" not in data:
        raise InputError("input is not a representation (no 'sets' key)")
    return HRepresentation.from_json(data)


def _graph(args) -> SimpleGraph:
    """A graph file, a fixture with a graph, or the intersection graph of a representation."""
    data = _source(args)
    if "sets" in data:
        return intersection_graph(HRepresentation.from_json(data))
    if "graph" in data:
        data = data["graph"]
    return SimpleGraph.from_json(data)


def _write_or_embed(out: dict, key: str, doc: dict, path: str | None) -> None:
    if path:
        Path(path).write_text(json.dumps(doc, default=_json_default, indent=1) + "\n")
        out[key + "_file"] = path
    else:
        out[key] = doc


def cmd_validate(args) -> int:
    rep = _rep(args)
    validate(rep)
    prop, pw = is_proper(rep)
    nc, nw = is_non_crossing(rep)
    out = {"valid": True, "vertices": len(rep.sets), "proper": prop, "non_crossing": nc}
    if pw:
        out["proper_witness"] = {"inner": pw[0], "outer": pw[1]}
    if nw:
        out["non_crossing_witness"] = {"minuend": nw[0], "subtrahend": nw[1], "difference": sorted(map(str, nw[2]))}
    failed = (args.proper and not prop) or (args.non_crossing and not nc)
    out["ok"] = not failed
    _emit(out)
    return 1 if failed else 0


def cmd_build_mixed_thin(args) -> int:
    rep = _rep(args)
    if args.circular:
        cert = circ_arc_to_if_proper_2mixed(rep)
        fallbacks = []
    else:
        report = build_proper_mixed_thin_report(rep)
        cert, fallbacks = report.certificate, report.fallbacks
    g = intersection_graph(rep)
    ok, why = check_mixed_thin(g, cert, require_proper=True, require_inversion_free=args.circular)
    out = {"classes": cert.k, "bound": class_bound(rep.base.size), "verified": ok, "sign_fallbacks": len(fallbacks)}
    _write_or_embed(out, "certificate", cert.to_json(), args.output)
    _emit(out)
    return 0 if ok else 1


CERT_KINDS = ("thin", "proper-thin", "mixed", "proper-mixed", "if-proper-mixed")


def cmd_check_cert(args) -> int:
    g = _graph(args)
    cert_data = _read_json(args.certificate)
    kind = args.kind or ("mixed" if "pair_orders" in cert_data else "thin")
    if kind.endswith("mixed"):
        cert = MixedThinRepresentation.from_json(cert_data)
        ok, why = check_mixed_thin(
            g, cert, require_proper=kind != "mixed", require_inversion_free=kind == "if-proper-mixed"
        )
    else:
        cert = ThinRepresentation.from_json(cert_data)
        ok, why = (check_proper_thin if kind == "proper-thin" else check_thin)(g, cert)
    _emit({"kind": kind, "classes": cert.k, "ok": ok, "violation": why})
    return 0 if ok else 1


def cmd_tree_thin(args) -> int:
    rep = _rep(args)
    cert = forest_thin_order(rep)
    g = intersection_graph(rep)
    ok, why = check_thin(g, cert)
    out = {"classes": cert.k, "bound": thin_bound(rep.base), "verified": ok}
    _write_or_embed(out, "certificate", cert.to_json(), args.output)
    _emit(out)
    return 0 if ok else 1


def cmd_properize(args) -> int:
    rep = _rep(args)
    res = properize_report(rep)
    same = intersection_graph(rep).same_as(intersection_graph(res.rep))
    out = {
        "k1": res.k1,
        "picked": sorted(map(str, res.picked)),
        "base_vertices": [len(rep.base.vertex_ids), len(res.rep.base.vertex_ids)],
        "proper": is_proper(res.rep)[0],
        "same_graph": same,
    }
    _write_or_embed(out, "representation", res.rep.to_json(), args.output)
    _emit(out)
    return 0


def cmd_reduce_is(args) -> int:
    rep = _rep(args)
    red = reduce_is_instance(rep, args.k)
    out = {"answer": "yes" if red.yes else "reduced", "k": red.k, "k1": red.k1}
    if red.yes:
        out["witness"] = sorted(map(str, red.witness))
    else:
        h = rep.base
        h2 = red.rep.base
        out["parameter"] = h2.size + red.k1
        out["parameter_bound"] = h.size + 2 * len(h.vertex_ids) + 5 * red.k
        _write_or_embed(out, "representation", red.rep.to_json(), args.output)
    _emit(out)
    return 0


def cmd_order(args) -> int:
    data = _source(args)
    rep = HRepresentation.from_json(data)
    root = args.root if args.root is not None else data.get("root")
    edges = args.edge_order.split(",") if args.edge_order else data.get("edge_order")
    eof = EdgeOrderedForest.build(rep.base, root, edges)
    order = vertex_order(rep, eof)
    starts = start_edges(rep, eof)
    out = {"order": order, "start_edges": [starts[v] for v in order], "edge_order": list(eof.edge_order)}
    if args.matrix:
        out["matrix"] = adjacency_matrix(intersection_graph(rep), order).bitstring()
    _emit(out)
    return 0


def cmd_tww(args) -> int:
    g = _graph(args)
    if args.max_n is not None and len(g) > args.max_n:
        raise ResourceLimitError(f"graph has {len(g)} vertices, above --max-n {args.max_n}")
    d, seq = bruteforce_twinwidth(g)
    _emit({"twin_width": d, "sequence": [list(s) for s in seq]})
    return 0


def cmd_check_seq(args) -> int:
    g = _graph(args)
    seq = _read_json(args.sequence)
    if isinstance(seq, dict):
        seq = seq.get("sequence", [])
    ok, worst = validate_sequence(g, seq, args.d)
    _emit({"ok": ok, "max_red_degree": worst, "d": args.d})
    return 0 if ok else 1


def cmd_fo(args) -> int:
    g = _graph(args)
    if args.formula:
        f = fo.parse(args.formula)
    elif args.problem:
        if args.k is None:
            raise InputError("--problem needs -k")
        f = fo.encode_problem(args.problem, args.k)
    else:
        raise InputError("give --formula or --problem")
    _emit({"formula": fo.to_text(f), "size": fo.size(f), "holds": fo.evaluate(g, f)})
    return 0


DEMOS = {"claw-c2": "fig3-claw-c2", "fan": "fig3-fan", "fig1a": "fig1a", "fig1b": "fig1b", "fig6": "fig6"}


def cmd_demo(args) -> int:
    if args.name not in DEMOS:
        raise InputError(f"unknown demo {args.name!r}; choose from {', '.join(DEMOS)}")
    rep = fixtures.load(DEMOS[args.name])
    g = intersection_graph(rep)
    steps = {"fixture": DEMOS[args.name], "vertices": len(g), "edges": len(g.edges)}
    nc = is_non_crossing(rep)[0]
    steps["non_crossing"] = nc
    if nc:
        cert = build_proper_mixed_thin_report(rep).certificate
        ok, _ = check_mixed_thin(g, cert, require_proper=True)
        steps["mixed_thin_classes"] = cert.k
        steps["certificate_verified"] = ok
    else:
        ok = True
    k = max(1, len(g) // 2)
    f = fo.encode_problem("independent_set", k)
    steps["query"] = f"independent set of size {k}"
    steps["query_holds"] = fo.evaluate(g, f)
    _emit(steps)
    return 0 if ok else 1


def cmd_fixtures(args) -> int:
    if args.write:
        paths = fixtures.write_fixture_files(Path(args.write))
        _emit({"written": [str(p) for p in paths]})
    elif args.show:
        _emit(fixtures.load_raw(args.show))
    else:
        _emit({"fixtures": {name: about for name, (_, about) in fixtures.CATALOG.items()}})
    return 0


def _input_args(p, fixture=True):
    p.add_argument("input", nargs="?", help="JSON file")
    if fixture:
        p.add_argument("--fixture", help="load a shipped fixture instead of a file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hgraph", description="Representations and width certificates for H-graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check sets and report proper / non-crossing")
    _input_args(p)
    p.add_argument("--proper", action="store_true", help="fail unless the family is proper")
    p.add_argument("--non-crossing", action="store_true", help="fail unless the family is non-crossing")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("build-mixed-thin", help="proper mixed-thin certificate from a non-crossing family")
    _input_args(p)
    p.add_argument("--circular", action="store_true", help="two-class construction for a proper family on a cycle")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_build_mixed_thin)

    p = sub.add_parser("check-cert", help="check a thin or mixed-thin certificate")
    _input_args(p)
    p.add_argument("certificate")
    p.add_argument("--kind", choices=CERT_KINDS, help="default: mixed if the file has pair orders, else thin")
    p.set_defaults(func=cmd_check_cert)

    p = sub.add_parser("tree-thin", help="thin order for a family over a forest")
    _input_args(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_tree_thin)

    p = sub.add_parser("properize", help="equivalent proper family on an enlarged base")
    _input_args(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_properize)

    p = sub.add_parser("reduce-is", help="independent-set reduction to a proper instance")
    _input_args(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce_is)

    p = sub.add_parser("order", help="vertex order for a family over a forest")
    _input_args(p)
    p.add_argument("--root")
    p.add_argument("--edge-order", help="comma-separated edge ids")
    p.add_argument("--matrix", action="store_true", help="include the ordered adjacency matrix as bits")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("tww", help="exact twin-width of a small graph")
    _input_args(p)
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_tww)

    p = sub.add_parser("check-seq", help="replay a contraction sequence")
    _input_args(p)
    p.add_argument("sequence")
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_check_seq)

    p = sub.add_parser("fo", help="evaluate a first-order sentence")
    _input_args(p)
    p.add_argument("--formula")
    p.add_argument("--problem", choices=fo.PROBLEMS)
    p.add_argument("-k", type=int)
    p.set_defaults(func=cmd_fo)

    p = sub.add_parser("demo", help="fixture to certificate to query, end to end")
    p.add_argument("name", nargs="?", default="claw-c2")
    p.set_defaults(func=cmd_demo)

    p = sub.add_parser("fixtures", help="list, show or write the fixture catalog")
    p.add_argument("--show")
    p.add_argument("--write", metavar="DIR")
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except HGraphError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
