"""Turning any representation into a proper one over a slightly larger base graph."""

from __future__ import annotations

from dataclasses import dataclass

from .core_graph import Multigraph, sort_key
from .framework import HRepresentation, SubdivisionFramework, validate


def interior_intervals(rep: HRepresentation) -> dict:
    """Per edge, the vertices whose sets are runs of internal vertices: ``{eid: [(lo, hi, v)]}``."""
    out = {}
    for v, s in rep.sets:
        if not s or any(not isinstance(z, tuple) for z in s):
            continue
        edges = {z[0] for z in s}
        if len(edges) != 1:
            continue
        eid = edges.pop()
        pos = sorted(z[1] for z in s)
        out.setdefault(eid, []).append((pos[0], pos[-1], v))
    return out


def greedy_disjoint_intervals(rep: HRepresentation) -> tuple[int, frozenset]:
    """Earliest-ending interval first, ties to the latest start, independently on each edge."""
    validate(rep)
    picked = []
    runs = interior_intervals(rep)
    for eid in rep.base.edge_ids():
        last = 0
        for lo, hi, v in sorted(runs.get(eid, []), key=lambda t: (t[1], -t[0], sort_key(t[2]))):
            if lo > last:
                picked.append(v)
                last = hi
    return len(picked), frozenset(picked)


def _picked_runs(rep: HRepresentation, picked) -> dict:
    runs = interior_intervals(rep)
    return {eid: [(lo, hi) for lo, hi, v in rs if v in picked] for eid, rs in runs.items()}


def _fresh(name: str, taken: set) -> str:
    out = name
    while out in taken:
        out += "'"
    taken.add(out)
    return out


def _doubled(rep: HRepresentation) -> HRepresentation:
    """Split every internal vertex in two so that every run has distinct ends."""
    fw = rep.framework
    fw2 = SubdivisionFramework.build(fw.base, {e: 2 * c for e, c in fw.counts})

    def image(z):
        if isinstance(z, tuple):
            return {(z[0], 2 * z[1] - 1), (z[0], 2 * z[1])}
        return {z}

    return HRepresentation.build(fw2, {v: frozenset(w for z in s for w in image(z)) for v, s in rep.sets})


@dataclass
class Properized:
    k1: int
    picked: frozenset
    rep: HRepresentation
    cut_vertices: list  # new base vertices placed at interval ends
    leaf_depths: dict  # w -> {vertex: depth on the leaf edge of w}


def properize_report(rep: HRepresentation) -> Properized:
    validate(rep)
    # identical sets are handled once and copied back at the end
    first_with = {}
    keep = {}
    for v, s in rep.sets:
        if s not in first_with:
            first_with[s] = v
            keep[v] = s
    core = HRepresentation.build(rep.framework, keep)
    k1, picked = greedy_disjoint_intervals(core)
    dbl = _doubled(core)
    fw = dbl.framework
    base = fw.base

    taken = {str(v) for v in base.vertex_ids}
    cuts = {}  # eid -> sorted doubled positions where the edge gets cut
    for eid, runs in _picked_runs(dbl, picked).items():
        cuts[eid] = sorted(p for lo, hi in runs for p in (lo, hi))

    new_vertices = list(base.vertex_ids)
    new_edges = []
    counts = {}
    where = {v: v for v in base.vertex_ids}  # doubled framework vertex -> new framework vertex
    cut_vertices = []
    for x, y, eid in base.edges:
        points = cuts.get(eid, [])
        names = []
        for p in points:
            name = _fresh(f"{eid}@{p}", taken)
            names.append(name)
            cut_vertices.append(name)
            new_vertices.append(name)
            where[(eid, p)] = name
        stops = [0] + points + [fw.count[eid] + 1]
        ends = [x] + names + [y]
        for i in range(len(stops) - 1):
            seg = eid if not points else _fresh(f"{eid}.{i}", taken)
            new_edges.append((ends[i], ends[i + 1], seg))
            inner = range(stops[i] + 1, stops[i + 1])
            counts[seg] = len(inner)
            for j, p in enumerate(inner, 1):
                where[(eid, p)] = (seg, j)

    anchors = list(base.vertex_ids) + cut_vertices
    mapped = {v: frozenset(where[z] for z in s) for v, s in dbl.sets}
    leaf_depths = {}
    extra = {v: set() for v in mapped}
    for w in anchors:
        holders = [v for v in dbl.vertex_ids if w in mapped[v]]
        holders.sort(key=lambda v: (-len(mapped[v]), sort_key(v)))
        leaf = _fresh(f"{w}'", taken)
        seg = _fresh(f"leaf:{w}", taken)
        new_vertices.append(leaf)
        new_edges.append((w, leaf, seg))
        counts[seg] = len(holders)
        leaf_depths[w] = {}
        for depth, v in enumerate(holders, 1):
            extra[v] |= {(seg, j) for j in range(1, depth + 1)}
            leaf_depths[w][v] = depth

    new_base = Multigraph(tuple(new_vertices), tuple(new_edges))
    new_fw = SubdivisionFramework.build(new_base, counts)
    final = {}
    for v, s in rep.sets:
        rv = first_with[s]
        final[v] = mapped[rv] | extra[rv]
    return Properized(k1, picked, HRepresentation.build(new_fw, final), cut_vertices, leaf_depths)


def properize(rep: HRepresentation) -> tuple[int, HRepresentation]:
    res = properize_report(rep)
    return res.k1, res.rep


@dataclass
class Reduction:
    yes: bool
    k: int
    k1: int
    witness: frozenset | None = None
    rep: HRepresentation | None = None


def reduce_is_instance(rep: HRepresentation, k: int) -> Reduction:
    """Either settle the independent-set question outright or hand back a proper instance."""
    if k < 0:
        raise ValueError("k must be non-negative")
    k1, picked = greedy_disjoint_intervals(rep)
    if k1 >= k:
        return Reduction(True, k, k1, witness=frozenset(sorted(picked, key=sort_key)[:k]))
    _, rep2 = properize(rep)
    return Reduction(False, k, k1, rep=rep2)
