"""Vertex orders for representations over forests and the ordered-matrix grid rank."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .core_graph import Multigraph, SimpleGraph, components, sort_key, sorted_ids, true_twins
from .errors import InputError, check_limit
from .framework import HRepresentation


@dataclass(frozen=True)
class EdgeOrderedForest:
    """A simple forest with a root per component and an edge order where parent edges come first."""

    base: Multigraph
    roots: tuple = ()  # one per component, in component order
    edge_order: tuple = ()

    def __post_init__(self):
        h = self.base
        if not h.is_simple() or not h.is_forest():
            raise InputError("base graph must be a simple forest")
        comps = components(h.underlying())
        roots = tuple(self.roots)
        if not roots:
            roots = tuple(min(c, key=sort_key) for c in comps)
        if len(roots) != len(comps) or any(r not in set(c) for r, c in zip(roots, comps)):
            raise InputError("need exactly one root per component, listed in component order")
        object.__setattr__(self, "roots", roots)
        parent_edge = self._parent_edges(roots)
        if not self.edge_order:
            object.__setattr__(self, "edge_order", tuple(self._dfs_edges(roots)))
        else:
            order = tuple(self.edge_order)
            if sorted(order, key=sort_key) != sorted(h.edge_ids(), key=sort_key):
                raise InputError("edge order must list every edge exactly once")
            pos = {e: i for i, e in enumerate(order)}
            for e, p in parent_edge.items():
                if p is not None and pos[p] > pos[e]:
                    raise InputError(f"edge {e!r} is listed before its parent edge {p!r}")
            object.__setattr__(self, "edge_order", order)

    @classmethod
    def build(cls, base: Multigraph, roots=None, edge_order=None) -> "EdgeOrderedForest":
        if roots is not None and not isinstance(roots, (list, tuple)):
            roots = [roots]
        return cls(base, tuple(roots or ()), tuple(edge_order or ()))

    def _incident(self) -> dict:
        out = {v: [] for v in self.base.vertex_ids}
        for x, y, eid in self.base.edges:
            out[x].append((y, eid))
            out[y].append((x, eid))
        return out

    def _parent_edges(self, roots) -> dict:
        inc = self._incident()
        parent = {}
        for r in roots:
            seen = {r: None}
            stack = [r]
            while stack:
                z = stack.pop()
                for w, eid in inc[z]:
                    if w not in seen:
                        seen[w] = eid
                        parent[eid] = seen[z]
                        stack.append(w)
        return parent

    def _dfs_edges(self, roots) -> list:
        inc = self._incident()
        out = []
        for r in roots:
            seen = {r}

            def visit(z):
                for w, eid in sorted(inc[z], key=lambda t: (sort_key(t[0]), sort_key(t[1]))):
                    if w not in seen:
                        seen.add(w)
                        out.append(eid)
                        visit(w)

            visit(r)
        return out

    @cached_property
    def components(self) -> list:
        return components(self.base.underlying())

    @cached_property
    def near_end(self) -> dict:
        """For every edge, the endpoint closer to its root."""
        inc = self._incident()
        out = {}
        for r in self.roots:
            seen = {r}
            stack = [r]
            while stack:
                z = stack.pop()
                for w, eid in inc[z]:
                    if w not in seen:
                        seen.add(w)
                        out[eid] = z
                        stack.append(w)
        return out


def _edge_labels(rep: HRepresentation, eof: EdgeOrderedForest) -> dict:
    """Labelled vertices of each edge, nearest the root first."""
    fw = rep.framework
    if fw.base != eof.base:
        raise InputError("edge order belongs to a different base graph")
    first_edges = set()
    for comp, r in zip(eof.components, eof.roots):
        cset = set(comp)
        for e in eof.edge_order:
            if eof.base.edge_by_id[e][0] in cset:
                first_edges.add(e)
                break
    out = {}
    for e in eof.edge_order:
        path = fw.full_path(e)
        if path[0] != eof.near_end[e]:
            path = path[::-1]
        out[e] = path if e in first_edges else path[1:]
    return out


def framework_order(rep: HRepresentation, eof: EdgeOrderedForest) -> list:
    """Every framework vertex once, component after component, edge after edge."""
    labels = _edge_labels(rep, eof)
    out = []
    for comp, r in zip(eof.components, eof.roots):
        cset = set(comp)
        edges = [e for e in eof.edge_order if eof.base.edge_by_id[e][0] in cset]
        if not edges:
            out.append(r)
        for e in edges:
            out.extend(labels[e])
    return out


def framework_rank(rep: HRepresentation, eof: EdgeOrderedForest) -> dict:
    return {z: i for i, z in enumerate(framework_order(rep, eof))}


def vertex_order(rep: HRepresentation, eof: EdgeOrderedForest) -> list:
    """u before v when the earliest framework vertex in exactly one of the two sets belongs to u."""
    rank = framework_rank(rep, eof)
    inf = float("inf")

    def key(v):
        return (tuple(sorted(rank[z] for z in rep.set_of[v])) + (inf,), sort_key(v))

    return sorted(rep.vertex_ids, key=key)


def start_edges(rep: HRepresentation, eof: EdgeOrderedForest) -> dict:
    """Edge whose label holds each set's earliest vertex; None on an edgeless component."""
    rank = framework_rank(rep, eof)
    owner = {}
    for e, zs in _edge_labels(rep, eof).items():
        for z in zs:
            owner[z] = e
    return {v: owner.get(min(s, key=rank.__getitem__)) for v, s in rep.sets}


def start_edge(rep: HRepresentation, eof: EdgeOrderedForest, u):
    return start_edges(rep, eof)[u]


def start_blocks_contiguous(rep: HRepresentation, eof: EdgeOrderedForest) -> bool:
    """Sets sharing a start edge are consecutive in the vertex order, blocks following the edge order."""
    rank = framework_rank(rep, eof)
    labels = _edge_labels(rep, eof)
    starts = start_edges(rep, eof)

    def block(v):
        e = starts[v]
        if e is None:
            # edgeless component: its lone vertex is its own block
            return rank[next(iter(rep.set_of[v]))]
        return rank[labels[e][0]]

    seq = [block(v) for v in vertex_order(rep, eof)]
    return seq == sorted(seq)


def _extremes(rep, eof, rank, labels):
    """Per vertex and edge, the first and last labelled vertex of the edge inside the set."""
    out = {}
    for v, s in rep.sets:
        row = {}
        for e, zs in labels.items():
            inside = [rank[z] for z in zs if z in s]
            row[e] = (min(inside), max(inside)) if inside else (None, None)
        out[v] = row
    return out


def prop_order_premise(ext_u: dict, ext_v: dict, i: int, edges: list, chain_from_start: bool = False) -> bool:
    """Whether the two-bullet premise puts u first.

    None marks an edge the set misses: it equals only None and no comparison with it holds.
    The literal reading starts the chain of maxima after the start edge; with
    ``chain_from_start`` the start edge's own maxima are compared first.
    """
    ei = edges[i]
    mu, mv = ext_u[ei][0], ext_v[ei][0]
    if mu is not None and mv is not None and mu < mv:
        return True
    if mu != mv:
        return False
    for e in edges[i if chain_from_start else i + 1:]:
        xu, xv = ext_u[e][1], ext_v[e][1]
        if xu == xv:
            continue
        return xu is not None and xv is not None and xv < xu
    return False


def check_prop_order(
    rep: HRepresentation, eof: EdgeOrderedForest, chain_from_start: bool = False
) -> tuple[bool, tuple | None]:
    """Every same-start, non-twin pair that the premise orders is ordered that way by vertex_order."""
    from .framework import intersection_graph

    rank = framework_rank(rep, eof)
    labels = _edge_labels(rep, eof)
    ext = _extremes(rep, eof, rank, labels)
    starts = start_edges(rep, eof)
    pos = {v: i for i, v in enumerate(vertex_order(rep, eof))}
    edges = list(eof.edge_order)
    idx = {e: i for i, e in enumerate(edges)}
    twins = {frozenset(p) for p in true_twins(intersection_graph(rep))}
    for u, v in combinations(rep.vertex_ids, 2):
        if starts[u] is None or starts[u] != starts[v] or frozenset((u, v)) in twins:
            continue
        i = idx[starts[u]]
        for a, b in ((u, v), (v, u)):
            if prop_order_premise(ext[a], ext[b], i, edges, chain_from_start) and pos[a] > pos[b]:
                return False, (a, b)
    return True, None


@dataclass(frozen=True)
class OrderedAdjacency:
    order: tuple
    bits: tuple = field(repr=False)

    def bitstring(self) -> str:
        return "".join("".join(str(b) for b in row) for row in self.bits)


def adjacency_matrix(g: SimpleGraph, order) -> OrderedAdjacency:
    order = tuple(order)
    if sorted_ids(order) != sorted_ids(g.vertex_ids) or len(set(order)) != len(order):
        raise InputError("order must list every vertex once")
    bits = tuple(tuple(int(g.has_edge(u, v)) for v in order) for u in order)
    return OrderedAdjacency(order, bits)


def _as_rows(m) -> list:
    rows = m.bits if isinstance(m, OrderedAdjacency) else m
    rows = [tuple(int(x) for x in r) for r in rows]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise InputError("matrix rows differ in length")
    return rows


def gf2_rank(m) -> int:
    rows = [int("".join(map(str, r)) or "0", 2) for r in _as_rows(m)]
    rank = 0
    while rows:
        pivot = max(rows)
        rows.remove(pivot)
        if pivot == 0:
            break
        rank += 1
        top = pivot.bit_length() - 1
        rows = [r ^ pivot if (r >> top) & 1 else r for r in rows]
    return rank


def grid_rank(m) -> int:
    """Largest k admitting a split into k row blocks and k column blocks, every zone rich in distinct lines."""
    rows = _as_rows(m)
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    check_limit("grid_cells", nr * nc)
    if nr == 0 or nc == 0:
        return 0
    zone_cache = {}

    def zone_ok(r0, r1, c0, c1, k):
        key = (r0, r1, c0, c1)
        if key not in zone_cache:
            sub = [r[c0:c1] for r in rows[r0:r1]]
            zone_cache[key] = (len(set(sub)), len(set(zip(*sub))))
        dr, dc = zone_cache[key]
        return dr >= k or dc >= k

    def has_division(k):
        for cuts in combinations(range(1, nr), k - 1):
            bounds = list(zip((0,) + cuts, cuts + (nr,)))
            # reach[c] = column prefix lengths splittable into this many good blocks
            reach = {0}
            for _ in range(k):
                nxt = set()
                for c0 in reach:
                    for c1 in range(c0 + 1, nc + 1):
                        if c1 not in nxt and all(zone_ok(r0, r1, c0, c1, k) for r0, r1 in bounds):
                            nxt.add(c1)
                reach = nxt
                if not reach:
                    break
            if nc in reach:
                return True
        return False

    best = 1
    top = min(nr, nc, int(max(nr, nc) ** 0.5))
    for k in range(top, 1, -1):
        if has_division(k):
            best = k
            break
    return best
