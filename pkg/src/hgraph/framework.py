"""Subdivided multigraphs and representations over them.

A framework vertex is either a base vertex id (a branch vertex) or a pair
``(edge_id, position)`` for the ``position``-th internal vertex of that edge, counted
from the edge's first endpoint.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .core_graph import (
    Multigraph,
    SimpleGraph,
    is_connected_subset,
    sort_key,
    sorted_ids,
)
from .errors import GenerationError, InputError, ValidationError


@dataclass(frozen=True)
class SubdivisionFramework:
    base: Multigraph
    counts: tuple  # (edge_id, internal_count) pairs in base edge order

    def __post_init__(self):
        counts = dict(self.counts) if not isinstance(self.counts, dict) else dict(self.counts)
        for eid in counts:
            if eid not in self.base.edge_by_id:
                raise InputError(f"subdivision names unknown edge {eid!r}")
        full = tuple((eid, int(counts.get(eid, 0))) for eid in self.base.edge_ids())
        if any(c < 0 for _, c in full):
            raise InputError("negative subdivision count")
        object.__setattr__(self, "counts", full)

    @classmethod
    def build(cls, base: Multigraph, counts: dict | None = None) -> "SubdivisionFramework":
        return cls(base, tuple((counts or {}).items()))

    @cached_property
    def count(self) -> dict:
        return dict(self.counts)

    def internal(self, eid) -> list:
        return [(eid, i) for i in range(1, self.count[eid] + 1)]

    def endpoints(self, eid) -> tuple:
        return self.base.edge_by_id[eid]

    def full_path(self, eid) -> list:
        """S(xy) from the first endpoint x to y, branch vertices included."""
        x, y = self.endpoints(eid)
        return [x] + self.internal(eid) + [y]

    @cached_property
    def vertex_ids(self) -> tuple:
        out = list(self.base.vertex_ids)
        for eid in self.base.edge_ids():
            out.extend(self.internal(eid))
        return tuple(out)

    @cached_property
    def graph(self) -> SimpleGraph:
        pairs = set()
        for eid in self.base.edge_ids():
            path = self.full_path(eid)
            for a, b in zip(path, path[1:]):
                if a != b:
                    pairs.add(frozenset((a, b)))
        return SimpleGraph(self.vertex_ids, frozenset(pairs))

    def is_branch(self, z) -> bool:
        return not isinstance(z, tuple)

    def to_json(self) -> dict:
        return {"base": self.base.to_json(), "subdivision": {str(e): c for e, c in self.counts}}


def encode_vertex(z):
    return list(z) if isinstance(z, tuple) else z


def decode_vertex(z):
    return tuple(z) if isinstance(z, list) else z


@dataclass(frozen=True)
class HRepresentation:
    framework: SubdivisionFramework
    sets: tuple  # (vertex_id, frozenset) pairs; the order fixes vertex order

    def __post_init__(self):
        items = self.sets.items() if isinstance(self.sets, dict) else self.sets
        fixed = tuple((v, frozenset(s)) for v, s in items)
        ids = [v for v, _ in fixed]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate vertex id in representation")
        known = set(self.framework.vertex_ids)
        for v, s in fixed:
            bad = s - known
            if bad:
                raise InputError(f"set of {v!r} uses unknown framework vertices {sorted_ids(bad)}")
        object.__setattr__(self, "sets", fixed)

    @classmethod
    def build(cls, framework: SubdivisionFramework, sets: dict) -> "HRepresentation":
        return cls(framework, tuple(sets.items()))

    @cached_property
    def set_of(self) -> dict:
        return dict(self.sets)

    @property
    def vertex_ids(self) -> list:
        return [v for v, _ in self.sets]

    @property
    def base(self) -> Multigraph:
        return self.framework.base

    def with_sets(self, sets: dict) -> "HRepresentation":
        return HRepresentation.build(self.framework, {v: sets[v] for v in self.vertex_ids})

    def to_json(self) -> dict:
        out = self.framework.to_json()
        out["sets"] = {str(v): [encode_vertex(z) for z in sorted_ids(s)] for v, s in self.sets}
        return out

    @classmethod
    def from_json(cls, data: dict) -> "HRepresentation":
        try:
            base = Multigraph.from_json(data["base"])
            by_name = {str(e): e for e in base.edge_ids()}
            counts = {}
            for name, c in data.get("subdivision", {}).items():
                if name not in by_name:
                    raise InputError(f"subdivision names unknown edge {name!r}")
                counts[by_name[name]] = int(c)
            fw = SubdivisionFramework.build(base, counts)
            sets = {}
            for v, zs in data["sets"].items():
                key = int(v) if isinstance(v, str) and v.lstrip("-").isdigit() else v
                sets[key] = frozenset(_decode_fw(z, by_name) for z in zs)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad representation JSON: {exc}") from exc
        return cls.build(fw, sets)


def _decode_fw(z, by_name):
    if isinstance(z, list):
        name, pos = z
        return (by_name.get(str(name), name), int(pos))
    return z


def validate(rep: HRepresentation) -> None:
    g = rep.framework.graph
    for v, s in rep.sets:
        if not s:
            raise ValidationError(f"vertex {v!r} has an empty set")
        if not is_connected_subset(g, s):
            raise ValidationError(f"vertex {v!r} has a disconnected set")


def intersection_graph(rep: HRepresentation) -> SimpleGraph:
    validate(rep)
    edges = [(u, v) for (u, a), (v, b) in combinations(rep.sets, 2) if a & b]
    return SimpleGraph.from_edges(rep.vertex_ids, edges)


def is_proper(rep: HRepresentation) -> tuple[bool, tuple | None]:
    """False with ``(u, v)`` when the set of u is properly inside the set of v."""
    for (u, a), (v, b) in combinations(rep.sets, 2):
        if a < b:
            return False, (u, v)
        if b < a:
            return False, (v, u)
    return True, None


def is_non_crossing(rep: HRepresentation) -> tuple[bool, tuple | None]:
    """False with ``(u, v, difference)`` for the first disconnected difference."""
    g = rep.framework.graph
    for (u, a), (v, b) in combinations(rep.sets, 2):
        for p, q, x, y in ((u, v, a, b), (v, u, b, a)):
            diff = x - y
            if not is_connected_subset(g, diff):
                return False, (p, q, frozenset(diff))
    return True, None


def normalize_minimal(rep: HRepresentation) -> HRepresentation:
    """Drop framework vertices one at a time until no single removal is harmless."""
    g = rep.framework.graph
    target = intersection_graph(rep)
    sets = {v: set(s) for v, s in rep.sets}
    changed = True
    while changed:
        changed = False
        for v in rep.vertex_ids:
            for z in sorted_ids(sets[v]):
                if len(sets[v]) == 1:
                    break
                trial = sets[v] - {z}
                if not is_connected_subset(g, trial):
                    continue
                if any(not (trial & sets[u]) for u in target.adj[v]):
                    continue
                sets[v] = trial
                changed = True
    return rep.with_sets({v: frozenset(s) for v, s in sets.items()})


def cycle_base(k: int) -> Multigraph:
    """C_k as a multigraph on x0..x{k-1}; k=1 is a loop, k=2 a pair of parallel edges."""
    if k < 1:
        raise InputError("cycle length must be positive")
    verts = tuple(f"x{i}" for i in range(k))
    edges = tuple((verts[i], verts[(i + 1) % k], f"c{i}") for i in range(k))
    return Multigraph(verts, edges)


def cycle_order(fw: SubdivisionFramework) -> list:
    """Vertices of a subdivided cycle base in cyclic order, starting at its first vertex."""
    base = fw.base
    order = [base.vertex_ids[0]]
    cur = base.vertex_ids[0]
    used = set()
    for _ in range(len(base.edges)):
        for x, y, eid in base.edges:
            if eid in used or cur not in (x, y):
                continue
            used.add(eid)
            path = fw.full_path(eid)
            if x != cur:
                path = path[::-1]
            order.extend(path[1:])
            cur = path[-1]
            break
    if order[-1] != order[0] or len(used) != len(base.edges):
        raise InputError("base is not a single cycle")
    return order[:-1]


def generate_co_matching_rep(t: int, k: int) -> HRepresentation:
    """All 2k' windows of k' consecutive vertices on C_k subdivided into C_{2k'}, k' = max(t, k)."""
    if t < 1 or k < 2:
        raise InputError("need t >= 1 and k >= 2")
    kp = max(t, k)
    base = cycle_base(k)
    extra = 2 * kp - k
    counts = {f"c{i}": extra // k + (1 if i < extra % k else 0) for i in range(k)}
    fw = SubdivisionFramework.build(base, counts)
    cyc = cycle_order(fw)
    n = len(cyc)
    sets = {i: frozenset(cyc[(i + j) % n] for j in range(kp)) for i in range(n)}
    return HRepresentation.build(fw, sets)


def _random_connected(g: SimpleGraph, size: int, rng: random.Random, start=None) -> frozenset:
    verts = list(g.vertex_ids)
    cur = {start if start is not None else rng.choice(verts)}
    frontier = set()
    for z in cur:
        frontier |= g.adj[z]
    frontier -= cur
    while len(cur) < size and frontier:
        z = rng.choice(sorted_ids(frontier))
        cur.add(z)
        frontier |= g.adj[z]
        frontier -= cur
    return frozenset(cur)


def _interior_interval(fw: SubdivisionFramework, rng: random.Random) -> frozenset | None:
    eids = [e for e in fw.base.edge_ids() if fw.count[e] > 0]
    if not eids:
        return None
    eid = rng.choice(eids)
    p = fw.count[eid]
    lo = rng.randint(1, p)
    hi = rng.randint(lo, p)
    return frozenset((eid, i) for i in range(lo, hi + 1))


def _perturb(fw: SubdivisionFramework, s: frozenset, rng: random.Random) -> frozenset:
    """Reshape a set on one or two edges, keeping its branch vertices."""
    out = set(s)
    eids = fw.base.edge_ids()
    for eid in rng.sample(eids, min(len(eids), rng.randint(1, 2))):
        x, y = fw.endpoints(eid)
        inner = fw.internal(eid)
        p = len(inner)
        if not p:
            continue
        out -= set(inner)
        if x in s or y in s:
            if x in s:
                out |= set(inner[: rng.randint(0, p)])
            if y in s:
                out |= set(inner[p - rng.randint(0, p):])
        elif any(z in s for z in inner):
            lo = rng.randint(0, p - 1)
            out |= set(inner[lo: rng.randint(lo + 1, p)])
    return frozenset(out)


def random_framework(h: Multigraph, rng: random.Random, low: int = 1, high: int = 4) -> SubdivisionFramework:
    counts = {}
    for x, y, eid in h.edges:
        counts[eid] = rng.randint(max(low, 2 if x == y else 0), max(high, 2 if x == y else 0))
    return SubdivisionFramework.build(h, counts)


def random_noncrossing_rep(
    h: Multigraph,
    n: int,
    seed,
    fw: SubdivisionFramework | None = None,
    proper: bool = False,
    max_tries: int | None = None,
) -> HRepresentation:
    """Random family of n pairwise non-crossing connected sets; deterministic for a seed."""
    if n < 1:
        raise InputError("n must be positive")
    rng = random.Random(seed)
    fw = fw or random_framework(h, rng)
    g = fw.graph
    total = len(g.vertex_ids)
    accepted: list[frozenset] = []
    tries = 0
    limit = max_tries or 400 * n
    while len(accepted) < n:
        tries += 1
        if tries > limit:
            raise GenerationError(f"gave up after {limit} attempts with {len(accepted)} sets")
        roll = rng.random()
        if accepted and roll < 0.4:
            cand = _perturb(fw, rng.choice(accepted), rng)
        elif roll < 0.6:
            cand = _interior_interval(fw, rng)
            if cand is None:
                continue
        else:
            cand = _random_connected(g, rng.randint(1, total), rng)
        if not cand or not is_connected_subset(g, cand):
            continue
        if proper and any(cand < s or s < cand for s in accepted):
            continue
        if all(is_connected_subset(g, cand - s) and is_connected_subset(g, s - cand) for s in accepted):
            accepted.append(cand)
    return HRepresentation.build(fw, {i: s for i, s in enumerate(accepted)})


def random_rep(h: Multigraph, n: int, seed, fw: SubdivisionFramework | None = None) -> HRepresentation:
    """Random connected sets with no crossing restriction."""
    rng = random.Random(seed)
    fw = fw or random_framework(h, rng)
    g = fw.graph
    total = len(g.vertex_ids)
    sets = {}
    for i in range(n):
        if rng.random() < 0.4:
            cand = _interior_interval(fw, rng)
            if cand is not None:
                sets[i] = cand
                continue
        sets[i] = _random_connected(g, rng.randint(1, max(1, total // 2)), rng)
    return HRepresentation.build(fw, sets)


def interval_rep(intervals: dict, length: int | None = None) -> HRepresentation:
    """P2-representation from integer intervals ``{v: (lo, hi)}`` on positions 1..length."""
    length = length or max(hi for _, hi in intervals.values())
    base = Multigraph(("s", "t"), (("s", "t", "p"),))
    fw = SubdivisionFramework.build(base, {"p": length})
    sets = {v: frozenset(("p", i) for i in range(lo, hi + 1)) for v, (lo, hi) in intervals.items()}
    return HRepresentation.build(fw, sets)


def small_multigraphs(max_edges: int = 3) -> list:
    """Connected and disconnected multigraphs with at most ``max_edges`` edges, loops and parallels included."""
    shapes = {
        1: [("a-b",), ("a-a",)],
        2: [("a-b", "b-c"), ("a-b", "a-b"), ("a-a", "a-b"), ("a-a", "a-a"), ("a-b", "c-d"), ("a-a", "b-b")],
        3: [
            ("a-b", "a-c", "a-d"),
            ("a-b", "b-c", "c-d"),
            ("a-b", "b-c", "c-a"),
            ("a-b", "a-b", "b-c"),
            ("a-b", "a-b", "a-b"),
            ("a-a", "a-b", "b-b"),
            ("a-a", "a-b", "b-c"),
            ("a-a", "a-a", "a-b"),
            ("a-b", "a-b", "a-a"),
            ("a-a", "a-a", "a-a"),
            ("a-b", "c-d", "d-e"),
        ],
    }
    out = []
    for m in range(1, max_edges + 1):
        for shape in shapes[m]:
            verts = sorted({v for e in shape for v in e.split("-")})
            edges = tuple((e.split("-")[0], e.split("-")[1], f"e{i}") for i, e in enumerate(shape))
            out.append(Multigraph(tuple(verts), edges))
    return out


def connected_subsets(g: SimpleGraph) -> list:
    """Every non-empty connected vertex subset, grown from singletons by adding neighbours."""
    seen = {frozenset([v]) for v in g.vertex_ids}
    frontier = list(seen)
    while frontier:
        nxt = []
        for s in frontier:
            for w in set().union(*(g.adj[v] for v in s)) - s:
                t = s | {w}
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return sorted(seen, key=lambda s: (len(s), [sort_key(z) for z in sorted_ids(s)]))


def search_noncrossing_rep(target: SimpleGraph, fw: SubdivisionFramework) -> HRepresentation | None:
    """Exhaustively look for a non-crossing family on ``fw`` whose intersection graph is ``target``."""
    g = fw.graph
    cands = connected_subsets(g)
    n = len(cands)
    conn = {}

    def connected(s):
        if s not in conn:
            conn[s] = is_connected_subset(g, s)
        return conn[s]

    # meet[i] / apart[i]: candidates allowed beside candidate i for a neighbour / a non-neighbour
    meet, apart = [0] * n, [0] * n
    for i, a in enumerate(cands):
        for j, b in enumerate(cands):
            if connected(a - b) and connected(b - a):
                if a & b:
                    meet[i] |= 1 << j
                else:
                    apart[i] |= 1 << j

    verts = sorted(target.vertex_ids, key=lambda v: (-len(target.adj[v]), sort_key(v)))
    chosen = {}

    def go(pos, domains):
        if pos == len(verts):
            return True
        v = verts[pos]
        dom = domains[v]
        while dom:
            low = dom & -dom
            i = low.bit_length() - 1
            dom ^= low
            nxt = {}
            for u in verts[pos + 1:]:
                nxt[u] = domains[u] & (meet[i] if target.has_edge(u, v) else apart[i])
                if not nxt[u]:
                    break
            else:
                chosen[v] = cands[i]
                if go(pos + 1, nxt):
                    return True
        return False

    full = (1 << n) - 1
    if go(0, {v: full for v in verts}):
        return HRepresentation.build(fw, {v: chosen[v] for v in target.vertex_ids})
    return None
