"""Simple graphs and multigraphs.

Vertex ids are opaque hashables (strings or integers in practice). Orders are always
explicit lists; nothing relies on dict or set iteration order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Hashable, Iterable

from .errors import InputError, check_limit

Vertex = Hashable


def _pair(u, v) -> frozenset:
    return frozenset((u, v))


def sort_key(x):
    """Total order over mixed ids (ints, strings, tuples of those)."""
    if isinstance(x, tuple):
        return (2, tuple(sort_key(y) for y in x))
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return (0, x, "")
    return (1, 0, str(x))


def sorted_ids(items: Iterable) -> list:
    return sorted(items, key=sort_key)


@dataclass(frozen=True)
class SimpleGraph:
    vertex_ids: tuple
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        verts = tuple(self.vertex_ids)
        object.__setattr__(self, "vertex_ids", verts)
        if len(set(verts)) != len(verts):
            raise InputError("duplicate vertex id")
        vset = set(verts)
        edges = set()
        for e in self.edges:
            e = frozenset(e)
            if len(e) != 2:
                raise InputError(f"loop or malformed edge {sorted_ids(e)}")
            if not e <= vset:
                raise InputError(f"edge {sorted_ids(e)} uses an unknown vertex")
            edges.add(e)
        object.__setattr__(self, "edges", frozenset(edges))

    @classmethod
    def from_edges(cls, vertices: Iterable, edges: Iterable) -> "SimpleGraph":
        return cls(tuple(vertices), frozenset(_pair(u, v) for u, v in edges))

    @cached_property
    def adj(self) -> dict:
        out = {v: set() for v in self.vertex_ids}
        for e in self.edges:
            u, v = tuple(e)
            out[u].add(v)
            out[v].add(u)
        return {v: frozenset(n) for v, n in out.items()}

    def has_edge(self, u, v) -> bool:
        return v in self.adj[u]

    def __len__(self) -> int:
        return len(self.vertex_ids)

    def edge_list(self) -> list:
        pairs = [sorted_ids(e) for e in self.edges]
        return sorted(pairs, key=lambda p: (sort_key(p[0]), sort_key(p[1])))

    def induced(self, vertices: Iterable) -> "SimpleGraph":
        keep = [v for v in self.vertex_ids if v in set(vertices)]
        ks = set(keep)
        return SimpleGraph(tuple(keep), frozenset(e for e in self.edges if e <= ks))

    def relabel(self, mapping: dict) -> "SimpleGraph":
        return SimpleGraph(
            tuple(mapping[v] for v in self.vertex_ids),
            frozenset(frozenset(mapping[x] for x in e) for e in self.edges),
        )

    def same_as(self, other: "SimpleGraph") -> bool:
        return set(self.vertex_ids) == set(other.vertex_ids) and self.edges == other.edges

    def to_json(self) -> dict:
        return {"vertices": list(self.vertex_ids), "edges": self.edge_list()}

    @classmethod
    def from_json(cls, data: dict) -> "SimpleGraph":
        try:
            verts = [_hashable(v) for v in data["vertices"]]
            edges = [(_hashable(e[0]), _hashable(e[1])) for e in data["edges"]]
        except (KeyError, TypeError, IndexError) as exc:
            raise InputError(f"bad graph JSON: {exc}") from exc
        return cls.from_edges(verts, edges)


def _hashable(x):
    return tuple(_hashable(y) for y in x) if isinstance(x, list) else x


@dataclass(frozen=True)
class Multigraph:
    """A multigraph; ``edges`` holds ``(x, y, edge_id)`` triples, loops and repeats allowed."""

    vertex_ids: tuple
    edges: tuple = ()

    def __post_init__(self):
        verts = tuple(self.vertex_ids)
        object.__setattr__(self, "vertex_ids", verts)
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(set(verts)) != len(verts):
            raise InputError("duplicate vertex id")
        for v in verts:
            if isinstance(v, tuple):
                raise InputError("multigraph vertex ids must be strings or integers")
        vset = set(verts)
        seen = set()
        for x, y, eid in edges:
            if x not in vset or y not in vset:
                raise InputError(f"edge {eid!r} uses an unknown vertex")
            if eid in seen:
                raise InputError(f"duplicate edge id {eid!r}")
            seen.add(eid)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_by_id(self) -> dict:
        return {eid: (x, y) for x, y, eid in self.edges}

    def edge_ids(self) -> list:
        return [eid for _, _, eid in self.edges]

    def is_simple(self) -> bool:
        pairs = set()
        for x, y, _ in self.edges:
            if x == y or _pair(x, y) in pairs:
                return False
            pairs.add(_pair(x, y))
        return True

    def underlying(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.vertex_ids, [(x, y) for x, y, _ in self.edges if x != y])

    def is_forest(self) -> bool:
        if not self.is_simple():
            return False
        return len(self.edges) == len(self.vertex_ids) - len(components(self.underlying()))

    def is_tree(self) -> bool:
        return self.is_forest() and len(components(self.underlying())) == 1

    def leaves(self) -> list:
        deg = {v: 0 for v in self.vertex_ids}
        for x, y, _ in self.edges:
            deg[x] += 1
            deg[y] += 1
        return [v for v in self.vertex_ids if deg[v] == 1]

    def to_json(self) -> dict:
        return {"vertices": list(self.vertex_ids), "edges": [[x, y, eid] for x, y, eid in self.edges]}

    @classmethod
    def from_json(cls, data: dict) -> "Multigraph":
        try:
            verts = list(data["vertices"])
            edges = []
            for i, e in enumerate(data["edges"]):
                eid = e[2] if len(e) > 2 else f"e{i}"
                edges.append((e[0], e[1], eid))
        except (KeyError, TypeError, IndexError) as exc:
            raise InputError(f"bad multigraph JSON: {exc}") from exc
        return cls(tuple(verts), tuple(edges))


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = frozenset(_pair(u, v) for u, v in combinations(g.vertex_ids, 2) if not g.has_edge(u, v))
    return SimpleGraph(g.vertex_ids, edges)


def is_connected_subset(g: SimpleGraph, s: Iterable) -> bool:
    s = set(s)
    unknown = s - set(g.vertex_ids)
    if unknown:
        raise InputError(f"unknown vertex ids {sorted_ids(unknown)}")
    if not s:
        return True
    start = next(iter(s))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in s and w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == len(s)


def components(g: SimpleGraph) -> list:
    """Connected components as vertex lists, in order of first vertex."""
    seen = set()
    out = []
    for v in g.vertex_ids:
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in sorted_ids(g.adj[u]):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def max_independent_set_bruteforce(g: SimpleGraph) -> tuple[int, frozenset]:
    """Exact maximum independent set by branching on bitmasks."""
    n = len(g.vertex_ids)
    check_limit("mis", n)
    idx = {v: i for i, v in enumerate(g.vertex_ids)}
    nbr = [0] * n
    for e in g.edges:
        u, v = (idx[x] for x in e)
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    best = [0, 0]

    def go(cand: int, chosen: int, size: int) -> None:
        if size + bin(cand).count("1") <= best[0]:
            return
        if not cand:
            best[0], best[1] = size, chosen
            return
        i = (cand & -cand).bit_length() - 1
        go(cand & ~nbr[i] & ~(1 << i), chosen | (1 << i), size + 1)
        go(cand & ~(1 << i), chosen, size)

    go((1 << n) - 1, 0, 0)
    witness = frozenset(g.vertex_ids[i] for i in range(n) if best[1] >> i & 1)
    return best[0], witness


def is_independent(g: SimpleGraph, s: Iterable) -> bool:
    s = list(s)
    return all(not g.has_edge(u, v) for u, v in combinations(s, 2))


def true_twins(g: SimpleGraph) -> list:
    out = []
    for u, v in combinations(g.vertex_ids, 2):
        if g.has_edge(u, v) and g.adj[u] - {v} == g.adj[v] - {u}:
            out.append((u, v))
    return out


# small constructors used by fixtures and tests

def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(n), [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(n), [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(n), combinations(range(n), 2))


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(n), [])


def matching_graph(t: int) -> SimpleGraph:
    """tK2 on vertices 0..2t-1 with edges (2i, 2i+1)."""
    return SimpleGraph.from_edges(range(2 * t), [(2 * i, 2 * i + 1) for i in range(t)])


def fan_graph(k: int = 4) -> SimpleGraph:
    """P_{k+1} on 1..k+1 plus a universal vertex 0; k=4 gives the 4-fan."""
    path = [(i, i + 1) for i in range(1, k + 1)]
    spokes = [(0, i) for i in range(1, k + 2)]
    return SimpleGraph.from_edges(range(k + 2), path + spokes)


def star_graph(leaves: int) -> SimpleGraph:
    return SimpleGraph.from_edges(range(leaves + 1), [(0, i) for i in range(1, leaves + 1)])


def random_graph(n: int, p: float, rng) -> SimpleGraph:
    return SimpleGraph.from_edges(range(n), [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])
