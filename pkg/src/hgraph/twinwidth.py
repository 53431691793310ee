"""Trigraph contractions, sequence checking and exact twin-width of tiny graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core_graph import SimpleGraph, sort_key, sorted_ids
from .errors import InputError, check_limit


def _pair(a, b) -> frozenset:
    return frozenset((a, b))


@dataclass(frozen=True)
class Trigraph:
    vertices: frozenset
    black: frozenset
    red: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "black", frozenset(frozenset(e) for e in self.black))
        object.__setattr__(self, "red", frozenset(frozenset(e) for e in self.red))
        if self.black & self.red:
            raise InputError("black and red edges overlap")
        for e in self.black | self.red:
            if len(e) != 2 or not e <= self.vertices:
                raise InputError(f"bad trigraph edge {set(e)!r}")

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> "Trigraph":
        return cls(frozenset(g.vertex_ids), g.edges, frozenset())

    def red_degree(self, v) -> int:
        return sum(1 for e in self.red if v in e)

    def max_red_degree(self) -> int:
        deg = {}
        for e in self.red:
            for v in e:
                deg[v] = deg.get(v, 0) + 1
        return max(deg.values(), default=0)


def contract(t: Trigraph, u, v, new_id) -> Trigraph:
    """Merge u and v into new_id: black to z when both were black, red when they disagree or either was red."""
    if u == v or u not in t.vertices or v not in t.vertices:
        raise InputError(f"cannot contract {u!r} and {v!r}")
    rest = t.vertices - {u, v}
    if new_id in rest:
        raise InputError(f"new vertex id {new_id!r} is already in use")
    black, red = set(), set()
    for e in t.black:
        if u not in e and v not in e:
            black.add(e)
    for e in t.red:
        if u not in e and v not in e:
            red.add(e)
    for z in rest:
        bu, bv = _pair(u, z) in t.black, _pair(v, z) in t.black
        ru, rv = _pair(u, z) in t.red, _pair(v, z) in t.red
        if ru or rv or bu != bv:
            red.add(_pair(new_id, z))
        elif bu and bv:
            black.add(_pair(new_id, z))
    return Trigraph(rest | {new_id}, frozenset(black), frozenset(red))


def validate_sequence(g: SimpleGraph, seq, d: int) -> tuple[bool, int]:
    """Replay the merges; report whether red degree never exceeded d and the worst value seen."""
    seq = [tuple(step) for step in seq]
    if len(seq) != max(len(g) - 1, 0):
        raise InputError(f"a sequence for {len(g)} vertices needs {max(len(g) - 1, 0)} steps, got {len(seq)}")
    t = Trigraph.from_graph(g)
    worst = 0
    for step in seq:
        if len(step) != 3:
            raise InputError(f"malformed step {step!r}")
        t = contract(t, *step)
        worst = max(worst, t.max_red_degree())
    return d >= 0 and worst <= d, worst


def _fresh_names(g: SimpleGraph, count: int) -> list:
    taken = {str(v) for v in g.vertex_ids}
    out = []
    i = 0
    while len(out) < count:
        name = f"m{i}"
        if name not in taken:
            out.append(name)
        i += 1
    return out


def bruteforce_twinwidth(g: SimpleGraph) -> tuple[int, list]:
    """Exact twin-width by searching vertex partitions, raising the bound until a sequence exists."""
    n = len(g)
    check_limit("twinwidth", n)
    if n <= 1:
        return 0, []
    verts = sorted_ids(g.vertex_ids)
    index = {v: i for i, v in enumerate(verts)}
    nbr = [0] * n
    for v in verts:
        for w in g.adj[v]:
            nbr[index[v]] |= 1 << index[w]

    def joined(p, q):
        """0 none, 1 all, 2 mixed between two disjoint parts."""
        total = 0
        seen = 0
        for i in range(n):
            if p >> i & 1:
                total += bin(nbr[i] & q).count("1")
                seen += 1
        qs = bin(q).count("1")
        if total == 0:
            return 0
        return 1 if total == seen * qs else 2

    def worst_red(parts):
        deg = [0] * len(parts)
        for a, b in combinations(range(len(parts)), 2):
            if joined(parts[a], parts[b]) == 2:
                deg[a] += 1
                deg[b] += 1
        return max(deg, default=0)

    def solve(d):
        failed = set()

        def go(parts):
            if len(parts) == 1:
                return []
            key = frozenset(parts)
            if key in failed:
                return None
            for a, b in combinations(range(len(parts)), 2):
                merged = sorted([p for k, p in enumerate(parts) if k not in (a, b)] + [parts[a] | parts[b]])
                if worst_red(merged) > d:
                    continue
                rest = go(merged)
                if rest is not None:
                    return [(parts[a], parts[b])] + rest
            failed.add(key)
            return None

        return go(sorted(1 << i for i in range(n)))

    for d in range(n):
        plan = solve(d)
        if plan is not None:
            break
    # turn part merges back into named contractions
    names = {1 << i: verts[i] for i in range(n)}
    fresh = iter(_fresh_names(g, n - 1))
    seq = []
    for p, q in plan:
        new = next(fresh)
        seq.append((names[p], names[q], new))
        names[p | q] = new
    return d, seq


def twins_sequence(g: SimpleGraph) -> list:
    """Contract vertices left to right, each into the running merge; used for complete and edgeless graphs."""
    verts = sorted(g.vertex_ids, key=sort_key)
    if len(verts) <= 1:
        return []
    fresh = _fresh_names(g, len(verts) - 1)
    seq = []
    cur = verts[0]
    for v, new in zip(verts[1:], fresh):
        seq.append((cur, v, new))
        cur = new
    return seq
