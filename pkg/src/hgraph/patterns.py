"""Ordered bipartite patterns and the two-chain merge that they characterise."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable


@dataclass(frozen=True)
class OrderedBipartiteInstance:
    side_a: tuple
    side_b: tuple
    cross_edges: frozenset  # (a, b) pairs

    def __post_init__(self):
        object.__setattr__(self, "side_a", tuple(self.side_a))
        object.__setattr__(self, "side_b", tuple(self.side_b))
        object.__setattr__(self, "cross_edges", normalize_cross(self.side_a, self.side_b, self.cross_edges))
        if set(self.side_a) & set(self.side_b):
            raise ValueError("sides must be disjoint")

    def complemented(self) -> "OrderedBipartiteInstance":
        return OrderedBipartiteInstance(self.side_a, self.side_b, bipartite_complement(self.side_a, self.side_b, self.cross_edges))


@dataclass(frozen=True)
class BipartitePattern:
    name: str
    a_size: int
    b_size: int
    edges: frozenset  # position pairs
    nonedges: frozenset


def normalize_cross(side_a, side_b, edges: Iterable) -> frozenset:
    """Orient every cross pair as (a, b); pairs inside one side are rejected."""
    aset, bset = set(side_a), set(side_b)
    out = set()
    for x, y in edges:
        if x in aset and y in bset:
            out.add((x, y))
        elif y in aset and x in bset:
            out.add((y, x))
        else:
            raise ValueError(f"pair {(x, y)} is not a cross pair")
    return frozenset(out)


def bipartite_complement(side_a, side_b, edges) -> frozenset:
    edges = normalize_cross(side_a, side_b, edges)
    return frozenset((a, b) for a in side_a for b in side_b if (a, b) not in edges)


# Positions count from the first element of each side.
R1 = BipartitePattern("R1", 2, 2, frozenset({(0, 0)}), frozenset({(0, 1), (1, 0)}))
R2 = BipartitePattern("R2", 2, 2, frozenset({(1, 1)}), frozenset({(0, 1), (1, 0)}))
R4 = BipartitePattern("R4", 3, 1, frozenset({(1, 0)}), frozenset({(0, 0), (2, 0)}))
R4_PRIME = BipartitePattern("R4'", 1, 3, frozenset({(0, 1)}), frozenset({(0, 0), (0, 2)}))
FOUR_PATTERNS = (R1, R2, R4, R4_PRIME)


def avoids_pattern(inst: OrderedBipartiteInstance, pat: BipartitePattern) -> tuple[bool, tuple | None]:
    """True when no order-preserving choice of positions realises the pattern.

    The witness lists the chosen side-a elements followed by the side-b elements.
    """
    e = inst.cross_edges
    for picks_a in combinations(inst.side_a, pat.a_size):
        for picks_b in combinations(inst.side_b, pat.b_size):
            if all((picks_a[i], picks_b[j]) in e for i, j in pat.edges) and not any(
                (picks_a[i], picks_b[j]) in e for i, j in pat.nonedges
            ):
                return False, picks_a + picks_b
    return True, None


def avoids_all_four(inst: OrderedBipartiteInstance) -> bool:
    return all(avoids_pattern(inst, p)[0] for p in FOUR_PATTERNS)


def merge_constraints(v1, v2, cross_e) -> set:
    """Precedences (x, y), meaning x before y, forced by the CO and SC triple rules."""
    e = normalize_cross(v1, v2, cross_e)

    def adj(x, y):
        return (x, y) in e or (y, x) in e

    out = set()
    for same, other in ((v1, v2), (v2, v1)):
        for p, q in combinations(same, 2):
            for w in other:
                if adj(p, w) and not adj(q, w):
                    out.add((w, q))  # p < q < w would break CO
                if adj(w, q) and not adj(w, p):
                    out.add((p, w))  # w < p < q would break SC
    return out


def merge_orders(v1, v2, cross_e) -> list | None:
    """Interleave two fixed chains so that CO and SC hold on ``cross_e``; None if impossible.

    ``cross_e`` is the already selected relation between the sides (the caller
    complements it when the pair uses sign -1).
    """
    v1, v2 = list(v1), list(v2)
    cons = merge_constraints(v1, v2, cross_e)
    preds = {x: set() for x in v1 + v2}
    for x, y in cons:
        preds[y].add(x)
    placed = set()
    out = []
    i = j = 0
    while i < len(v1) or j < len(v2):
        if i < len(v1) and preds[v1[i]] <= placed:
            x = v1[i]
            i += 1
        elif j < len(v2) and preds[v2[j]] <= placed:
            x = v2[j]
            j += 1
        else:
            return None
        placed.add(x)
        out.append(x)
    return out


def merge_complemented(inst: OrderedBipartiteInstance) -> list | None:
    """Merge under the sign pattern ((1,-1),(-1,1)): the cross relation used is the complement."""
    return merge_orders(inst.side_a, inst.side_b, bipartite_complement(inst.side_a, inst.side_b, inst.cross_edges))


def merged_passes(order, v1, v2, cross_e) -> bool:
    """Direct CO/SC check of a merged order against ``cross_e``."""
    e = normalize_cross(v1, v2, cross_e)
    side = {x: 0 for x in v1}
    side.update({x: 1 for x in v2})

    def adj(x, y):
        return (x, y) in e or (y, x) in e

    for a, b, c in combinations(order, 3):
        if side[a] == side[b] != side[c] and adj(a, c) and not adj(b, c):
            return False
        if side[b] == side[c] != side[a] and adj(a, c) and not adj(a, b):
            return False
    return True


def all_interleavings(v1, v2):
    n = len(v1) + len(v2)
    for slots in combinations(range(n), len(v1)):
        s = set(slots)
        it1, it2 = iter(v1), iter(v2)
        yield [next(it1) if p in s else next(it2) for p in range(n)]
