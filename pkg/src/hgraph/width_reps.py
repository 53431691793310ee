"""Thin and mixed-thin certificates, their checkers, and exact brute force for tiny graphs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .core_graph import SimpleGraph, sort_key
from .errors import InputError, check_limit


@dataclass(frozen=True)
class ThinRepresentation:
    order: tuple
    classes: tuple  # tuple of tuples

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))

    @property
    def k(self) -> int:
        return len(self.classes)

    def class_index(self) -> dict:
        return {v: i for i, c in enumerate(self.classes) for v in c}

    def reversed(self) -> "ThinRepresentation":
        return ThinRepresentation(self.order[::-1], self.classes)

    def to_json(self) -> dict:
        return {"order": list(self.order), "classes": [list(c) for c in self.classes]}

    @classmethod
    def from_json(cls, data: dict) -> "ThinRepresentation":
        try:
            return cls(tuple(data["order"]), tuple(tuple(c) for c in data["classes"]))
        except (KeyError, TypeError) as exc:
            raise InputError(f"bad thin certificate: {exc}") from exc


@dataclass(frozen=True)
class MixedThinRepresentation:
    classes: tuple
    pair_orders: dict  # (i, j) with i <= j -> tuple of vertices
    signs: tuple  # k x k, entries +1 / -1

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(tuple(c) for c in self.classes))
        object.__setattr__(self, "pair_orders", {tuple(k): tuple(v) for k, v in self.pair_orders.items()})
        object.__setattr__(self, "signs", tuple(tuple(r) for r in self.signs))

    @property
    def k(self) -> int:
        return len(self.classes)

    def sign(self, i: int, j: int) -> int:
        return self.signs[min(i, j)][max(i, j)]

    def to_json(self) -> dict:
        return {
            "classes": [list(c) for c in self.classes],
            "pair_orders": [{"i": i, "j": j, "order": list(o)} for (i, j), o in sorted(self.pair_orders.items())],
            "signs": [list(r) for r in self.signs],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MixedThinRepresentation":
        try:
            orders = {(int(p["i"]), int(p["j"])): tuple(p["order"]) for p in data["pair_orders"]}
            return cls(tuple(tuple(c) for c in data["classes"]), orders, tuple(tuple(r) for r in data["signs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad mixed-thin certificate: {exc}") from exc


def _check_shape(g: SimpleGraph, order, classes) -> None:
    verts = set(g.vertex_ids)
    if len(order) != len(verts) or set(order) != verts:
        raise InputError("order is not a permutation of the vertex set")
    flat = [v for c in classes for v in c]
    if len(flat) != len(set(flat)) or set(flat) != verts:
        raise InputError("classes do not partition the vertex set")


def _first_thin_violation(g: SimpleGraph, order, cls_of) -> tuple | None:
    n = len(order)
    for r in range(n):
        vr = order[r]
        for s in range(r + 1, n):
            vs = order[s]
            if cls_of[vr] != cls_of[vs]:
                continue
            for t in range(s + 1, n):
                vt = order[t]
                if g.has_edge(vr, vt) and not g.has_edge(vs, vt):
                    return (vr, vs, vt)
    return None


def check_thin(g: SimpleGraph, rep: ThinRepresentation) -> tuple[bool, tuple | None]:
    """Consistency of order and partition; the violation is the first bad (r, s, t)."""
    _check_shape(g, rep.order, rep.classes)
    bad = _first_thin_violation(g, rep.order, rep.class_index())
    return bad is None, bad


def check_proper_thin(g: SimpleGraph, rep: ThinRepresentation) -> tuple[bool, dict | None]:
    _check_shape(g, rep.order, rep.classes)
    cls_of = rep.class_index()
    bad = _first_thin_violation(g, rep.order, cls_of)
    if bad is not None:
        return False, {"direction": "forward", "triple": bad}
    bad = _first_thin_violation(g, rep.order[::-1], cls_of)
    if bad is not None:
        return False, {"direction": "reverse", "triple": bad}
    return True, None


def thin_to_mixed(rep: ThinRepresentation) -> MixedThinRepresentation:
    """Embed a thin certificate: restricted orders and an all-ones sign matrix."""
    k = rep.k
    orders = {}
    for i in range(k):
        for j in range(i, k):
            members = set(rep.classes[i]) | set(rep.classes[j])
            orders[(i, j)] = tuple(v for v in rep.order if v in members)
    return MixedThinRepresentation(rep.classes, orders, tuple((1,) * k for _ in range(k)))


def _aligned(sub: tuple, ref: tuple, strict: bool) -> bool:
    return sub == ref or (not strict and sub == ref[::-1])


def check_mixed_thin(
    g: SimpleGraph,
    rep: MixedThinRepresentation,
    require_proper: bool = False,
    require_inversion_free: bool = False,
) -> tuple[bool, dict | None]:
    """Check alignment (or equality), CO and, when asked, SC for every pair of classes."""
    k = rep.k
    flat = [v for c in rep.classes for v in c]
    if len(flat) != len(set(flat)) or set(flat) != set(g.vertex_ids):
        raise InputError("classes do not partition the vertex set")
    if len(rep.signs) != k or any(len(r) != k for r in rep.signs):
        raise InputError("sign matrix has the wrong shape")
    for i in range(k):
        for j in range(i, k):
            if rep.signs[i][j] not in (1, -1):
                raise InputError("sign entries must be +1 or -1")
            if (i, j) not in rep.pair_orders:
                raise InputError(f"missing order for pair {(i, j)}")
            members = set(rep.classes[i]) | set(rep.classes[j])
            order = rep.pair_orders[(i, j)]
            if len(order) != len(members) or set(order) != members:
                raise InputError(f"order for pair {(i, j)} is not a permutation of its classes")

    cls_of = {v: i for i, c in enumerate(rep.classes) for v in c}
    align = "IN" if require_inversion_free else "AL"
    for i in range(k):
        for j in range(i, k):
            order = rep.pair_orders[(i, j)]
            for c in {i, j}:
                sub = tuple(v for v in order if cls_of[v] == c)
                if not _aligned(sub, rep.pair_orders[(c, c)], require_inversion_free):
                    return False, {"condition": align, "pair": (i, j), "class": c}
            bad = _pair_violation(g, order, cls_of, i, j, rep.signs[i][j], require_proper)
            if bad is not None:
                cond, triple = bad
                return False, {"condition": cond, "pair": (i, j), "triple": triple}
    return True, None


def _pair_violation(g, order, cls_of, i, j, sign, require_proper):
    n = len(order)
    side = [cls_of[v] for v in order]

    def e(a, b):
        # a, b are positions in order
        if i != j and side[a] == side[b]:
            return False
        return g.has_edge(order[a], order[b]) == (sign == 1)

    def two_one(a, b, c):
        # True when a, b share the "pair" role and c is in the other role
        if i == j:
            return True
        return side[a] == side[b] != side[c]

    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                if two_one(a, b, c) and e(a, c) and not e(b, c):
                    return "CO", (order[a], order[b], order[c])
                if require_proper and two_one(b, c, a) and e(a, c) and not e(a, b):
                    return "SC", (order[a], order[b], order[c])
    return None


def reverse_mixed(rep: MixedThinRepresentation) -> MixedThinRepresentation:
    return MixedThinRepresentation(rep.classes, {p: o[::-1] for p, o in rep.pair_orders.items()}, rep.signs)


def _colour(conflict: list, n: int, k: int) -> list | None:
    """Smallest-lexicographic colouring of positions 0..n-1 with k colours, or None."""
    colours = [-1] * n

    def go(p: int, used: int) -> bool:
        if p == n:
            return True
        for c in range(min(k, used + 1)):
            if all(colours[q] != c for q in range(p) if conflict[p] >> q & 1):
                colours[p] = c
                if go(p + 1, max(used, c + 1)):
                    return True
        colours[p] = -1
        return False

    return colours if go(0, 0) else None


def _conflicts(perm: tuple, nbr: list, proper: bool) -> list:
    """Pairs of positions that may not share a class under the given order."""
    n = len(perm)
    pos_n = []
    for v in perm:
        m = 0
        for p, w in enumerate(perm):
            if nbr[v] >> w & 1:
                m |= 1 << p
        pos_n.append(m)
    full = (1 << n) - 1
    conflict = [0] * n
    for r in range(n):
        for s in range(r + 1, n):
            later = full & ~((1 << (s + 1)) - 1)
            earlier = (1 << r) - 1
            bad = pos_n[r] & ~pos_n[s] & later
            if proper and not bad:
                bad = pos_n[s] & ~pos_n[r] & earlier
            if bad:
                conflict[r] |= 1 << s
                conflict[s] |= 1 << r
    return conflict


def bruteforce_thinness(g: SimpleGraph, proper: bool = False) -> tuple[int, ThinRepresentation]:
    """Minimum number of classes over all orders; the witness uses the first optimal order."""
    n = len(g.vertex_ids)
    check_limit("thinness", n)
    if n == 0:
        return 0, ThinRepresentation((), ())
    idx = {v: i for i, v in enumerate(g.vertex_ids)}
    nbr = [0] * n
    for e in g.edges:
        a, b = (idx[x] for x in e)
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    best_k, best = n + 1, None
    for perm in permutations(range(n)):
        conflict = _conflicts(perm, nbr, proper)
        for k in range(1, best_k):
            colours = _colour(conflict, n, k)
            if colours is not None:
                best_k, best = k, (perm, colours)
                break
        if best_k == 1:
            break
    perm, colours = best
    order = tuple(g.vertex_ids[i] for i in perm)
    classes = [[] for _ in range(best_k)]
    for p, c in enumerate(colours):
        classes[c].append(order[p])
    return best_k, ThinRepresentation(order, tuple(tuple(c) for c in classes))


def canonical_classes(classes) -> tuple:
    return tuple(sorted((tuple(c) for c in classes), key=lambda c: [sort_key(x) for x in c]))
