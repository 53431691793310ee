"""From a non-crossing representation to a proper mixed-thin certificate.

The pipeline groups vertices by how their sets meet each base edge (the profile),
splits every profile class around an ambassador, orders each class along its special
edges, and then interleaves every pair of classes, complementing the cross edges
where the pair behaves like a circular-arc or co-bipartite piece.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from .core_graph import SimpleGraph, sort_key, sorted_ids
from .errors import BuilderError, InputError, ValidationError
from .framework import HRepresentation, cycle_order, intersection_graph, is_non_crossing
from .patterns import bipartite_complement, merge_orders
from .width_reps import MixedThinRepresentation, check_mixed_thin

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Profile:
    e1: frozenset
    e2: frozenset
    f3: frozenset  # (edge_id, endpoint) pairs
    e4: frozenset

    @property
    def e3(self) -> frozenset:
        return frozenset(e for e, _ in self.f3)

    def endpoint_in(self, eid):
        for e, x in self.f3:
            if e == eid:
                return x
        return None


@dataclass(frozen=True)
class RefinedClass:
    kind: str  # "E4", "V'", "W", "Z"
    members: tuple
    profile: Profile
    ambassador: object = None
    special: tuple = ()


@dataclass
class BuildReport:
    certificate: MixedThinRepresentation
    classes: list
    fallbacks: list = field(default_factory=list)


def class_bound(m: int) -> int:
    return 2**m * (4**m - 1) * (m * m + 1) + m


def profile_bound(m: int) -> int:
    return (4**m - 1) * 2**m + m


def _require_non_crossing(rep: HRepresentation) -> None:
    ok, why = is_non_crossing(rep)
    if not ok:
        raise ValidationError(f"representation is crossing at {why[:2]}")


def profile_of(rep: HRepresentation, xs: frozenset) -> Profile:
    fw = rep.framework
    e1, e2, f3, e4 = set(), set(), set(), set()
    for eid in fw.base.edge_ids():
        x, y = fw.endpoints(eid)
        inner = fw.internal(eid)
        all_inner = all(z in xs for z in inner)
        any_inner = any(z in xs for z in inner)
        hx, hy = x in xs, y in xs
        if hx and hy:
            (e1 if all_inner else e2).add(eid)
        elif hx or hy:
            f3.add((eid, x if hx else y))
        elif any_inner:
            e4.add(eid)
    return Profile(frozenset(e1), frozenset(e2), frozenset(f3), frozenset(e4))


def compute_profiles(rep: HRepresentation, check: bool = True) -> dict:
    if check:
        _require_non_crossing(rep)
    return {v: profile_of(rep, s) for v, s in rep.sets}


def _single_edge(rep: HRepresentation, diff: frozenset):
    """The edge whose internal vertices contain ``diff``, or raise."""
    edges = {z[0] for z in diff if isinstance(z, tuple)}
    if len(edges) != 1 or any(not isinstance(z, tuple) for z in diff):
        raise BuilderError("difference within a profile class is not inside one edge")
    return edges.pop()


def refine_partition(rep: HRepresentation, profiles: dict) -> list:
    groups: dict = {}
    for v in rep.vertex_ids:
        groups.setdefault(profiles[v], []).append(v)
    out = []
    for prof, members in groups.items():
        if prof.e4:
            out.append(RefinedClass("E4", tuple(members), prof, None, tuple(prof.e4)))
            continue
        amb = min(members, key=lambda v: ([sort_key(z) for z in sorted_ids(rep.set_of[v])], sort_key(v)))
        xa = rep.set_of[amb]
        same, ws, zs = [], {}, {}
        for w in members:
            xw = rep.set_of[w]
            lost, gained = xa - xw, xw - xa
            if not lost and not gained:
                same.append(w)
                continue
            ea = _single_edge(rep, lost) if lost else None
            eb = _single_edge(rep, gained) if gained else None
            if ea is None or eb is None or ea == eb:
                ws.setdefault(ea if ea is not None else eb, []).append(w)
            else:
                zs.setdefault((ea, eb), []).append(w)
        out.append(RefinedClass("V'", tuple(same), prof, amb, ()))
        edge_rank = {e: i for i, e in enumerate(rep.base.edge_ids())}
        for e in sorted(ws, key=edge_rank.get):
            out.append(RefinedClass("W", tuple(ws[e]), prof, amb, (e,)))
        for pair in sorted(zs, key=lambda p: (edge_rank[p[0]], edge_rank[p[1]])):
            out.append(RefinedClass("Z", tuple(zs[pair]), prof, amb, pair))
    return out


# positional helpers on a single edge path x = position 0, internals 1..p, y = p+1

def _prefix(rep, xs, eid) -> int:
    n = 0
    for z in rep.framework.internal(eid):
        if z not in xs:
            break
        n += 1
    return n


def _suffix(rep, xs, eid) -> int:
    n = 0
    for z in reversed(rep.framework.internal(eid)):
        if z not in xs:
            break
        n += 1
    return n


def _span(rep, xs, eid) -> tuple:
    pos = [i for i, z in enumerate(rep.framework.internal(eid), 1) if z in xs]
    return (min(pos), max(pos)) if pos else (0, 0)


def _extent_from(rep, xs, eid, x) -> int:
    """How far the set reaches into ``eid`` starting from its endpoint ``x``."""
    first, _ = rep.framework.endpoints(eid)
    return _prefix(rep, xs, eid) if x == first else _suffix(rep, xs, eid)


def _gap(rep, xs, eid) -> tuple:
    """(j1, j2): last index of the first-endpoint path and first index of the other one."""
    p = rep.framework.count[eid]
    return _prefix(rep, xs, eid), p + 1 - _suffix(rep, xs, eid)


def _sorted(members, key):
    return sorted(members, key=lambda v: (key(v), sort_key(v)))


def _two_groups(members, first_sel, first_key, second_key):
    a = [v for v in members if first_sel(v)]
    b = [v for v in members if not first_sel(v)]
    return _sorted(a, first_key) + _sorted(b, second_key)


def _order_three(members, j, j1, j2, J1, J2, same_first: str):
    """Orders of the mixed E2/F3 Z-classes, given index functions and the ambassador's gap."""
    if len({j(v) for v in members}) <= 1:
        if same_first == "j2":
            return _two_groups(members, lambda v: j2(v) == J2, j1, j2)
        return _two_groups(members, lambda v: j1(v) == J1, j2, j1)
    if all(j2(v) == J2 for v in members):
        return _sorted(members, lambda v: (j(v), -j1(v)))
    if all(j1(v) == J1 for v in members):
        return _sorted(members, lambda v: (j(v), j2(v)))
    return _sorted(members, lambda v: (j(v), -j1(v), j2(v)))


def _order_two_gaps(members, j1, j2, j3, j4, J1, J2, J3, J4):
    def by_34():
        return _two_groups(members, lambda v: j3(v) == J3, j4, j3)

    def by_12():
        return _two_groups(members, lambda v: j2(v) == J2, j1, j2)

    def all_eq(f, val=None):
        vals = {f(v) for v in members}
        return len(vals) <= 1 if val is None else vals <= {val}

    def sub_j3():
        if all_eq(j4):
            return by_12()
        if all_eq(j1, J1):
            return _sorted(members, lambda v: (j2(v), -j4(v)))
        if all_eq(j2, J2):
            return _sorted(members, lambda v: (j1(v), j4(v)))
        return None

    def sub_j4():
        if all_eq(j3):
            return by_12()
        if all_eq(j1, J1):
            return _sorted(members, lambda v: (j2(v), j3(v)))
        if all_eq(j2, J2):
            return _sorted(members, lambda v: (j1(v), -j3(v)))
        return None

    res = None
    if all_eq(j1):
        if all(j1(v) < J1 for v in members) or all_eq(j2):
            res = by_34()
        elif all_eq(j3, J3):
            res = sub_j3()
        elif all_eq(j4, J4):
            res = sub_j4()
    elif all_eq(j3, J3):
        res = sub_j3()
    elif all_eq(j4, J4):
        res = sub_j4()
    return res if res is not None else _sorted(members, lambda v: (j1(v), j2(v), j3(v), j4(v)))


def order_class(rep: HRepresentation, cls: RefinedClass) -> list:
    members = list(cls.members)
    xs = rep.set_of
    prof = cls.profile
    if cls.kind == "E4":
        (e,) = cls.special
        return _sorted(members, lambda v: _span(rep, xs[v], e))
    if cls.kind == "V'":
        return members
    if cls.kind == "W":
        (e,) = cls.special
        x = prof.endpoint_in(e)
        if x is not None:
            return _sorted(members, lambda v: _extent_from(rep, xs[v], e, x))
        return _sorted(members, lambda v: _gap(rep, xs[v], e))
    e1, e2 = cls.special
    x1, x2 = prof.endpoint_in(e1), prof.endpoint_in(e2)
    amb = xs[cls.ambassador]
    if x1 is not None and x2 is not None:
        return _sorted(members, lambda v: (_extent_from(rep, xs[v], e1, x1), -_extent_from(rep, xs[v], e2, x2)))
    if x2 is not None:
        # e1 keeps both endpoints, e2 hangs from x2
        J1, J2 = _gap(rep, amb, e1)
        return _order_three(
            members,
            lambda v: _extent_from(rep, xs[v], e2, x2),
            lambda v: _gap(rep, xs[v], e1)[0],
            lambda v: _gap(rep, xs[v], e1)[1],
            J1, J2, "j2",
        )
    if x1 is not None:
        J1, J2 = _gap(rep, amb, e2)
        return _order_three(
            members,
            lambda v: _extent_from(rep, xs[v], e1, x1),
            lambda v: _gap(rep, xs[v], e2)[0],
            lambda v: _gap(rep, xs[v], e2)[1],
            J1, J2, "j1",
        )
    J1, J2 = _gap(rep, amb, e1)
    J3, J4 = _gap(rep, amb, e2)
    return _order_two_gaps(
        members,
        lambda v: _gap(rep, xs[v], e1)[0],
        lambda v: _gap(rep, xs[v], e1)[1],
        lambda v: _gap(rep, xs[v], e2)[0],
        lambda v: _gap(rep, xs[v], e2)[1],
        J1, J2, J3, J4,
    )


def _interaction_edges(rep: HRepresentation, ca: RefinedClass, cb: RefinedClass) -> set:
    fw = rep.framework
    out = set()
    for eid in fw.base.edge_ids():
        path = set(fw.full_path(eid))
        for u in ca.members:
            xu = rep.set_of[u] & path
            if xu and any(xu & rep.set_of[w] for w in cb.members):
                out.add(eid)
                break
    return out


def preferred_sign(rep: HRepresentation, ca: RefinedClass, cb: RefinedClass) -> int:
    """Sign suggested by the interaction shape of two non-trivially interacting classes."""
    pa, pb = ca.profile, cb.profile
    if pa.e4 or pb.e4:
        e4c, other = (pa, pb) if pa.e4 else (pb, pa)
        (e,) = e4c.e4
        return -1 if e in other.e2 else 1
    touched = _interaction_edges(rep, ca, cb)
    return 1 if len(touched) <= 1 else -1


def merge_pair(g: SimpleGraph, oa: list, ob: list, sign_order=(1, -1)):
    """Try signs and orientations; returns (sign, merged order, reversed_a, reversed_b) or None."""
    cross = {(a, b) for a in oa for b in ob if g.has_edge(a, b)}
    for sign in sign_order:
        rel = cross if sign == 1 else bipartite_complement(oa, ob, cross)
        for ra, rb in ((False, False), (False, True), (True, False), (True, True)):
            sa = oa[::-1] if ra else oa
            sb = ob[::-1] if rb else ob
            m = merge_orders(sa, sb, rel)
            if m is not None:
                return sign, m, ra, rb
    return None


def build_proper_mixed_thin_report(rep: HRepresentation, verify: bool = True) -> BuildReport:
    _require_non_crossing(rep)
    g = intersection_graph(rep)
    profiles = compute_profiles(rep, check=False)
    classes = [c for c in refine_partition(rep, profiles) if c.members]
    orders = [order_class(rep, c) for c in classes]
    k = len(classes)
    signs = [[1] * k for _ in range(k)]
    pair_orders = {(i, i): tuple(orders[i]) for i in range(k)}
    fallbacks = []
    for i, j in combinations(range(k), 2):
        oa, ob = orders[i], orders[j]
        n_cross = sum(1 for a in oa for b in ob if g.has_edge(a, b))
        if n_cross in (0, len(oa) * len(ob)):
            pair_orders[(i, j)] = tuple(oa + ob)
            continue
        pref = preferred_sign(rep, classes[i], classes[j])
        res = merge_pair(g, oa, ob, (pref, -pref))
        if res is None:
            raise BuilderError(f"classes {i} and {j} admit no interleaving")
        sign, merged, _, _ = res
        if sign != pref:
            fallbacks.append((i, j))
            log.info("pair %s used sign %d instead of %d", (i, j), sign, pref)
        signs[i][j] = signs[j][i] = sign
        pair_orders[(i, j)] = tuple(merged)
    cert = MixedThinRepresentation(tuple(tuple(o) for o in orders), pair_orders, tuple(tuple(r) for r in signs))
    if verify:
        ok, why = check_mixed_thin(g, cert, require_proper=True)
        if not ok:
            raise BuilderError(f"certificate failed its own check: {why}")
    return BuildReport(cert, classes, fallbacks)


def build_proper_mixed_thin(rep: HRepresentation) -> MixedThinRepresentation:
    return build_proper_mixed_thin_report(rep).certificate


def _arc_bounds(cyc: list, s: frozenset) -> tuple:
    """1-based (start, end) of an arc on the cycle; the whole cycle reads as (1, p)."""
    p = len(cyc)
    inside = [z in s for z in cyc]
    if all(inside):
        return 1, p
    starts = [q for q in range(p) if inside[q] and not inside[q - 1]]
    ends = [q for q in range(p) if inside[q] and not inside[(q + 1) % p]]
    if len(starts) != 1 or len(ends) != 1:
        raise InputError("set is not an arc of the cycle")
    return starts[0] + 1, ends[0] + 1


def natural_bipartition_ordering(rep: HRepresentation) -> tuple:
    """(W, W', order on W, order on W') split by containment of the first cycle vertex."""
    try:
        cyc = cycle_order(rep.framework)
    except InputError as exc:
        raise InputError("natural bipartition needs a base that is a single cycle") from exc
    p = len(cyc)
    x1 = cyc[0]
    keys = {}
    w, wp = [], []
    for v, s in rep.sets:
        i, j = _arc_bounds(cyc, s)
        if x1 in s:
            w.append(v)
            keys[v] = (p + 1, j) if i == 1 else (i, j)
        else:
            wp.append(v)
            keys[v] = (i, j)
    ow = sorted(w, key=lambda v: (keys[v], sort_key(v)))
    owp = sorted(wp, key=lambda v: (keys[v], sort_key(v)))
    return w, wp, ow, owp


def circ_arc_to_if_proper_2mixed(rep: HRepresentation) -> MixedThinRepresentation:
    g = intersection_graph(rep)
    w, wp, ow, owp = natural_bipartition_ordering(rep)
    if not w or not wp:
        only = ow or owp
        return MixedThinRepresentation((tuple(only),), {(0, 0): tuple(only)}, ((1,),))
    cross = {(a, b) for a in ow for b in owp if g.has_edge(a, b)}
    merged = merge_orders(ow, owp, bipartite_complement(ow, owp, cross))
    if merged is None:
        raise BuilderError("natural bipartition orders cannot be merged")
    return MixedThinRepresentation(
        (tuple(ow), tuple(owp)),
        {(0, 0): tuple(ow), (1, 1): tuple(owp), (0, 1): tuple(merged)},
        ((1, -1), (-1, 1)),
    )
