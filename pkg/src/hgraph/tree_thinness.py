"""Consistent orders and partitions for representations over trees and forests."""

from __future__ import annotations

from .core_graph import Multigraph, components, sort_key, sorted_ids
from .errors import InputError
from .framework import HRepresentation, SubdivisionFramework, validate
from .width_reps import ThinRepresentation


def _postorder_and_classes(fw: SubdivisionFramework, root) -> tuple[dict, dict, dict]:
    """Postorder index, class id and depth of every framework vertex of one tree."""
    adj = fw.graph.adj
    depth = {root: 0}
    children = {}
    stack = [root]
    while stack:
        z = stack.pop()
        kids = sorted_ids(w for w in adj[z] if w not in depth)
        children[z] = kids
        for w in kids:
            depth[w] = depth[z] + 1
            stack.append(w)

    cls = {root: 0}
    fresh = 1
    post = {}
    # explicit stack of (vertex, next-child pointer) gives the postorder
    stack = [(root, 0)]
    while stack:
        z, i = stack.pop()
        kids = children[z]
        if i < len(kids):
            stack.append((z, i + 1))
            child = kids[i]
            if i == 0:
                cls[child] = cls[z]
            else:
                cls[child] = fresh
                fresh += 1
            stack.append((child, 0))
        else:
            post[z] = len(post)
    return post, cls, depth


def _default_root(h: Multigraph):
    leaves = h.leaves()
    return leaves[0] if leaves else h.vertex_ids[0]


def tree_thin_order(rep: HRepresentation, root=None) -> ThinRepresentation:
    """Order by the postorder position of each set's top vertex; classes follow first-child chains."""
    h = rep.base
    if not h.is_tree():
        raise InputError("base graph must be a tree")
    validate(rep)
    fw = rep.framework
    if root is None:
        root = _default_root(h)
    elif h.size and root not in h.leaves():
        raise InputError("root must be a leaf of the base tree")
    post, cls, depth = _postorder_and_classes(fw, root)
    top = {v: min(s, key=lambda z: (depth[z], sort_key(z))) for v, s in rep.sets}
    order = sorted(rep.vertex_ids, key=lambda v: (post[top[v]], sort_key(v)))
    used = sorted({cls[top[v]] for v in order})
    renum = {c: i for i, c in enumerate(used)}
    classes = [[] for _ in used]
    for v in order:
        classes[renum[cls[top[v]]]].append(v)
    return ThinRepresentation(tuple(order), tuple(tuple(c) for c in classes))


def thin_bound(h: Multigraph) -> int:
    return max(1, len(h.leaves()) - 1)


def split_by_component(rep: HRepresentation) -> list:
    """One representation per connected component of the base, in order of first vertex."""
    h = rep.base
    out = []
    for comp in components(h.underlying()):
        cset = set(comp)
        edges = tuple(e for e in h.edges if e[0] in cset)
        sub = Multigraph(tuple(comp), edges)
        fw = SubdivisionFramework.build(sub, {eid: rep.framework.count[eid] for _, _, eid in edges})
        known = set(fw.vertex_ids)
        sets = {v: s for v, s in rep.sets if s and next(iter(s)) in known}
        out.append(HRepresentation.build(fw, sets))
    return out


def forest_thin_order(rep: HRepresentation) -> ThinRepresentation:
    """Per-tree certificates concatenated; class i of every tree is merged into one class."""
    if not rep.base.is_forest():
        raise InputError("base graph must be a forest")
    validate(rep)
    order, merged = [], []
    for part in split_by_component(rep):
        if not part.sets:
            continue
        cert = tree_thin_order(part)
        order.extend(cert.order)
        for i, c in enumerate(cert.classes):
            if i == len(merged):
                merged.append([])
            merged[i].extend(c)
    return ThinRepresentation(tuple(order), tuple(tuple(c) for c in merged))
