import random
from itertools import permutations

import pytest

from hgraph.core_graph import Multigraph


def random_tree(rng: random.Random, edges: int, leaves_at_most: int | None = None) -> Multigraph:
    """Random tree on edges+1 vertices; retries until the leaf count fits."""
    while True:
        verts = [f"t{i}" for i in range(edges + 1)]
        es = tuple((verts[rng.randrange(i)], verts[i], f"e{i}") for i in range(1, edges + 1))
        h = Multigraph(tuple(verts), es)
        if leaves_at_most is None or len(h.leaves()) <= leaves_at_most:
            return h


def random_forest(rng: random.Random, edges: int, extra_vertices: int = 1) -> Multigraph:
    n = edges + extra_vertices
    verts = [f"t{i}" for i in range(n)]
    es = []
    for i in range(1, n):
        if len(es) < edges:
            es.append((verts[rng.randrange(i)], verts[i], f"e{i}"))
    return Multigraph(tuple(verts), tuple(es))


def isomorphic(g, h) -> bool:
    """Brute force over all bijections; fine for graphs up to about eight vertices."""
    gv, hv = list(g.vertex_ids), list(h.vertex_ids)
    if len(gv) != len(hv) or len(g.edges) != len(h.edges):
        return False
    return any(
        all(h.has_edge(m[a], m[b]) for a, b in map(tuple, g.edges))
        for m in (dict(zip(gv, p)) for p in permutations(hv))
    )


@pytest.fixture
def rng():
    return random.Random(12345)
