import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_forest, random_tree
from hgraph import fixtures
from hgraph.core_graph import Multigraph, path_graph
from hgraph.errors import InputError, ResourceLimitError
from hgraph.framework import HRepresentation, SubdivisionFramework, normalize_minimal, random_rep
from hgraph.delineation_order import (
    EdgeOrderedForest,
    adjacency_matrix,
    check_prop_order,
    framework_order,
    gf2_rank,
    grid_rank,
    start_blocks_contiguous,
    start_edge,
    start_edges,
    vertex_order,
)


def fig6_forest():
    return EdgeOrderedForest.build(fixtures.fig6().base, "a", fixtures.FIG6_EDGE_ORDER)


def test_fig6_labels():
    order = framework_order(fixtures.fig6(), fig6_forest())
    expected = [
        "a", ("e1", 1), "b", ("e2", 1), ("e2", 2), "c",
        ("e3", 1), ("e3", 2), ("e3", 3), "d", ("e4", 1), "e",
        ("e5", 1), "f", ("e6", 1), "g",
    ]
    assert order == expected


def test_fig6_u_before_v():
    rep, eof = fixtures.fig6(), fig6_forest()
    assert vertex_order(rep, eof) == ["u", "v"]
    # u's earliest vertex is (e1, 1), the second label of the first edge
    assert start_edge(rep, eof, "u") == "e1"


def test_single_edge_runs_from_root():
    h = Multigraph(("s", "t"), (("s", "t", "p"),))
    rep = HRepresentation.build(SubdivisionFramework.build(h, {"p": 2}), {})
    assert framework_order(rep, EdgeOrderedForest.build(h, "t")) == ["t", ("p", 2), ("p", 1), "s"]


def test_two_components_concatenate():
    h = Multigraph(("a", "b", "c"), (("a", "b", "p"),))
    rep = HRepresentation.build(SubdivisionFramework.build(h, {"p": 1}), {})
    eof = EdgeOrderedForest.build(h)
    assert framework_order(rep, eof) == ["a", ("p", 1), "b", "c"]


def test_forest_validation():
    h = Multigraph(("a", "b", "c"), (("a", "b", "p"), ("b", "c", "q")))
    with pytest.raises(InputError):
        EdgeOrderedForest.build(h, "a", ("q", "p"))
    with pytest.raises(InputError):
        EdgeOrderedForest.build(h, "a", ("p",))
    with pytest.raises(InputError):
        EdgeOrderedForest.build(fixtures.fig3_claw_c2().base)


def test_equal_sets_tie_by_id():
    h = Multigraph(("s", "t"), (("s", "t", "p"),))
    fw = SubdivisionFramework.build(h, {"p": 3})
    s = frozenset({("p", 1), ("p", 2)})
    rep = HRepresentation.build(fw, {"y": s, "x": s, "w": frozenset({("p", 3)})})
    assert vertex_order(rep, EdgeOrderedForest.build(h, "s")) == ["x", "y", "w"]


def test_set_with_root_starts_on_first_edge():
    rep, eof = fixtures.fig6(), fig6_forest()
    rep2 = HRepresentation.build(rep.framework, {"r": frozenset({"a", ("e2", 1)}), "w": frozenset({("e5", 1)})})
    assert start_edges(rep2, eof) == {"r": "e1", "w": "e5"}


def _random_forest_rep(seed):
    rng = random.Random(seed)
    if rng.random() < 0.5:
        h = random_tree(rng, rng.randint(1, 4))
    else:
        h = random_forest(rng, rng.randint(1, 4), extra_vertices=rng.randint(1, 2))
    rep = normalize_minimal(random_rep(h, rng.randint(1, 12), seed))
    return rep, EdgeOrderedForest.build(h)


@pytest.mark.parametrize("seed", range(60))
def test_start_blocks_contiguous(seed):
    rep, eof = _random_forest_rep(seed)
    assert start_blocks_contiguous(rep, eof)


@pytest.mark.parametrize("seed", range(60))
def test_order_property_with_chain_from_start(seed):
    rep, eof = _random_forest_rep(seed)
    assert check_prop_order(rep, eof, chain_from_start=True)[0]


def test_order_property_literal_on_fig6():
    assert check_prop_order(fixtures.fig6(), fig6_forest())[0]


def test_single_vertex_family_is_vacuous():
    h = Multigraph(("s", "t"), (("s", "t", "p"),))
    rep = HRepresentation.build(SubdivisionFramework.build(h, {"p": 1}), {0: frozenset({"s"})})
    assert check_prop_order(rep, EdgeOrderedForest.build(h))[0]


# grid rank

def brute_grid_rank(rows):
    """Try every k and every pair of row and column cuts, with no pruning."""
    nr, nc = len(rows), len(rows[0])
    best = 0
    for k in range(1, min(nr, nc) + 1):
        for rc in combinations(range(1, nr), k - 1):
            rb = list(zip((0,) + rc, rc + (nr,)))
            for cc in combinations(range(1, nc), k - 1):
                cb = list(zip((0,) + cc, cc + (nc,)))
                ok = True
                for r0, r1 in rb:
                    for c0, c1 in cb:
                        sub = [tuple(r[c0:c1]) for r in rows[r0:r1]]
                        if len(set(sub)) < k and len(set(zip(*sub))) < k:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    best = k
                    break
            if best == k:
                break
    return best


def random_matrix(rng, nr, nc, p=0.5):
    return [tuple(int(rng.random() < p) for _ in range(nc)) for _ in range(nr)]


@pytest.mark.parametrize("n", [1, 3, 6, 9])
def test_grid_rank_zero_and_identity(n):
    zero = [(0,) * n for _ in range(n)]
    ident = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    assert grid_rank(zero) == 1
    assert grid_rank(ident) == 1


def test_grid_rank_empty():
    assert grid_rank([]) == 0


def test_grid_rank_limit():
    with pytest.raises(ResourceLimitError):
        grid_rank([(0,) * 21 for _ in range(21)])


@pytest.mark.parametrize("seed", range(40))
def test_grid_rank_matches_exhaustive(seed):
    rng = random.Random(seed)
    nr, nc = rng.randint(1, 7), rng.randint(1, 7)
    m = random_matrix(rng, nr, nc, rng.choice([0.2, 0.5, 0.8]))
    assert grid_rank(m) == brute_grid_rank(m)


@pytest.mark.parametrize("seed", range(20))
def test_grid_rank_monotone_on_submatrices(seed):
    rng = random.Random(500 + seed)
    m = random_matrix(rng, 8, 8)
    full = grid_rank(m)
    r0, r1 = sorted(rng.sample(range(9), 2))
    c0, c1 = sorted(rng.sample(range(9), 2))
    sub = [r[c0:c1] for r in m[r0:r1]]
    assert grid_rank(sub) <= full


def test_adjacency_matrix_of_path():
    m = adjacency_matrix(path_graph(3), [0, 1, 2])
    assert m.bitstring() == "010101010"
    with pytest.raises(InputError):
        adjacency_matrix(path_graph(3), [0, 1])


def gf2_rank_by_span(rows):
    """Size of the span over GF(2), as a power of two."""
    span = {0}
    for r in rows:
        v = int("".join(map(str, r)), 2)
        span |= {s ^ v for s in span}
    return len(span).bit_length() - 1


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.randoms(use_true_random=False))
def test_gf2_rank_matches_span(nr, nc, rnd):
    m = random_matrix(rnd, nr, nc)
    assert gf2_rank(m) == gf2_rank_by_span(m)
