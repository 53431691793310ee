import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from hgraph import fixtures
from hgraph.core_graph import Multigraph, is_independent, max_independent_set_bruteforce
from hgraph.framework import (
    HRepresentation,
    SubdivisionFramework,
    generate_co_matching_rep,
    intersection_graph,
    interval_rep,
    is_proper,
    random_rep,
    small_multigraphs,
)
from hgraph.properization import (
    greedy_disjoint_intervals,
    interior_intervals,
    properize_report,
    reduce_is_instance,
)


def max_disjoint(intervals):
    """Largest pairwise disjoint subfamily by trying every subset."""
    best = 0
    for r in range(len(intervals) + 1):
        for pick in combinations(intervals, r):
            if all(a[1] < b[0] or b[1] < a[0] for a, b in combinations(pick, 2)):
                best = r
    return best


def test_touching_branch_vertices_gives_zero():
    h = Multigraph(("s", "t"), (("s", "t", "p"),))
    fw = SubdivisionFramework.build(h, {"p": 3})
    rep = HRepresentation.build(fw, {"a": frozenset({"s", ("p", 1)}), "b": frozenset({("p", 3), "t"})})
    assert greedy_disjoint_intervals(rep) == (0, frozenset())


def test_classic_greedy_example():
    rep = interval_rep({"x": (1, 2), "y": (2, 3), "z": (4, 5)}, length=6)
    k1, picked = greedy_disjoint_intervals(rep)
    assert k1 == 2 and picked == {"x", "z"}


def test_co_matching_greedy_is_maximum_per_edge():
    rep = generate_co_matching_rep(2, 2)
    runs = interior_intervals(rep)
    k1, _ = greedy_disjoint_intervals(rep)
    assert k1 == sum(max_disjoint([(lo, hi) for lo, hi, _ in rs]) for rs in runs.values())


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 9), st.integers(0, 3)), min_size=1, max_size=8))
def test_greedy_matches_exhaustive_on_one_edge(spans):
    iv = {i: (lo, min(9, lo + w)) for i, (lo, w) in enumerate(spans)}
    rep = interval_rep(iv, length=9)
    k1, picked = greedy_disjoint_intervals(rep)
    assert k1 == max_disjoint(list(iv.values()))
    assert is_independent(intersection_graph(rep), picked)


def _check_properized(rep):
    res = properize_report(rep)
    g = intersection_graph(rep)
    assert intersection_graph(res.rep) == g
    assert is_proper(res.rep)[0]
    assert len(res.rep.base.vertex_ids) == 2 * len(rep.base.vertex_ids) + 4 * res.k1
    assert is_independent(g, res.picked) and len(res.picked) == res.k1
    # every unpicked interior interval meets a picked one on the same edge
    runs = interior_intervals(rep)
    for eid, rs in runs.items():
        chosen = [(lo, hi) for lo, hi, v in rs if v in res.picked]
        for lo, hi, v in rs:
            assert any(not (hi < a or b < lo) for a, b in chosen)
    return res


@pytest.mark.parametrize("name", ["fig1a", "fig1b", "fig1c", "fig1d", "fig3-fan", "fig3-claw-c2", "fig5", "fig6"])
def test_fixtures_properize(name):
    _check_properized(fixtures.load(name))


def test_many_claws_on_one_path():
    claws = 6
    iv = {}
    for c in range(claws):
        base = 8 * c + 1
        iv[f"hub{c}"] = (base, base + 6)
        for leaf in range(3):
            iv[f"leaf{c}.{leaf}"] = (base + 2 * leaf + 1, base + 2 * leaf + 1)
    rep = interval_rep(iv, length=8 * claws + 1)
    res = _check_properized(rep)
    assert res.k1 >= claws
    assert len(res.rep.base.vertex_ids) == 2 * 2 + 4 * res.k1


def test_duplicates_are_copied_back():
    rep = interval_rep({"a": (2, 3), "b": (2, 3), "c": (3, 5)}, length=6)
    res = _check_properized(rep)
    assert res.rep.set_of["a"] == res.rep.set_of["b"]


@pytest.mark.parametrize("seed", range(40))
def test_random_reps(seed):
    rng = random.Random(seed)
    hs = small_multigraphs(3)
    rep = random_rep(hs[seed % len(hs)], rng.randint(1, 14), seed)
    res = _check_properized(rep)
    assert res.k1 <= max_independent_set_bruteforce(intersection_graph(rep))[0]


def test_reduce_k_zero():
    red = reduce_is_instance(fixtures.fig1b(), 0)
    assert red.yes and red.witness == frozenset()


def test_reduce_yes_witness_is_independent():
    rep = interval_rep({"x": (1, 2), "y": (2, 3), "z": (4, 5)}, length=6)
    red = reduce_is_instance(rep, 2)
    assert red.yes and len(red.witness) == 2
    assert is_independent(intersection_graph(rep), red.witness)


def test_reduce_no_gives_small_proper_instance():
    rep = fixtures.fig1b()
    k = 4
    red = reduce_is_instance(rep, k)
    assert not red.yes and red.k1 < k
    h, h2 = rep.base, red.rep.base
    assert len(h2.vertex_ids) < 2 * len(h.vertex_ids) + 4 * k
    assert h2.size + red.k1 < h.size + 2 * len(h.vertex_ids) + 5 * k
    assert is_proper(red.rep)[0]


def test_reduce_rejects_negative_k():
    with pytest.raises(ValueError):
        reduce_is_instance(fixtures.fig1a(), -1)
