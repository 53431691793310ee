import random

import pytest

from conftest import random_forest, random_tree
from hgraph import fixtures
from hgraph.core_graph import Multigraph
from hgraph.errors import InputError
from hgraph.framework import (
    HRepresentation,
    SubdivisionFramework,
    cycle_base,
    intersection_graph,
    interval_rep,
    random_rep,
)
from hgraph.tree_thinness import forest_thin_order, thin_bound, tree_thin_order
from hgraph.width_reps import bruteforce_thinness, check_thin


def _rep_on(h, n, seed):
    return random_rep(h, n, seed)


def test_single_vertex_base_gives_complete_graph_one_class():
    h = Multigraph(("a",), ())
    fw = SubdivisionFramework.build(h, {})
    rep = HRepresentation.build(fw, {i: frozenset({"a"}) for i in range(4)})
    cert = tree_thin_order(rep)
    assert len(cert.classes) == 1
    assert check_thin(intersection_graph(rep), cert)[0]


@pytest.mark.parametrize("name", ["fig1a", "fig1b", "fig1c", "fig1d", "fig3-fan"])
def test_claw_fixtures_use_two_classes(name):
    rep = fixtures.load(name)
    cert = tree_thin_order(rep)
    assert len(cert.classes) <= 2
    assert check_thin(intersection_graph(rep), cert)[0]


def test_interval_input_is_one_class():
    rep = interval_rep({"a": (1, 4), "b": (2, 2), "c": (3, 6), "d": (6, 7)}, length=8)
    cert = tree_thin_order(rep)
    assert len(cert.classes) == 1
    assert check_thin(intersection_graph(rep), cert)[0]


def test_non_tree_rejected():
    rep = fixtures.fig3_claw_c2()
    with pytest.raises(InputError):
        tree_thin_order(rep)


def test_root_must_be_leaf():
    with pytest.raises(InputError):
        tree_thin_order(fixtures.fig1a(), root="c")


@pytest.mark.parametrize("seed", range(40))
def test_random_trees_within_bound(seed):
    rng = random.Random(seed)
    h = random_tree(rng, rng.randint(1, 6), leaves_at_most=5)
    rep = _rep_on(h, rng.randint(1, 25), seed)
    g = intersection_graph(rep)
    for root in h.leaves():
        cert = tree_thin_order(rep, root=root)
        assert len(cert.classes) <= thin_bound(h)
        assert check_thin(g, cert)[0]


@pytest.mark.parametrize("seed", range(15))
def test_bound_dominates_exact_thinness(seed):
    rng = random.Random(1000 + seed)
    h = random_tree(rng, rng.randint(2, 5))
    rep = _rep_on(h, rng.randint(2, 8), seed)
    g = intersection_graph(rep)
    exact, _ = bruteforce_thinness(g)
    assert exact <= len(tree_thin_order(rep).classes) <= thin_bound(h)


def test_two_interval_components_share_one_class():
    h = Multigraph(("a", "b", "c", "d"), (("a", "b", "p"), ("c", "d", "q")))
    fw = SubdivisionFramework.build(h, {"p": 3, "q": 3})
    sets = {
        1: frozenset({("p", 1), ("p", 2)}),
        2: frozenset({("p", 2), ("p", 3), "b"}),
        3: frozenset({"c", ("q", 1)}),
        4: frozenset({("q", 1), ("q", 2)}),
    }
    rep = HRepresentation.build(fw, sets)
    cert = forest_thin_order(rep)
    assert len(cert.classes) == 1
    assert check_thin(intersection_graph(rep), cert)[0]


def test_claw_plus_path_uses_two_classes():
    claw = fixtures.fig1b()
    h0 = claw.base
    h = Multigraph(h0.vertex_ids + ("s", "t"), h0.edges + (("s", "t", "P"),))
    fw = SubdivisionFramework.build(h, {**dict(claw.framework.counts), "P": 3})
    sets = dict(claw.sets)
    sets["p1"] = frozenset({("P", 1), ("P", 2)})
    sets["p2"] = frozenset({("P", 2), ("P", 3), "t"})
    rep = HRepresentation.build(fw, sets)
    cert = forest_thin_order(rep)
    assert len(cert.classes) == 2
    assert check_thin(intersection_graph(rep), cert)[0]


def test_empty_family():
    h = Multigraph(("a", "b"), (("a", "b", "p"),))
    rep = HRepresentation.build(SubdivisionFramework.build(h, {"p": 1}), {})
    cert = forest_thin_order(rep)
    assert cert.order == () and cert.classes == ()


@pytest.mark.parametrize("seed", range(20))
def test_random_forests(seed):
    rng = random.Random(seed)
    h = random_forest(rng, rng.randint(1, 6), extra_vertices=rng.randint(1, 3))
    rep = _rep_on(h, rng.randint(1, 20), seed)
    cert = forest_thin_order(rep)
    from hgraph.core_graph import components

    worst = max(thin_bound(Multigraph(tuple(c), tuple(e for e in h.edges if e[0] in set(c)))) for c in components(h.underlying()))
    assert len(cert.classes) <= worst
    assert check_thin(intersection_graph(rep), cert)[0]


def test_forest_rejects_cycles():
    with pytest.raises(InputError):
        forest_thin_order(HRepresentation.build(SubdivisionFramework.build(cycle_base(2), {"c0": 1, "c1": 1}), {}))
