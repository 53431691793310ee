import random
from itertools import combinations

import pytest

from hgraph.core_graph import complete_graph, cycle_graph, empty_graph, path_graph, random_graph
from hgraph.errors import InputError, ResourceLimitError
from hgraph.twinwidth import Trigraph, bruteforce_twinwidth, contract, twins_sequence, validate_sequence


def colour_table(t):
    """Pair -> 'black' / 'red' / None."""
    out = {}
    for a, b in combinations(sorted(t.vertices, key=str), 2):
        e = frozenset((a, b))
        out[e] = "black" if e in t.black else "red" if e in t.red else None
    return out


def naive_contract(table, vertices, u, v, w):
    """The same rule written as a lookup over the colour table."""
    rest = [z for z in vertices if z not in (u, v)]
    new = {e: c for e, c in table.items() if u not in e and v not in e}
    for z in rest:
        cu, cv = table[frozenset((u, z))], table[frozenset((v, z))]
        if cu == cv == "black":
            c = "black"
        elif cu is None and cv is None:
            c = None
        else:
            c = "red"
        new[frozenset((w, z))] = c
    return new


def test_k3_twins_stay_black():
    t = contract(Trigraph.from_graph(complete_graph(3)), 0, 1, "w")
    assert t.vertices == {"w", 2} and t.black == {frozenset(("w", 2))} and not t.red


def test_p3_ends_share_black():
    t = contract(Trigraph.from_graph(path_graph(3)), 0, 2, "w")
    assert t.black == {frozenset(("w", 1))} and not t.red


def test_p4_ends_go_red():
    t = contract(Trigraph.from_graph(path_graph(4)), 0, 3, "w")
    assert t.red == {frozenset(("w", 1)), frozenset(("w", 2))}
    assert t.black == {frozenset((1, 2))}


def test_contract_errors():
    t = Trigraph.from_graph(path_graph(3))
    with pytest.raises(InputError):
        contract(t, 0, 0, "w")
    with pytest.raises(InputError):
        contract(t, 0, 9, "w")
    with pytest.raises(InputError):
        contract(t, 0, 1, 2)


@pytest.mark.parametrize("seed", range(25))
def test_contract_agrees_with_table_rule(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(3, 7), 0.5, rng)
    t = Trigraph.from_graph(g)
    table = colour_table(t)
    names = iter(f"m{i}" for i in range(20))
    while len(t.vertices) > 1:
        u, v = rng.sample(sorted(t.vertices, key=str), 2)
        w = next(names)
        table = naive_contract(table, t.vertices, u, v, w)
        t = contract(t, u, v, w)
        assert colour_table(t) == table


@pytest.mark.parametrize("n", range(1, 7))
def test_complete_and_edgeless_are_zero(n):
    for g in (complete_graph(n), empty_graph(n)):
        d, seq = bruteforce_twinwidth(g)
        assert d == 0
        assert validate_sequence(g, seq, 0)[0]
        assert validate_sequence(g, twins_sequence(g), 0)[0]


def test_negative_bound_always_false():
    g = complete_graph(4)
    assert not validate_sequence(g, twins_sequence(g), -1)[0]


def test_sequence_shape_errors():
    g = path_graph(3)
    with pytest.raises(InputError):
        validate_sequence(g, [(0, 1, "a")], 1)
    with pytest.raises(InputError):
        validate_sequence(g, [(0, 1, "a"), (2, "a")], 1)


def test_limit():
    with pytest.raises(ResourceLimitError):
        bruteforce_twinwidth(path_graph(9))


@pytest.mark.parametrize(
    "g", [path_graph(4), cycle_graph(4), cycle_graph(5), path_graph(8)], ids=["P4", "C4", "C5", "P8"]
)
def test_witness_is_tight(g):
    d, seq = bruteforce_twinwidth(g)
    ok, worst = validate_sequence(g, seq, d)
    assert ok and worst == d
    assert not validate_sequence(g, seq, d - 1)[0]


def all_sequences_min(g):
    """Twin-width by trying every contraction sequence on the trigraph itself."""
    memo = {}

    def go(t):
        if len(t.vertices) == 1:
            return 0
        key = (t.vertices, t.black, t.red)
        if key in memo:
            return memo[key]
        best = len(g)
        for u, v in combinations(sorted(t.vertices, key=str), 2):
            nxt = contract(t, u, v, f"({u}+{v})")
            best = min(best, max(nxt.max_red_degree(), go(nxt)))
        memo[key] = best
        return best

    return go(Trigraph.from_graph(g))


@pytest.mark.parametrize("seed", range(12))
def test_matches_plain_search_on_small_graphs(seed):
    rng = random.Random(seed)
    g = random_graph(rng.randint(2, 6), rng.choice([0.3, 0.5, 0.7]), rng)
    d, seq = bruteforce_twinwidth(g)
    assert d == all_sequences_min(g)
    assert validate_sequence(g, seq, d)[0]
