"""Named example representations and graphs, shipped as JSON and rebuildable from code."""

from __future__ import annotations

import json
import random
from importlib import resources
from pathlib import Path

from .core_graph import Multigraph, SimpleGraph
from .errors import InputError
from .framework import HRepresentation, SubdivisionFramework, cycle_base, cycle_order
from .width_reps import ThinRepresentation

# Claw drawn with three long arms; position k on an arm sits at distance k/5 from the centre.
_ARMS = ("L", "R", "D")
_CLAW = Multigraph(("c", "l", "r", "d"), (("c", "l", "L"), ("c", "r", "R"), ("c", "d", "D")))


def _arm_span(arm: str, lo: float, hi: float) -> set:
    out = {(arm, k) for k in range(1, 10) if lo * 5 <= k <= hi * 5}
    if lo == 0:
        out.add("c")
    return out


def _claw_rep(spans: dict) -> HRepresentation:
    fw = SubdivisionFramework.build(_CLAW, {a: 9 for a in _ARMS})
    sets = {}
    for v, parts in spans.items():
        s = set()
        for arm, lo, hi in parts:
            s |= _arm_span(arm, lo, hi)
        sets[v] = frozenset(s)
    return HRepresentation.build(fw, sets)


_LEAF_ARCS = {"a": [("L", 0.8, 1.8)], "b": [("R", 0.4, 1.4)], "c": [("D", 0.4, 1.4)]}


def fig1a() -> HRepresentation:
    return _claw_rep({"x": [("L", 0, 1.2), ("R", 0, 0.8), ("D", 0, 0.8)], **_LEAF_ARCS})


def fig1b() -> HRepresentation:
    return _claw_rep({"x": [("L", 0, 1.2), ("R", 0, 1.4), ("D", 0, 0.8)], **_LEAF_ARCS})


def fig1c() -> HRepresentation:
    return _claw_rep({
        "A": [("L", 0, 1.2), ("R", 0, 1.0)],
        "B": [("L", 0, 0.6), ("R", 0, 0.4), ("D", 0, 0.8)],
        "C": [("L", 0.8, 1.8)],
        "D": [("R", 0.6, 1.6)],
    })


def fig1d() -> HRepresentation:
    return _claw_rep({
        "A": [("L", 0, 1.2), ("R", 0, 1.0)],
        "B": [("L", 0, 0.6), ("R", 0, 0.4)],
        "C": [("L", 0.8, 1.8)],
        "D": [("R", 0.6, 1.6)],
    })


def fig2() -> tuple[SimpleGraph, ThinRepresentation]:
    """Twelve vertices in three columns; the order is bottom to top."""
    order = ("v1", "z1", "w1", "v2", "z2", "w2", "v3", "z3", "v4", "z4", "w3", "z5")
    classes = (("v1", "v2", "v3", "v4"), ("w1", "w2", "w3"), ("z1", "z2", "z3", "z4", "z5"))
    edges = """v4v2 v4v3 w3w2 z4z2 z4z3 z3z2 v2w1 v3w2 v4w1 v4w2 v1w2 v4w3 v2w2 v1w1
    v1z1 v2z2 v2z1 v1z2 v2z3 v4z4 v3z4 v3z2 v3z3 z2w1 z3w2 z5w3 z5w2 z2w2 z1w1 z1w2""".split()
    g = SimpleGraph.from_edges(order, [(e[:2], e[2:]) for e in edges])
    return g, ThinRepresentation(order, classes)


def fig3_fan() -> HRepresentation:
    """Seven-vertex claw family whose intersection graph is the 4-fan."""
    h = Multigraph(("c", "l", "r", "d"), (("c", "l", "L"), ("c", "r", "R"), ("c", "d", "D")))
    fw = SubdivisionFramework.build(h, {"L": 4, "R": 4, "D": 2})

    def arm(a, *ks):
        return {(a, k) for k in ks}

    sets = {
        "z": arm("L", 1, 2) | {"c"} | arm("R", 1, 2),
        "v1": arm("L", 2, 3, 4),
        "v2": arm("L", 1, 2, 3),
        "v3": arm("L", 1) | {"c"} | arm("D", 1, 2),
        "v4": {"c"} | arm("R", 1, 2, 3),
        "v5": arm("R", 2, 3, 4),
    }
    return HRepresentation.build(fw, {v: frozenset(s) for v, s in sets.items()})


def fig3_claw_c2() -> HRepresentation:
    """A whole-cycle arc plus three single points on one side: the claw."""
    fw = SubdivisionFramework.build(cycle_base(2), {"c0": 3, "c1": 3})
    sets = {"hub": frozenset(fw.vertex_ids)}
    for k in (1, 2, 3):
        sets[f"leaf{k}"] = frozenset({("c0", k)})
    return HRepresentation.build(fw, sets)


def fig5() -> HRepresentation:
    h = Multigraph(
        tuple("abcdef"),
        (("a", "b", "ab"), ("b", "c", "bc"), ("c", "d", "cd"), ("d", "e", "de"),
         ("e", "f", "ef"), ("f", "a", "fa"), ("c", "f", "cf")),
    )
    fw = SubdivisionFramework.build(h, {"ab": 0, "bc": 3, "cd": 2, "de": 3, "ef": 5, "fa": 2, "cf": 1})
    red = {"a", "b", "c", "f"} | {("bc", k) for k in (1, 2, 3)} | {("fa", 1), ("fa", 2)} | {("ef", 4), ("ef", 5)}
    blue = {("de", k) for k in (1, 2, 3)}
    return HRepresentation.build(fw, {"v": frozenset(red), "w": frozenset(blue)})


FIG6_EDGE_ORDER = ("e1", "e2", "e3", "e4", "e5", "e6")


def fig6() -> HRepresentation:
    h = Multigraph(
        tuple("abcdefg"),
        (("a", "b", "e1"), ("a", "c", "e2"), ("b", "d", "e3"), ("b", "e", "e4"), ("e", "f", "e5"), ("e", "g", "e6")),
    )
    fw = SubdivisionFramework.build(h, {"e1": 1, "e2": 2, "e3": 3, "e4": 1, "e5": 1, "e6": 1})
    u = {("e1", 1), "b", ("e3", 1), ("e3", 2), ("e3", 3), ("e4", 1), "e", ("e6", 1)}
    v = {("e1", 1), "b", ("e3", 1), ("e4", 1), "e", ("e5", 1), "f", ("e6", 1)}
    return HRepresentation.build(fw, {"u": frozenset(u), "v": frozenset(v)})


def proper_arc_rep(n: int, seed, cycle_edges: int = 3) -> HRepresentation:
    """n arcs of one common length on a subdivided cycle, so no arc contains another."""
    rng = random.Random(seed)
    per_edge = rng.randint(3, 6)
    fw = SubdivisionFramework.build(cycle_base(cycle_edges), {f"c{i}": per_edge for i in range(cycle_edges)})

    cyc = cycle_order(fw)
    p = len(cyc)
    length = rng.randint(1, p - 1)
    sets = {}
    for v in range(n):
        start = rng.randrange(p)
        sets[v] = frozenset(cyc[(start + t) % p] for t in range(length))
    return HRepresentation.build(fw, sets)


# Name -> (builder, what the shipped file holds)
CATALOG = {
    "fig1a": (fig1a, "claw family, proper and non-crossing"),
    "fig1b": (fig1b, "claw family, non-crossing, one set contains another"),
    "fig1c": (fig1c, "claw family, proper, two sets cross"),
    "fig1d": (fig1d, "claw family, neither proper nor non-crossing"),
    "fig2": (fig2, "12-vertex graph with a 3-class thin order"),
    "fig3-fan": (fig3_fan, "proper claw family for the 4-fan"),
    "fig3-claw-c2": (fig3_claw_c2, "non-crossing cycle family for the claw"),
    "fig5": (fig5, "two sets on a 6-vertex base for profile computation"),
    "fig6": (fig6, "two sets on a rooted tree with a fixed edge order"),
}


def fixture_payload(name: str) -> dict:
    builder, about = CATALOG[name]
    obj = builder()
    if isinstance(obj, tuple):
        g, thin = obj
        return {"about": about, "graph": g.to_json(), "thin": thin.to_json()}
    data = {"about": about, **obj.to_json()}
    if name == "fig6":
        data["root"] = "a"
        data["edge_order"] = list(FIG6_EDGE_ORDER)
    return data


def write_fixture_files(directory: Path | None = None) -> list:
    directory = Path(directory or Path(__file__).parent / "fixture_data")
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name in CATALOG:
        path = directory / f"{name}.json"
        path.write_text(json.dumps(fixture_payload(name), indent=1) + "\n")
        out.append(path)
    return out


def load_raw(name: str) -> dict:
    if name not in CATALOG:
        raise InputError(f"unknown fixture {name!r}; known: {', '.join(CATALOG)}")
    text = resources.files("hgraph").joinpath("fixture_data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def load(name: str):
    """Representation for representation fixtures, (graph, thin order) for the graph fixture."""
    data = load_raw(name)
    if "graph" in data:
        return SimpleGraph.from_json(data["graph"]), ThinRepresentation.from_json(data["thin"])
    return HRepresentation.from_json(data)


def representation_fixtures() -> list:
    return [n for n in CATALOG if n != "fig2"]
