"""First-order sentences over the edge relation: parsing, printing, naive evaluation.

Grammar (``or`` binds loosest, then ``and``, then ``not``; a quantifier's body runs as far right as possible)::

    formula := disj
    disj    := conj ("or" conj)*
    conj    := unary ("and" unary)*
    unary   := "not" unary | ("exists" | "forall") VAR "." formula | "(" formula ")" | atom
    atom    := ("E" | "edge") "(" VAR "," VAR ")" | VAR "=" VAR
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from .core_graph import SimpleGraph
from .errors import InputError, ResourceLimitError, limits


class ParseError(InputError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Edge:
    left: str
    right: str


@dataclass(frozen=True)
class Equal:
    left: str
    right: str


@dataclass(frozen=True)
class Not:
    body: object


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Exists:
    var: str
    body: object


@dataclass(frozen=True)
class Forall:
    var: str
    body: object


KEYWORDS = {"exists", "forall", "and", "or", "not", "E", "edge"}
_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<sym>[().,=]))")


def _tokens(text: str) -> list:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = "name" if m.group("name") else "sym"
        start = m.start(kind)
        out.append((m.group(kind), start))
        pos = m.end()
    out.append(("<end>", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def pos(self) -> int:
        return self.toks[self.i][1]

    def take(self, want: str | None = None) -> str:
        tok, at = self.toks[self.i]
        if want is not None and tok != want:
            raise ParseError(f"expected {want!r} but found {tok!r}", at)
        self.i += 1
        return tok

    def var(self) -> str:
        tok, at = self.toks[self.i]
        if tok in KEYWORDS or not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", tok):
            raise ParseError(f"expected a variable but found {tok!r}", at)
        self.i += 1
        return tok

    def formula(self):
        left = self.conj()
        while self.peek() == "or":
            self.take()
            left = Or(left, self.conj())
        return left

    def conj(self):
        left = self.unary()
        while self.peek() == "and":
            self.take()
            left = And(left, self.unary())
        return left

    def unary(self):
        tok = self.peek()
        if tok == "not":
            self.take()
            return Not(self.unary())
        if tok in ("exists", "forall"):
            self.take()
            v = self.var()
            self.take(".")
            body = self.formula()
            return Exists(v, body) if tok == "exists" else Forall(v, body)
        if tok == "(":
            self.take()
            inner = self.formula()
            self.take(")")
            return inner
        if tok in ("E", "edge"):
            self.take()
            self.take("(")
            a = self.var()
            self.take(",")
            b = self.var()
            self.take(")")
            return Edge(a, b)
        a = self.var()
        self.take("=")
        return Equal(a, self.var())


def parse(text: str):
    """Parse a sentence; free variables are rejected."""
    p = _Parser(text)
    f = p.formula()
    if p.peek() != "<end>":
        raise ParseError(f"unexpected {p.peek()!r}", p.pos())
    free = free_variables(f)
    if free:
        raise ParseError(f"free variables {sorted(free)}", 0)
    return f


def free_variables(f) -> set:
    if isinstance(f, (Edge, Equal)):
        return {f.left, f.right}
    if isinstance(f, Not):
        return free_variables(f.body)
    if isinstance(f, (And, Or)):
        return free_variables(f.left) | free_variables(f.right)
    return free_variables(f.body) - {f.var}


def to_text(f) -> str:
    """Fully parenthesised text that parses back to the same tree."""
    if isinstance(f, Edge):
        return f"E({f.left},{f.right})"
    if isinstance(f, Equal):
        return f"{f.left}={f.right}"
    if isinstance(f, Not):
        return f"not ({to_text(f.body)})"
    if isinstance(f, And):
        return f"({to_text(f.left)}) and ({to_text(f.right)})"
    if isinstance(f, Or):
        return f"({to_text(f.left)}) or ({to_text(f.right)})"
    word = "exists" if isinstance(f, Exists) else "forall"
    return f"{word} {f.var}. ({to_text(f.body)})"


def size(f) -> int:
    """Number of tree nodes."""
    if isinstance(f, (Edge, Equal)):
        return 1
    if isinstance(f, (And, Or)):
        return 1 + size(f.left) + size(f.right)
    return 1 + size(f.body)


def quantifier_depth(f) -> int:
    if isinstance(f, (Edge, Equal)):
        return 0
    if isinstance(f, Not):
        return quantifier_depth(f.body)
    if isinstance(f, (And, Or)):
        return max(quantifier_depth(f.left), quantifier_depth(f.right))
    return 1 + quantifier_depth(f.body)


def evaluate(g: SimpleGraph, f) -> bool:
    """Standard semantics by trying every assignment, short-circuiting connectives."""
    if isinstance(f, str):
        f = parse(f)
    free = free_variables(f)
    if free:
        raise InputError(f"free variables {sorted(free)}")
    n = len(g)
    cost = n ** quantifier_depth(f)
    budget = limits()["fo_budget"]
    if cost > budget:
        raise ResourceLimitError(f"fo_budget exceeded: {n}^{quantifier_depth(f)} > {budget}")
    verts = list(g.vertex_ids)
    adj = g.adj

    def ev(node, env):
        if isinstance(node, Edge):
            return env[node.right] in adj[env[node.left]]
        if isinstance(node, Equal):
            return env[node.left] == env[node.right]
        if isinstance(node, Not):
            return not ev(node.body, env)
        if isinstance(node, And):
            return ev(node.left, env) and ev(node.right, env)
        if isinstance(node, Or):
            return ev(node.left, env) or ev(node.right, env)
        test = any if isinstance(node, Exists) else all
        return test(ev(node.body, {**env, node.var: x}) for x in verts)

    return ev(f, {})


def _conj(parts):
    out = parts[0]
    for p in parts[1:]:
        out = And(out, p)
    return out


def _disj(parts):
    out = parts[0]
    for p in parts[1:]:
        out = Or(out, p)
    return out


PROBLEMS = ("independent_set", "clique", "dominating_set")


def encode_problem(kind: str, k: int):
    """Sentence for: an independent set or clique of size k exists, or a dominating set of size at most k exists."""
    if kind not in PROBLEMS:
        raise InputError(f"unknown problem {kind!r}; choose from {', '.join(PROBLEMS)}")
    if k < 0:
        raise InputError("k must be non-negative")
    xs = [f"x{i}" for i in range(1, k + 1)]
    if kind == "dominating_set":
        nothing = Forall("y", Not(Equal("y", "y")))
        if k == 0:
            return nothing
        body = Forall("y", _disj([Or(Equal("y", x), Edge("y", x)) for x in xs]))
        for x in reversed(xs):
            body = Exists(x, body)
        return Or(nothing, body)
    if k == 0:
        return Forall("x", Equal("x", "x"))
    # each new variable is constrained against the earlier ones before going deeper
    inner = None
    for j in range(k - 1, -1, -1):
        x = xs[j]
        guards = []
        for y in xs[:j]:
            pair = Edge(y, x) if kind == "clique" else Not(Edge(y, x))
            guards.append(And(Not(Equal(y, x)), pair))
        parts = guards + ([inner] if inner is not None else [])
        inner = Exists(x, _conj(parts)) if parts else Exists(x, Equal(x, x))
    return inner


def brute_force_answer(g: SimpleGraph, kind: str, k: int) -> bool:
    """Direct combinatorial search used as an oracle."""
    verts = list(g.vertex_ids)
    if kind == "dominating_set":
        for r in range(0, min(k, len(verts)) + 1):
            for pick in combinations(verts, r):
                covered = set(pick).union(*(g.adj[v] for v in pick)) if pick else set()
                if covered >= set(verts):
                    return True
        return False
    want_edge = kind == "clique"
    for pick in combinations(verts, k):
        if all(g.has_edge(a, b) == want_edge for a, b in combinations(pick, 2)):
            return True
    return False
