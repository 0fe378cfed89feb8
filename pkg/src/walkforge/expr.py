"""Walk expressions: the composite-graph algebra as an AST.

Text grammar (whitespace-insensitive, decimal integers)::

    expr := "path2"
          | "complete(" int ")" | "bipartite(" int "," int ")"
          | "star(" int ")" | "hypercube(" int ")" | "book(" int ")"
          | "cartesian(" expr "," expr ")"
          | "interdep_id(" expr ")"
          | "interdep_complete(" expr "," expr ")"
          | "commuting_sum(" expr "," expr ")"
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

import numpy as np

from . import graphs as G
from .errors import CommutationError, EmbeddingError, ParseError, PreconditionError


def _need_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise PreconditionError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise PreconditionError(f"{name} must be >= {minimum}, got {value}")


@dataclass(frozen=True)
class Path2:
    pass


@dataclass(frozen=True)
class Complete:
    m: int

    def __post_init__(self):
        _need_int("complete: m", self.m, 1)


@dataclass(frozen=True)
class Bipartite:
    m1: int
    m2: int

    def __post_init__(self):
        _need_int("bipartite: m1", self.m1, 1)
        _need_int("bipartite: m2", self.m2, 0)
        if self.m1 < self.m2:
            raise PreconditionError(f"bipartite needs m1 >= m2 (n1 >= n2), got ({self.m1}, {self.m2})")


@dataclass(frozen=True)
class Star:
    m: int

    def __post_init__(self):
        _need_int("star: m", self.m, 1)


@dataclass(frozen=True)
class Hypercube:
    n: int

    def __post_init__(self):
        _need_int("hypercube: n", self.n, 1)


@dataclass(frozen=True)
class Book:
    m: int

    def __post_init__(self):
        _need_int("book: m", self.m, 1)


@dataclass(frozen=True)
class Cartesian:
    left: "WalkExpr"
    right: "WalkExpr"


@dataclass(frozen=True)
class InterdepIdentity:
    inner: "WalkExpr"


@dataclass(frozen=True)
class InterdepComplete:
    left: "WalkExpr"
    right: "WalkExpr"


@dataclass(frozen=True)
class CommutingSum:
    """A + B for two expressions whose graphs share a dimension and commute."""

    left: "WalkExpr"
    right: "WalkExpr"


WalkExpr = Union[
    Path2, Complete, Bipartite, Star, Hypercube, Book,
    Cartesian, InterdepIdentity, InterdepComplete, CommutingSum,
]


def wires_of(expr: WalkExpr) -> int:
    """Wire count of the synthesized circuit, computed without building graphs."""
    if isinstance(expr, Path2):
        return 1
    if isinstance(expr, Complete):
        return expr.m
    if isinstance(expr, Hypercube):
        return expr.n
    if isinstance(expr, Bipartite):
        return expr.m1 + 1
    if isinstance(expr, Star):
        return expr.m + 1
    if isinstance(expr, Book):
        return expr.m + 2
    if isinstance(expr, Cartesian):
        return wires_of(expr.left) + wires_of(expr.right)
    if isinstance(expr, InterdepIdentity):
        return 1 + wires_of(expr.inner)
    if isinstance(expr, InterdepComplete):
        return 1 + max(wires_of(expr.left), wires_of(expr.right))
    if isinstance(expr, CommutingSum):
        return wires_of(expr.left)
    raise TypeError(f"not a walk expression: {expr!r}")


@lru_cache(maxsize=256)
def pair_of(expr: WalkExpr) -> G.InterdependentPair | None:
    """Intra/inter split for interdependent nodes, None otherwise."""
    if isinstance(expr, InterdepIdentity):
        return G.identity_interlink(graph_of(expr.inner))
    if isinstance(expr, InterdepComplete):
        return G.complete_interlink(graph_of(expr.left), graph_of(expr.right))
    return None


@lru_cache(maxsize=256)
def graph_of(expr: WalkExpr) -> G.Graph:
    if isinstance(expr, Path2):
        return G.path2()
    if isinstance(expr, Complete):
        return G.complete_graph(expr.m)
    if isinstance(expr, Bipartite):
        return G.complete_bipartite(expr.m1, expr.m2)
    if isinstance(expr, Star):
        return G.star(expr.m)
    if isinstance(expr, Hypercube):
        return G.hypercube(expr.n)
    if isinstance(expr, Book):
        return G.book(expr.m)
    if isinstance(expr, Cartesian):
        return G.cartesian(graph_of(expr.left), graph_of(expr.right))
    if isinstance(expr, (InterdepIdentity, InterdepComplete)):
        return pair_of(expr).graph
    if isinstance(expr, CommutingSum):
        a, b = graph_of(expr.left), graph_of(expr.right)
        if not G.commutes(a, b):
            raise CommutationError(
                f"{a.label} and {b.label} do not commute; exact splitting needs [A, B] = 0"
            )
        return G.Graph(a.dim, a.adjacency + b.adjacency, a.active | b.active, f"{a.label} + {b.label}")
    raise TypeError(f"not a walk expression: {expr!r}")


def interlink_layout(expr: InterdepComplete) -> tuple[int, int]:
    """(m1, m2) of the K_{n1,n2} interlink, after checking the index layout.

    The interlink circuit is the padded K_{n1,n2} walk, which requires the
    first graph to fill its block exactly (dim1 = n1) and the active vertices
    of the second graph to be its first n2 indices.
    """
    g1, g2 = graph_of(expr.left), graph_of(expr.right)
    pair_of(expr)
    if not g1.fully_active or g1.dim < g2.dim:
        raise EmbeddingError(
            f"first graph of interdep_complete must have no padding and the larger block; got {g1!r}, {g2!r}"
        )
    n2 = g2.n_active
    if not np.array_equal(np.flatnonzero(g2.active), np.arange(n2)):
        raise EmbeddingError(f"active vertices of {g2.label} are not a leading index range")
    return G.log2_exact(g1.dim), G.log2_exact(n2)


def check(expr: WalkExpr) -> WalkExpr:
    """Validate the structural preconditions that need the graphs themselves."""
    if isinstance(expr, (Cartesian, CommutingSum, InterdepComplete)):
        check(expr.left)
        check(expr.right)
    elif isinstance(expr, InterdepIdentity):
        check(expr.inner)
    if isinstance(expr, InterdepComplete):
        interlink_layout(expr)
    elif isinstance(expr, CommutingSum):
        graph_of(expr)
        if wires_of(expr.left) != wires_of(expr.right):
            raise PreconditionError("commuting_sum operands must have equal dimensions")
    return expr


_UNARY = {"complete": Complete, "star": Star, "hypercube": Hypercube, "book": Book}
_BINARY_INT = {"bipartite": Bipartite}
_BINARY = {"cartesian": Cartesian, "interdep_complete": InterdepComplete, "commuting_sum": CommutingSum}
_NESTED = {"interdep_id": InterdepIdentity}
KEYWORDS = frozenset({"path2", *_UNARY, *_BINARY_INT, *_BINARY, *_NESTED})


def to_text(expr: WalkExpr) -> str:
    if isinstance(expr, Path2):
        return "path2"
    if isinstance(expr, Bipartite):
        return f"bipartite({expr.m1}, {expr.m2})"
    for name, cls in _UNARY.items():
        if isinstance(expr, cls):
            return f"{name}({next(iter(vars(expr).values()))})"
    for name, cls in _BINARY.items():
        if isinstance(expr, cls):
            return f"{name}({to_text(expr.left)}, {to_text(expr.right)})"
    if isinstance(expr, InterdepIdentity):
        return f"interdep_id({to_text(expr.inner)})"
    raise TypeError(f"not a walk expression: {expr!r}")


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<punct>[(),])|(?P<bad>\S))")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = []
        pos = 0
        while True:
            m = _TOKEN.match(text, pos)
            if m is None:
                break
            kind = m.lastgroup
            start = m.start(kind)
            if kind == "bad":
                raise ParseError(f"unexpected character {m.group(kind)!r}", self._bytes(start))
            self.tokens.append((kind, m.group(kind), start))
            pos = m.end()
        self.tokens.append(("end", "", len(text)))
        self.i = 0

    def _bytes(self, pos):
        return len(self.text[:pos].encode("utf-8"))

    def peek(self):
        return self.tokens[self.i]

    def fail(self, expected, what=None):
        kind, value, pos = self.peek()
        shown = "end of input" if kind == "end" else repr(value)
        raise ParseError(what or f"unexpected {shown}", self._bytes(pos), expected)

    def expect(self, punct):
        kind, value, _ = self.peek()
        if kind != "punct" or value != punct:
            self.fail({punct})
        self.i += 1

    def integer(self):
        kind, value, _ = self.peek()
        if kind != "int":
            self.fail({"integer"})
        self.i += 1
        return int(value)

    def expr(self):
        kind, name, _ = self.peek()
        if kind != "name" or name not in KEYWORDS:
            self.fail(KEYWORDS)
        self.i += 1
        if name == "path2":
            return Path2()
        self.expect("(")
        if name in _UNARY:
            node = _UNARY[name](self.integer())
        elif name in _BINARY_INT:
            a = self.integer()
            self.expect(",")
            node = _BINARY_INT[name](a, self.integer())
        elif name in _NESTED:
            node = _NESTED[name](self.expr())
        else:
            left = self.expr()
            self.expect(",")
            node = _BINARY[name](left, self.expr())
        self.expect(")")
        return node


def parse_expr(text: str, validate: bool = True) -> WalkExpr:
    """Parse walk-expression text into an AST.

    Syntax errors raise ParseError with a byte offset and the expected token
    set; violated family or composition preconditions raise the error of the
    rule that failed.
    """
    p = _Parser(text)
    expr = p.expr()
    if p.peek()[0] != "end":
        p.fail({"end of input"})
    return check(expr) if validate else expr
