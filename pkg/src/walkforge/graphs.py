"""Adjacency-matrix constructors for the graph families and composites.

Every graph lives on a power-of-two index space ``dim = 2**w`` so that a
``w``-wire circuit can act on it. Vertex counts that are not powers of two
are embedded with isolated padding vertices, flagged ``False`` in
``Graph.active``; the walk acts as the identity on them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import MAX_GRAPH_DIM
from .errors import CommutationError, DimensionError, PreconditionError, ResourceError


def is_power_of_two(n: int) -> bool:
    return n >= 1 and (n & (n - 1)) == 0


def log2_exact(n: int) -> int:
    if not is_power_of_two(n):
        raise PreconditionError(f"{n} is not a power of two")
    return n.bit_length() - 1


def _frozen(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class Graph:
    """Undirected graph on a padded power-of-two index space.

    ``adjacency`` holds exact non-negative integers, ``active`` marks the real
    vertices. Instances are immutable; the arrays are read-only.
    """

    dim: int
    adjacency: np.ndarray
    active: np.ndarray
    label: str = ""

    def __post_init__(self):
        adj = np.array(self.adjacency, dtype=np.int64)
        act = np.array(self.active, dtype=bool)
        if not is_power_of_two(self.dim):
            raise PreconditionError(f"graph dimension {self.dim} is not a power of two")
        if adj.shape != (self.dim, self.dim) or act.shape != (self.dim,):
            raise DimensionError(f"adjacency {adj.shape} / mask {act.shape} do not match dim {self.dim}")
        if (adj < 0).any():
            raise PreconditionError("adjacency entries must be non-negative")
        if not np.array_equal(adj, adj.T):
            raise PreconditionError("adjacency must be symmetric")
        if np.diagonal(adj).any():
            raise PreconditionError("adjacency diagonal must be zero")
        if adj[~act].any():
            raise PreconditionError("padding vertices must be isolated")
        object.__setattr__(self, "adjacency", _frozen(adj))
        object.__setattr__(self, "active", _frozen(act))

    @property
    def wires(self) -> int:
        return log2_exact(self.dim)

    @property
    def n_active(self) -> int:
        return int(self.active.sum())

    @property
    def fully_active(self) -> bool:
        return bool(self.active.all())

    def edges(self) -> list[tuple[int, int]]:
        """Edge list ``(i, j)`` with ``i < j``, repeated by multiplicity."""
        out = []
        rows, cols = np.nonzero(np.triu(self.adjacency, 1))
        for i, j in zip(rows.tolist(), cols.tolist()):
            out.extend([(i, j)] * int(self.adjacency[i, j]))
        return out

    def n_edges(self) -> int:
        return int(np.triu(self.adjacency, 1).sum())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.dim == other.dim
            and np.array_equal(self.adjacency, other.adjacency)
            and np.array_equal(self.active, other.active)
        )

    def __hash__(self):
        return hash((self.dim, self.adjacency.tobytes(), self.active.tobytes()))

    def __repr__(self):
        return f"Graph({self.label!r}, dim={self.dim}, active={self.n_active}, edges={self.n_edges()})"


@dataclass(frozen=True)
class InterdependentPair:
    """Two subgraphs joined by an interlink graph.

    ``intra`` is the block-diagonal part diag(A1, A2), ``inter`` the interlink
    edges, both on the same index space. Block 2 starts at index ``split``.
    """

    intra: Graph
    inter: Graph
    split: int

    def __post_init__(self):
        if self.intra.dim != self.inter.dim:
            raise DimensionError("intra and inter graphs must share a dimension")
        if ((self.intra.adjacency > 0) & (self.inter.adjacency > 0)).any():
            raise PreconditionError("intra and inter edge sets overlap")
        s = self.split
        inter = self.inter.adjacency
        if inter[:s, :s].any() or inter[s:, s:].any():
            raise PreconditionError("interlink edges must join the two blocks")

    @property
    def graph(self) -> Graph:
        """The composite graph A + B."""
        return Graph(
            self.intra.dim,
            self.intra.adjacency + self.inter.adjacency,
            self.intra.active | self.inter.active,
            f"{self.intra.label} + {self.inter.label}",
        )


@dataclass(frozen=True)
class WalkParams:
    gamma: float = 1.0
    t: float = 1.0

    def __post_init__(self):
        if not (np.isfinite(self.gamma) and np.isfinite(self.t)):
            raise PreconditionError("gamma and t must be finite")

    @property
    def scale(self) -> float:
        """Coefficient gamma * t multiplying every eigenvalue in the phase."""
        return self.gamma * self.t


def _check_dim(dim: int, limit: int = MAX_GRAPH_DIM):
    if dim > limit:
        raise ResourceError(f"graph dimension {dim} exceeds the limit {limit}")


def single_vertex() -> Graph:
    return Graph(1, np.zeros((1, 1), dtype=np.int64), np.ones(1, dtype=bool), "K1")


def path2() -> Graph:
    return Graph(2, np.array([[0, 1], [1, 0]]), np.ones(2, dtype=bool), "P2")


def complete_graph(m: int) -> Graph:
    """K_n with n = 2**m vertices."""
    if m < 1:
        raise PreconditionError(f"complete_graph needs m >= 1, got {m}")
    n = 2**m
    _check_dim(n)
    adj = np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
    return Graph(n, adj, np.ones(n, dtype=bool), f"K{n}")


def complete_bipartite(m1: int, m2: int, label: str | None = None) -> Graph:
    """K_{n1,n2} with n1 = 2**m1 >= n2 = 2**m2, on dimension 2**(m1+1).

    Part 1 occupies indices [0, n1); part 2 starts at index n1, so its vertices
    have the leading bit set and the next m1 - m2 bits clear.
    """
    if m1 < 1 or m2 < 0:
        raise PreconditionError(f"complete_bipartite needs m1 >= 1 and m2 >= 0, got ({m1}, {m2})")
    if m1 < m2:
        raise PreconditionError(f"complete_bipartite needs m1 >= m2 (n1 >= n2), got ({m1}, {m2})")
    n1, n2 = 2**m1, 2**m2
    dim = 2 * n1
    _check_dim(dim)
    adj = np.zeros((dim, dim), dtype=np.int64)
    adj[:n1, n1 : n1 + n2] = 1
    adj[n1 : n1 + n2, :n1] = 1
    active = np.zeros(dim, dtype=bool)
    active[: n1 + n2] = True
    return Graph(dim, adj, active, label or f"K{n1},{n2}")


def star(m: int) -> Graph:
    """Star S_{2**m + 1}, i.e. K_{2**m, 1}; the center sits at index 2**m."""
    if m < 1:
        raise PreconditionError(f"star needs m >= 1, got {m}")
    return complete_bipartite(m, 0, label=f"S{2**m + 1}")


def cartesian(g1: Graph, g2: Graph, limit: int = MAX_GRAPH_DIM) -> Graph:
    """Cartesian product with adjacency A1 (x) I + I (x) A2."""
    dim = g1.dim * g2.dim
    _check_dim(dim, limit)
    adj = np.kron(g1.adjacency, np.eye(g2.dim, dtype=np.int64)) + np.kron(
        np.eye(g1.dim, dtype=np.int64), g2.adjacency
    )
    active = np.outer(g1.active, g2.active).ravel()
    # I (x) A2 would join (padded i, j) to (padded i, j'); padding stays isolated
    adj[~active] = 0
    adj[:, ~active] = 0
    return Graph(dim, adj, active, f"({g1.label} x {g2.label})")


def hypercube(n: int) -> Graph:
    """Q_n: vertices adjacent when their indices differ in exactly one bit."""
    if n < 1:
        raise PreconditionError(f"hypercube needs n >= 1, got {n}")
    dim = 2**n
    _check_dim(dim)
    idx = np.arange(dim)
    diff = idx[:, None] ^ idx[None, :]
    adj = ((diff & (diff - 1)) == 0) & (diff != 0)
    return Graph(dim, adj.astype(np.int64), np.ones(dim, dtype=bool), f"Q{n}")


def book(m: int) -> Graph:
    """Book graph B_n = S_{n+1} x P_2 with n = 2**m pages."""
    g = cartesian(star(m), path2())
    return Graph(g.dim, g.adjacency, g.active, f"B{2**m}")


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Place g1 under a new leading wire = 0 and g2 under leading wire = 1.

    Each block is padded to the larger of the two dimensions.
    """
    half = max(g1.dim, g2.dim)
    dim = 2 * half
    _check_dim(dim)
    adj = np.zeros((dim, dim), dtype=np.int64)
    active = np.zeros(dim, dtype=bool)
    adj[: g1.dim, : g1.dim] = g1.adjacency
    adj[half : half + g2.dim, half : half + g2.dim] = g2.adjacency
    active[: g1.dim] = g1.active
    active[half : half + g2.dim] = g2.active
    return Graph(dim, adj, active, f"{g1.label} | {g2.label}")


def identity_interlink(g1: Graph) -> InterdependentPair:
    """Two copies of g1 with rung edges (i, dim1 + i) for every active i."""
    intra = disjoint_union(g1, g1)
    n = g1.dim
    adj = np.zeros((2 * n, 2 * n), dtype=np.int64)
    for i in np.flatnonzero(g1.active):
        adj[i, n + i] = adj[n + i, i] = 1
    inter = Graph(2 * n, adj, intra.active, "I-links")
    return InterdependentPair(intra, inter, n)


def complete_interlink(g1: Graph, g2: Graph) -> InterdependentPair:
    """Join every active vertex of g1 to every active vertex of g2.

    Both graphs must be degree-regular with the same degree d and have
    power-of-two active counts n1 >= n2; then A1 J = d J = J A2 and the
    interlink commutes with the block-diagonal part.
    """
    d1, d2 = is_degree_regular(g1), is_degree_regular(g2)
    if d1 is None or d2 is None:
        raise PreconditionError("complete interlink needs degree-regular graphs: deg(A1)_v = deg(A2)_v = d")
    if d1 != d2:
        raise PreconditionError(
            f"complete interlink needs equal degrees deg(A1)_v = deg(A2)_v = d; got {d1} != {d2}"
        )
    n1, n2 = g1.n_active, g2.n_active
    if not (is_power_of_two(n1) and is_power_of_two(n2)):
        raise PreconditionError(f"active vertex counts must be powers of two, got {n1} and {n2}")
    if n1 < n2:
        raise PreconditionError(f"complete interlink needs n1 >= n2, got {n1} < {n2}")
    intra = disjoint_union(g1, g2)
    half = intra.dim // 2
    left = np.flatnonzero(g1.active)
    right = np.flatnonzero(g2.active) + half
    adj = np.zeros((intra.dim, intra.dim), dtype=np.int64)
    adj[np.ix_(left, right)] = 1
    adj[np.ix_(right, left)] = 1
    inter = Graph(intra.dim, adj, intra.active, f"J{n1},{n2}")
    if not commutes(intra, inter):
        raise CommutationError("complete interlink does not commute with the block-diagonal part")
    return InterdependentPair(intra, inter, half)


def _exact_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # float64 matmul is exact while every partial sum stays below 2**53
    bound = float(np.abs(a).max(initial=0)) * float(np.abs(b).max(initial=0)) * a.shape[1]
    if bound < 2.0**53:
        return (a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return a.astype(object) @ b.astype(object)


def commutes(a: Graph, b: Graph) -> bool:
    """Exact test of A B == B A."""
    if a.dim != b.dim:
        raise DimensionError(f"cannot compare dimensions {a.dim} and {b.dim}")
    x, y = a.adjacency, b.adjacency
    return bool(np.array_equal(_exact_product(x, y), _exact_product(y, x)))


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.dim:
        raise PreconditionError(f"vertex {v} out of range for dim {g.dim}")
    if not g.active[v]:
        raise PreconditionError(f"vertex {v} is padding")
    return int(g.adjacency[v, g.active].sum())


def is_degree_regular(g: Graph) -> int | None:
    """Common degree of the active vertices, or None if they differ."""
    degs = g.adjacency[g.active].sum(axis=1)
    if degs.size == 0:
        return None
    return int(degs[0]) if (degs == degs[0]).all() else None


def components(g: Graph) -> list[list[int]]:
    """Connected components of the active vertices (flood fill)."""
    seen = set()
    comps = []
    for s in np.flatnonzero(g.active).tolist():
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in np.flatnonzero(g.adjacency[v]).tolist():
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        comps.append(sorted(comp))
    return comps
