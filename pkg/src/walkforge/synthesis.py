"""Compile walk expressions into circuits implementing exp(-i t gamma A).

Each family is diagonalized by a fixed, t-independent basis change Q with
A = Q^dagger diag(lam) Q, so the walk is ``Q``, then a diagonal of phases
exp(-i t gamma lam), then ``Q^dagger``. Only the phase angles depend on t, and
they do so linearly: every angle is stored as -gamma * t * lam, unreduced.

Composites reuse the factor circuits: Cartesian products run the factors side
by side, commuting sums run them one after the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import circuit as C
from . import expr as E
from .config import TOL, wire_cap
from .errors import CommutationError, DimensionError, EmbeddingError, PreconditionError
from .graphs import Graph, WalkParams, commutes, log2_exact, path2
from .oracle import expm_hermitian, unitary_distance

Pattern = tuple  # per-wire entries 0, 1 or None (free)


def _overlap(p: Pattern, q: Pattern) -> bool:
    return all(a is None or b is None or a == b for a, b in zip(p, q))


@dataclass(frozen=True)
class DiagonalPhaseSpec:
    """Sparse diagonal: basis states matching ``pattern`` carry ``eigenvalue``.

    Unlisted states have eigenvalue 0. Patterns must be pairwise disjoint.
    """

    wires: int
    terms: tuple[tuple[Pattern, float], ...] = ()

    def __post_init__(self):
        terms = tuple((tuple(None if b is None else int(b) for b in p), float(lam)) for p, lam in self.terms)
        object.__setattr__(self, "terms", terms)
        for p, _ in terms:
            if len(p) != self.wires or any(b not in (0, 1, None) for b in p):
                raise PreconditionError(f"bad pattern {p} for {self.wires} wires")
        for i, (p, _) in enumerate(terms):
            for q, _ in terms[i + 1 :]:
                if _overlap(p, q):
                    raise PreconditionError(f"patterns {p} and {q} overlap")

    def diagonal(self) -> np.ndarray:
        """Dense eigenvalue vector, for checks."""
        out = np.zeros(2**self.wires)
        idx = np.arange(2**self.wires)
        for p, lam in self.terms:
            hit = np.ones_like(idx, dtype=bool)
            for w, b in enumerate(p):
                if b is not None:
                    hit &= ((idx >> (self.wires - 1 - w)) & 1) == b
            out[hit] = lam
        return out


def _partner(p: Pattern, q: Pattern):
    """Wire where p and q hold opposite fixed bits, if that is their only difference."""
    diff = [w for w, (a, b) in enumerate(zip(p, q)) if a != b]
    if len(diff) == 1 and p[diff[0]] is not None and q[diff[0]] is not None:
        return diff[0]
    return None


def diagonal_phase_circuit(spec: DiagonalPhaseSpec, params: WalkParams) -> C.Circuit:
    """One phase gate per pattern; two patterns differing in a single wire share a Phase2."""
    s = params.scale
    gates = []
    used = set()
    terms = spec.terms
    for i, (p, lam) in enumerate(terms):
        if i in used:
            continue
        used.add(i)
        for j in range(i + 1, len(terms)):
            if j in used:
                continue
            w = _partner(p, terms[j][0])
            if w is not None:
                used.add(j)
                lam0, lam1 = (lam, terms[j][1]) if p[w] == 0 else (terms[j][1], lam)
                controls = tuple((k, b) for k, b in enumerate(p) if b is not None and k != w)
                gates.append(C.phase2(w, -s * lam0, -s * lam1, controls))
                break
        else:
            fixed = [(k, b) for k, b in enumerate(p) if b is not None]
            if not fixed:
                gates.append(C.global_phase(-s * lam))
                continue
            (w, bit), rest = fixed[0], tuple(fixed[1:])
            angles = (-s * lam, 0.0) if bit == 0 else (0.0, -s * lam)
            gates.append(C.phase2(w, *angles, rest))
    return C.Circuit(spec.wires, tuple(gates))


def padding_patterns(active: np.ndarray) -> list[Pattern]:
    """Cover the inactive indices of a mask with disjoint wire patterns."""
    active = np.asarray(active, dtype=bool)
    w = log2_exact(active.size)
    out = []

    def split(prefix, lo, hi):
        block = active[lo:hi]
        if block.all():
            return
        if not block.any():
            out.append(prefix + (None,) * (w - len(prefix)))
            return
        mid = (lo + hi) // 2
        split(prefix + (0,), lo, mid)
        split(prefix + (1,), mid, hi)

    split((), 0, active.size)
    return out


def synth_path2(params: WalkParams) -> C.Circuit:
    s = params.scale
    return C.Circuit(1, (C.hadamard(0), C.phase2(0, -s, s), C.hadamard(0)))


def synth_complete(m: int, params: WalkParams) -> C.Circuit:
    """K_{2^m}: Hadamards conjugate diag(n-1, -1, ..., -1) = -I + n |0..0><0..0|."""
    if m < 1:
        raise PreconditionError(f"complete graph needs m >= 1, got {m}")
    s, n = params.scale, 2**m
    hs = tuple(C.hadamard(w) for w in range(m))
    zeros = tuple((w, C.ON_ZERO) for w in range(1, m))
    middle = (C.global_phase(s), C.phase2(0, -s * n, 0.0, zeros))
    return C.Circuit(m, hs + middle + hs)


def bipartite_diagonalizer(m1: int, m2: int) -> C.Circuit:
    """Basis change Q' for the padded K_{2^m1, 2^m2}, in time order.

    First the uniform superposition over each part is folded onto |0,0..0>
    and |1,0..0> (Hadamards on the position wires, selected by the leading
    wire), then a Hadamard on the leading wire, fired only when every position
    wire is 0, splits them into the +sqrt(n1 n2) and -sqrt(n1 n2) eigenvectors.
    """
    if m1 < 1 or m2 < 0 or m1 < m2:
        raise PreconditionError(f"bipartite needs m1 >= max(1, m2) and m2 >= 0, got ({m1}, {m2})")
    gap = tuple((k, C.ON_ZERO) for k in range(1, m1 - m2 + 1))
    fold = [C.hadamard(w, ((0, C.ON_ZERO),)) for w in range(1, m1 + 1)]
    fold += [C.hadamard(w, ((0, C.ON_ONE),) + gap) for w in range(m1 - m2 + 1, m1 + 1)]
    split = C.hadamard(0, tuple((k, C.ON_ZERO) for k in range(1, m1 + 1)))
    return C.Circuit(m1 + 1, (*fold, split))


def bipartite_spectrum(m1: int, m2: int) -> DiagonalPhaseSpec:
    r = math.sqrt(2.0 ** (m1 + m2))
    zeros = (0,) * m1
    return DiagonalPhaseSpec(m1 + 1, (((0, *zeros), r), ((1, *zeros), -r)))


def synth_complete_bipartite(m1: int, m2: int, params: WalkParams) -> C.Circuit:
    q = bipartite_diagonalizer(m1, m2)
    return C.seq(q, diagonal_phase_circuit(bipartite_spectrum(m1, m2), params), C.adjoint(q))


def synth_star(m: int, params: WalkParams) -> C.Circuit:
    if m < 1:
        raise PreconditionError(f"star needs m >= 1, got {m}")
    return synth_complete_bipartite(m, 0, params)


def synth_hypercube(n: int, params: WalkParams) -> C.Circuit:
    if n < 1:
        raise PreconditionError(f"hypercube needs n >= 1, got {n}")
    out = synth_path2(params)
    for _ in range(n - 1):
        out = C.par(out, synth_path2(params))
    return out


def product_circuit(c1: C.Circuit, g1: Graph, c2: C.Circuit, g2: Graph) -> C.Circuit:
    """Walk on the Cartesian product from walks on the factors.

    The factors run side by side. Where one factor index is padding the
    product vertex is padding too, so the other factor's walk is undone there
    by its adjoint, controlled on the padding patterns.
    """
    w = c1.wires + c2.wires
    parts = [C.par(c1, c2)]
    for p in padding_patterns(g1.active):
        parts.append(C.controlled_on(C.embed(C.adjoint(c2), w, c1.wires), p + (None,) * c2.wires))
    for p in padding_patterns(g2.active):
        parts.append(C.controlled_on(C.embed(C.adjoint(c1), w, 0), (None,) * c1.wires + p))
    return C.seq(*parts)


def synth_cartesian(e1: E.WalkExpr, e2: E.WalkExpr, params: WalkParams) -> C.Circuit:
    return product_circuit(synth(e1, params), E.graph_of(e1), synth(e2, params), E.graph_of(e2))


def synth_book(m: int, params: WalkParams) -> C.Circuit:
    return synth_cartesian(E.Star(m), E.Path2(), params)


def synth_interdep_identity(e1: E.WalkExpr, params: WalkParams) -> C.Circuit:
    """Two copies joined by rungs: the walk on P2 x A1, P2 on the new top wire."""
    return product_circuit(synth_path2(params), path2(), synth(e1, params), E.graph_of(e1))


def _padding_is_identity(c: C.Circuit, g: Graph) -> bool:
    if c.wires > min(10, wire_cap()):
        return True
    u = C.unitary_of(c)
    pad = np.flatnonzero(~g.active)
    eye = np.eye(c.dim)
    return unitary_distance(u[:, pad], eye[:, pad]) <= TOL.synthesis


def synth_interdep_complete(
    e1: E.WalkExpr, e2: E.WalkExpr, params: WalkParams, intra_first: bool = True
) -> C.Circuit:
    """Two equal-degree regular graphs joined by every possible interlink edge.

    Block-diagonal part: each factor walk controlled by the leading wire.
    Interlink part: the padded K_{n1,n2} walk on the whole index space. The
    two commute, so their order is immaterial.
    """
    expr = E.InterdepComplete(e1, e2)
    m1, m2 = E.interlink_layout(expr)
    pair = E.pair_of(expr)
    if not commutes(pair.intra, pair.inter):
        raise CommutationError("block-diagonal and interlink parts do not commute")
    w = m1 + 1
    c1, c2 = synth(e1, params), synth(e2, params)
    if not _padding_is_identity(c2, E.graph_of(e2)):
        raise EmbeddingError(f"walk on {E.to_text(e2)} does not act as identity on its padding")
    lower = C.controlled(C.embed(c1, w, 1), 0, C.ON_ZERO)
    upper = C.embed(c2, w, w - c2.wires)
    upper = C.controlled_on(upper, (None,) + (0,) * (w - 1 - c2.wires) + (None,) * c2.wires)
    upper = C.controlled(upper, 0, C.ON_ONE)
    intra = C.seq(lower, upper)
    inter = synth_complete_bipartite(m1, m2, params)
    return C.seq(intra, inter) if intra_first else C.seq(inter, intra)


def _check_against_oracle(graph: Graph, circ: C.Circuit, params: WalkParams, name: str):
    if circ.wires != graph.wires:
        raise DimensionError(f"{name}: circuit has {circ.wires} wires, graph needs {graph.wires}")
    dist = unitary_distance(C.unitary_of(circ), expm_hermitian(graph, params))
    if dist > TOL.synthesis:
        raise PreconditionError(f"{name}: circuit differs from exp(-i t gamma A) by {dist:.3e}")


def synth_commuting_sum(a, b, params: WalkParams) -> C.Circuit:
    """Walk on A + B from walks on A and B, valid only when [A, B] = 0.

    ``a`` and ``b`` are ``(graph, circuit)`` pairs; each circuit is checked
    against its own graph before the two are chained.
    """
    (ga, ca), (gb, cb) = a, b
    if ga.dim != gb.dim:
        raise DimensionError(f"dimensions {ga.dim} and {gb.dim} differ")
    if not commutes(ga, gb):
        raise CommutationError(
            "exp(-it(A+B)) = exp(-itA) exp(-itB) holds only provided [A, B] = 0; this pair does not commute"
        )
    _check_against_oracle(ga, ca, params, "first operand")
    _check_against_oracle(gb, cb, params, "second operand")
    return C.seq(ca, cb)


def synth_symmetric_interlink(q0: C.Circuit, zeta0: DiagonalPhaseSpec, params: WalkParams) -> C.Circuit:
    """Walk on the interlink [[0, B0], [B0, 0]] for symmetric B0 = Q0^dagger zeta0 Q0.

    The interlink is sigma_x (x) B0, diagonalized by H (x) Q0 with eigenvalues
    sigma_z (x) zeta0: each zeta0 phase is negated when the top wire is 1.
    """
    if q0.wires != zeta0.wires:
        raise DimensionError(f"Q0 acts on {q0.wires} wires but zeta0 on {zeta0.wires}")
    basis = C.par(C.Circuit(1, (C.hadamard(0),)), q0)
    terms = []
    for p, lam in zeta0.terms:
        terms.append(((0, *p), lam))
        terms.append(((1, *p), -lam))
    diag = diagonal_phase_circuit(DiagonalPhaseSpec(q0.wires + 1, tuple(terms)), params)
    return C.seq(basis, diag, C.adjoint(basis))


def synth(expr: E.WalkExpr, params: WalkParams) -> C.Circuit:
    """Dispatch on the expression node."""
    if isinstance(expr, E.Path2):
        return synth_path2(params)
    if isinstance(expr, E.Complete):
        return synth_complete(expr.m, params)
    if isinstance(expr, E.Bipartite):
        return synth_complete_bipartite(expr.m1, expr.m2, params)
    if isinstance(expr, E.Star):
        return synth_star(expr.m, params)
    if isinstance(expr, E.Hypercube):
        return synth_hypercube(expr.n, params)
    if isinstance(expr, E.Book):
        return synth_book(expr.m, params)
    if isinstance(expr, E.Cartesian):
        return synth_cartesian(expr.left, expr.right, params)
    if isinstance(expr, E.InterdepIdentity):
        return synth_interdep_identity(expr.inner, params)
    if isinstance(expr, E.InterdepComplete):
        return synth_interdep_complete(expr.left, expr.right, params)
    if isinstance(expr, E.CommutingSum):
        E.graph_of(expr)
        return C.seq(synth(expr.left, params), synth(expr.right, params))
    raise TypeError(f"not a walk expression: {expr!r}")
