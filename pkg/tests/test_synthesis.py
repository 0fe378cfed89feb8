import itertools
import math
from functools import reduce

import numpy as np
import pytest

from conftest import pade_walk
from walkforge import circuit as C
from walkforge import expr as E
from walkforge import graphs as G
from walkforge import synthesis as S
from walkforge.errors import CommutationError, DimensionError, PreconditionError
from walkforge.graphs import WalkParams

P = WalkParams(0.37, 1.7)


def dist_to_pade(circ, graph, params=P):
    return np.abs(C.unitary_of(circ) - pade_walk(graph.adjacency, params.t, params.gamma)).max()


@pytest.mark.parametrize("text", [
    "path2", "complete(1)", "complete(3)", "bipartite(1, 0)", "bipartite(1, 1)", "bipartite(3, 2)",
    "bipartite(4, 1)", "star(3)", "hypercube(5)", "book(2)", "cartesian(star(2), complete(2))",
    "interdep_id(complete(2))", "interdep_id(star(2))", "interdep_complete(hypercube(4), bipartite(2, 2))",
    "interdep_complete(complete(2), complete(2))", "commuting_sum(hypercube(2), complete(2))",
])
def test_matches_pade(text):
    e = E.parse_expr(text)
    assert dist_to_pade(S.synth(e, P), E.graph_of(e)) <= 1e-10


def test_path2_closed_form():
    c = S.synth_path2(WalkParams(1.0, 0.4))
    u = np.array([[math.cos(0.4), -1j * math.sin(0.4)], [-1j * math.sin(0.4), math.cos(0.4)]])
    assert np.abs(C.unitary_of(c) - u).max() <= 1e-15


def test_complete_gate_count_and_k2():
    for m in range(1, 8):
        assert len(S.synth_complete(m, P)) == 2 * m + 2
    a = C.unitary_of(S.synth_complete(1, P))
    assert np.abs(a - C.unitary_of(S.synth_path2(P))).max() <= 1e-14


def test_hypercube_is_nested_cartesian():
    e = E.Cartesian(E.Cartesian(E.Path2(), E.Path2()), E.Cartesian(E.Path2(), E.Path2()))
    assert len(S.synth_hypercube(4, P)) == 12
    assert np.abs(C.unitary_of(S.synth(e, P)) - C.unitary_of(S.synth_hypercube(4, P))).max() <= 1e-14


def test_book_is_star_times_path2():
    a = C.unitary_of(S.synth_book(3, P))
    b = C.unitary_of(S.synth(E.parse_expr("cartesian(star(3), path2)"), P))
    assert np.abs(a - b).max() <= 1e-14


def test_time_zero_is_identity():
    for text in ("hypercube(3)", "book(2)", "interdep_complete(hypercube(4), bipartite(2, 2))"):
        c = S.synth(E.parse_expr(text), WalkParams(1.0, 0.0))
        assert np.abs(C.unitary_of(c) - np.eye(c.dim)).max() <= 1e-14


# bipartite diagonalizer against the printed two-factor operator

def kron(*ms):
    return reduce(np.kron, ms, np.eye(1))


def printed_diagonalizer(m1, m2):
    h = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
    p0, p1, i2 = np.diag([1.0, 0.0]), np.diag([0.0, 1.0]), np.eye(2)
    n = 2 ** (m1 + 1)
    f1 = np.eye(n) + kron(h - i2, *[p0] * m1)
    f2 = np.eye(n) + kron(p0, kron(*[h] * m1) - np.eye(2**m1))
    f2 = f2 + kron(p1, *[p0] * (m1 - m2), kron(*[h] * m2) - np.eye(2**m2))
    return f1 @ f2


@pytest.mark.parametrize("m1,m2", [(1, 0), (1, 1), (2, 1), (3, 2), (3, 3), (4, 1)])
def test_printed_diagonalizer(m1, m2):
    q = printed_diagonalizer(m1, m2)
    n = q.shape[0]
    assert np.abs(q @ q.T - np.eye(n)).max() <= 1e-12
    assert np.abs(C.unitary_of(S.bipartite_diagonalizer(m1, m2)) - q).max() <= 1e-14
    b = G.complete_bipartite(m1, m2).adjacency
    zeta = S.bipartite_spectrum(m1, m2).diagonal()
    assert np.abs(q @ b @ q.T - np.diag(zeta)).max() <= 1e-12
    r = math.sqrt(2 ** (m1 + m2))
    assert zeta[0] == r and zeta[2**m1] == -r and np.count_nonzero(zeta) == 2


def test_bipartite_rejects_bad_sizes():
    for args in [(0, 0), (1, 2), (2, -1)]:
        with pytest.raises(PreconditionError):
            S.bipartite_diagonalizer(*args)


def test_k22_is_permuted_cycle():
    # K_{2,2} = C4 = P2 x P2 after relabelling the vertices
    u = C.unitary_of(S.synth_complete_bipartite(1, 1, P))
    v = C.unitary_of(S.synth_cartesian(E.Path2(), E.Path2(), P))
    a = G.complete_bipartite(1, 1).adjacency
    b = G.hypercube(2).adjacency
    for perm in itertools.permutations(range(4)):
        pm = np.eye(4)[list(perm)]
        if np.array_equal(pm @ a @ pm.T, b):
            break
    assert np.abs(pm @ u @ pm.T - v).max() <= 1e-12


def test_padding_states_untouched():
    for text in ("bipartite(3, 2)", "book(3)", "star(2)", "cartesian(star(2), star(1))"):
        e = E.parse_expr(text)
        g = E.graph_of(e)
        u = C.unitary_of(S.synth(e, P))
        pad = np.flatnonzero(~g.active)
        assert pad.size
        assert np.abs(u[:, pad] - np.eye(g.dim)[:, pad]).max() <= 1e-12


def test_padding_patterns_cover_exactly():
    rng = np.random.default_rng(5)
    for _ in range(50):
        mask = rng.random(16) < 0.6
        spec = S.DiagonalPhaseSpec(4, tuple((p, 1.0) for p in S.padding_patterns(mask)))
        assert np.array_equal(spec.diagonal() == 1.0, ~mask)


def test_diagonal_phase_circuit():
    spec = S.DiagonalPhaseSpec(3, (((0, 0, 0), 2.0), ((1, 0, 0), -2.0), ((0, 1, None), 0.5)))
    c = S.diagonal_phase_circuit(spec, WalkParams(1.0, 1.0))
    assert len(c) == 2  # the first two patterns share one Phase2
    assert np.allclose(np.diagonal(C.unitary_of(c)), np.exp(-1j * spec.diagonal()))
    full = S.DiagonalPhaseSpec(2, (((None, None), 0.3),))
    c = S.diagonal_phase_circuit(full, WalkParams(1.0, 1.0))
    assert c.gates[0].kind == C.GPHASE
    with pytest.raises(PreconditionError):
        S.DiagonalPhaseSpec(2, (((0, None), 1.0), ((0, 1), 2.0)))


def test_interdep_order_swap():
    e1, e2 = E.Hypercube(4), E.Bipartite(2, 2)
    a = C.unitary_of(S.synth_interdep_complete(e1, e2, P, intra_first=True))
    b = C.unitary_of(S.synth_interdep_complete(e1, e2, P, intra_first=False))
    assert np.abs(a - b).max() <= 1e-12


def test_interdep_identity_count():
    c = S.synth_interdep_identity(E.Complete(2), P)
    assert len(c) == 3 + len(S.synth_complete(2, P))


def test_interdep_complete_rejects_unequal_degrees():
    with pytest.raises(PreconditionError, match="equal degrees"):
        S.synth(E.InterdepComplete(E.Complete(2), E.Hypercube(2)), P)


def test_commuting_sum_generic_path_matches_identity_interlink():
    pair = G.identity_interlink(G.complete_graph(2))
    ca = C.embed(S.synth_complete(2, P), 3, 1)
    cb = C.embed(S.synth_path2(P), 3, 0)
    c = S.synth_commuting_sum((pair.intra, ca), (pair.inter, cb), P)
    ref = C.unitary_of(S.synth_interdep_identity(E.Complete(2), P))
    assert np.abs(C.unitary_of(c) - ref).max() <= 1e-12


def test_commuting_sum_self():
    g = G.hypercube(2)
    c = S.synth_hypercube(2, P)
    out = S.synth_commuting_sum((g, c), (g, c), P)
    assert np.abs(C.unitary_of(out) - pade_walk(2 * g.adjacency, P.t, P.gamma)).max() <= 1e-10


def test_commuting_sum_refuses():
    from walkforge.verify import noncommuting_pair
    a, b = noncommuting_pair()
    with pytest.raises(CommutationError, match=r"provided \[A, B\] = 0"):
        S.synth_commuting_sum((a, C.empty(2)), (b, C.empty(2)), P)
    with pytest.raises(DimensionError):
        S.synth_commuting_sum((G.path2(), C.empty(1)), (G.hypercube(2), C.empty(2)), P)


def test_commuting_sum_checks_operands():
    g = G.hypercube(2)
    with pytest.raises(PreconditionError):
        S.synth_commuting_sum((g, C.empty(2)), (g, S.synth_hypercube(2, P)), P)


def test_symmetric_interlink_p2():
    # B0 = P2, diagonalized by a Hadamard with eigenvalues (1, -1)
    q0 = C.Circuit(1, (C.hadamard(0),))
    zeta0 = S.DiagonalPhaseSpec(1, (((0,), 1.0), ((1,), -1.0)))
    c = S.synth_symmetric_interlink(q0, zeta0, P)
    b = np.kron(np.array([[0, 1], [1, 0]]), np.array([[0, 1], [1, 0]]))
    assert np.abs(C.unitary_of(c) - pade_walk(b, P.t, P.gamma)).max() <= 1e-10


def test_symmetric_interlink_identity_block():
    zeta0 = S.DiagonalPhaseSpec(2, (((None, None), 1.0),))
    c = S.synth_symmetric_interlink(C.empty(2), zeta0, P)
    inter = G.identity_interlink(G.complete_graph(2)).inter
    assert np.abs(C.unitary_of(c) - pade_walk(inter.adjacency, P.t, P.gamma)).max() <= 1e-10
    with pytest.raises(DimensionError):
        S.synth_symmetric_interlink(C.empty(1), zeta0, P)


@pytest.mark.parametrize("text", ["hypercube(3)", "bipartite(3, 1)", "book(2)", "interdep_id(complete(2))",
                                  "interdep_complete(hypercube(4), bipartite(2, 2))"])
def test_angles_linear_in_t(text):
    e = E.parse_expr(text)
    one = S.synth(e, WalkParams(1.0, 1.0))
    for t in (0.0, 0.5, math.pi, 10 * math.pi):
        c = S.synth(e, WalkParams(1.0, t))
        assert c.structure() == one.structure()
        assert np.abs(c.angles() - t * one.angles()).max() <= 1e-12 * max(1.0, t)


def test_two_particle_walk_on_active_vertices():
    e = E.Star(2)
    u = C.unitary_of(S.synth(E.Cartesian(e, e), P))
    ue = C.unitary_of(S.synth(e, P))
    act = np.flatnonzero(E.graph_of(E.Cartesian(e, e)).active)
    assert np.abs((u - np.kron(ue, ue))[np.ix_(act, act)]).max() <= 1e-12
    # fully active factors need no padding correction at all
    h = C.unitary_of(S.synth(E.Cartesian(E.Complete(2), E.Complete(2)), P))
    k = C.unitary_of(S.synth_complete(2, P))
    assert np.abs(h - np.kron(k, k)).max() <= 1e-12
