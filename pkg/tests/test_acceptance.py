"""Acceptance suite: one pass/fail line per criterion, at the stated tolerance.

Run with ``pytest tests/test_acceptance.py -v``; the summary lines are
printed even without ``-s``.
"""

import math
import time

import numpy as np
import pytest
from hypothesis import HealthCheck, given, settings

from walkforge import circuit as C
from walkforge import expr as E
from walkforge import graphs as G
from walkforge import serialize
from walkforge.errors import PreconditionError
from walkforge.graphs import WalkParams
from walkforge.oracle import eig_hermitian, product_formula_gap
from walkforge.synthesis import synth, synth_interdep_complete
from walkforge.verify import DEFAULT_GAMMAS, DEFAULT_TIMES, campaign_exprs, noncommuting_pair, t_independence

from test_circuit import circuits
from test_expr import asts


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'}  {title}: {detail}")
        assert ok, detail

    return emit


def test_c1_exactness_sweep(report):
    start = time.perf_counter()
    worst, worst_expr, failures = 0.0, "", []
    for text in campaign_exprs():
        e = E.parse_expr(text)
        decomp = eig_hermitian(E.graph_of(e))
        for gamma in DEFAULT_GAMMAS:
            for t in DEFAULT_TIMES:
                p = WalkParams(gamma, t)
                d = float(np.abs(C.unitary_of(synth(e, p)) - decomp.evolution(p)).max())
                if d > worst:
                    worst, worst_expr = d, text
                if d > 1e-9:
                    failures.append((text, t, gamma, d))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 300
    report(1, "exactness sweep", ok,
           f"{len(campaign_exprs())} expressions x {len(DEFAULT_TIMES) * len(DEFAULT_GAMMAS)} (t, gamma); "
           f"max distance {worst:.2e} ({worst_expr}) <= 1e-9; {len(failures)} failures; {elapsed:.1f}s < 300s")


def test_c2_fast_forwarding(report):
    bad = []
    for text in campaign_exprs():
        e = E.parse_expr(text)
        for gamma in DEFAULT_GAMMAS:
            if not t_independence(e, list(DEFAULT_TIMES), gamma):
                bad.append((text, gamma, "structure/linearity"))
            for t in DEFAULT_TIMES:
                a1 = synth(e, WalkParams(gamma, t)).angles()
                a2 = synth(e, WalkParams(gamma, 2 * t)).angles()
                if np.any(np.abs(a2 - 2 * a1) > 1e-12 * np.maximum(1.0, np.abs(a2))):
                    bad.append((text, gamma, t))
    hyp = all(len(synth(E.Hypercube(n), WalkParams())) == 3 * n for n in range(1, 11))
    comp = all(len(synth(E.Complete(m), WalkParams())) == 2 * m + 2 for m in range(1, 11))
    ok = not bad and hyp and comp
    report(2, "fast-forwarding", ok,
           f"structure identical and angle(2t) = 2 angle(t) for all expressions: {not bad}; "
           f"hypercube(n) = 3n: {hyp}; complete(m) = 2m+2: {comp}")


def test_c3_spectrum(report):
    lam = eig_hermitian(G.complete_bipartite(3, 2)).lam
    r = math.sqrt(32)
    expected = np.array([r] + [0.0] * 14 + [-r])
    d1 = float(np.abs(lam - expected).max())
    d2 = float(np.abs(eig_hermitian(G.path2()).lam - [1.0, -1.0]).max())
    report(3, "spectrum checks", d1 <= 1e-10 and d2 <= 1e-10,
           f"K_8,4 padded deviation {d1:.2e}, P2 deviation {d2:.2e} (tol 1e-10)")


def _unequal_degree_attempt():
    # K4 next to Q2 with every cross edge: degrees 3 and 2
    k4, q2 = G.complete_graph(2), G.hypercube(2)
    intra = G.disjoint_union(k4, q2)
    inter = np.zeros((8, 8), dtype=np.int64)
    inter[:4, 4:] = 1
    inter[4:, :4] = 1
    return intra, G.Graph(8, inter, intra.active, "J4,4")


def test_c4_commutativity_guard(report):
    k4_rungs = G.identity_interlink(G.complete_graph(2))
    q4_k44 = G.complete_interlink(G.hypercube(4), G.complete_bipartite(2, 2))
    pos = G.commutes(k4_rungs.intra, k4_rungs.inter) and G.commutes(q4_k44.intra, q4_k44.inter)
    intra, inter = _unequal_degree_attempt()
    neg = not G.commutes(intra, inter)
    try:
        synth_interdep_complete(E.Complete(2), E.Hypercube(2), WalkParams())
        refused, message = False, "accepted"
    except PreconditionError as exc:
        message = str(exc)
        refused = "equal degrees" in message
    report(4, "commutativity guard", pos and neg and refused,
           f"K4 rungs and Q4/K4,4 pairs commute: {pos}; K4/Q2 pair commutes: {not neg}; refusal: {message!r}")


def test_c5_product_formula_contrast(report):
    p = WalkParams(1.0, 2.5)
    k4_rungs = G.identity_interlink(G.complete_graph(2))
    q4_k44 = G.complete_interlink(G.hypercube(4), G.complete_bipartite(2, 2))
    g1 = product_formula_gap(k4_rungs.intra, k4_rungs.inter, p)
    g3 = product_formula_gap(q4_k44.intra, q4_k44.inter, p)
    a, b = noncommuting_pair()
    gn = product_formula_gap(a, b, WalkParams(1.0, 1.0))
    report(5, "product-formula contrast", g1 <= 1e-10 and g3 <= 1e-10 and gn > 1e-3,
           f"gap K4 rungs {g1:.2e}, Q4/K4,4 {g3:.2e} (<= 1e-10 at t=2.5); non-commuting pair {gn:.4f} (> 1e-3 at t=1)")


def test_c6_two_particle_walk(report):
    p = WalkParams(1.0, 1.0)
    e = E.Star(2)
    u = C.unitary_of(synth(E.Cartesian(e, e), p))
    ue = C.unitary_of(synth(e, p))
    diff = u - np.kron(ue, ue)
    full = float(np.abs(diff).max())
    act = np.flatnonzero(E.graph_of(E.Cartesian(e, e)).active)
    on_active = float(np.abs(diff[np.ix_(act, act)]).max())
    # The whole-matrix comparison is kept literal; the ledger records why it
    # cannot hold when padded product vertices are isolated.
    report(6, "two-particle walk", full <= 1e-12,
           f"max |U - U_e (x) U_e| = {full:.2e} over the full padded space (tol 1e-12); "
           f"{on_active:.2e} on the {act.size} active vertices")


def test_c7_padding_identity(report):
    p = WalkParams(1.0, 1.0)
    worst = {}
    for text in ("bipartite(3, 2)", "book(3)"):
        e = E.parse_expr(text)
        g = E.graph_of(e)
        pad = np.flatnonzero(~g.active)
        u = C.unitary_of(synth(e, p))
        worst[text] = (pad.size, float(np.abs(u[:, pad] - np.eye(g.dim)[:, pad]).max()))
    ok = all(d <= 1e-10 for _, d in worst.values())
    report(7, "padding identity", ok,
           "; ".join(f"{k}: {n} padded states, max deviation {d:.2e}" for k, (n, d) in worst.items()))


def test_c8_round_trips(report):
    counts = {"expr": 0, "json": 0}

    @settings(max_examples=1000, suppress_health_check=list(HealthCheck), database=None)
    @given(asts)
    def expr_rt(ast):
        counts["expr"] += 1
        assert E.parse_expr(E.to_text(ast), validate=False) == ast

    @settings(max_examples=1000, suppress_health_check=list(HealthCheck), database=None)
    @given(circuits(max_wires=6))
    def json_rt(c):
        counts["json"] += 1
        assert serialize.circuit_from_json(serialize.circuit_to_json(c)) == c

    expr_rt()
    json_rt()
    ok = counts["expr"] >= 1000 and counts["json"] >= 1000
    report(8, "round-trips", ok, f"parser {counts['expr']} cases, circuit JSON {counts['json']} cases, all equal")
