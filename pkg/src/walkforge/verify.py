"""Conformance campaigns: circuit against oracle over grids of t and gamma."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from . import circuit as C
from . import expr as E
from .config import ORACLE_MAX_DIM, TOL, wire_cap
from .errors import PreconditionError, ResourceError, WalkForgeError
from .graphs import Graph, WalkParams, commutes
from .oracle import eig_hermitian, product_formula_gap, spectral_distance, unitary_distance
from .synthesis import synth

CSV_HEADER = ["expr", "dim", "t", "gamma", "max_dist", "spec_dist", "gates", "cost2q", "pass"]

DEFAULT_TIMES = (0.0, 0.5, 1.0, math.pi, 7.3, 10 * math.pi)
DEFAULT_GAMMAS = (1.0, 0.37)


def campaign_exprs() -> list[str]:
    """Every family at desk scale plus the composite configurations."""
    out = ["path2"]
    out += [f"complete({m})" for m in range(1, 6)]
    out += [f"bipartite({a}, {b})" for a in range(1, 5) for b in range(0, a + 1)]
    out += [f"star({m})" for m in range(1, 5)]
    out += [f"hypercube({n})" for n in range(1, 11)]
    out += [f"book({m})" for m in range(1, 4)]
    out += [
        "interdep_id(complete(2))",
        "interdep_complete(hypercube(4), bipartite(2, 2))",
        "cartesian(star(3), path2)",
    ]
    return out


def noncommuting_pair() -> tuple[Graph, Graph]:
    """Negative control on four vertices: A = {01, 23}, B = {12}; [A, B] != 0."""
    a = np.zeros((4, 4), dtype=np.int64)
    a[0, 1] = a[1, 0] = a[2, 3] = a[3, 2] = 1
    b = np.zeros((4, 4), dtype=np.int64)
    b[1, 2] = b[2, 1] = 1
    on = np.ones(4, dtype=bool)
    return Graph(4, a, on, "P2 on wire 1"), Graph(4, b, on, "edge 1-2")


@dataclass(frozen=True)
class ReportRow:
    t: float
    gamma: float
    max_dist: float
    spec_dist: float
    gates: int
    cost2q: int
    passed: bool
    reason: str = ""


@dataclass(frozen=True)
class VerificationReport:
    expr: str
    dim: int
    rows: tuple[ReportRow, ...]
    structural_t_independent: bool
    tol: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def max_dist(self) -> float:
        return max((r.max_dist for r in self.rows), default=0.0)

    def csv_rows(self):
        for r in self.rows:
            yield [self.expr, self.dim, repr(r.t), repr(r.gamma), repr(r.max_dist), repr(r.spec_dist),
                   r.gates, r.cost2q, str(r.passed).lower()]


def reports_to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in reports:
        w.writerows(rep.csv_rows())
    return buf.getvalue()


def _as_expr(expr):
    return E.parse_expr(expr) if isinstance(expr, str) else expr


def verify(expr, t_list=DEFAULT_TIMES, gamma_list=DEFAULT_GAMMAS, tol: float = TOL.verify,
           synthesizer=synth) -> VerificationReport:
    """Compare the synthesized unitary with the oracle on every (t, gamma) pair.

    Synthesis failures become failed rows carrying the error message.
    """
    expr = _as_expr(expr)
    text = E.to_text(expr)
    w = E.wires_of(expr)
    dim = 2**w
    if dim > ORACLE_MAX_DIM or w > wire_cap():
        raise ResourceError(f"{text} has dimension {dim}, beyond the verification cap")
    decomp = eig_hermitian(E.graph_of(expr))
    rows = []
    for gamma in gamma_list:
        for t in t_list:
            params = WalkParams(gamma, t)
            try:
                circ = synthesizer(expr, params)
                u = C.unitary_of(circ)
            except WalkForgeError as exc:
                rows.append(ReportRow(t, gamma, math.nan, math.nan, 0, 0, False, str(exc)))
                continue
            exact = decomp.evolution(params)
            d = unitary_distance(u, exact)
            rows.append(ReportRow(t, gamma, d, spectral_distance(u, exact), len(circ),
                                  C.two_qubit_cost(circ), d <= tol))
    try:
        structural = t_independence(expr, list(t_list) if len(t_list) > 1 else [0.5, 1.0], synthesizer=synthesizer)
    except WalkForgeError:
        structural = False
    return VerificationReport(text, dim, tuple(rows), structural, tol)


def t_independence(expr, t_list, gamma: float = 1.0, synthesizer=synth, tol: float = 1e-12) -> bool:
    """True iff only angle values change with t, each proportional to t."""
    if len(t_list) < 2:
        raise PreconditionError("t_independence needs at least two times")
    expr = _as_expr(expr)
    ref = synthesizer(expr, WalkParams(gamma, 1.0))
    slope = ref.angles()
    for t in t_list:
        c = synthesizer(expr, WalkParams(gamma, t))
        if c.wires != ref.wires or c.structure() != ref.structure():
            return False
        expected = t * slope
        if np.any(np.abs(c.angles() - expected) > tol * np.maximum(1.0, np.abs(expected))):
            return False
    return True


FAMILIES = {
    "path2": lambda n: E.Path2(),
    "hypercube": E.Hypercube,
    "complete": E.Complete,
    "star": E.Star,
    "book": E.Book,
    "bipartite": lambda m: E.Bipartite(m, m - 1),
}


@dataclass(frozen=True)
class ScalingRow:
    n: int
    wires: int
    gate_count: int
    two_qubit_cost: int
    max_dist: float | None


@dataclass(frozen=True)
class ScalingTable:
    family: str
    rows: tuple[ScalingRow, ...]
    exponent: float

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "n", "wires", "gates", "cost2q", "max_dist"])
        for r in self.rows:
            w.writerow([self.family, r.n, r.wires, r.gate_count, r.two_qubit_cost,
                        "" if r.max_dist is None else repr(r.max_dist)])
        return buf.getvalue()


def fit_exponent(wires, costs) -> float:
    """Least-squares slope of log(cost) against log(wires)."""
    x, y = np.log(np.asarray(wires, float)), np.log(np.asarray(costs, float))
    if len(set(x.tolist())) < 2:
        return math.nan
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def scaling(family: str, sizes, params: WalkParams = WalkParams(), verify_max_dim: int = 1024) -> ScalingTable:
    """Gate counts against size; oracle distance filled in for small sizes."""
    if family not in FAMILIES:
        raise PreconditionError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    rows = []
    for n in sizes:
        expr = FAMILIES[family](n)
        circ = synth(expr, params)
        dist = None
        if circ.dim <= verify_max_dim and circ.wires <= wire_cap():
            exact = eig_hermitian(E.graph_of(expr)).evolution(params)
            dist = unitary_distance(C.unitary_of(circ), exact)
        rows.append(ScalingRow(n, circ.wires, len(circ), C.two_qubit_cost(circ), dist))
    exponent = fit_exponent([r.wires for r in rows], [max(r.two_qubit_cost, 1) for r in rows])
    return ScalingTable(family, tuple(rows), exponent)


@dataclass(frozen=True)
class GapRow:
    t: float
    gap: float
    commutes: bool


def commuting_demo(a: Graph, b: Graph, t_list, gamma: float = 1.0) -> list[GapRow]:
    """Distance between exp(-it(A+B)) and exp(-itA) exp(-itB) for each t."""
    flag = commutes(a, b)
    return [GapRow(t, product_formula_gap(a, b, WalkParams(gamma, t)), flag) for t in t_list]
