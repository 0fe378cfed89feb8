"""Exact, t-independent quantum circuits for continuous-time quantum walks.

The walk on a graph with adjacency A is U(t) = exp(-i t gamma A). For the
families handled here (complete, complete bipartite, star, hypercube, book)
and their Cartesian products and commuting interdependent composites, U(t) is
compiled into a circuit whose gate list is fixed and whose phase angles are
linear in t, then checked against a dense eigendecomposition oracle.
"""

from .circuit import Circuit, Gate, adjoint, controlled, gate_count, par, seq, two_qubit_cost, unitary_of
from .expr import graph_of, parse_expr, to_text
from .graphs import (
    Graph,
    InterdependentPair,
    WalkParams,
    book,
    cartesian,
    commutes,
    complete_bipartite,
    complete_graph,
    complete_interlink,
    disjoint_union,
    hypercube,
    identity_interlink,
    path2,
    star,
)
from .oracle import eig_hermitian, evolve_state, expm_hermitian, product_formula_gap, unitary_distance
from .synthesis import synth
from .verify import VerificationReport, commuting_demo, scaling

__version__ = "0.1.0"
