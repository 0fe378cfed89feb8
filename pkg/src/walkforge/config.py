"""Central tolerance and size-cap configuration."""

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    symmetry: float = 1e-12
    orthonormality: float = 1e-12
    reconstruction: float = 1e-10
    unitarity: float = 1e-11
    # relative to max(1, ||A||_F); see jacobi_eigh
    jacobi_offdiag: float = 1e-13
    state_norm: float = 1e-12
    synthesis: float = 1e-10
    verify: float = 1e-9


TOL = Tolerances()

# Largest adjacency dimension a graph constructor will materialize.
MAX_GRAPH_DIM = 2**16
# Largest dimension the oracle will diagonalize.
ORACLE_MAX_DIM = 2**12
# Above this dimension the "auto" eigensolver hands off to LAPACK.
JACOBI_MAX_DIM = 128
DEFAULT_WIRE_CAP = 12


def wire_cap():
    """Unitary-extraction wire cap, overridable through ``WALKFORGE_CAP``."""
    raw = os.environ.get("WALKFORGE_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_WIRE_CAP
    return int(raw)
