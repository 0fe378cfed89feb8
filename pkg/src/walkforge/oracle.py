"""Dense reference oracle: eigendecomposition, exponentials, distances.

Every synthesized circuit is judged against the exponential computed here.
The oracle convention is ``h = q @ diag(lam) @ q.conj().T`` with the
eigenvectors as the columns of ``q``; a diagonalizing *circuit* therefore
implements ``q^dagger`` (it maps eigenvectors onto computational basis states).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import JACOBI_MAX_DIM, ORACLE_MAX_DIM, TOL
from .errors import DimensionError, PreconditionError, ResourceError
from .graphs import Graph, WalkParams


@dataclass(frozen=True, eq=False)
class SpectralDecomposition:
    q: np.ndarray
    lam: np.ndarray

    @property
    def dim(self) -> int:
        return self.lam.shape[0]

    def reconstruct(self) -> np.ndarray:
        return (self.q * self.lam) @ self.q.conj().T

    def evolution(self, params: WalkParams) -> np.ndarray:
        """exp(-i t gamma h) from the stored spectrum."""
        phases = np.exp(-1j * params.scale * self.lam)
        return (self.q * phases) @ self.q.conj().T


def _as_matrix(h) -> np.ndarray:
    if isinstance(h, Graph):
        h = h.adjacency
    h = np.asarray(h)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {h.shape}")
    return h


def _round_robin(m: int):
    """Yield m - 1 rounds of m/2 disjoint index pairs covering every pair once."""
    players = list(range(m))
    for _ in range(m - 1):
        yield [(players[i], players[m - 1 - i]) for i in range(m // 2)]
        players = [players[0], players[-1], *players[1:-1]]


def jacobi_eigh(a, tol: float = TOL.jacobi_offdiag, max_sweeps: int = 60):
    """Eigen-decompose a real symmetric matrix by cyclic Jacobi rotations.

    Each sweep visits all index pairs in round-robin order, so every round
    consists of disjoint rotations that are applied together. Iteration stops
    once the off-diagonal Frobenius norm falls below ``tol * max(1, ||a||_F)``
    or stops decreasing.

    Returns ``(eigenvalues, eigenvectors)`` unsorted, eigenvectors as columns.
    """
    a = np.array(a, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    if n < 2:
        return np.diagonal(a).copy(), v
    m = n + (n % 2)
    rounds = []
    for pairs in _round_robin(m):
        pairs = [(p, q) for p, q in pairs if p < n and q < n]
        rounds.append((np.array([p for p, _ in pairs]), np.array([q for _, q in pairs])))

    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    previous = np.inf
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diagonal(a))))
        if off <= threshold or off >= previous:
            break
        previous = off
        for p, q in rounds:
            apq = a[p, q]
            hot = np.abs(apq) > 1e-300
            if not hot.any():
                continue
            p, q, apq = p[hot], q[hot], apq[hot]
            app, aqq = a[p, p], a[q, q]
            theta = (aqq - app) / (2.0 * apq)
            sign = np.where(theta >= 0, 1.0, -1.0)
            t = sign / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            rp, rq = a[p, :].copy(), a[q, :].copy()
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p].copy(), a[:, q].copy()
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0
            a[p, p] = app - t * apq
            a[q, q] = aqq + t * apq

            vp, vq = v[:, p].copy(), v[:, q].copy()
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
    return np.diagonal(a).copy(), v


def eig_hermitian(h, method: str = "auto") -> SpectralDecomposition:
    """Eigendecomposition of a real symmetric matrix (or a Graph's adjacency).

    Eigenvalues come back in descending order; ties keep the solver's order.
    ``method`` is ``"jacobi"``, ``"lapack"`` or ``"auto"`` (Jacobi up to
    ``JACOBI_MAX_DIM``, LAPACK above).
    """
    h = _as_matrix(h)
    n = h.shape[0]
    if n > ORACLE_MAX_DIM:
        raise ResourceError(f"oracle dimension {n} exceeds {ORACLE_MAX_DIM}")
    if np.iscomplexobj(h):
        if np.abs(h.imag).max(initial=0.0) > TOL.symmetry:
            raise PreconditionError("eig_hermitian expects a real symmetric matrix")
        h = h.real
    h = h.astype(np.float64)
    if np.abs(h - h.T).max(initial=0.0) > TOL.symmetry:
        raise PreconditionError("matrix is not symmetric")
    if method == "auto":
        method = "jacobi" if n <= JACOBI_MAX_DIM else "lapack"
    if method == "jacobi":
        lam, q = jacobi_eigh(h)
    elif method == "lapack":
        lam, q = np.linalg.eigh(h)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    order = np.argsort(-lam, kind="stable")
    return SpectralDecomposition(q[:, order].astype(np.complex128), lam[order])


def expm_hermitian(h, params: WalkParams, method: str = "auto") -> np.ndarray:
    """U = q diag(exp(-i t gamma lam)) q^dagger."""
    return eig_hermitian(h, method).evolution(params)


def _check_state(psi: np.ndarray, dim: int):
    if psi.shape != (dim,):
        raise DimensionError(f"state of shape {psi.shape} does not match dimension {dim}")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > TOL.state_norm:
        raise PreconditionError(f"state norm {norm!r} is not 1")


def basis_state(dim: int, index: int) -> np.ndarray:
    if not 0 <= index < dim:
        raise PreconditionError(f"basis index {index} out of range for dim {dim}")
    psi = np.zeros(dim, dtype=np.complex128)
    psi[index] = 1.0
    return psi


def evolve_state(h, params: WalkParams, psi0) -> np.ndarray:
    """|psi(t)> = U(t) |psi(0)>."""
    h = _as_matrix(h)
    psi0 = np.asarray(psi0, dtype=np.complex128)
    _check_state(psi0, h.shape[0])
    return expm_hermitian(h, params) @ psi0


def unitary_distance(u, v) -> float:
    """Largest entrywise modulus of u - v."""
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise DimensionError(f"shapes {u.shape} and {v.shape} differ")
    return float(np.abs(u - v).max(initial=0.0))


def spectral_distance(u, v) -> float:
    """||u - v||_2 from the largest eigenvalue of (u - v)^dagger (u - v)."""
    u, v = np.asarray(u), np.asarray(v)
    if u.shape != v.shape:
        raise DimensionError(f"shapes {u.shape} and {v.shape} differ")
    d = u - v
    top = np.linalg.eigvalsh(d.conj().T @ d)[-1] if d.size else 0.0
    return float(np.sqrt(max(top, 0.0)))


def product_formula_gap(a, b, params: WalkParams) -> float:
    """Distance between exp(-it(A+B)) and exp(-itA) exp(-itB)."""
    x, y = _as_matrix(a), _as_matrix(b)
    if x.shape != y.shape:
        raise DimensionError(f"shapes {x.shape} and {y.shape} differ")
    exact = expm_hermitian(x + y, params)
    split = expm_hermitian(x, params) @ expm_hermitian(y, params)
    return unitary_distance(exact, split)
