"""Gate-level circuit IR with polarity-tagged controls.

Wire 0 is the most significant bit of the basis-state index, so the leading
wire selects the leading block of a block matrix. Gate primitives:

* ``h``      Hadamard on ``wire``
* ``x``      NOT on ``wire``
* ``phase2`` diag(exp(i theta1), exp(i theta2)) on ``wire``
* ``gphase`` exp(i phi) times the identity; never carries controls (adding a
  control turns it into a ``phase2`` on the control wire)

A control is ``(wire, polarity)`` with polarity ``1`` (fires on |1>) or ``0``
(fires on |0>).
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .config import wire_cap
from .errors import DimensionError, PreconditionError, ResourceError

H, X, PHASE2, GPHASE = "h", "x", "phase2", "gphase"
KINDS = (H, X, PHASE2, GPHASE)
ON_ONE, ON_ZERO = 1, 0
_NPARAMS = {H: 0, X: 0, PHASE2: 2, GPHASE: 1}


@dataclass(frozen=True)
class Gate:
    kind: str
    wire: int | None = None
    params: tuple[float, ...] = ()
    controls: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        object.__setattr__(self, "controls", tuple((int(w), int(p)) for w, p in self.controls))
        if self.kind not in KINDS:
            raise PreconditionError(f"unknown gate kind {self.kind!r}")
        if len(self.params) != _NPARAMS[self.kind]:
            raise PreconditionError(f"{self.kind} takes {_NPARAMS[self.kind]} parameters")
        if not all(math.isfinite(p) for p in self.params):
            raise PreconditionError("gate angles must be finite")
        if self.kind == GPHASE:
            if self.wire is not None or self.controls:
                raise PreconditionError("gphase has no target wire and no controls")
            return
        if self.wire is None or self.wire < 0:
            raise PreconditionError(f"{self.kind} needs a target wire")
        wires = [w for w, _ in self.controls]
        if len(set(wires)) != len(wires):
            raise PreconditionError("control wires must be distinct")
        if self.wire in wires:
            raise PreconditionError("target wire cannot also be a control")
        if any(p not in (ON_ZERO, ON_ONE) for _, p in self.controls):
            raise PreconditionError("control polarity must be 0 or 1")

    def touched(self) -> set[int]:
        out = {w for w, _ in self.controls}
        if self.wire is not None:
            out.add(self.wire)
        return out

    def shape(self):
        """Everything except the angle values."""
        return (self.kind, self.wire, len(self.params), self.controls)

    def matrix(self) -> np.ndarray:
        """2x2 target matrix (1x1 for gphase)."""
        if self.kind == H:
            return np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
        if self.kind == X:
            return np.array([[0, 1], [1, 0]], dtype=np.complex128)
        if self.kind == PHASE2:
            return np.diag(np.exp(1j * np.array(self.params)))
        return np.array([[np.exp(1j * self.params[0])]])


def hadamard(wire, controls=()):
    return Gate(H, wire, (), tuple(controls))


def not_gate(wire, controls=()):
    return Gate(X, wire, (), tuple(controls))


def phase2(wire, theta1, theta2, controls=()):
    return Gate(PHASE2, wire, (theta1, theta2), tuple(controls))


def global_phase(phi):
    return Gate(GPHASE, None, (phi,))


@dataclass(frozen=True)
class Circuit:
    wires: int
    gates: tuple[Gate, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.wires < 0:
            raise PreconditionError("wire count must be non-negative")
        for g in self.gates:
            if any(w >= self.wires for w in g.touched()):
                raise PreconditionError(f"gate {g} references a wire outside 0..{self.wires - 1}")

    @property
    def dim(self) -> int:
        return 2**self.wires

    def __len__(self):
        return len(self.gates)

    def used_wires(self) -> set[int]:
        out = set()
        for g in self.gates:
            out |= g.touched()
        return out

    def structure(self):
        return tuple(g.shape() for g in self.gates)

    def angles(self) -> np.ndarray:
        return np.array([p for g in self.gates for p in g.params], dtype=np.float64)


def empty(wires: int) -> Circuit:
    return Circuit(wires, ())


def seq(*circuits: Circuit) -> Circuit:
    """Apply the circuits in the given time order."""
    if not circuits:
        raise PreconditionError("seq needs at least one circuit")
    w = circuits[0].wires
    if any(c.wires != w for c in circuits):
        raise DimensionError(f"seq needs equal wire counts, got {[c.wires for c in circuits]}")
    return Circuit(w, tuple(g for c in circuits for g in c.gates))


def _relabel(g: Gate, mapping) -> Gate:
    return Gate(
        g.kind,
        None if g.wire is None else mapping(g.wire),
        g.params,
        tuple((mapping(w), p) for w, p in g.controls),
    )


def embed(c: Circuit, wires: int, offset: int) -> Circuit:
    """Move ``c`` onto wires ``offset .. offset + c.wires - 1`` of a wider register."""
    if offset < 0 or offset + c.wires > wires:
        raise DimensionError(f"cannot place {c.wires} wires at offset {offset} in {wires}")
    return Circuit(wires, tuple(_relabel(g, lambda w: w + offset) for g in c.gates))


def par(c1: Circuit, c2: Circuit) -> Circuit:
    """Side-by-side composition; c2's wires follow c1's."""
    w = c1.wires + c2.wires
    return Circuit(w, embed(c1, w, 0).gates + embed(c2, w, c1.wires).gates)


def adjoint(c: Circuit) -> Circuit:
    out = []
    for g in reversed(c.gates):
        if g.kind in (PHASE2, GPHASE):
            g = Gate(g.kind, g.wire, tuple(-p for p in g.params), g.controls)
        out.append(g)
    return Circuit(c.wires, tuple(out))


def _add_control(g: Gate, wire: int, polarity: int) -> Gate:
    if g.kind == GPHASE:
        (phi,) = g.params
        angles = (0.0, phi) if polarity == ON_ONE else (phi, 0.0)
        return Gate(PHASE2, wire, angles)
    if wire in g.touched():
        raise PreconditionError(f"control wire {wire} collides with gate {g}")
    return Gate(g.kind, g.wire, g.params, g.controls + ((wire, polarity),))


def controlled(c: Circuit, wire: int, polarity: int = ON_ONE) -> Circuit:
    """Condition every gate of ``c`` on ``wire`` having value ``polarity``."""
    if not 0 <= wire < c.wires:
        raise DimensionError(f"control wire {wire} outside circuit of {c.wires} wires")
    if wire in c.used_wires():
        raise PreconditionError(f"control wire {wire} is already used by the circuit")
    if polarity not in (ON_ZERO, ON_ONE):
        raise PreconditionError("polarity must be 0 or 1")
    return Circuit(c.wires, tuple(_add_control(g, wire, polarity) for g in c.gates))


def controlled_on(c: Circuit, pattern) -> Circuit:
    """Condition ``c`` on every fixed wire of ``pattern`` (entries 0, 1 or None)."""
    for w, bit in enumerate(pattern):
        if bit is not None:
            c = controlled(c, w, int(bit))
    return c


def _apply_gate(state: np.ndarray, g: Gate) -> None:
    # state has one axis per wire, plus optional trailing batch axes
    idx = [slice(None)] * state.ndim
    for w, p in g.controls:
        idx[w] = p
    if g.kind == GPHASE:
        state[tuple(idx)] *= np.exp(1j * g.params[0])
        return
    idx[g.wire] = 0
    i0 = tuple(idx)
    idx[g.wire] = 1
    i1 = tuple(idx)
    if g.kind == PHASE2:
        state[i0] *= np.exp(1j * g.params[0])
        state[i1] *= np.exp(1j * g.params[1])
    elif g.kind == X:
        a = state[i0].copy()
        state[i0] = state[i1]
        state[i1] = a
    else:
        a, b = state[i0].copy(), state[i1].copy()
        s = 1 / math.sqrt(2)
        state[i0] = (a + b) * s
        state[i1] = (a - b) * s


def _run(c: Circuit, block: np.ndarray) -> np.ndarray:
    shape = (2,) * c.wires + block.shape[1:]
    state = np.array(block, dtype=np.complex128).reshape(shape)
    for g in c.gates:
        _apply_gate(state, g)
    return state.reshape(block.shape)


def unitary_of(c: Circuit, cap: int | None = None) -> np.ndarray:
    """Dense unitary, gates multiplied in time order."""
    cap = wire_cap() if cap is None else cap
    if c.wires > cap:
        raise ResourceError(f"{c.wires} wires exceed the unitary extraction cap of {cap}")
    return _run(c, np.eye(c.dim, dtype=np.complex128))


def apply_to_state(c: Circuit, psi) -> np.ndarray:
    """Apply ``c`` gate by gate to a state vector (or a batch of columns)."""
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape[0] != c.dim:
        raise DimensionError(f"state of length {psi.shape[0]} does not match {c.wires} wires")
    return _run(c, psi)


@dataclass(frozen=True)
class GateCounts:
    total: int
    by_kind: dict
    by_arity: dict

    def as_dict(self) -> dict:
        return {"total": self.total, "by_kind": dict(self.by_kind), "by_arity": dict(self.by_arity)}


def gate_count(c: Circuit) -> GateCounts:
    kinds = Counter(g.kind for g in c.gates)
    arity = Counter(len(g.controls) for g in c.gates)
    return GateCounts(len(c.gates), {k: kinds.get(k, 0) for k in KINDS}, dict(sorted(arity.items())))


def two_qubit_cost(c: Circuit) -> int:
    """Cost model: 1 per gate with at most one control, 2k - 1 for k >= 2 controls.

    The multi-controlled gates are not decomposed; this only bounds what a
    linear-depth decomposition would need.
    """
    return sum(1 if len(g.controls) <= 1 else 2 * len(g.controls) - 1 for g in c.gates)
