"""Text formats: circuit JSON, the QASM-like dialect, graph JSON and DOT.

Floats are written with 17 significant digits, which round-trips every
IEEE double exactly, so JSON and QASM exports reload bit-identically.

QASM-like dialect, one gate per line after a ``wires N`` header::

    h q[0]
    x q[2]
    rz-pair(theta1,theta2) q[1]
    gphase(phi)
    ctrl+ q[1] @ ctrl- q[3] @ h q[0]

``ctrl+`` fires on |1>, ``ctrl-`` on |0>. Lines starting with ``#`` are
comments.
"""

from __future__ import annotations

import json
import re

import numpy as np

from .circuit import GPHASE, H, PHASE2, X, Circuit, Gate
from .errors import ParseError
from .graphs import Graph, InterdependentPair

_QASM_NAME = {H: "h", X: "x", PHASE2: "rz-pair", GPHASE: "gphase"}
_QASM_KIND = {v: k for k, v in _QASM_NAME.items()}


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def circuit_to_json(c: Circuit) -> str:
    rows = []
    for g in c.gates:
        wire = "null" if g.wire is None else str(g.wire)
        params = ", ".join(fmt_float(p) for p in g.params)
        controls = ", ".join(f"[{w}, {p}]" for w, p in g.controls)
        rows.append(f'    {{"kind": "{g.kind}", "wire": {wire}, "params": [{params}], "controls": [{controls}]}}')
    gates = "[\n" + ",\n".join(rows) + "\n  ]" if rows else "[]"
    return f'{{\n  "wires": {c.wires},\n  "gates": {gates}\n}}\n'


def circuit_from_json(text: str) -> Circuit:
    data = json.loads(text)
    gates = tuple(
        Gate(g["kind"], g["wire"], tuple(float(p) for p in g["params"]), tuple(tuple(c) for c in g["controls"]))
        for g in data["gates"]
    )
    return Circuit(int(data["wires"]), gates)


def circuit_to_qasm(c: Circuit) -> str:
    lines = ["# walkforge circuit", f"wires {c.wires}"]
    for g in c.gates:
        prefix = "".join(f"ctrl{'+' if p else '-'} q[{w}] @ " for w, p in g.controls)
        if g.kind == GPHASE:
            body = f"gphase({fmt_float(g.params[0])})"
        elif g.kind == PHASE2:
            body = f"rz-pair({fmt_float(g.params[0])},{fmt_float(g.params[1])}) q[{g.wire}]"
        else:
            body = f"{_QASM_NAME[g.kind]} q[{g.wire}]"
        lines.append(prefix + body)
    return "\n".join(lines) + "\n"


_CTRL = re.compile(r"ctrl([+-])\s*q\[(\d+)\]\s*@\s*")
_BODY = re.compile(r"(h|x|rz-pair|gphase)\s*(?:\(([^)]*)\))?\s*(?:q\[(\d+)\])?\s*$")


def circuit_from_qasm(text: str) -> Circuit:
    wires = None
    gates = []
    offset = 0
    for line in text.splitlines(keepends=True):
        here, offset = offset, offset + len(line.encode("utf-8"))
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if wires is None:
            m = re.fullmatch(r"wires\s+(\d+)", s)
            if not m:
                raise ParseError("missing 'wires N' header", here, {"wires"})
            wires = int(m.group(1))
            continue
        controls = []
        pos = 0
        while (m := _CTRL.match(s, pos)) is not None:
            controls.append((int(m.group(2)), 1 if m.group(1) == "+" else 0))
            pos = m.end()
        m = _BODY.match(s, pos)
        if m is None:
            raise ParseError(f"cannot parse gate {s[pos:]!r}", here, set(_QASM_KIND) | {"ctrl+", "ctrl-"})
        name, args, wire = m.groups()
        params = tuple(float(a) for a in args.split(",")) if args else ()
        gates.append(Gate(_QASM_KIND[name], None if wire is None else int(wire), params, tuple(controls)))
    if wires is None:
        raise ParseError("empty circuit text", 0, {"wires"})
    return Circuit(wires, tuple(gates))


def graph_to_json(g: Graph) -> str:
    data = {
        "dim": g.dim,
        "active": [bool(a) for a in g.active],
        "edges": [list(e) for e in g.edges()],
        "label": g.label,
    }
    return json.dumps(data)


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    dim = int(data["dim"])
    adj = np.zeros((dim, dim), dtype=np.int64)
    for i, j in data["edges"]:
        adj[i, j] += 1
        adj[j, i] += 1
    return Graph(dim, adj, np.array(data["active"], dtype=bool), data.get("label", ""))


def graph_to_dot(g: Graph | InterdependentPair) -> str:
    """DOT text over the active vertices; interlink edges are dashed."""
    if isinstance(g, InterdependentPair):
        solid, dashed, base = g.intra.edges(), g.inter.edges(), g.graph
    else:
        solid, dashed, base = g.edges(), [], g
    name = base.label.replace('"', "'")
    lines = [f'graph "{name}" {{', "  node [shape=circle];"]
    lines += [f"  {v};" for v in range(base.dim) if base.active[v]]
    lines += [f"  {i} -- {j};" for i, j in solid]
    lines += [f"  {i} -- {j} [style=dashed];" for i, j in dashed]
    lines.append("}")
    return "\n".join(lines) + "\n"
