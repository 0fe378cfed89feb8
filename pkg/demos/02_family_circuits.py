"""Exact circuits for the basic families.

Each family has a fixed basis change Q; the walk is Q, a layer of phases,
then Q back. The printed distance is the largest entry of the difference
between the circuit unitary and the oracle exponential.
"""

import walkforge as wf
from walkforge import expr as E
from walkforge.serialize import circuit_to_qasm

params = wf.WalkParams(gamma=0.37, t=7.3)

for text in ["path2", "complete(3)", "bipartite(3, 2)", "star(2)", "hypercube(4)", "book(2)"]:
    e = wf.parse_expr(text)
    circ = wf.synth(e, params)
    exact = wf.expm_hermitian(wf.graph_of(e), params)
    dist = wf.unitary_distance(wf.unitary_of(circ), exact)
    print(f"{text:16s} wires={circ.wires:2d} gates={len(circ):3d} distance={dist:.1e}")

# The star S5 = K_{4,1}: fold each part onto one index, split into the two
# eigenvectors with a single controlled Hadamard, phase, and undo.
print()
print(circuit_to_qasm(wf.synth(E.Star(2), wf.WalkParams(1.0, 1.0))))
