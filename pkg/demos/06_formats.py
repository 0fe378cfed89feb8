"""Interchange formats: circuit JSON, the QASM-like text, graph DOT.

Floats are written with 17 significant digits, so a reload is bit-identical.
The same exports are available from the ``walkforge`` command.
"""

import walkforge as wf
from walkforge import serialize

c = wf.synth(wf.parse_expr("interdep_id(complete(1))"), wf.WalkParams(0.37, 7.3))
text = serialize.circuit_to_json(c)
print(text)
print("JSON reload identical:", serialize.circuit_from_json(text) == c)
print("QASM reload identical:", serialize.circuit_from_qasm(serialize.circuit_to_qasm(c)) == c)

print(serialize.graph_to_dot(wf.identity_interlink(wf.complete_graph(1))))
