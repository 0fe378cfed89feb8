"""Interdependent networks built from commuting pieces.

Two graphs joined by interlinks give A + B with A block diagonal. When
[A, B] = 0 the walk factorizes exactly as exp(-itA) exp(-itB); otherwise the
product only approximates it. Both situations are shown.
"""

import walkforge as wf
from walkforge import expr as E
from walkforge.verify import noncommuting_pair

params = wf.WalkParams(1.0, 2.5)

# Two copies of K4 joined vertex to vertex.
rungs = wf.identity_interlink(wf.complete_graph(2))
print("K4 rungs commute:", wf.commutes(rungs.intra, rungs.inter))
print("  product-formula gap:", wf.product_formula_gap(rungs.intra, rungs.inter, params))

# Q4 and K_{4,4} are both 4-regular, so joining every pair across commutes.
full = wf.complete_interlink(wf.hypercube(4), wf.complete_bipartite(2, 2))
print("Q4 / K_4,4 commute:", wf.commutes(full.intra, full.inter))
print("  product-formula gap:", wf.product_formula_gap(full.intra, full.inter, params))

e = wf.parse_expr("interdep_complete(hypercube(4), bipartite(2, 2))")
circ = wf.synth(e, params)
dist = wf.unitary_distance(wf.unitary_of(circ), wf.expm_hermitian(wf.graph_of(e), params))
print(f"  circuit: {len(circ)} gates on {circ.wires} wires, distance {dist:.1e}")

# Unequal degrees break the commutation and the compiler refuses.
try:
    wf.synth(E.InterdepComplete(E.Complete(2), E.Hypercube(2)), params)
except wf.errors.PreconditionError as exc:
    print("K4 / Q2 refused:", exc)

# A pair that does not commute: the product formula is visibly off.
a, b = noncommuting_pair()
print("non-commuting gap at t=1:", wf.product_formula_gap(a, b, wf.WalkParams(1.0, 1.0)))
