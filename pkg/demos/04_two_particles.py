"""Two non-interacting walkers as a walk on a Cartesian product.

For fully active factors the product walk is exactly U (x) U. With padded
factors the product graph keeps every padding vertex isolated, so the
circuit adds corrections there; on the real vertices it still equals U (x) U.
"""

import numpy as np

import walkforge as wf
from walkforge import expr as E

params = wf.WalkParams(1.0, 1.0)

for inner in (E.Complete(2), E.Star(2)):
    pair = E.Cartesian(inner, inner)
    u = wf.unitary_of(wf.synth(pair, params))
    one = wf.unitary_of(wf.synth(inner, params))
    diff = u - np.kron(one, one)
    act = np.flatnonzero(wf.graph_of(pair).active)
    print(f"{E.to_text(pair)}")
    print(f"  whole space |U - U1 (x) U1| = {np.abs(diff).max():.2e}")
    print(f"  active part |U - U1 (x) U1| = {np.abs(diff[np.ix_(act, act)]).max():.2e}")

# Joint probability of the two walkers, both starting at the star centre.
g = wf.graph_of(E.Cartesian(E.Star(2), E.Star(2)))
psi0 = np.zeros(g.dim, dtype=complex)
psi0[4 * 8 + 4] = 1
p = np.abs(wf.evolve_state(g, params, psi0)) ** 2
print("P(both at centre) =", round(float(p[36]), 6), " P(both at leaf 0) =", round(float(p[0]), 6))
