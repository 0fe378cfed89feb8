"""Fast-forwarding: the gate list never depends on t.

Only the phase angles change with t, and they change linearly. Circuit size
grows polynomially in the number of wires, i.e. in log n.
"""

import math

import walkforge as wf
from walkforge.verify import scaling, t_independence

e = wf.parse_expr("book(3)")
for t in (0.5, 1.0, 10 * math.pi):
    c = wf.synth(e, wf.WalkParams(1.0, t))
    print(f"t={t:8.4f} gates={len(c)} first angles={c.angles()[:2]}")
print("t-independent:", t_independence(e, [0.5, 1.0, 10 * math.pi]))

for family, sizes in [("hypercube", range(1, 11)), ("complete", range(1, 11)), ("bipartite", range(2, 9))]:
    table = scaling(family, sizes)
    print(f"{family:10s} gates={[r.gate_count for r in table.rows]} fitted exponent={table.exponent:.2f}")
