"""The reference oracle: spectra and exact evolution.

Everything the compiler produces is judged against a dense
eigendecomposition. This script shows the spectra the circuits rely on and
one walk evolved from a basis state.
"""

import math

import numpy as np

import walkforge as wf

# A single edge has eigenvalues +1 and -1; the walk along it is a cos/sin swap.
d = wf.eig_hermitian(wf.path2())
print("P2 spectrum:", d.lam)

# A complete bipartite graph has only two nonzero eigenvalues, +-sqrt(n1 n2).
# K_{8,4} is padded to 16 indices; the 4 padding vertices contribute zeros.
lam = wf.eig_hermitian(wf.complete_bipartite(3, 2)).lam
print("K_8,4 nonzero eigenvalues:", lam[np.abs(lam) > 1e-9], "vs sqrt(32) =", math.sqrt(32))

# K4 is J - I: one eigenvalue 3, the rest -1.
print("K4 spectrum:", np.round(wf.eig_hermitian(wf.complete_graph(2)).lam, 12))

# Start at the centre of the star S5 and watch the amplitude spread.
star = wf.star(2)
centre = np.zeros(star.dim, dtype=complex)
centre[4] = 1
for t in (0.0, 0.4, 0.8, math.pi / 4):
    psi = wf.evolve_state(star, wf.WalkParams(1.0, t), centre)
    print(f"t={t:.3f}  p(centre)={abs(psi[4]) ** 2:.4f}  p(leaf 0)={abs(psi[0]) ** 2:.4f}")
