"""
Spectra, hyperbolicity and entropy of a toral automorphism
==========================================================

A Z^d-action on the n-torus is given by d commuting unimodular integer
matrices. Before anything else we check each generator: exact
characteristic polynomial, ergodicity (no root of unity among the
eigenvalues) and hyperbolicity.
"""

import numpy as np

from torusact import linalg, spectra
from torusact import poly as P
from torusact.action import entropy_function, new_action, weyl_chambers

A = linalg.mat([[0, 1, 0], [0, 0, 1], [1, 8, 2]])
B = linalg.matmul(A, linalg.matadd(A, linalg.scale(2, linalg.identity(3))))

# exact characteristic polynomial, then numerical roots from it
print("charpoly(A) =", P.to_str(linalg.charpoly(A)))
print("eigenvalues:", np.round(spectra.roots(linalg.charpoly(A)).eigenvalues.real, 6))
print("ergodic:", spectra.is_ergodic(A).ergodic, " hyperbolic:", spectra.is_hyperbolic(A))
print("h(A) =", round(spectra.entropy(A), 6))

# the entropy function of the action is piecewise linear in n
alpha = new_action([A, B])
for n in [(1, 0), (0, 1), (2, -1), (-3, 2)]:
    print(f"h(n={n}) = {entropy_function(alpha, n):.6f}")

# its linear pieces are the Weyl chambers
for ch in weyl_chambers(alpha).chambers:
    print(f"chamber [{ch.start:.4f}, {ch.end:.4f}) rad, h = {np.round(ch.formula, 4)} . n")
