"""
Cyclicity and ideal classes
===========================

Two irreducible actions that are conjugate over Q are conjugate over Z
exactly when their eigenvector lattices lie in the same ideal class.
Cyclicity (one orbit spans Z^n) is the special case of the class of the
unit ring.
"""

from torusact import linalg
from torusact.classify import cyclicity, ideal_equivalent, lm_ideal_of_matrix, orbit_form
from torusact.io import load_corpus

corpus = load_corpus()

# a cyclic action and a non-cyclic one, with a mod-p certificate
for name in ["example2a_min", "example2a_max"]:
    v = cyclicity(corpus[name].action())
    print(f"{name}: cyclic {v.status.value}  {v.detail}")

g = corpus["example2a_max"].generators[0]
print("orbit form:", orbit_form([linalg.matpow(g, k) for k in range(3)], 3))

# three lattices in one field, pairwise inequivalent
names = ["example3b_principal", "example3b_L", "example3b_L2"]
fb = corpus[names[0]].field
K = fb.field
ideals = {n: lm_ideal_of_matrix(linalg.transpose(corpus[n].generators[0]), K) for n in names}
for i, a in enumerate(names):
    for b in names[i + 1:]:
        v = ideal_equivalent(ideals[a], ideals[b], fb.unit_elements(K))
        print(f"{a} ~ {b}: {v.status.value}  ({v.certificate['candidates']} short vectors checked)")
