"""
Building actions from units of a number field
=============================================

A lattice L in a cubic field K and two multiplicatively independent units
of an order of K give a Z^2-action on R^3/Z^3: the matrices of
multiplication by the units in a basis of L.
"""

from fractions import Fraction

from torusact.numberfield import LatticeBasis, NumberField, construct_action, log_embedding

K = NumberField((-1, -8, -2, 1))     # x^3 - 2x^2 - 8x - 1
lam = K.element((0, 1))
units = [lam, lam + 2]

# norms +-1 and independent log vectors
for u in units:
    print("unit", u, " norm", u.norm(), " log embedding", log_embedding(u).round(4))

# the power basis Z[lam]
alpha = construct_action(K, units, LatticeBasis(K, [(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
for g in alpha.generators:
    print(g)

# a non-principal lattice, given by coordinates in the power basis
L = LatticeBasis(K, [(2, 0, 0), (1, 1, 0), (1, 0, 1)])
beta = construct_action(K, units, L)
print("on L:")
for g in beta.generators:
    print(g)

# a non-integral basis: the construction refuses when L is not a module
try:
    construct_action(K, units, LatticeBasis(K, [(1, 0, 0), (Fraction(1, 2), 1, 0), (0, 0, 1)]))
except Exception as exc:
    print("rejected:", exc)
