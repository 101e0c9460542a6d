"""
Centralizers, fixed points and maximality
=========================================

The integer commutant of an irreducible action is an order in the
eigenvalue field; its units form the algebraic centralizer. The joint
fixed points add translations and give the affine centralizer.
"""

from torusact.action import fixed_points
from torusact.centralizer import affine_report, commutant_z_basis, gamma_map, is_maximal_cartan
from torusact.io import load_corpus

corpus = load_corpus()

for name in ["example2b_min", "example2b_max", "example3c_min", "example3c_max"]:
    a = corpus[name].action()
    fix = fixed_points(a)
    rep = affine_report(a)
    print(f"{name}: |Fix| = {fix.order}, points {fix.points}")
    print(f"   commutant rank {commutant_z_basis(a).rank}, "
          f"gamma image index {gamma_map(a).index_over_power_basis}")
    print(f"   Z_Aff = {rep.abstract_type}, index {rep.index}, "
          f"maximal: {is_maximal_cartan(a).status.value}")

# the product examples: same entropy, different commutants
for name in ["example1_alpha3_x_alpha", "example1_alpha2_x_alpha2"]:
    c = commutant_z_basis(corpus[name].action())
    print(f"{name}: commutant rank {c.rank}, abelian {c.is_abelian()}")
