import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from torusact import linalg
from torusact.action import Status, new_action
from torusact.centralizer import (affine_report, commutant_z_basis, gamma, gamma_map,
                                  is_maximal_cartan, log_lattice_index, torsion_elements,
                                  unit_index, unit_search)
from torusact.numberfield import LatticeBasis, NumberField, action_field

EYE3 = linalg.identity(3)
MINUS3 = linalg.scale(-1, EYE3)


def test_commutant_ranks(actions):
    assert commutant_z_basis(actions["example2a_min"]).rank == 3
    assert commutant_z_basis(actions["example1_alpha_x_alpha"]).rank == 12
    assert commutant_z_basis(new_action([linalg.identity(2)])).rank == 4


def test_commutant_basis_commutes_and_is_saturated(actions):
    a = actions["example2a_max"]
    c = commutant_z_basis(a)
    for x in c.basis:
        for g in a.generators:
            assert linalg.matmul(x, g) == linalg.matmul(g, x)
    flat = [[v for row in x for v in row] for x in c.basis]
    assert all(dj == 1 for dj in linalg.snf(flat).d)


def test_commutant_of_diag_block_brute_force():
    # dimension of the rational solution space of AX = XA, by Gaussian elimination
    a = linalg.mat([[0, 1, 0], [0, 0, 1], [-1, 6, -3]])
    big = linalg.block_diag(a, a)
    n = 6
    rows = []
    for i, j in itertools.product(range(n), repeat=2):
        eq = [0] * (n * n)
        for k in range(n):
            eq[i * n + k] += big[k][j]
            eq[k * n + j] -= big[i][k]
        rows.append(eq)
    assert n * n - linalg.rank(rows) == commutant_z_basis(new_action([big])).rank == 12


def test_noncommuting_pair(actions):
    c = commutant_z_basis(actions["example1_alpha2_x_alpha2"])
    x, y = c.noncommuting_pair()
    assert linalg.matmul(x, y) != linalg.matmul(y, x)
    assert commutant_z_basis(actions["example1_alpha3_x_alpha"]).noncommuting_pair() is None


def test_gamma_images(actions):
    a = actions["example2a_min"]
    g = gamma_map(a)
    assert g.index_over_power_basis == 1 and g.contains_power_basis
    g = gamma_map(actions["example2a_max"])
    assert g.index_over_power_basis == 3 and g.contains_power_basis


def test_gamma_injective_and_multiplicative(actions):
    a = actions["example3a_second"]
    af = action_field(a)
    c = commutant_z_basis(a)
    rng = random.Random(3)
    seen = {}
    for _ in range(30):
        coeffs = [rng.randint(-3, 3) for _ in range(c.rank)]
        x = c.element(coeffs)
        gx = gamma(x, af)
        key = gx.coeffs
        assert seen.setdefault(key, x) == x
        y = c.element([rng.randint(-3, 3) for _ in range(c.rank)])
        assert gamma(linalg.matmul(x, y), af) == gx * gamma(y, af)


def test_torsion_pm_identity(actions):
    for name in ("example2a_min", "example3a_principal"):
        assert torsion_elements(commutant_z_basis(actions[name])) == sorted([EYE3, MINUS3])


def test_torsion_of_gl2_against_brute_force():
    c = commutant_z_basis(new_action([linalg.identity(2)]))
    got = set(torsion_elements(c, box=2))
    want = set()
    for e in itertools.product(range(-2, 3), repeat=4):
        m = ((e[0], e[1]), (e[2], e[3]))
        if abs(linalg.det(m)) == 1 and linalg.matpow(m, 12) == linalg.identity(2):
            want.add(m)
    # the reduced basis is the standard one up to order and sign
    assert got == want


def test_unit_search(actions):
    a = actions["example2a_min"]
    c = commutant_z_basis(a)
    assert unit_search(c, 0) == [EYE3]
    found = set(unit_search(c, 10))
    for x in (a.generators[0], a.generators[1],
              linalg.matmul(a.inverses[0], a.generators[1])):
        assert x in found or linalg.scale(-1, x) in found


def test_log_lattice_index():
    k = NumberField((1, -6, 3, 1))
    l1, l2 = k.gen, k([2, -4, -1])
    assert log_lattice_index([l1, l2], [l1, l2])[0] == 1
    m, res = log_lattice_index([l1 ** 2, l2], [l1, l2])
    assert m == 2 and res < 1e-9
    eps = k([Fraction(1, 3), Fraction(5, 3), Fraction(1, 3)])
    m, res = log_lattice_index([l1, l2], [eps, l2])
    assert m == 3 and res < 1e-6


def test_maximality(actions):
    assert is_maximal_cartan(actions["example2a_min"]).status is Status.YES
    v = is_maximal_cartan(actions["example2a_max"])
    assert v.status is Status.NO
    # the witness is a unit of the commutant that is not in +-alpha'
    assert abs(linalg.det(v.witness)) == 1
    for name in ("example3c_min", "example3c_max", "example3a_principal", "example3a_second"):
        assert is_maximal_cartan(actions[name]).status is Status.YES, name


def test_unit_index_2a_max(actions):
    a = actions["example2a_max"]
    c = commutant_z_basis(a)
    ui = unit_index(a, unit_search(c, 50), 50)
    assert ui.index == 3 and ui.free_rank == 2 and ui.extra


def test_affine_reports_2b(actions):
    r = affine_report(actions["example2b_min"])
    assert (r.torsion_order, r.index) == (4, 4) and r.direct_product
    r = affine_report(actions["example2b_max"])
    assert (r.torsion_order, r.index) == (8, 16)
    # one extra unit permutes the three nonzero fixed points
    assert not r.direct_product


def test_affine_reports_3a_3b(actions):
    # |tors Z(a)| = 2 for all of these and Fix has order 2 (brute force in test_action)
    for name in ("example3a_principal", "example3a_second",
                 "example3b_principal", "example3b_L", "example3b_L2"):
        r = affine_report(actions[name])
        assert r.torsion_order == 4 and r.abstract_type == "Z^2 x Z/2 x Z/2", name


def test_affine_report_3c(actions):
    assert affine_report(actions["example3c_max"]).abstract_type == "Z^2 x Z/2 x Z/2 x Z/2"
