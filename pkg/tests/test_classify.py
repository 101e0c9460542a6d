import random

import pytest
from hypothesis import given, settings, strategies as st

from torusact import linalg
from torusact.action import Status, new_action
from torusact.classify import (centralizer_transitive, compare, conjugate_over_q, conjugate_over_z,
                               cyclicity, ideal_equivalent, intertwiners, is_square_mod2,
                               lm_ideal_of_matrix, modular_obstruction, orbit_form,
                               square_root_mod2, time_change, time_change_equivalent_q)
from torusact.numberfield import LatticeBasis, NumberField, action_field

from conftest import conjugate, random_unimodular

V2A = linalg.mat([[2, -2, -1], [0, -3, 0], [1, -4, -2]])
M2B = linalg.mat([[0, -2, 1], [-1, -5, 3], [-2, -9, 6]])
F3A = (-1, -8, -2, 1)


@pytest.fixture(scope="module")
def k3a():
    return NumberField(F3A)


def _units(field_block):
    k = field_block.field
    return k, field_block.unit_elements(k)


def test_intertwiners_contain_printed_conjugator(actions):
    a, b = actions["example2a_min"], actions["example2a_max"]
    for ga, gb in zip(a.generators, b.generators):
        assert linalg.matmul(linalg.matmul(V2A, ga), linalg.inverse(V2A)) == gb
    # V A = A' V, so vec(V) lies in the solution space found
    sols = [tuple(x for row in v for x in row) for v in intertwiners(a, b)]
    flat = tuple(x for row in V2A for x in row)
    assert linalg.rank(sols + [flat]) == len(sols) == 3


def test_conjugate_over_q(actions):
    a, b = actions["example2a_min"], actions["example2a_max"]
    v = conjugate_over_q(a, b)
    assert v.status is Status.YES
    for ga, gb in zip(a.generators, b.generators):
        assert linalg.matmul(linalg.matmul(v.witness, ga), linalg.inverse(v.witness)) == gb
    assert conjugate_over_q(a, a).witness == linalg.identity(3)
    assert conjugate_over_q(actions["example1_alpha2"], actions["example1_alpha_x_alpha"]).status \
        is Status.NO


def test_conjugate_over_z_identity_and_conjugated_copy(actions):
    a = actions["example3a_second"]
    assert conjugate_over_z(a, a).witness == linalg.identity(3)
    w = linalg.mat([[1, 2, 0], [0, 1, 1], [1, 2, 1]])
    assert abs(linalg.det(w)) == 1
    b = new_action([conjugate(g, w) for g in a.generators])
    v = conjugate_over_z(a, b)
    assert v.status is Status.YES
    assert abs(linalg.det(v.witness)) == 1
    for ga, gb in zip(a.generators, b.generators):
        assert conjugate(ga, v.witness) == gb


def test_conjugate_over_z_3a_obstruction(actions):
    v = conjugate_over_z(actions["example3a_principal"], actions["example3a_second"])
    assert v.status is Status.NO
    assert "ideal classes" in [name for name, _ in v.certificate]


def test_single_matrices_2b(corpus):
    a = new_action([corpus["example2b_min"].generators[0]])
    b = new_action([corpus["example2b_max"].generators[0]])
    v = conjugate_over_z(a, b)
    assert v.status is Status.NO
    assert "squares mod 2" in [name for name, _ in v.certificate]


def test_squares_mod2(corpus):
    assert is_square_mod2(linalg.identity(3))
    a = corpus["example2b_min"].generators[0]
    root, checked = square_root_mod2(a)
    assert root is None and checked == 512
    a2 = corpus["example2b_max"].generators[0]
    assert linalg.matmul(M2B, M2B) == a2
    root, _ = square_root_mod2(a2)
    sq = linalg.matmul(root, root)
    assert all((x - y) % 2 == 0 for r1, r2 in zip(sq, a2) for x, y in zip(r1, r2))


def test_cyclicity_2a(actions):
    v = cyclicity(actions["example2a_min"])
    assert v.status is Status.YES and v.witness == (1, 0, 0)
    v = cyclicity(actions["example2a_max"])
    assert v.status is Status.NO and v.certificate["prime"] == 3


def test_orbit_form_2a_max(corpus):
    g = corpus["example2a_max"].generators[0]
    form = orbit_form([linalg.matpow(g, k) for k in range(3)], 3)
    want = {(3, 0, 0): 3, (2, 0, 1): 18, (1, 2, 0): -9, (1, 1, 1): -9, (1, 0, 2): 27,
            (0, 3, 0): 3, (0, 1, 2): -9, (0, 0, 3): 3}
    assert form == want or form == {e: -c for e, c in want.items()}
    assert modular_obstruction(form, 3) == 3


def test_cyclicity_3c(actions):
    assert cyclicity(actions["example3c_min"]).status is Status.YES
    v = cyclicity(actions["example3c_max"])
    assert v.status is Status.NO


def test_centralizer_transitive(actions):
    assert centralizer_transitive(actions["example2a_max"]).status is Status.YES
    assert centralizer_transitive(actions["example3a_second"]).status is Status.NO
    assert centralizer_transitive(new_action([linalg.identity(2)])).status is Status.NO


def test_lm_ideal_classes(corpus, k3a):
    units = corpus["example3a_principal"].field.unit_elements(k3a)
    principal = k3a.power_basis
    comp = lm_ideal_of_matrix(linalg.transpose(corpus["example3a_principal"].generators[0]), k3a)
    assert ideal_equivalent(principal, comp, units).status is Status.YES
    second = lm_ideal_of_matrix(linalg.transpose(corpus["example3a_second"].generators[0]), k3a)
    lat = LatticeBasis(k3a, [[2, 0, 0], [1, 1, 0], [1, 0, 1]])
    assert ideal_equivalent(lat, second, units).status is Status.YES
    v = ideal_equivalent(principal, lat, units)
    assert v.status is Status.NO and v.certificate["candidates"] > 0


def test_ideal_classes_3b(corpus):
    fb = corpus["example3b_principal"].field
    k = fb.field
    units = fb.unit_elements(k)
    lats = [fb.lattice_basis(n, k) for n in sorted(fb.lattices)]
    assert len(lats) == 3
    for i in range(3):
        for j in range(3):
            st_ = ideal_equivalent(lats[i], lats[j], units).status
            assert st_ is (Status.YES if i == j else Status.NO)


def test_lm_conjugation_invariance(corpus, k3a):
    units = corpus["example3a_principal"].field.unit_elements(k3a)
    a = corpus["example3a_second"].generators[0]
    base = lm_ideal_of_matrix(linalg.transpose(a), k3a)
    rng = random.Random(11)
    for _ in range(20):
        w = random_unimodular(3, rng, steps=5)
        lat = lm_ideal_of_matrix(linalg.transpose(conjugate(a, w)), k3a)
        assert ideal_equivalent(base, lat, units).status is Status.YES


def test_time_change(actions):
    a = actions["example3a_principal"]
    v = time_change_equivalent_q(a, a)
    assert v.status is Status.YES
    assert time_change_equivalent_q(a, actions["example3a_second"]).witness[0] == ((1, 0), (0, 1))
    sq = new_action([linalg.matpow(a.generators[0], 2), a.generators[1]])
    assert time_change_equivalent_q(a, sq).status is Status.NO
    c = ((2, 1), (1, 1))
    v = time_change_equivalent_q(a, time_change(a, c))
    assert v.status is Status.YES and v.witness[0] == c


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(["example2a_min", "example2a_max", "example3c_max"]),
       st.sampled_from([((1, 1), (0, 1)), ((0, 1), (1, 0)), ((2, 1), (1, 1)), ((1, 0), (-3, -1))]))
def test_cyclicity_invariant_under_time_change(name, c):
    from torusact.io import load_corpus_entry
    a = load_corpus_entry(name).action()
    assert cyclicity(time_change(a, c)).status is cyclicity(a).status


def test_verdict_chain_all_pairs(pair_reports):
    for r in pair_reports.values():
        assert r.chain_ok()


def test_compare_orders(pair_reports):
    r = pair_reports[("example2a_min", "example2a_max")]
    assert r.distinguished_by == "cyclicity"
    r = pair_reports[("example2b_min", "example2b_max")]
    assert "fixed points" in r.distinguishing
    r = pair_reports[("example3b_L", "example3b_L2")]
    assert r.distinguishing == ["ideal class"]
    r = pair_reports[("example1_alpha3_x_alpha", "example1_alpha2_x_alpha2")]
    assert r.entropy_equal and r.time_change_q.status is Status.NO
