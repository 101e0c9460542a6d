from fractions import Fraction
import itertools

import numpy as np
import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from torusact import linalg
from torusact import poly as P

small = st.integers(-6, 6)


def int_matrices(rmin=1, rmax=4, cmin=1, cmax=4, square=False):
    @st.composite
    def build(draw):
        r = draw(st.integers(rmin, rmax))
        c = r if square else draw(st.integers(cmin, cmax))
        return tuple(tuple(draw(small) for _ in range(c)) for _ in range(r))
    return build()


@given(int_matrices(square=True))
def test_det_matches_sympy(m):
    assert linalg.det(m) == sympy.Matrix(m).det()


@given(int_matrices(square=True))
def test_charpoly_matches_sympy(m):
    x = sympy.Symbol("x")
    ref = sympy.Poly(sympy.Matrix(m).charpoly(x).as_expr(), x).all_coeffs()[::-1]
    assert linalg.charpoly(m) == P.poly([int(c) for c in ref])


@settings(max_examples=60)
@given(int_matrices(square=True))
def test_cayley_hamilton(m):
    f = linalg.charpoly(m)
    assert P.eval_poly_at_matrix(f, m) == linalg.zeros(len(m), len(m))


@given(int_matrices())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@given(int_matrices())
def test_nullspace_is_kernel(m):
    for v in linalg.nullspace(m):
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    assert len(linalg.nullspace(m)) == len(m[0]) - linalg.rank(m)


@given(int_matrices(square=True))
def test_inverse(m):
    if linalg.det(m) == 0:
        with pytest.raises(Exception):
            linalg.inverse(m)
        return
    assert linalg.matmul(m, linalg.inverse(m)) == linalg.identity(len(m))


def test_solve_rational():
    a = linalg.mat([[2, 1], [1, 3]])
    x, null = linalg.solve_rational(a, [[1], [2]])
    assert linalg.matmul(a, x) == linalg.mat([[1], [2]])
    assert null == []


@given(int_matrices())
def test_hnf_shape_and_transform(m):
    h, u = linalg.hnf_with_transform(m)
    assert linalg.matmul(u, m) == h
    assert abs(linalg.det(u)) == 1
    pivots = []
    for row in h:
        nz = [j for j, x in enumerate(row) if x]
        if nz:
            pivots.append(nz[0])
            assert row[nz[0]] > 0
    assert pivots == sorted(set(pivots))
    for r, j in enumerate(pivots):
        for i in range(r):
            assert 0 <= h[i][j] < h[r][j]


@settings(max_examples=60)
@given(int_matrices(), st.randoms(use_true_random=False))
def test_hnf_basis_invariance(m, rng):
    r = len(m)
    u = [list(row) for row in linalg.identity(r)]
    for _ in range(5):
        if r < 2:
            break
        i, j = rng.sample(range(r), 2)
        k = rng.choice([-2, -1, 1, 2])
        u[i] = [x + k * y for x, y in zip(u[i], u[j])]
    assert linalg.hnf(linalg.matmul(linalg.mat(u), m)) == linalg.hnf(m)


@given(int_matrices(rmax=4, cmax=5))
def test_snf(m):
    d, u, v = linalg.snf(m)
    diag = [[d[i] if i == j and i < len(d) else 0 for j in range(len(m[0]))] for i in range(len(m))]
    assert linalg.matmul(linalg.matmul(u, m), v) == linalg.mat(diag)
    assert abs(linalg.det(u)) == 1 and abs(linalg.det(v)) == 1
    nz = [x for x in d if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(d, d[1:]) if a)
    assert d[len(nz):] == (0,) * (len(d) - len(nz))
    if len(m) == len(m[0]):
        assert abs(linalg.det(m)) == np.prod(d, dtype=object)


@settings(max_examples=40)
@given(int_matrices(rmax=3, cmax=3))
def test_snf_matches_sympy(m):
    ref = smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
    want = sorted(abs(ref[i, i]) for i in range(min(ref.shape)))
    assert sorted(linalg.snf(m).d) == want


@given(int_matrices(rmax=5, cmax=3))
def test_integer_left_kernel_saturated(m):
    k = linalg.integer_left_kernel(m)
    for row in k:
        assert linalg.vecmat(row, m) == (0,) * len(m[0])
    assert len(k) == len(m) - linalg.rank(m)
    if k:
        # saturated: the elementary divisors of the kernel basis are all 1
        assert all(x == 1 for x in linalg.snf(k).d)


def test_lattice_reduce_same_lattice_and_short():
    basis = linalg.mat([[1, 0, 0, 12345], [0, 1, 0, 23456], [0, 0, 1, 34567], [0, 0, 0, 100000]])
    red = linalg.lattice_reduce(basis)
    assert linalg.lattice_hnf([[int(x) for x in r] for r in red]) == linalg.lattice_hnf(basis)
    assert min(sum(x * x for x in r) for r in red) < 100000 ** 2


def test_short_vectors_matches_brute_force():
    basis = linalg.mat([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    gram = linalg.identity(3)
    bound = 30
    found = set(linalg.short_vectors(basis, gram, bound))
    brute = set()
    for c in itertools.product(range(-8, 9), repeat=3):
        if any(c):
            v = linalg.vecmat(c, basis)
            if sum(x * x for x in v) <= bound:
                brute.add(c)
    assert found == brute


def test_box_vectors_order():
    v = linalg.box_vectors(2, 1)
    assert v[0] == (0, 0)
    assert len(v) == 9 and set(v) == set(itertools.product((-1, 0, 1), repeat=2))


def test_fractions_stay_exact():
    m = linalg.mat([[Fraction(1, 2), 1], [3, Fraction(2, 3)]])
    assert linalg.det(m) == Fraction(1, 3) - 3
