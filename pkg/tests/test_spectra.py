import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from torusact import linalg, spectra
from torusact import poly as P

from conftest import random_unimodular

CAT = linalg.mat([[2, 1], [1, 1]])
A3 = linalg.mat([[0, 1, 0], [0, 0, 1], [1, 8, 2]])


def test_roots_match_numpy():
    f = linalg.charpoly(A3)
    ours = spectra.roots(f).eigenvalues
    ref = np.sort_complex(np.linalg.eigvals(np.array(A3, dtype=float)))
    assert np.allclose(np.sort_complex(ours), ref, atol=1e-10)


def test_roots_repeated_factor():
    f = P.pmul(P.ppow(P.poly([-2, 1]), 2), P.poly([1, 0, 1]))
    ev = spectra.roots(f).eigenvalues
    assert len(ev) == 4
    assert np.sum(np.abs(ev - 2) < 1e-9) == 2


def test_ergodic_certificate():
    assert spectra.is_ergodic(CAT).ergodic
    rot = linalg.mat([[0, -1], [1, 0]])
    erg = spectra.is_ergodic(rot)
    assert not erg.ergodic and erg.cyclotomic_k == 4
    with pytest.raises(P.DomainError):
        spectra.is_ergodic(linalg.zeros(2, 2))


def test_ergodic_block_with_root_of_unity():
    m = linalg.block_diag(CAT, linalg.mat([[-1]]))
    assert spectra.is_ergodic(m).cyclotomic_k == 2


def test_hyperbolic():
    assert spectra.is_hyperbolic(CAT)
    assert spectra.is_hyperbolic(A3)
    assert not spectra.is_hyperbolic(linalg.identity(2))


def test_salem_not_hyperbolic():
    # Lehmer's polynomial has two roots on the unit circle and is not cyclotomic
    f = P.poly([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    m = P.companion(f)
    assert spectra.is_ergodic(m).ergodic
    assert not spectra.is_hyperbolic(m)


def test_entropy_values():
    golden = (1 + math.sqrt(5)) / 2
    assert spectra.entropy(CAT) == pytest.approx(2 * math.log(golden), abs=1e-12)
    ev = np.linalg.eigvals(np.array(A3, dtype=float))
    assert spectra.entropy(A3) == pytest.approx(float(np.sum(np.log(np.abs(ev[np.abs(ev) > 1])))),
                                                abs=1e-10)


def test_all_eigenvalues_real():
    assert spectra.all_eigenvalues_real(A3)
    assert not spectra.all_eigenvalues_real(linalg.mat([[0, -1], [1, 1]]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 4))
def test_entropy_inverse_symmetry(seed, n):
    import random
    m = random_unimodular(n, random.Random(seed), steps=8)
    assert spectra.entropy(m) == pytest.approx(spectra.entropy(linalg.int_inverse(m)), abs=1e-9)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 4))
def test_entropy_of_powers(seed, k):
    import random
    m = random_unimodular(3, random.Random(seed), steps=6)
    assert spectra.entropy(linalg.matpow(m, k)) == pytest.approx(k * spectra.entropy(m),
                                                                  rel=1e-9, abs=1e-9)
