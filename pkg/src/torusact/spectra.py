"""Eigenvalues of integer matrices with exact ergodicity and hyperbolicity screens."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import linalg
from . import poly as P

TOL_UNIT_CIRCLE = 1e-9


class RootFindingError(ArithmeticError):
    pass


class Spectrum(NamedTuple):
    eigenvalues: np.ndarray
    residual: float


class Ergodicity(NamedTuple):
    ergodic: bool
    cyclotomic_k: int | None
    checked: tuple[int, ...]


def _aberth(coeffs: np.ndarray, max_iter: int = 10_000, target: float = 1e-12):
    """Aberth-Ehrlich iteration for a squarefree monic polynomial (ascending coeffs)."""
    n = len(coeffs) - 1
    desc = coeffs[::-1]
    ddesc = np.polyder(desc)
    radius = 1.0 + float(np.max(np.abs(coeffs[:-1])))
    z = radius * np.exp(1j * (2 * np.pi * np.arange(n) / n + 0.4))
    absc = np.abs(desc)

    def rel_residual(pts):
        scale = np.polyval(absc, np.abs(pts))
        return np.abs(np.polyval(desc, pts)) / scale

    for it in range(max_iter):
        pz = np.polyval(desc, z)
        dpz = np.polyval(ddesc, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = pz / dpz
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = np.sum(1.0 / diff, axis=1)
            step = ratio / (1 - ratio * s)
        step = np.where(np.isfinite(step), step, 0)
        z = z - step
        if np.all(np.abs(step) <= 1e-15 * np.maximum(1, np.abs(z))) or \
                np.max(rel_residual(z)) < 1e-15:
            break
    res = float(np.max(rel_residual(z)))
    if res >= target:
        raise RootFindingError(
            f"root finder stalled after {it + 1} iterations (residual {res:.3g})")
    return z, res


def roots(p) -> Spectrum:
    """All complex roots of p with multiplicity, sorted by (real, imag).

    Each squarefree factor is solved separately so repeated roots do not slow
    the iteration. Factors that Sturm's theorem shows to be totally real get
    their imaginary parts zeroed.
    """
    p = P.poly(p)
    if P.degree(p) < 1:
        raise P.DomainError("roots needs degree >= 1")
    vals, worst = [], 0.0
    for f, mult in P.squarefree_decomposition(p):
        c = np.array([float(x) for x in f])
        if len(c) == 2:
            z, res = np.array([-c[0] + 0j]), 0.0
        else:
            z, res = _aberth(c)
            if P.sturm_real_root_count(f) == P.degree(f):
                z = z.real + 0j
        worst = max(worst, res)
        vals.extend(list(z) * mult)
    ev = np.array(sorted(vals, key=lambda v: (round(v.real, 12), round(v.imag, 12))))
    return Spectrum(ev, worst)


def is_ergodic(m) -> Ergodicity:
    """Exact test: no eigenvalue is a root of unity.

    gcd(charpoly, Phi_k) is computed for every k with phi(k) <= n, which
    covers every root of unity an n x n matrix can have.
    """
    if linalg.det(m) == 0:
        raise P.DomainError("matrix is singular")
    f = linalg.charpoly(m)
    ks = tuple(P.cyclotomic_indices(len(m)))
    for k in ks:
        if P.degree(P.pgcd(f, P.cyclotomic(k))) > 0:
            return Ergodicity(False, k, ks)
    return Ergodicity(True, None, ks)


def is_hyperbolic(m, tol: float = TOL_UNIT_CIRCLE) -> bool:
    """No eigenvalue of modulus one.

    Cyclotomic factors are excluded exactly. Unit-circle roots that are not
    roots of unity only occur in self-reciprocal factors (Salem type), so the
    numeric modulus test is applied to the remaining factors.
    """
    f = linalg.charpoly(m)
    if P.degree(f) == 0:
        return True
    for k in P.cyclotomic_indices(len(m)):
        if P.degree(P.pgcd(f, P.cyclotomic(k))) > 0:
            return False
    for g, _ in P.factor_q(f):
        if not P.is_self_reciprocal(g):
            continue
        ev = roots(g).eigenvalues
        if np.any(np.abs(np.abs(ev) - 1) <= tol):
            return False
    return True


def entropy(m) -> float:
    """Topological entropy: sum of log|lambda| over eigenvalues outside the unit circle."""
    if linalg.det(m) == 0:
        raise P.DomainError("matrix is singular")
    f = linalg.charpoly(m)
    total = 0.0
    for g, mult in P.squarefree_decomposition(f):
        for h, _ in P.factor_q(g):
            if _is_cyclotomic(h):
                continue
            ev = roots(h).eigenvalues
            total += mult * float(np.sum(np.log(np.abs(ev[np.abs(ev) > 1]))))
    return total


def _is_cyclotomic(h) -> bool:
    n = P.degree(h)
    return any(P.monic(h) == P.cyclotomic(k) for k in P.cyclotomic_indices(n)
               if P.totient(k) == n)


def all_eigenvalues_real(m) -> bool:
    """Exact: every root of the characteristic polynomial is real (Sturm count)."""
    f = linalg.charpoly(m)
    return P.sturm_real_root_count(f) == P.degree(P.squarefree_part(f))

