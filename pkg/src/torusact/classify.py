"""Conjugacy, cyclicity and ideal classes of actions, and pairwise comparison.

For an irreducible action the generators are multiplication by units on a
lattice L in K. Two such actions with the same units are GL(n,Z)-conjugate
exactly when their lattices differ by a scalar of K, which is decided by a
short-vector search in the colon lattice (J : I).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from . import poly as P
from .action import (Status, Verdict, ZdAction, entropy_function, fixed_points, is_cartan,
                     is_irreducible, new_action, rho)
from .centralizer import commutant_z_basis, is_maximal_cartan
from .numberfield import LatticeBasis, NFElement, NumberField, action_field, eigenvector

SEARCH_BOUND = 10
CYCLIC_BOX = 5
MODULAR_PRIMES = (2, 3, 5, 7)


# --- lattices in K --------------------------------------------------------------

class IdealLattice(LatticeBasis):
    """A lattice closed under multiplication by lam (a Z[lam]-module)."""

    def __init__(self, field: NumberField, rows):
        super().__init__(field, rows)
        if not self.is_module_over(field.gen):
            raise P.DomainError("lattice is not closed under multiplication by lam")

    @property
    def norm(self) -> Fraction:
        """Index relative to Z[lam] (covolume in power-basis coordinates)."""
        return self.covolume()


def colon_lattice(i: LatticeBasis, j: LatticeBasis) -> LatticeBasis:
    """(J : I) = {x in K : x I subset J}, computed through a Smith normal form."""
    n = i.field.n
    lam = i.field.gen
    cols = []
    for b in i.elements:
        # row k: coordinates in J of lam^k * b
        cols.append([j.coords(b * lam ** k) for k in range(n)])
    m = [sum((list(cols[t][k]) for t in range(n)), []) for k in range(n)]
    den = math.lcm(*(Fraction(v).denominator for row in m for v in row))
    ints = [[int(v * den) for v in row] for row in m]
    res = linalg.snf(ints)
    rows = [tuple(Fraction(den, dk) * u for u in res.U[k]) for k, dk in enumerate(res.d)]
    return LatticeBasis(i.field, rows)


def multiplier_ring(lat: LatticeBasis) -> LatticeBasis:
    return colon_lattice(lat, lat)


def minkowski_gram(field: NumberField) -> list:
    """Gram matrix of sum_k |phi_k(x)|^2 on power-basis coordinates."""
    r = field.roots
    pw = np.array([r ** a for a in range(field.n)])
    g = (pw @ pw.conj().T).real
    return [[float(v) for v in row] for row in g]


def _root_logs(x: NFElement) -> np.ndarray:
    return np.log(np.abs(x.embed()))


def _reduce_logs(logs: np.ndarray) -> np.ndarray:
    """LLL-reduce log vectors of units; shorter vectors give a smaller search radius."""
    if len(logs) == 0:
        return logs
    red = linalg.lattice_reduce([list(map(float, v)) for v in logs])
    return np.array([[float(t) for t in row] for row in red])


def ideal_equivalent(i: LatticeBasis, j: LatticeBasis, units) -> Verdict:
    """Decide whether J = x I for some x in K.

    Any such x lies in H = (J : I) and has |N(x)| = covol(J)/covol(I).
    Multiplying x by a unit from the finite-index subgroup generated by
    ``units`` brings log|phi_k(x)| within half the unit parallelepiped of
    (1/n) log t, so an exhaustive Fincke-Pohst enumeration of H up to
    R = sum_k t^(2/n) exp(sum_j |log|phi_k(u_j)||) decides the question.
    """
    if i.field != j.field:
        raise P.DomainError("lattices live in different fields")
    field = i.field
    n = field.n
    units = list(units)
    r1, r2 = field.signature
    logs = np.array([_root_logs(u) for u in units]) if units else np.zeros((0, n))
    if len(units) == 0 or np.linalg.matrix_rank(logs, tol=1e-8) < r1 + r2 - 1:
        if r1 + r2 - 1 > 0:
            return Verdict(Status.NOT_VERIFIED, detail="units do not have full rank")
    target = j.covolume() / i.covolume()
    h = colon_lattice(i, j)
    if r1 + r2 - 1 > 0:
        logs = _reduce_logs(logs[:, :])
        keep = logs[np.linalg.norm(logs, axis=1) > 1e-9]
        spread = np.sum(np.abs(keep), axis=0)
    else:
        spread = np.zeros(n)
    radius = float(np.sum(float(target) ** (2.0 / n) * np.exp(spread)))
    gram = minkowski_gram(field)
    basis = linalg.lattice_reduce([[float(v) for v in row] for row in h.matrix], gram)
    # exact coordinates of the reduced basis, recovered by rounding into H
    hinv = linalg.inverse(h.matrix)
    exact = []
    for row in basis:
        c = [round(float(t)) for t in linalg.vecmat([Fraction(v) for v in row], hinv)]
        exact.append(linalg.vecmat(c, h.matrix))
    cands = linalg.short_vectors(exact, gram, radius, slack=1e-6)
    for cvec in sorted(cands, key=lambda c: (sum(abs(t) for t in c), c)):
        x = NFElement(field, linalg.vecmat(cvec, exact))
        if abs(x.norm()) == target:
            if all(x * b in j for b in i.elements):
                return Verdict(Status.YES, witness=x)
    return Verdict(Status.NO, certificate={"radius": radius, "candidates": len(cands)},
                   detail="no element of the colon lattice has the required norm")


def lm_ideal_of_matrix(m, field: NumberField) -> IdealLattice:
    """The lattice spanned by the entries of a lam-eigenvector of m (column convention)."""
    if linalg.charpoly(m) != field.f:
        raise P.DomainError("characteristic polynomial does not match the field")
    v = eigenvector(m, field)
    return IdealLattice(field, [e.coeffs for e in v])


# --- conjugacy ---------------------------------------------------------------------

def intertwiners(a: ZdAction, b: ZdAction) -> list:
    """Rational basis of {V : V A_i = B_i V for all i}."""
    n = a.n
    rows = []
    for ga, gb in zip(a.generators, b.generators):
        for r in range(n):
            for c in range(n):
                # (V A - B V)[r][c] = sum_k V[r][k] A[k][c] - sum_k B[r][k] V[k][c]
                eq = [0] * (n * n)
                for k in range(n):
                    eq[r * n + k] += ga[k][c]
                    eq[k * n + c] -= gb[r][k]
                rows.append(eq)
    ker = linalg.nullspace(rows)
    out = []
    for v in ker:
        p = linalg.primitive_integer_vector(v)
        out.append(tuple(tuple(p[i * n:(i + 1) * n]) for i in range(n)))
    return out


def _combos(basis, bound: int, limit: int = 200_000):
    k = len(basis)
    count = 0
    for coeffs in linalg.box_vectors(k, bound):
        if not any(coeffs) or next(c for c in coeffs if c) < 0:
            continue
        count += 1
        if count > limit:
            return
        m = linalg.zeros(len(basis[0]), len(basis[0]))
        for c, b in zip(coeffs, basis):
            if c:
                m = linalg.matadd(m, linalg.scale(c, b))
        yield m


def conjugate_over_q(a: ZdAction, b: ZdAction, bound: int = SEARCH_BOUND) -> Verdict:
    """Search for invertible rational V with V A_i V^-1 = B_i."""
    if a.n != b.n or a.d != b.d:
        return Verdict(Status.NO, detail="different torus dimension or rank")
    if a == b:
        return Verdict(Status.YES, witness=linalg.identity(a.n))
    if any(linalg.charpoly(x) != linalg.charpoly(y) for x, y in zip(a.generators, b.generators)):
        return Verdict(Status.NO, detail="characteristic polynomials differ")
    sols = intertwiners(a, b)
    if not sols:
        return Verdict(Status.NO, detail="no nonzero intertwiner")
    if is_irreducible(a):
        return Verdict(Status.YES, witness=sols[0],
                       detail="irreducible: every nonzero intertwiner is invertible")
    for v in _combos(sols, bound):
        if linalg.det(v) != 0:
            return Verdict(Status.YES, witness=v)
    return Verdict(Status.NOT_VERIFIED, detail=f"no invertible intertwiner with coefficients <= {bound}")


def square_root_mod2(m):
    """(X, checked): some X over F_2 with X^2 = m mod 2, or None, by exhaustive enumeration."""
    n = len(m)
    if n > 4:
        raise ValueError("exhaustive square-root search supports n <= 4")
    target = np.array(m, dtype=np.int64) % 2
    bits = (np.arange(2 ** (n * n))[:, None] >> np.arange(n * n)[::-1]) & 1
    xs = bits.reshape(-1, n, n)
    sq = np.einsum("kij,kjl->kil", xs, xs) % 2
    hit = np.flatnonzero(np.all(sq == target, axis=(1, 2)))
    if len(hit):
        return tuple(tuple(int(v) for v in row) for row in xs[hit[0]]), len(xs)
    return None, len(xs)


def is_square_mod2(m) -> bool:
    return square_root_mod2(m)[0] is not None


def _matched_fields(a: ZdAction, b: ZdAction):
    """Field data for a and b taken from the same witness element."""
    va = is_irreducible(a)
    if not va:
        return None
    fa = action_field(a, va.witness)
    fb = action_field(b, va.witness)
    return fa, fb


def conjugate_over_z(a: ZdAction, b: ZdAction, bound: int = 3) -> Verdict:
    """GL(n,Z)-conjugacy of the generator tuples.

    For irreducible actions the lattice-class test decides completely and is
    the stated reason. Every obstruction found (ideal class, squares mod 2,
    fixed points, cyclicity) is listed in the certificate. Otherwise integer intertwiners with small
    coefficients are tried.
    """
    if a == b:
        return Verdict(Status.YES, witness=linalg.identity(a.n))
    q = conjugate_over_q(a, b)
    if q.status is Status.NO:
        return Verdict(Status.NO, detail=f"not conjugate over Q ({q.detail})")
    found, witness = [], None
    matched = _matched_fields(a, b) if q.status is Status.YES else None
    if matched is not None and matched[0].units == matched[1].units:
        fda, fdb = matched
        eq = ideal_equivalent(fda.lattice, fdb.lattice, fda.units)
        if eq.status is Status.NO:
            found.append(("ideal classes", eq.certificate))
        elif eq.status is Status.YES:
            witness = _conjugator_from_multiplier(eq.witness, fda, fdb)
    if a.n <= 4:
        for i, (x, y) in enumerate(zip(a.generators, b.generators)):
            sx, sy = is_square_mod2(x), is_square_mod2(y)
            if sx != sy:
                found.append(("squares mod 2", {"generator": i, "squares": (sx, sy)}))
                break
    fa, fb = fixed_points(a).order, fixed_points(b).order
    if fa != fb:
        found.append(("fixed-point orders", (fa, fb)))
    ca, cb = cyclicity(a), cyclicity(b)
    if {ca.status, cb.status} == {Status.YES, Status.NO}:
        found.append(("cyclicity types", (ca.status.value, cb.status.value)))
    if found:
        # the class test is complete, so it alone is the reason when it fired
        named = found[:1] if found[0][0] == "ideal classes" else found
        return Verdict(Status.NO, certificate=found,
                       detail="; ".join(f"{name} differ" for name, _ in named))
    if witness is not None:
        return Verdict(Status.YES, witness=witness, detail="lattices differ by a scalar")
    for v in _combos(intertwiners(a, b), bound):
        if abs(linalg.det(v)) == 1:
            return Verdict(Status.YES, witness=v)
    return Verdict(Status.NOT_VERIFIED, detail=f"no unimodular intertwiner with coefficients <= {bound}")


def _conjugator_from_multiplier(y: NFElement, fda, fdb):
    """V in GL(n,Z) with V A V^-1 = B, from y with y L_a = L_b."""
    t = [fdb.lattice.coords(y * e) for e in fda.eigenvector]
    t = tuple(tuple(int(c) for c in row) for row in t)
    return linalg.int_inverse(t)


# --- cyclicity ---------------------------------------------------------------------

def lattice_closure(rows, mats) -> tuple:
    """Smallest lattice containing ``rows`` and stable under right multiplication by ``mats``."""
    cur = linalg.lattice_hnf(rows)
    while True:
        new = list(cur) + [linalg.vecmat(r, m) for r in cur for m in mats]
        nxt = linalg.lattice_hnf(new)
        if nxt == cur:
            return cur
        cur = nxt


def action_ring(a: ZdAction) -> list:
    """Z-basis of the matrix ring Z[A_i, A_i^-1]."""
    n = a.n
    flat_mats = []
    for g in list(a.generators) + list(a.inverses):
        # X -> X g on flattened X
        big = linalg.block_diag(*[g] * n)
        flat_mats.append(big)
    eye = [x for row in linalg.identity(n) for x in row]
    basis = lattice_closure([eye], flat_mats)
    return [tuple(tuple(int(v) for v in r[i * n:(i + 1) * n]) for i in range(n)) for r in basis]


def orbit_lattice(a: ZdAction, v) -> tuple:
    """HNF of the Z-span of the orbit of v under the generators and their inverses."""
    return lattice_closure([tuple(v)], list(a.generators) + list(a.inverses))


def _orbit_index(lat) -> int:
    if len(lat) < len(lat[0]):
        return 0
    return abs(linalg.det(lat))


def orbit_form(ring, n: int) -> dict:
    """The degree-n form F(v) = det(v R_1, ..., v R_n) as {exponent tuple: coefficient}."""
    if len(ring) != n:
        raise ValueError("orbit form needs a ring of rank n")
    # entry (j, c) of the matrix is the linear form sum_i v_i R_j[i][c]
    lin = [[{tuple(int(t == i) for t in range(n)): r[i][c] for i in range(n) if r[i][c]}
            for c in range(n)] for r in ring]
    total: dict = {}
    for perm in itertools.permutations(range(n)):
        sign = (-1) ** sum(1 for x, y in itertools.combinations(perm, 2) if x > y)
        term = {tuple([0] * n): sign}
        for j, c in enumerate(perm):
            nxt: dict = {}
            for e1, c1 in term.items():
                for e2, c2 in lin[j][c].items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    nxt[e] = nxt.get(e, 0) + c1 * c2
            term = nxt
        for e, c in term.items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in sorted(total.items(), reverse=True) if c}


def eval_form(form: dict, v) -> int:
    return sum(c * math.prod(x ** k for x, k in zip(v, e)) for e, c in form.items())


def modular_obstruction(form: dict, n: int, primes=MODULAR_PRIMES):
    """Smallest p such that F vanishes at every point of F_p^n, or None."""
    for p in primes:
        if all(eval_form(form, v) % p == 0 for v in itertools.product(range(p), repeat=n)):
            return p
    return None


def _form_search(ring, n: int, box: int):
    """Vectors v with |det(v R_1..v R_n)| = 1, vectorized over a box."""
    r = np.array(ring, dtype=float)  # (n, n, n): j, i, c
    grids = np.meshgrid(*[np.arange(-box, box + 1)] * n, indexing="ij")
    vs = np.stack([g.ravel() for g in grids], axis=1)
    vs = vs[np.argsort(np.abs(vs).max(axis=1), kind="stable")]
    mats = np.einsum("ki,jic->kjc", vs.astype(float), r)
    dets = np.linalg.det(mats)
    hit = np.flatnonzero(np.abs(np.abs(dets) - 1) < 1e-6)
    return [tuple(int(t) for t in vs[h]) for h in hit]


def cyclicity(a: ZdAction, box: int = CYCLIC_BOX, units_decide: bool = True) -> Verdict:
    """Is there v in Z^n whose orbit under the action spans Z^n?

    Witnesses are searched with the orbit form det(v R_1, ..., v R_n) over a
    Z-basis R_j of the ring Z[A_i^+-1] and confirmed by the orbit-lattice
    fixpoint. Non-cyclicity is certified by the form vanishing identically mod
    a small prime, or, for irreducible actions, by the eigenvector lattice not
    being a scalar multiple of the ring generated by the units.
    """
    n = a.n
    for j in range(n):
        e = tuple(int(i == j) for i in range(n))
        if _orbit_index(orbit_lattice(a, e)) == 1:
            return Verdict(Status.YES, witness=e)
    ring = action_ring(a)
    if len(ring) == n:
        form = orbit_form(ring, n)
        p = modular_obstruction(form, n)
        if p is not None:
            return Verdict(Status.NO, certificate={"prime": p, "form": form},
                           detail=f"orbit form vanishes identically mod {p}")
        if (2 * box + 1) ** n <= 3_000_000:
            for v in _form_search(ring, n, box):
                if _orbit_index(orbit_lattice(a, v)) == 1:
                    return Verdict(Status.YES, witness=v)
        if units_decide and is_irreducible(a):
            af = action_field(a)
            order = _unit_order(af)
            eq = ideal_equivalent(order, af.lattice, af.units)
            if eq.status is Status.YES:
                v = tuple(int(c) for c in af.lattice.coords(eq.witness))
                if _orbit_index(orbit_lattice(a, v)) == 1:
                    return Verdict(Status.YES, witness=v)
            if eq.status is Status.NO:
                return Verdict(Status.NO, certificate={"ideal class": eq.certificate},
                               detail="lattice is not a scalar multiple of the unit ring")
    return Verdict(Status.NOT_VERIFIED, detail=f"no cyclic vector in box {box} and no obstruction")


def _unit_order(af) -> LatticeBasis:
    """Z[mu_1^+-1, ..., mu_d^+-1] as a lattice in K."""
    gens = [x for u in af.units for x in (u, u.inverse())]
    cur = rational_lattice_hnf([af.field.one.coeffs])
    while True:
        elems = [NFElement(af.field, r) for r in cur]
        nxt = rational_lattice_hnf([e.coeffs for e in elems] +
                                   [(e * g).coeffs for e in elems for g in gens])
        if nxt == cur:
            return LatticeBasis(af.field, cur)
        cur = nxt


def rational_lattice_hnf(rows) -> tuple:
    """Canonical basis of the Z-span of rational rows."""
    den = math.lcm(*(Fraction(v).denominator for row in rows for v in row))
    ints = [[int(Fraction(v) * den) for v in row] for row in rows]
    return linalg.mat([[Fraction(v, den) for v in row] for row in linalg.lattice_hnf(ints)])


def centralizer_transitive(a: ZdAction, box: int = 3) -> Verdict:
    """Does some v have {v X : X in C(a)} = Z^n?

    Reducible actions get NO. For irreducible actions this holds exactly when
    the eigenvector lattice is a scalar multiple of its multiplier ring.
    """
    irr = is_irreducible(a)
    if irr.status is Status.NO:
        return Verdict(Status.NO, certificate=irr.certificate, detail="reducible")
    n = a.n
    c = commutant_z_basis(a)
    if c.rank == n:
        for v in _form_search(list(c.basis), n, box):
            return Verdict(Status.YES, witness=v)
        p = modular_obstruction(orbit_form(list(c.basis), n), n)
        if p is not None:
            return Verdict(Status.NO, certificate={"prime": p},
                           detail=f"commutant orbit form vanishes identically mod {p}")
    if irr:
        af = action_field(a, irr.witness)
        ring = multiplier_ring(af.lattice)
        eq = ideal_equivalent(ring, af.lattice, af.units)
        if eq.status is Status.YES:
            v = tuple(int(t) for t in af.lattice.coords(eq.witness))
            return Verdict(Status.YES, witness=v)
        if eq.status is Status.NO:
            return Verdict(Status.NO, certificate={"ideal class": eq.certificate},
                           detail="lattice is not principal over its multiplier ring")
    return Verdict(Status.NOT_VERIFIED, detail="no witness and no obstruction")


# --- time change --------------------------------------------------------------------

def time_change(a: ZdAction, c) -> ZdAction:
    """The action n -> a(C n): generator j is rho_a(column j of C)."""
    d = a.d
    return new_action([rho(a, tuple(c[i][j] for i in range(d))) for j in range(d)])


def time_change_equivalent_q(a: ZdAction, b: ZdAction) -> Verdict:
    """Is b conjugate over Q to a(C .) for some C in GL(d,Z)?

    Each matching of the Lyapunov functionals of b to those of a determines C
    through L_b = L_a C; integral unimodular candidates are confirmed by an
    exact rational conjugacy check.
    """
    if a.n != b.n or a.d != b.d:
        return Verdict(Status.NO, detail="different torus dimension or rank")
    la, lb = a.lyapunov, b.lyapunov
    if sorted(la.multiplicities) != sorted(lb.multiplicities):
        return Verdict(Status.NO, detail="Lyapunov multiplicities differ")
    xa, xb = la.exponents, lb.exponents
    if np.linalg.matrix_rank(xa, tol=1e-8) < a.d:
        return Verdict(Status.NOT_VERIFIED, detail="Lyapunov functionals do not have full rank")
    r = len(la.multiplicities)
    seen = set()
    for perm in itertools.permutations(range(r)):
        if any(la.multiplicities[k] != lb.multiplicities[perm[k]] for k in range(r)):
            continue
        target = xb[list(perm)]
        c, *_ = np.linalg.lstsq(xa, target, rcond=None)
        ci = np.rint(c)
        if np.max(np.abs(c - ci)) > 1e-6 or np.max(np.abs(xa @ ci - target)) > 1e-6:
            continue
        cm = tuple(tuple(int(v) for v in row) for row in ci)
        if cm in seen or abs(linalg.det(cm)) != 1:
            continue
        seen.add(cm)
        q = conjugate_over_q(time_change(a, cm), b)
        if q:
            return Verdict(Status.YES, witness=(cm, q.witness))
    return Verdict(Status.NO, detail="no matching of Lyapunov functionals gives a conjugate time change")


# --- comparison -------------------------------------------------------------------

INVARIANT_ORDER = ("entropy function", "rational conjugacy", "cyclicity", "fixed points",
                   "centralizer", "ideal class")


@dataclass
class ComparisonReport:
    same_shape: bool
    entropy_equal: bool | None
    entropy_deviation: float | None
    q_conjugate: Verdict
    z_conjugate: Verdict
    time_change_q: Verdict
    cyclicity: tuple
    fixed_points: tuple
    commutant_ranks: tuple
    maximality: tuple
    ideal_classes: Verdict | None
    distinguishing: list = field(default_factory=list)

    @property
    def distinguished_by(self) -> str | None:
        return self.distinguishing[0] if self.distinguishing else None

    @property
    def weakly_isomorphic(self) -> Status:
        return self.time_change_q.status

    def chain_ok(self) -> bool:
        """Z-conjugate implies Q-conjugate implies equal entropy functions."""
        if self.z_conjugate.status is Status.YES and self.q_conjugate.status is not Status.YES:
            return False
        if self.q_conjugate.status is Status.YES and self.entropy_equal is False:
            return False
        return True


def _entropy_grid(a: ZdAction, b: ZdAction, box: int = 3) -> float:
    dev = 0.0
    for nvec in linalg.box_vectors(a.d, box):
        dev = max(dev, abs(entropy_function(a, nvec) - entropy_function(b, nvec)))
    return dev


def _maximality(a: ZdAction):
    if not is_cartan(a):
        return None
    return is_maximal_cartan(a).status


def compare(a: ZdAction, b: ZdAction) -> ComparisonReport:
    """All invariants of the pair, with the differing ones listed in a fixed order."""
    same = a.n == b.n and a.d == b.d
    dev = _entropy_grid(a, b) if a.d == b.d else None
    ent_eq = None if dev is None else dev <= 1e-8
    q = conjugate_over_q(a, b)
    tc = time_change_equivalent_q(a, b) if same else Verdict(Status.NO, detail="shapes differ")
    cyc = (cyclicity(a).status, cyclicity(b).status)
    fix = (fixed_points(a).order, fixed_points(b).order)
    ranks = (commutant_z_basis(a).rank, commutant_z_basis(b).rank)
    maxi = (_maximality(a), _maximality(b))
    ideal = None
    if q.status is Status.YES and a != b:
        matched = _matched_fields(a, b)
        if matched is not None and matched[0].units == matched[1].units:
            ideal = ideal_equivalent(matched[0].lattice, matched[1].lattice, matched[0].units)
    elif a == b:
        ideal = Verdict(Status.YES, witness=1)
    z = conjugate_over_z(a, b) if same else Verdict(Status.NO, detail="shapes differ")
    diffs = []
    if ent_eq is False:
        diffs.append("entropy function")
    if q.status is Status.NO:
        diffs.append("rational conjugacy")
    if Status.YES in cyc and Status.NO in cyc:
        diffs.append("cyclicity")
    if fix[0] != fix[1]:
        diffs.append("fixed points")
    if ranks[0] != ranks[1] or (None not in maxi and maxi[0] != maxi[1]):
        diffs.append("centralizer")
    if ideal is not None and ideal.status is Status.NO:
        diffs.append("ideal class")
    return ComparisonReport(same, ent_eq, dev, q, z, tc, cyc, fix, ranks, maxi, ideal, diffs)
