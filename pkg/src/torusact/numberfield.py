"""Arithmetic in K = Q[x]/(f), lattices in K, and the actions they carry.

Elements are stored by their rational coordinates in the power basis
1, lam, ..., lam^(n-1); a lattice is a matrix whose rows are the power-basis
coordinates of a Z-basis.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg
from . import poly as P
from . import spectra
from .action import ZdAction, is_irreducible, new_action, rho

INDEPENDENCE_TOL = 1e-8


class NotAModuleError(ValueError):
    pass


class DependentUnitsError(ValueError):
    pass


def _frac_tuple(coeffs, n):
    c = [Fraction(x) if not isinstance(x, (list, tuple)) else Fraction(*x) for x in coeffs]
    if len(c) > n:
        raise ValueError("too many coefficients")
    return tuple(linalg.mat([c + [Fraction(0)] * (n - len(c))])[0])


class NumberField:
    """K = Q(lam) with lam a root of the monic irreducible integer polynomial f."""

    def __init__(self, f):
        f = P.poly(f)
        if P.degree(f) < 1 or f[-1] != 1 or not all(isinstance(c, int) for c in f):
            raise P.DomainError("defining polynomial must be monic with integer coefficients")
        if not P.is_irreducible_q(f).irreducible:
            raise P.DomainError(f"{P.to_str(f)} is reducible over Q")
        self.f = f
        self.n = P.degree(f)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.f == other.f

    def __hash__(self):
        return hash(self.f)

    def __repr__(self):
        return f"NumberField({P.to_str(self.f, 'x')})"

    @cached_property
    def _power_table(self):
        # coordinates of lam^k for k < 2n - 1
        n = self.n
        table = [tuple(int(i == k) for i in range(n)) for k in range(n)]
        for _ in range(n, 2 * n - 1):
            prev = table[-1]
            shifted = [0] + list(prev[:-1])
            top = prev[-1]
            table.append(tuple(s - top * c for s, c in zip(shifted, self.f[:-1])))
        return table

    def element(self, coeffs) -> "NFElement":
        return NFElement(self, _frac_tuple(coeffs, self.n))

    def __call__(self, coeffs) -> "NFElement":
        return self.element(coeffs)

    @property
    def one(self):
        return self.element([1])

    @property
    def gen(self):
        return self.element([0, 1]) if self.n > 1 else self.element([-self.f[0]])

    @cached_property
    def roots(self) -> np.ndarray:
        """Complex embeddings of lam, sorted by real part then imaginary part."""
        return spectra.roots(self.f).eigenvalues

    @cached_property
    def signature(self) -> tuple[int, int]:
        r1 = P.sturm_real_root_count(self.f)
        return r1, (self.n - r1) // 2

    @cached_property
    def archimedean_indices(self) -> tuple[int, ...]:
        """Root indices for the r1 real places followed by one root per complex pair."""
        idx = [i for i, z in enumerate(self.roots) if z.imag == 0 or abs(z.imag) < 1e-12]
        idx += [i for i, z in enumerate(self.roots) if z.imag > 1e-12]
        return tuple(idx)

    @cached_property
    def power_basis(self) -> "LatticeBasis":
        return LatticeBasis(self, linalg.identity(self.n))


@dataclass(frozen=True)
class NFElement:
    field: NumberField
    coeffs: tuple

    def _coerce(self, other):
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.element([other])

    def __add__(self, other):
        o = self._coerce(other)
        return NFElement(self.field, tuple(linalg.mat([[a + b for a, b in zip(self.coeffs, o.coeffs)]])[0]))

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        n = self.field.n
        prod = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        out = [Fraction(0)] * n
        for k, c in enumerate(prod):
            if c:
                for i, t in enumerate(self.field._power_table[k]):
                    out[i] += c * t
        return NFElement(self.field, tuple(linalg.mat([out])[0]))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        base = self if k >= 0 else self.inverse()
        out = self.field.one
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def mult_matrix(self):
        """Rational matrix with coords(y * self) == coords(y) @ M in the power basis."""
        lam = self.field.gen
        rows, cur = [], self
        for _ in range(self.field.n):
            rows.append(cur.coeffs)
            cur = cur * lam
        return linalg.mat(rows)

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        m = self.mult_matrix()
        e0 = tuple(int(i == 0) for i in range(self.field.n))
        return NFElement(self.field, linalg.vecmat(e0, linalg.inverse(m)))

    def norm(self):
        return linalg.det(self.mult_matrix())

    def trace(self):
        return linalg.trace(self.mult_matrix())

    def charpoly(self):
        return linalg.charpoly(self.mult_matrix())

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.charpoly())

    def embed(self) -> np.ndarray:
        """Values at every complex embedding (ordered like ``field.roots``)."""
        c = np.array([float(x) for x in self.coeffs][::-1])
        return np.polyval(c, self.field.roots)

    def to_str(self, var="lam"):
        return P.to_str(self.coeffs, var)

    def __repr__(self):
        return f"NFElement({self.to_str()})"


def log_embedding(x: NFElement) -> np.ndarray:
    """(log|phi_i(x)|) over real places, then 2 log|phi_j(x)| over complex places."""
    vals = x.embed()
    f = x.field
    r1 = f.signature[0]
    out = []
    for k, i in enumerate(f.archimedean_indices):
        w = 1.0 if k < r1 else 2.0
        out.append(w * math.log(abs(vals[i])))
    return np.array(out)


def embeddings(field: NumberField) -> np.ndarray:
    return field.roots


class LatticeBasis:
    """A full-rank lattice in K given by power-basis coordinates of a Z-basis."""

    def __init__(self, field: NumberField, rows):
        m = linalg.mat([_frac_tuple(r, field.n) if not isinstance(r, NFElement) else r.coeffs
                        for r in rows])
        if linalg.shape(m) != (field.n, field.n) or linalg.det(m) == 0:
            raise linalg.RankError("lattice basis must consist of n independent elements")
        self.field = field
        self.matrix = m

    @classmethod
    def from_elements(cls, elements):
        elements = list(elements)
        return cls(elements[0].field, [e.coeffs for e in elements])

    @cached_property
    def elements(self) -> tuple:
        return tuple(NFElement(self.field, row) for row in self.matrix)

    @cached_property
    def _inv(self):
        return linalg.inverse(self.matrix)

    def coords(self, x: NFElement) -> tuple:
        return linalg.vecmat(x.coeffs, self._inv)

    def __contains__(self, x: NFElement) -> bool:
        return all(isinstance(c, int) for c in self.coords(x))

    def covolume(self) -> Fraction:
        """|det| of the basis relative to the power basis Z[lam]."""
        return abs(Fraction(linalg.det(self.matrix)))

    def is_module_over(self, x: NFElement) -> bool:
        return all(x * b in self for b in self.elements)

    def is_ring(self) -> bool:
        return self.field.one in self and all(
            b * c in self for b, c in itertools.combinations_with_replacement(self.elements, 2))

    def canonical(self) -> tuple:
        """HNF of the scaled basis: equal lattices give equal tuples."""
        den = math.lcm(*(Fraction(v).denominator for row in self.matrix for v in row))
        ints = [[int(v * den) for v in row] for row in self.matrix]
        return den, linalg.lattice_hnf(ints)

    def same_lattice(self, other: "LatticeBasis") -> bool:
        return self.canonical() == other.canonical()

    def scaled(self, x: NFElement) -> "LatticeBasis":
        return LatticeBasis.from_elements([x * b for b in self.elements])

    def __repr__(self):
        return f"LatticeBasis({[e.to_str() for e in self.elements]})"


def is_unit_in_order(x: NFElement, order: LatticeBasis) -> bool:
    if not order.is_ring():
        raise P.DomainError("lattice is not a ring")
    if x.is_zero():
        return False
    return x in order and x.inverse() in order


def mult_matrix(x: NFElement, basis: LatticeBasis):
    """Integer matrix of multiplication by x: row i holds the coordinates of x*b_i."""
    m = linalg.matmul(linalg.matmul(basis.matrix, x.mult_matrix()), basis._inv)
    for i, row in enumerate(m):
        if not all(isinstance(v, int) for v in row):
            raise NotAModuleError(
                f"lattice is not a module for {x.to_str()}: "
                f"{x.to_str()} * ({basis.elements[i].to_str()}) leaves the lattice")
    return m


def log_rank(units, tol: float = INDEPENDENCE_TOL) -> int:
    if not units:
        return 0
    mat = np.array([log_embedding(u) for u in units])
    sv = np.linalg.svd(mat, compute_uv=False)
    return int(np.sum(sv > tol * max(1.0, float(np.max(np.abs(mat))))))


def find_unit_relation(units, bound: int = 20):
    """Smallest exponent vector e != 0 with prod u_i^e_i = +-1, |e_i| <= bound, or None."""
    vecs = [np.array(log_embedding(u)) for u in units]
    for e in linalg.box_vectors(len(units), bound):
        if not any(e) or next(t for t in e if t) < 0:
            continue
        if np.max(np.abs(sum(ei * v for ei, v in zip(e, vecs)))) > 1e-6:
            continue
        prod = units[0].field.one
        for u, ei in zip(units, e):
            prod = prod * (u ** ei)
        if prod.coeffs[1:] == (0,) * (len(prod.coeffs) - 1) and abs(prod.coeffs[0]) == 1:
            return e
    return None


def check_independent(units) -> None:
    """Raise DependentUnitsError unless the units are multiplicatively independent."""
    if log_rank(units) == len(units):
        return
    rel = find_unit_relation(units)
    if rel is not None:
        raise DependentUnitsError(f"units multiplicatively dependent: exponents {rel}")
    raise DependentUnitsError("units multiplicatively dependent (log-embedding rank deficient)")


def construct_action(field: NumberField, units, basis: LatticeBasis) -> ZdAction:
    """The action generated by multiplication by each unit on the lattice."""
    units = list(units)
    for u in units:
        if abs(u.norm()) != 1 or not u.is_integral():
            raise P.DomainError(f"{u.to_str()} is not a unit")
    check_independent(units)
    return new_action([mult_matrix(u, basis) for u in units])


# --- recovering field data from an irreducible action --------------------------------

@dataclass(frozen=True)
class ActionField:
    """K = Q(lam) for lam an eigenvalue of the witness, with the eigenvector lattice.

    ``eigenvector`` satisfies A_i v = units[i] * v, and ``lattice`` is spanned by
    its entries, so that mult_matrix(units[i], lattice) == A_i.
    """
    field: NumberField
    witness: tuple
    witness_matrix: tuple
    eigenvector: tuple
    lattice: LatticeBasis
    units: tuple


def _kernel_over_field(m):
    """One nonzero solution v of m v = 0 for an n x n matrix over K (Gaussian elimination)."""
    rows = [list(r) for r in m]
    n = len(rows)
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, n) if not rows[i][c].is_zero()), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = next(c for c in range(n) if c not in pivots)
    field = m[0][0].field
    v = [field.element([0])] * n
    v[free] = field.one
    for i, p in enumerate(pivots):
        v[p] = -rows[i][free]
    return v


def eigenvector(m, field: NumberField) -> tuple:
    """Column eigenvector of m for the eigenvalue lam, entries in Z[lam] with content 1."""
    n = len(m)
    lam = field.gen
    shifted = [[field.element([m[i][j]]) - (lam if i == j else 0) for j in range(n)]
               for i in range(n)]
    v = _kernel_over_field(shifted)
    den = math.lcm(*(Fraction(c).denominator for e in v for c in e.coeffs))
    v = [e * den for e in v]
    g = math.gcd(*(int(c) for e in v for c in e.coeffs))
    return tuple(e * Fraction(1, g) for e in v)


def action_field(a: ZdAction, witness=None) -> ActionField:
    """Field data of an irreducible action (via an element with irreducible charpoly)."""
    if witness is None:
        verdict = is_irreducible(a)
        if not verdict:
            raise P.DomainError("action is not (verified) irreducible")
        witness = verdict.witness
    w = rho(a, witness)
    f = linalg.charpoly(w)
    if not P.is_irreducible_q(f).irreducible:
        raise P.DomainError("witness characteristic polynomial is reducible")
    field = NumberField(f)
    v = eigenvector(w, field)
    k = next(i for i, e in enumerate(v) if not e.is_zero())
    units = []
    for g in a.generators:
        gv = [sum((v[j] * g[i][j] for j in range(a.n)), field.element([0])) for i in range(a.n)]
        mu = gv[k] / v[k]
        if any(gv[i] != mu * v[i] for i in range(a.n)):
            raise P.DomainError("generator does not share the witness eigenvector")
        units.append(mu)
    return ActionField(field, tuple(witness), w, v, LatticeBasis.from_elements(v), tuple(units))
