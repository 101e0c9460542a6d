"""Integer commutants, their units, and centralizers of actions.

C(a) is the ring of integer matrices commuting with every generator and
Z(a) its group of units. For an irreducible action, C(a) embeds into the
number field K as the multiplier ring of the eigenvector lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg
from . import poly as P
from .action import Status, Verdict, ZdAction, fixed_points, rho
from .numberfield import (ActionField, LatticeBasis, NFElement, action_field, log_embedding)

TORSION_BOX = 4
UNIT_BOX = 50
INDEX_TOL = 1e-6
MAX_CANDIDATES = 3_000_000


@dataclass(frozen=True)
class CommutantBasis:
    basis: tuple  # integer matrices
    n: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def element(self, coeffs):
        out = linalg.zeros(self.n, self.n)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = linalg.matadd(out, linalg.scale(c, b))
        return out

    @cached_property
    def _flat(self):
        return linalg.mat([[x for row in b for x in row] for b in self.basis])

    def coords(self, x):
        """Coefficients of x in the basis, or None when x is not in the Z-span."""
        flat = [v for row in x for v in row]
        try:
            sol, _ = linalg.solve_rational(linalg.transpose(self._flat), [[v] for v in flat])
        except linalg.InconsistentSystemError:
            return None
        c = tuple(row[0] for row in sol)
        return c if all(isinstance(v, int) for v in c) else None

    def is_abelian(self) -> bool:
        return self.noncommuting_pair() is None

    def noncommuting_pair(self):
        for i, x in enumerate(self.basis):
            for y in self.basis[i + 1:]:
                if linalg.matmul(x, y) != linalg.matmul(y, x):
                    return x, y
        return None

    @cached_property
    def reduced(self) -> "CommutantBasis":
        """LLL-reduced basis under the Frobenius norm, for meaningful coefficient boxes."""
        red = linalg.lattice_reduce(self._flat)
        return CommutantBasis(tuple(tuple(tuple(int(v) for v in row[i * self.n:(i + 1) * self.n])
                                          for i in range(self.n)) for row in red), self.n)


def commutant_z_basis(a: ZdAction) -> CommutantBasis:
    """Z-basis of {X in M(n,Z) : X A_i = A_i X for all i}.

    Each matrix unit E_k contributes the row vec(E_k A_i - A_i E_k) over all
    i; the integer left kernel of that system is saturated, so its HNF basis
    generates every integer solution.
    """
    n = a.n
    rows = []
    for k in range(n * n):
        r, c = divmod(k, n)
        e = [[int(i == r and j == c) for j in range(n)] for i in range(n)]
        row = []
        for g in a.generators:
            comm = linalg.matsub(linalg.matmul(e, g), linalg.matmul(g, e))
            row.extend(x for line in comm for x in line)
        rows.append(row)
    ker = linalg.integer_left_kernel(rows)
    basis = tuple(tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)) for v in ker)
    return CommutantBasis(basis, n)


# --- gamma map -------------------------------------------------------------------

def gamma(x, af: ActionField) -> NFElement:
    """The eigenvalue of a commutant element on the witness eigenvector."""
    v = af.eigenvector
    k = next(i for i, e in enumerate(v) if not e.is_zero())
    xv = [sum((v[j] * x[i][j] for j in range(len(v))), af.field.element([0]))
          for i in range(len(v))]
    mu = xv[k] / v[k]
    if any(xv[i] != mu * v[i] for i in range(len(v))):
        raise P.DomainError("matrix does not preserve the eigenline (not in the commutant)")
    return mu


@dataclass(frozen=True)
class GammaImage:
    order: LatticeBasis
    index_over_power_basis: Fraction  # [order : Z[lam]]
    contains_power_basis: bool
    inside_maximal: bool | None


def gamma_map(a: ZdAction, af: ActionField | None = None, c: CommutantBasis | None = None,
              maximal_order: LatticeBasis | None = None) -> GammaImage:
    """The order gamma(C(a)) in K, with the sandwich Z[lam] <= order <= O_K checked."""
    af = af or action_field(a)
    c = c or commutant_z_basis(a)
    if c.rank != a.n:
        raise P.DomainError("commutant rank differs from n; action is not irreducible")
    order = LatticeBasis.from_elements([gamma(b, af) for b in c.basis])
    if not order.is_ring():
        raise ArithmeticError("image of the commutant is not a ring")
    pb = af.field.power_basis
    contains = all(e in order for e in pb.elements)
    inside = None
    if maximal_order is not None:
        inside = all(e in maximal_order for e in order.elements)
    return GammaImage(order, 1 / order.covolume(), contains, inside)


# --- unit and torsion searches -------------------------------------------------

def _box_coefficients(rank: int, box: int, half: bool):
    """Integer vectors in [-box, box]^rank (first nonzero entry positive when ``half``)."""
    total = (2 * box + 1) ** rank
    if total > MAX_CANDIDATES:
        raise ValueError(f"coefficient box too large ({total} candidates)")
    grids = np.meshgrid(*[np.arange(-box, box + 1)] * rank, indexing="ij")
    coeffs = np.stack([g.ravel() for g in grids], axis=1)
    if half:
        nz = coeffs != 0
        first = np.argmax(nz, axis=1)
        lead = coeffs[np.arange(len(coeffs)), first]
        coeffs = coeffs[lead > 0]
    return coeffs


def _batch(c: CommutantBasis, coeffs: np.ndarray) -> np.ndarray:
    b = np.array(c.basis, dtype=np.int64)
    return np.tensordot(coeffs.astype(np.int64), b, axes=(1, 0))


def _order_bound(n: int) -> int:
    return math.lcm(*[k for k in P.cyclotomic_indices(n)])


def _finite_order(x, n: int) -> int | None:
    eye = linalg.identity(n)
    cur = x
    for k in range(1, _order_bound(n) + 1):
        if cur == eye:
            return k
        cur = linalg.matmul(cur, x)
    return None


def torsion_elements(c: CommutantBasis, box: int = TORSION_BOX) -> list:
    """Finite-order elements of the commutant with coefficients in the box.

    Candidates with every eigenvalue on the unit circle are confirmed by exact
    powering up to lcm{k : phi(k) <= n}.
    """
    coeffs = _box_coefficients(c.rank, box, half=False)
    mats = _batch(c.reduced, coeffs)
    ev = np.linalg.eigvals(mats.astype(float))
    ok = np.all(np.abs(np.abs(ev) - 1) < 1e-6, axis=1)
    out = []
    for m in mats[ok]:
        x = tuple(tuple(int(v) for v in row) for row in m)
        if abs(linalg.det(x)) == 1 and _finite_order(x, c.n) is not None:
            out.append(x)
    return sorted(set(out))


def unit_search(c: CommutantBasis, box: int) -> list:
    """Unimodular commutant elements with coefficients in the box, modulo +-I."""
    if box == 0:
        return [linalg.identity(c.n)]
    basis = c.reduced
    coeffs = _box_coefficients(c.rank, box, half=True)
    out = []
    for start in range(0, len(coeffs), 200_000):
        mats = _batch(basis, coeffs[start:start + 200_000])
        dets = np.linalg.det(mats.astype(float))
        for m in mats[np.abs(np.abs(dets) - 1) < 1e-3]:
            x = tuple(tuple(int(v) for v in row) for row in m)
            if abs(linalg.det(x)) == 1:
                out.append(x)
    return sorted(out)


# --- log lattices ------------------------------------------------------------------

def _log_matrix(units) -> np.ndarray:
    m = np.array([log_embedding(u) for u in units])
    return m[:, :-1]  # the coordinates sum to zero; drop the last


def log_lattice_index(units_sub, units_super) -> tuple[int, float]:
    """[<super> : <sub>] from the ratio of log-embedding determinants."""
    if len(units_sub) != len(units_super):
        raise P.DomainError("unit lists must have equal length")
    a, b = _log_matrix(units_sub), _log_matrix(units_super)
    if a.shape[0] != a.shape[1]:
        raise P.DomainError(f"need {a.shape[1]} units (the free rank), got {a.shape[0]}")
    db = abs(np.linalg.det(b))
    if db < INDEX_TOL:
        raise P.DomainError("super-list is multiplicatively dependent")
    ratio = abs(np.linalg.det(a)) / db
    m = round(ratio)
    return m, abs(ratio - m)


def _eigen_logs(a: ZdAction, mats) -> np.ndarray:
    """log|mu_k(X)| on the common eigenvectors, one row per matrix."""
    ly = a.lyapunov
    e = ly.eigvecs
    einv = np.linalg.inv(e)
    out = []
    for x in mats:
        d = einv @ np.array(x, dtype=float) @ e
        out.append([math.log(abs(np.mean(np.diag(d)[list(cl)]))) for cl in ly.clusters])
    return np.array(out)


@dataclass(frozen=True)
class UnitIndex:
    index: int            # [Z(a)/torsion : a] as far as the discovered units show
    extra: tuple          # discovered units outside the group generated by a and torsion
    free_rank: int        # rank of the log lattice spanned by generators and discovered units
    box: int


def unit_index(a: ZdAction, units, box: int) -> UnitIndex:
    """Index of the action's log lattice in the one spanned together with ``units``."""
    gen_logs = _eigen_logs(a, a.generators)
    rank_gen = np.linalg.matrix_rank(gen_logs, tol=1e-8)
    if not units:
        return UnitIndex(1, (), int(rank_gen), box)
    ulogs = _eigen_logs(a, units)
    full_rank = int(np.linalg.matrix_rank(np.vstack([gen_logs, ulogs]), tol=1e-8))
    if rank_gen < a.d or full_rank > a.d:
        return UnitIndex(0, (), full_rank, box)
    coords, *_ = np.linalg.lstsq(gen_logs.T, ulogs.T, rcond=None)
    coords = coords.T
    rows, extra = [], []
    for x, cvec in zip(units, coords):
        fr = [Fraction(float(t)).limit_denominator(1000) for t in cvec]
        if max(abs(float(f) - t) for f, t in zip(fr, cvec)) > 1e-6:
            raise ArithmeticError("unit log vector is not a rational combination of generators")
        if any(f.denominator != 1 for f in fr):
            extra.append(x)
        rows.append(fr)
    den = math.lcm(*(f.denominator for r in rows for f in r))
    ints = [[den * int(i == j) for j in range(a.d)] for i in range(a.d)]
    ints += [[int(f * den) for f in r] for r in rows]
    h = linalg.lattice_hnf(ints)
    covol = Fraction(abs(linalg.det(h)), den ** a.d)
    return UnitIndex(int(1 / covol), tuple(extra), full_rank, box)


def is_maximal_cartan(a: ZdAction, box: int = UNIT_BOX, c: CommutantBasis | None = None) -> Verdict:
    """Maximal iff Z(a) is +-1 times the action, up to a bounded unit search."""
    c = c or commutant_z_basis(a)
    if c.rank != a.n:
        return Verdict(Status.NOT_VERIFIED, detail="commutant rank differs from n")
    tors = torsion_elements(c)
    eye = linalg.identity(a.n)
    if set(tors) != {eye, linalg.scale(-1, eye)}:
        return Verdict(Status.NO, witness=next(t for t in tors if t not in (eye, linalg.scale(-1, eye))),
                       detail="torsion beyond +-I")
    ui = unit_index(a, unit_search(c, box), box)
    if ui.extra:
        return Verdict(Status.NO, witness=ui.extra[0], certificate={"index": ui.index, "box": box},
                       detail="unit outside the group generated by the action and -I")
    return Verdict(Status.YES, certificate={"box": box},
                   detail=f"no unit outside the action in coefficient box {box}")


# --- affine centralizer -----------------------------------------------------------

@dataclass(frozen=True)
class AffineReport:
    fixed_points: int
    fixed_group: tuple        # elementary divisors > 1 of Fix(a)
    torsion: tuple            # finite-order elements of Z(a)
    free_rank: int
    unit_index: int           # [Z(a) : +-a] from the bounded unit search
    torsion_order: int        # |torsion of Z(a)| * |Fix(a)|
    index: int                # [Z_Aff(a) : a]
    direct_product: bool      # every found unit fixes every fixed point
    box: int
    extra_units: tuple = field(default=())

    @property
    def abstract_type(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        t = len(self.torsion)
        cyc = sorted(self.fixed_group + ((t,) if t == 2 else ()))
        parts += [f"Z/{k}" for k in cyc]
        if t > 2:
            parts.append(f"(finite group of order {t})")
        out = " x ".join(parts) or "trivial"
        if not self.direct_product:
            out += " (semidirect: some unit moves a fixed point)"
        return out


def _fixes_points(x, points) -> bool:
    return all(all(Fraction(t) % 1 == 0 for t in linalg.vecmat(p, linalg.matsub(x, linalg.identity(len(x)))))
               for p in points)


def affine_report(a: ZdAction, box: int = UNIT_BOX, c: CommutantBasis | None = None) -> AffineReport:
    """Orders and indices for Z_Aff(a), the translations by Fix(a) together with Z(a).

    torsion order = |tors Z(a)| * |Fix(a)|, index = |tors Z(a)| * |Fix(a)| * [Z(a) : +-a].
    """
    c = c or commutant_z_basis(a)
    fix = fixed_points(a)
    tors = tuple(torsion_elements(c))
    units = unit_search(c, box)
    ui = unit_index(a, units, box)
    direct = all(_fixes_points(x, fix.points) for x in list(tors) + list(units))
    fixed_group = tuple(dj for dj in fix.elementary_divisors if dj > 1)
    t = len(tors)
    return AffineReport(fix.order, fixed_group, tors, ui.free_rank, ui.index,
                        t * fix.order, t * fix.order * ui.index, direct, box, ui.extra)
