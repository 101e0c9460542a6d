"""Z^d-actions by automorphisms of the n-torus.

Generators act on integer row vectors from the right (x -> x A), the
convention used for every matrix in the bundled corpus.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np

from . import linalg
from . import poly as P
from . import spectra

DEFAULT_BOX = 3
RANK_TOL = 1e-8


class ValidationError(ValueError):
    pass


class DerogatorySpectrumError(ArithmeticError):
    pass


class Status(enum.Enum):
    YES = "yes"
    NO = "no"
    NOT_VERIFIED = "not verified"

    def __bool__(self):
        return self is Status.YES

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Verdict:
    status: Status
    witness: object = None
    certificate: object = None
    detail: str = ""

    def __bool__(self):
        return self.status is Status.YES


@dataclass(frozen=True, eq=False)
class ZdAction:
    generators: tuple

    @property
    def d(self) -> int:
        return len(self.generators)

    @property
    def n(self) -> int:
        return len(self.generators[0])

    def __eq__(self, other):
        return isinstance(other, ZdAction) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    @cached_property
    def inverses(self) -> tuple:
        return tuple(linalg.int_inverse(a) for a in self.generators)

    @cached_property
    def lyapunov(self) -> "LyapunovData":
        return lyapunov_data(self)


def new_action(generators, column_convention: bool = False) -> ZdAction:
    """Validate generators and build an action.

    Column-convention input (matrices acting on column vectors) is transposed
    at ingestion.
    """
    gens = [linalg.mat(g) for g in generators]
    if not gens:
        raise ValidationError("an action needs at least one generator")
    n = len(gens[0])
    if n < 1:
        raise ValidationError("torus dimension must be >= 1")
    for i, g in enumerate(gens):
        if linalg.shape(g) != (n, n):
            raise ValidationError(f"generator {i} is not {n}x{n}")
        if not linalg.is_integral(g):
            raise ValidationError(f"generator {i} has non-integer entries")
    if column_convention:
        gens = [linalg.transpose(g) for g in gens]
    for i, g in enumerate(gens):
        dt = linalg.det(g)
        if abs(dt) != 1:
            raise ValidationError(f"generator {i} has determinant {dt}, not +-1")
    for i, j in itertools.combinations(range(len(gens)), 2):
        if linalg.matmul(gens[i], gens[j]) != linalg.matmul(gens[j], gens[i]):
            raise ValidationError(f"generators {i} and {j} do not commute")
    return ZdAction(tuple(gens))


def rho(a: ZdAction, nvec) -> tuple:
    """The matrix A_1^{n_1} ... A_d^{n_d}."""
    if len(nvec) != a.d:
        raise ValueError(f"expected a {a.d}-vector")
    out = linalg.identity(a.n)
    for g, ginv, k in zip(a.generators, a.inverses, nvec):
        if k:
            out = linalg.matmul(out, linalg.matpow(g if k > 0 else ginv, abs(k)))
    return out


# --- Lyapunov data ------------------------------------------------------------

@dataclass(frozen=True)
class LyapunovData:
    """Lyapunov functionals of an action.

    ``exponents[k]`` is the row (log|mu_k(A_1)|, ..., log|mu_k(A_d)|) for the
    k-th joint eigenvalue cluster; ``multiplicities[k]`` is its dimension and
    ``orbits`` groups row indices into Galois orbits.
    """
    exponents: np.ndarray
    multiplicities: tuple
    orbits: tuple
    eigenvalues: np.ndarray
    eigvecs: np.ndarray = field(repr=False)
    clusters: tuple = field(repr=False)
    generic: tuple = field(repr=False)

    def functional(self, nvec) -> np.ndarray:
        return self.exponents @ np.asarray(nvec, dtype=float)


def _generic_weights(d: int):
    base = [1, 3, 7, 13, 29, 53, 97]
    yield tuple(base[:d]) if d <= len(base) else tuple(range(1, d + 1))
    for shift in range(1, 12):
        yield tuple(b + shift * (i + 1) for i, b in enumerate(base[:d]))


def lyapunov_data(a: ZdAction) -> LyapunovData:
    """Joint eigenvalue data via a generic integer combination of the generators.

    The eigenspaces of G = sum c_i A_i are computed numerically; each generator
    must act as a scalar on each of them (checked), otherwise the next weight
    vector is tried. Generators that are not semisimple are rejected.
    """
    gens = [np.array(g, dtype=float) for g in a.generators]
    last_err = None
    for c in _generic_weights(a.d):
        gint = linalg.mat([[sum(ci * g[i][j] for ci, g in zip(c, a.generators))
                            for j in range(a.n)] for i in range(a.n)])
        gf = np.array(gint, dtype=float)
        w, v = np.linalg.eig(gf)
        order = np.lexsort((w.imag, w.real))
        w, v = w[order], v[:, order]
        clusters = []
        scale = max(1.0, float(np.max(np.abs(w))))
        for idx in range(len(w)):
            for cl in clusters:
                if abs(w[cl[0]] - w[idx]) < 1e-6 * scale:
                    cl.append(idx)
                    break
            else:
                clusters.append([idx])
        mus, ok = [], True
        for cl in clusters:
            e = v[:, cl]
            pinv = np.linalg.pinv(e)
            row = []
            for g in gens:
                m = pinv @ g @ e
                mu = np.trace(m) / len(cl)
                if np.max(np.abs(m - mu * np.eye(len(cl)))) > 1e-6 * max(1.0, abs(mu)):
                    ok = False
                    break
                if np.max(np.abs(g @ e - mu * e)) > 1e-6 * max(1.0, abs(mu)) * np.max(np.abs(e)):
                    ok = False
                    break
                row.append(mu)
            if not ok:
                break
            mus.append(row)
        if not ok:
            last_err = "generators are not simultaneously diagonalizable on the eigenspaces"
            continue
        # every Galois orbit is the root set of one irreducible factor of charpoly(G)
        factors = P.factor_q(linalg.charpoly(gint))
        orbit_of = []
        for cl in clusters:
            z = w[cl[0]]
            errs = [abs(np.polyval(np.array([float(x) for x in f][::-1]), z)) /
                    np.polyval(np.abs(np.array([float(x) for x in f][::-1])), abs(z))
                    for f, _ in factors]
            orbit_of.append(int(np.argmin(errs)))
        orbits = tuple(tuple(k for k, o in enumerate(orbit_of) if o == j)
                       for j in range(len(factors)) if j in orbit_of)
        mus = np.array(mus, dtype=complex)
        if np.any(np.abs(mus) == 0):
            raise DerogatorySpectrumError("zero eigenvalue")
        return LyapunovData(
            exponents=np.log(np.abs(mus)),
            multiplicities=tuple(len(cl) for cl in clusters),
            orbits=orbits,
            eigenvalues=mus,
            eigvecs=v,
            clusters=tuple(tuple(cl) for cl in clusters),
            generic=c,
        )
    raise DerogatorySpectrumError(last_err or "could not separate joint eigenvalues")


def log_vector(a: ZdAction, x) -> np.ndarray:
    """log|eigenvalue| of a commuting matrix x on each joint eigenspace."""
    ly = a.lyapunov
    xf = np.array(x, dtype=float)
    out = []
    for cl in ly.clusters:
        e = ly.eigvecs[:, list(cl)]
        mu = np.trace(np.linalg.pinv(e) @ xf @ e) / len(cl)
        out.append(math.log(abs(mu)) if abs(mu) > 0 else -math.inf)
    return np.array(out)


def entropy_function(a: ZdAction, nvec) -> float:
    """h(n) = sum over Lyapunov functionals of m_k * max(chi_k(n), 0)."""
    ly = a.lyapunov
    vals = ly.functional(nvec)
    return float(np.sum(np.array(ly.multiplicities) * np.maximum(vals, 0.0)))


# --- Weyl chambers --------------------------------------------------------------

@dataclass(frozen=True)
class Chamber:
    start: float
    end: float
    positive_rows: tuple
    formula: np.ndarray

    def contains(self, vec) -> bool:
        ang = math.atan2(vec[1], vec[0]) % (2 * math.pi)
        lo, hi = self.start, self.end
        if hi <= lo:
            hi += 2 * math.pi
            if ang < lo:
                ang += 2 * math.pi
        return lo < ang < hi


@dataclass(frozen=True)
class WeylChamberSet:
    chambers: tuple
    lines: tuple
    degenerate: bool

    def chamber_of(self, vec) -> Chamber | None:
        return next((c for c in self.chambers if c.contains(vec)), None)


def weyl_chambers(a: ZdAction) -> WeylChamberSet:
    """Open sectors of R^2 on which every Lyapunov functional has constant sign."""
    if a.d != 2:
        raise NotImplementedError("Weyl chambers are only computed for d = 2")
    ly = a.lyapunov
    rows = ly.exponents
    mult = np.array(ly.multiplicities)
    scale = max(1.0, float(np.max(np.abs(rows)))) if rows.size else 1.0
    nonzero = [k for k in range(len(rows)) if np.max(np.abs(rows[k])) > RANK_TOL * scale]
    angles, line_angles = [], []
    for k in nonzero:
        ax, by = rows[k]
        th = math.atan2(ax, -by) % math.pi  # direction of the line ax*x + by*y = 0
        if not any(abs(th - t) < 1e-9 or abs(abs(th - t) - math.pi) < 1e-9
                   for t in line_angles):
            line_angles.append(th)
    for th in line_angles:
        angles += [th, th + math.pi]
    angles.sort()
    distinct_rows = []
    for k in nonzero:
        if not any(np.allclose(rows[k], rows[j], atol=1e-9) for j in distinct_rows):
            distinct_rows.append(k)
    degenerate = (np.linalg.matrix_rank(rows, tol=RANK_TOL * scale) < 2
                  or len(line_angles) < len(distinct_rows))
    chambers = []
    if not angles:
        spans = [(0.0, 2 * math.pi)]
    else:
        spans = [(angles[i], angles[(i + 1) % len(angles)]) for i in range(len(angles))]
    for lo, hi in spans:
        mid = (lo + hi) / 2 if hi > lo else (lo + hi + 2 * math.pi) / 2
        u = np.array([math.cos(mid), math.sin(mid)])
        pos = tuple(k for k in range(len(rows)) if rows[k] @ u > 0)
        formula = sum((mult[k] * rows[k] for k in pos), np.zeros(2))
        chambers.append(Chamber(lo % (2 * math.pi), hi % (2 * math.pi), pos, formula))
    return WeylChamberSet(tuple(chambers), tuple(line_angles), bool(degenerate))


# --- condition (R), irreducibility, Cartan -------------------------------------------

def _rational_kernel_vector(mat2: np.ndarray, max_den: int = 1000):
    """Integer (p, q) spanning the numeric kernel of a k x 2 matrix, or None."""
    _, _, vh = np.linalg.svd(mat2)
    kv = vh[-1]
    j = int(np.argmax(np.abs(kv)))
    ratio = kv[1 - j] / kv[j]
    fr = Fraction(ratio).limit_denominator(max_den)
    vec = [0, 0]
    vec[j], vec[1 - j] = fr.denominator, fr.numerator
    g = math.gcd(*vec)
    return tuple(x // g for x in vec)


def _pair_certified(a: ZdAction, m1, m2) -> bool:
    ly = a.lyapunov
    basis = np.array([m1, m2], dtype=float).T
    for orb in ly.orbits:
        block = ly.exponents[list(orb)] @ basis
        scale = max(1.0, float(np.max(np.abs(block)))) if block.size else 1.0
        sv = np.linalg.svd(block, compute_uv=False)
        if len(sv) >= 2 and sv[-1] > RANK_TOL * scale:
            continue
        if not np.any(np.abs(block) > RANK_TOL * scale):
            return False
        p, q = _rational_kernel_vector(block)
        nvec = tuple(p * x + q * y for x, y in zip(m1, m2))
        if not spectra.is_ergodic(rho(a, nvec)).ergodic:
            return False
        # numerics and exact arithmetic disagree; refuse to certify
        return False
    return True


def satisfies_R(a: ZdAction, box: int = DEFAULT_BOX) -> Verdict:
    """Search for a rank-two subgroup consisting of ergodic elements."""
    if a.d < 2:
        raise ValueError("condition (R) needs d >= 2")
    cands = [v for v in linalg.box_vectors(a.d, box) if any(v)]
    for i, m1 in enumerate(cands):
        for m2 in cands[i + 1:]:
            if a.d == 2 and m1[0] * m2[1] - m1[1] * m2[0] == 0:
                continue
            if a.d > 2 and linalg.rank((m1, m2)) < 2:
                continue
            if _pair_certified(a, m1, m2):
                return Verdict(Status.YES, witness=(m1, m2))
    return Verdict(Status.NOT_VERIFIED, detail=f"no certified pair in box {box}")


def _krylov_closure(a: ZdAction, v):
    """Rational span of the orbit of row vector v under the generators."""
    basis = [tuple(Fraction(x) for x in v)]
    frontier = list(basis)
    while frontier:
        new = []
        for w in frontier:
            for g in a.generators:
                cand = linalg.vecmat(w, g)
                if linalg.rank(basis + [cand]) > len(basis):
                    basis.append(cand)
                    new.append(cand)
        frontier = new
    return basis


def is_irreducible(a: ZdAction, box: int = DEFAULT_BOX) -> Verdict:
    """Irreducible iff some element has a Q-irreducible characteristic polynomial.

    Returns YES with the element as witness, NO with a basis of a proper
    invariant rational subspace, or NOT_VERIFIED.
    """
    for nvec in linalg.box_vectors(a.d, box):
        if not any(nvec):
            if a.n == 1:
                return Verdict(Status.YES, witness=nvec)
            continue
        if P.is_irreducible_q(linalg.charpoly(rho(a, nvec))).irreducible:
            return Verdict(Status.YES, witness=nvec)
    for j in range(a.n):
        e = tuple(int(i == j) for i in range(a.n))
        span = _krylov_closure(a, e)
        if len(span) < a.n:
            return Verdict(Status.NO, certificate=tuple(linalg.primitive_integer_vector(s)
                                                        for s in span),
                           detail="proper invariant subspace spanned by an orbit")
    for g in a.generators:
        for h, _ in P.factor_q(linalg.charpoly(g)):
            ker = linalg.left_nullspace(P.eval_poly_at_matrix(h, g))
            if 0 < len(ker) < a.n:
                return Verdict(Status.NO,
                               certificate=tuple(linalg.primitive_integer_vector(k) for k in ker),
                               detail="kernel of a factor of a characteristic polynomial")
    return Verdict(Status.NOT_VERIFIED, detail=f"no irreducible element in box {box}")


def is_cartan(a: ZdAction, box: int = 2) -> bool:
    """Z^(n-1) on T^n, n >= 3, ergodic elements, real spectrum, full Lyapunov rank."""
    if a.n < 3 or a.d != a.n - 1:
        return False
    for nvec in linalg.box_vectors(a.d, box):
        if not any(nvec):
            continue
        m = rho(a, nvec)
        if not spectra.is_ergodic(m).ergodic:
            return False
        if not spectra.all_eigenvalues_real(m) or not spectra.is_hyperbolic(m):
            return False
    ly = a.lyapunov
    for orb in ly.orbits:
        block = ly.exponents[list(orb)]
        scale = max(1.0, float(np.max(np.abs(block))))
        if np.linalg.matrix_rank(block, tol=RANK_TOL * scale) < a.d:
            return False
    return True


# --- fixed points ---------------------------------------------------------------

class InfiniteFixedSetError(ValueError):
    pass


@dataclass(frozen=True)
class FixedPoints:
    order: int
    points: tuple
    elementary_divisors: tuple


def fixed_points(a: ZdAction, convention: str = "row",
                 enumerate_limit: int = 10_000) -> FixedPoints:
    """Joint fixed points {x in T^n : x(A_i - I) in Z^n for all i}.

    With U [A_1-I | ... | A_d-I] V = diag(d_1..d_n) the fixed set is
    {y U : y_j in (1/d_j) Z / Z}, of order prod d_j. ``convention="column"``
    uses x -> A x instead; the order is the same, the point set is not.
    """
    n = a.n
    eye = linalg.identity(n)
    if convention not in ("row", "column"):
        raise ValueError("convention must be 'row' or 'column'")
    gens = a.generators if convention == "row" else [linalg.transpose(g) for g in a.generators]
    stacked = [sum((list(linalg.matsub(g, eye)[i]) for g in gens), [])
               for i in range(n)]
    res = linalg.snf(linalg.mat(stacked))
    if any(dj == 0 for dj in res.d):
        raise InfiniteFixedSetError("the joint fixed set is infinite")
    order = math.prod(res.d)
    points = []
    if order <= enumerate_limit:
        for ks in itertools.product(*(range(dj) for dj in res.d)):
            y = [Fraction(k, dj) for k, dj in zip(ks, res.d)]
            x = linalg.vecmat(y, res.U)
            points.append(tuple(Fraction(t) % 1 for t in x))
        points.sort()
    return FixedPoints(order, tuple(points), res.d)
