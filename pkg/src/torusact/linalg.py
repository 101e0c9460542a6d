"""Exact dense linear algebra over Z and Q.

Matrices are tuples of row tuples holding Python ints or ``Fraction``s, so
they are immutable and hashable. Nothing here touches floating point except
the optional numeric Gram forms accepted by ``lattice_reduce`` and
``short_vectors``.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import NamedTuple, Sequence

IntMatrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction | int, ...], ...]


class ShapeError(ValueError):
    pass


class InconsistentSystemError(ValueError):
    """Raised by ``solve_rational`` when the system has no solution."""


class RankError(ValueError):
    pass


class SNFResult(NamedTuple):
    d: tuple[int, ...]
    U: IntMatrix
    V: IntMatrix


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def mat(rows: Sequence[Sequence]) -> RatMatrix:
    """Freeze a nested sequence into a matrix, collapsing integral Fractions."""
    out = tuple(tuple(_norm(v) for v in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ShapeError("ragged rows")
    return out


def shape(m) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def is_integral(m) -> bool:
    return all(isinstance(v, int) or v.denominator == 1 for row in m for v in row)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(r: int, c: int) -> IntMatrix:
    return tuple((0,) * c for _ in range(r))


def diag(values) -> RatMatrix:
    n = len(values)
    return mat([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])


def block_diag(*blocks) -> RatMatrix:
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        k = len(b)
        for i in range(k):
            out[off + i][off:off + k] = b[i]
        off += k
    return mat(out)


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    if shape(a)[1] != len(b):
        raise ShapeError(f"cannot multiply {shape(a)} by {shape(b)}")
    bt = transpose(b)
    return mat([[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a])


def matadd(a, b):
    if shape(a) != shape(b):
        raise ShapeError("shape mismatch")
    return mat([[x + y for x, y in zip(r, s)] for r, s in zip(a, b)])


def matsub(a, b):
    if shape(a) != shape(b):
        raise ShapeError("shape mismatch")
    return mat([[x - y for x, y in zip(r, s)] for r, s in zip(a, b)])


def scale(c, m):
    return mat([[c * x for x in row] for row in m])


def vecmat(v, m):
    """Row vector times matrix."""
    return tuple(_norm(sum(x * m[i][j] for i, x in enumerate(v))) for j in range(shape(m)[1]))


def _square(m) -> int:
    r, c = shape(m)
    if r != c:
        raise ShapeError(f"expected a square matrix, got {r}x{c}")
    return r


def matpow(m, k: int):
    """``m**k``; negative ``k`` uses the exact rational inverse."""
    n = _square(m)
    if k < 0:
        m, k = inverse(m), -k
    result = identity(n)
    base = m
    while k:
        if k & 1:
            result = matmul(result, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return result


def trace(m):
    return sum(m[i][i] for i in range(_square(m)))


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0, "inexact Bareiss division"
        return q
    return a / b


def det(m):
    """Determinant by fraction-free Bareiss elimination."""
    n = _square(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = _exact_div(row_i[j] * akk - aik * row_k[j], prev)
        prev = akk
    return _norm(sign * a[-1][-1])


def charpoly(m) -> tuple:
    """Characteristic polynomial det(xI - m), ascending coefficients.

    Faddeev-LeVerrier recursion; the divisions by k are exact for integer
    input.
    """
    n = _square(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = zeros(n, n)
    for k in range(1, n + 1):
        mk = matmul(m, mk)
        c = coeffs[n - k + 1]
        mk = mat([[mk[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)])
        coeffs[n - k] = _exact_div(-trace(matmul(m, mk)), k)
    return tuple(_norm(c) for c in coeffs)


def rref(m):
    """Reduced row echelon form over Q; returns (R, pivot_columns)."""
    a = [[Fraction(v) for v in row] for row in m]
    rows, cols = shape(m)
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [v / pv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return mat(a), tuple(pivots)


def rank(m) -> int:
    return len(rref(m)[1]) if m else 0


def nullspace(m) -> list[tuple]:
    """Basis of the right null space {v : m v = 0} over Q."""
    cols = shape(m)[1]
    r, pivots = rref(m)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(tuple(_norm(x) for x in v))
    return basis


def left_nullspace(m) -> list[tuple]:
    """Basis of {x : x m = 0} over Q."""
    return nullspace(transpose(m))


def inverse(m) -> RatMatrix:
    n = _square(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    r, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return mat([row[n:] for row in r])


def int_inverse(m) -> IntMatrix:
    """Inverse of a unimodular integer matrix."""
    inv = inverse(m)
    if not is_integral(inv):
        raise ValueError("matrix is not unimodular")
    return inv


def solve_rational(a, b):
    """Solve ``a @ x == b`` exactly.

    Returns ``(x0, kernel)`` where ``x0`` is a particular solution with the
    shape of ``b`` and ``kernel`` is a basis of the null space of ``a`` (empty
    when the kernel is trivial). Raises ``InconsistentSystemError`` when no
    solution exists.
    """
    rows, cols = shape(a)
    if len(b) != rows:
        raise ShapeError("right-hand side has the wrong number of rows")
    k = shape(b)[1]
    aug = [list(a[i]) + list(b[i]) for i in range(rows)]
    r, pivots = rref(aug)
    if any(p >= cols for p in pivots):
        raise InconsistentSystemError("system has no solution")
    x = [[Fraction(0)] * k for _ in range(cols)]
    for i, p in enumerate(pivots):
        x[p] = list(r[i][cols:])
    return mat(x), nullspace(a)


def primitive_integer_vector(v) -> tuple[int, ...]:
    """Clear denominators and divide out the content."""
    den = math.lcm(*(Fraction(x).denominator for x in v))
    w = [int(Fraction(x) * den) for x in v]
    g = math.gcd(*w)
    return tuple(x // g for x in w) if g else tuple(w)


def hnf_with_transform(m):
    """Row-style Hermite normal form with unimodular transform.

    Returns ``(H, U)`` with ``U @ m == H``. ``H`` is in echelon form with
    positive pivots, entries above each pivot reduced into ``[0, pivot)``,
    and zero rows at the bottom.
    """
    rows, cols = shape(m)
    h = [list(row) for row in m]
    u = [list(row) for row in identity(rows)]
    r = 0
    for c in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if h[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(h[i][c]))
            h[r], h[p] = h[p], h[r]
            u[r], u[p] = u[p], u[r]
            done = True
            for i in range(r + 1, rows):
                if h[i][c]:
                    q = h[i][c] // h[r][c]
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c]:
                        done = False
            if done:
                break
        if r < rows and h[r][c] != 0:
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
    return mat(h), mat(u)


def hnf(m) -> IntMatrix:
    return hnf_with_transform(m)[0]


def integer_left_kernel(m) -> IntMatrix:
    """Z-basis (in HNF) of {x in Z^r : x m = 0}; saturated by construction."""
    h, u = hnf_with_transform(m)
    ker = [u[i] for i in range(len(h)) if not any(h[i])]
    if not ker:
        return ()
    return nonzero_rows(hnf(ker))


def nonzero_rows(m):
    return tuple(row for row in m if any(row))


def lattice_hnf(rows) -> IntMatrix:
    """HNF basis (zero rows dropped) of the Z-span of integer rows."""
    return nonzero_rows(hnf(rows)) if rows else ()


def snf(m) -> SNFResult:
    """Smith normal form with transforms: ``U @ m @ V == diag(d)``."""
    rows, cols = shape(m)
    a = [list(row) for row in m]
    u = [list(row) for row in identity(rows)]
    v = [list(row) for row in identity(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]

    n = min(rows, cols)
    for t in range(n):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, rows)
                       for j in range(t, cols) if a[i][j]]
            if not entries:
                break
            _, pi, pj = min(entries)
            swap_rows(t, pi)
            swap_cols(t, pj)
            clean = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // a[t][t])
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, a[t][j] // a[t][t])
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad, -1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    d = tuple(a[i][i] for i in range(n))
    return SNFResult(d, mat(u), mat(v))


def _inner(x, y, gram):
    return sum(x[i] * gram[i][j] * y[j] for i in range(len(x)) for j in range(len(y))
               if gram[i][j])


def _gram_schmidt(basis, gram):
    k = len(basis)
    bstar, norms = [], []
    mu = [[0] * k for _ in range(k)]
    for i in range(k):
        v = list(basis[i])
        for j in range(i):
            mu[i][j] = _inner(basis[i], bstar[j], gram) / norms[j]
            v = [a - mu[i][j] * b for a, b in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(_inner(v, v, gram))
    return bstar, norms, mu


def lattice_reduce(basis, gram=None, delta=Fraction(3, 4)):
    """LLL-reduce the rows of ``basis`` under the quadratic form ``gram``.

    With exact (int/Fraction) inputs the reduction is exact. For rank <= 4 the
    first vector is additionally replaced by a shortest lattice vector found
    by exhaustive enumeration.
    """
    b = [list(row) for row in basis]
    k = len(b)
    if k == 0:
        return ()
    dim = len(b[0])
    if gram is None:
        gram = identity(dim)
    if rank(mat(b)) < k:
        raise RankError("basis rows are linearly dependent")
    exact = all(not isinstance(x, float) for row in b for x in row) and \
        all(not isinstance(x, float) for row in gram for x in row)
    if not exact:
        delta = float(delta)
    i = 1
    while i < k:
        for j in range(i - 1, -1, -1):
            _, _, mu = _gram_schmidt(b, gram)
            q = round(mu[i][j])
            if q:
                b[i] = [x - q * y for x, y in zip(b[i], b[j])]
        _, norms, mu = _gram_schmidt(b, gram)
        if norms[i] >= (delta - mu[i][i - 1] ** 2) * norms[i - 1]:
            i += 1
        else:
            b[i], b[i - 1] = b[i - 1], b[i]
            i = max(i - 1, 1)
    if k <= 4:
        best = _inner(b[0], b[0], gram)
        cvec = None
        for coeffs in short_vectors(b, gram, best):
            v = [sum(c * b[r][t] for r, c in enumerate(coeffs)) for t in range(dim)]
            nv = _inner(v, v, gram)
            if nv < best:
                best, cvec = nv, coeffs
        if cvec is not None:
            # complete the (primitive) shortest coefficient vector to a unimodular change of basis
            _, u = hnf_with_transform(tuple((c,) for c in cvec))
            w = transpose(int_inverse(u))
            b = [list(row) for row in matmul(w, b)]
    return mat(b) if exact else tuple(tuple(row) for row in b)


def short_vectors(basis, gram, bound, slack=1e-9):
    """All nonzero integer coefficient vectors c with Q(c @ basis) <= bound.

    Fincke-Pohst enumeration on a floating Cholesky decomposition; ``slack``
    widens the radius so the list is a superset of the exact answer, and
    callers re-check candidates exactly.
    """
    k = len(basis)
    g = [[float(_inner(basis[i], basis[j], gram)) for j in range(k)] for i in range(k)]
    # q[i][i] = squared GS lengths, q[i][j] (j > i) = mu coefficients
    q = [row[:] for row in g]
    for i in range(k):
        for j in range(i + 1, k):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for a in range(i + 1, k):
            for bb in range(a, k):
                q[a][bb] -= q[a][i] * q[i][bb]
    radius = float(bound) * (1 + slack) + slack
    out = []
    x = [0] * k

    def rec(i, remaining):
        centre = -sum(q[i][j] * x[j] for j in range(i + 1, k))
        if q[i][i] <= 0:
            raise RankError("Gram matrix is not positive definite")
        span = math.sqrt(max(remaining, 0.0) / q[i][i])
        lo, hi = math.ceil(centre - span - 1e-12), math.floor(centre + span + 1e-12)
        for xi in range(lo, hi + 1):
            x[i] = xi
            used = q[i][i] * (xi - centre) ** 2
            if used > remaining + 1e-12:
                continue
            if i == 0:
                if any(x):
                    out.append(tuple(x))
            else:
                rec(i - 1, remaining - used)
        x[i] = 0

    rec(k - 1, radius)
    return out


def box_vectors(dim: int, bound: int):
    """Integer vectors with sup-norm <= bound, ordered by sup-norm then lexicographically."""
    vecs = list(itertools.product(range(-bound, bound + 1), repeat=dim))
    vecs.sort(key=lambda v: (max(map(abs, v), default=0), sum(map(abs, v)), tuple(-t for t in v)))
    return vecs
