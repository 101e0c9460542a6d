"""Univariate polynomials over Z and Q.

A polynomial is a tuple of coefficients in ascending order (constant term
first) with trailing zeros stripped; the zero polynomial is ``()``.
Coefficients are ints where possible and ``Fraction`` otherwise.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from . import linalg


class DomainError(ValueError):
    pass


def _n(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def poly(coeffs) -> tuple:
    c = [_n(Fraction(x)) if not isinstance(x, int) else x for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p) -> int:
    return len(p) - 1


def lc(p):
    return p[-1] if p else 0


def padd(p, q):
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def pneg(p):
    return tuple(-c for c in p)


def psub(p, q):
    return padd(p, pneg(q))


def pscale(c, p):
    return poly([c * x for x in p])


def pmul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def ppow(p, k: int):
    out = (1,)
    for _ in range(k):
        out = pmul(out, p)
    return out


def pdivmod(p, q):
    """Division with remainder over Q."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [Fraction(c) for c in p]
    dq = degree(q)
    lead = Fraction(q[-1])
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] / lead
        quo[k] = c
        if c:
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return poly(quo), poly(r[:dq] if dq > 0 else [])


def pmod(p, q):
    return pdivmod(p, q)[1]


def pquo(p, q):
    return pdivmod(p, q)[0]


def monic(p):
    if not p:
        return ()
    lead = Fraction(p[-1])
    return poly([Fraction(c) / lead for c in p])


def pgcd(p, q):
    """Monic gcd over Q."""
    while q:
        p, q = q, pmod(p, q)
    return monic(p)


def pderiv(p):
    return poly([i * c for i, c in enumerate(p)][1:])


def peval(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def content(p) -> Fraction:
    """Rational content, so that p / content(p) is primitive in Z[x] with positive lead."""
    if not p:
        return Fraction(0)
    fr = [Fraction(c) for c in p]
    den = math.lcm(*(c.denominator for c in fr))
    g = math.gcd(*(int(c * den) for c in fr))
    sign = 1 if p[-1] > 0 else -1
    return Fraction(sign * g, den)


def primitive(p):
    c = content(p)
    return poly([Fraction(x) / c for x in p]) if p else ()


def squarefree_decomposition(p) -> list[tuple[tuple, int]]:
    """Yun's algorithm: list of (monic squarefree factor, multiplicity)."""
    p = monic(p)
    if degree(p) < 1:
        return []
    out = []
    a = pgcd(p, pderiv(p))
    b = pquo(p, a)
    c = pquo(pderiv(p), a)
    d = psub(c, pderiv(b))
    i = 1
    while degree(b) > 0:
        g = pgcd(b, d)
        if degree(g) > 0:
            out.append((g, i))
        b = pquo(b, g)
        c = pquo(d, g)
        d = psub(c, pderiv(b))
        i += 1
    return out


def squarefree_part(p):
    out = (1,)
    for f, _ in squarefree_decomposition(p):
        out = pmul(out, f)
    return out


@lru_cache(maxsize=None)
def cyclotomic(k: int) -> tuple:
    """Phi_k by dividing x^k - 1 by Phi_d for the proper divisors d of k."""
    if k < 1:
        raise DomainError("cyclotomic index must be positive")
    num = poly([-1] + [0] * (k - 1) + [1])
    for d in range(1, k):
        if k % d == 0:
            num = pquo(num, cyclotomic(d))
    return num


def totient(k: int) -> int:
    return sum(1 for j in range(1, k + 1) if math.gcd(j, k) == 1)


def cyclotomic_indices(n: int) -> list[int]:
    """All k with phi(k) <= n (phi(k) >= sqrt(k/2) bounds the search)."""
    return [k for k in range(1, 2 * n * n + 3) if totient(k) <= n]


def companion(p):
    """Companion matrix acting on row vectors: last row holds -p_0..-p_{n-1}."""
    p = poly(p)
    n = degree(p)
    if n < 1:
        raise DomainError("companion matrix needs degree >= 1")
    if p[-1] != 1:
        raise DomainError("companion matrix needs a monic polynomial")
    rows = [[int(j == i + 1) for j in range(n)] for i in range(n - 1)]
    rows.append([-c for c in p[:-1]])
    return linalg.mat(rows)


def eval_poly_at_matrix(p, m):
    """Exact p(m) by Horner's rule."""
    n = linalg.shape(m)[0]
    if linalg.shape(m)[1] != n:
        raise linalg.ShapeError("expected a square matrix")
    acc = linalg.zeros(n, n)
    for c in reversed(poly(p)):
        acc = linalg.matmul(acc, m)
        acc = linalg.mat([[acc[i][j] + (c if i == j else 0) for j in range(n)]
                          for i in range(n)])
    return acc


# --- arithmetic over F_p, polynomials as lists in ascending order -------------

def _fp_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_divmod(a, b, p):
    a = a[:]
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * inv % p
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return _fp_trim(q), _fp_trim(a[:len(b) - 1])


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_gcd(a, b, p):
    while b:
        a, b = b, _fp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _fp_powmod(base, e, mod, p):
    result = [1]
    base = _fp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        e >>= 1
        if e:
            base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
    return result


def _fp_sub(a, b, p):
    n = max(len(a), len(b))
    return _fp_trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                     for i in range(n)])


def degree_pattern_mod_p(f, p: int) -> list[int] | None:
    """Degrees of the irreducible factors of f mod p (distinct-degree factorisation).

    Returns None when p divides the leading coefficient or f mod p is not
    squarefree.
    """
    a = [int(c) % p for c in f]
    if a[-1] == 0:
        return None
    a = _fp_trim(a)
    da = [(i * c) % p for i, c in enumerate(a)][1:]
    if len(_fp_gcd(a, _fp_trim(da), p)) > 1:
        return None
    degrees = []
    x = [0, 1]
    h = x
    i = 0
    while len(a) - 1 >= 2 * (i + 1):
        i += 1
        h = _fp_powmod(h, p, a, p)
        g = _fp_gcd(a, _fp_sub(h, x, p), p)
        k = len(g) - 1
        if k > 0:
            degrees += [i] * (k // i)
            a = _fp_divmod(a, g, p)[0]
            h = _fp_divmod(h, a, p)[1] if len(a) > 1 else h
    if len(a) > 1:
        degrees.append(len(a) - 1)
    return sorted(degrees)


def _subset_sums(degrees):
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _primes(limit):
    return [q for q in range(2, limit) if all(q % r for r in range(2, int(q ** 0.5) + 1))]


class Irreducibility(NamedTuple):
    irreducible: bool
    factor: tuple | None
    certificate: str


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def _divides_value(gv, fv) -> bool:
    return fv == 0 if gv == 0 else fv % gv == 0


SEARCH_LIMIT = 2_000_000


def _root_subset_factor(f, k: int):
    """Factor of degree k from a conjugation-closed subset of numerical roots.

    Each candidate a * prod(x - r) is rounded to integers and accepted only
    after exact division, so a wrong rounding can never produce a false factor.
    """
    rts = np.roots(np.array([float(c) for c in reversed(f)]))
    fl = np.array([float(c) for c in reversed(f)])
    dfl = np.polyder(fl)
    for _ in range(3):  # Newton polish
        d = np.polyval(dfl, rts)
        ok = d != 0
        rts[ok] -= np.polyval(fl, rts[ok]) / d[ok]
    for idx in itertools.combinations(range(len(rts)), k):
        sub = rts[list(idx)]
        if abs(np.sum(sub.imag)) > 1e-6 * (1 + np.sum(np.abs(sub))):
            continue
        mon = np.real(np.poly(sub))[::-1]
        for a in _divisors(f[-1]):
            g = tuple(int(round(a * c)) for c in mon)
            if g[-1] != a or g[0] == 0 or f[0] % g[0]:
                continue
            q, r = pdivmod(f, g)
            if not r and all(Fraction(c).denominator == 1 for c in q):
                return poly(g)
    return None


def _search_factor(f, k: int):
    """Exhaustive search for a factor of degree k of the primitive integer f.

    Leading and constant coefficients range over divisors; the others are
    bounded by Mignotte's bound |g_j| <= C(k, j) |lc g| ||f||_2 / |lc f|.
    """
    norm2 = math.sqrt(sum(c * c for c in f))
    f1, fm1 = peval(f, 1), peval(f, -1)
    for a in _divisors(f[-1]):
        bounds = [math.floor(math.comb(k, j) * a * norm2 / abs(f[-1])) for j in range(k + 1)]
        ranges = [range(-bounds[j], bounds[j] + 1) for j in range(1, k)]
        if math.prod(len(r) for r in ranges) > SEARCH_LIMIT:
            return None
        for c0 in _divisors(f[0]):
            for s0 in (1, -1):
                for mid in itertools.product(*ranges):
                    g = (s0 * c0, *mid, a)
                    if not (_divides_value(peval(g, 1), f1) and _divides_value(peval(g, -1), fm1)):
                        continue
                    q, r = pdivmod(f, g)
                    if not r and all(isinstance(c, int) for c in q):
                        return poly(g)
    return None


def is_irreducible_q(f) -> Irreducibility:
    """Decide irreducibility of f over Q, with a certificate either way."""
    f = poly(f)
    n = degree(f)
    if n < 1:
        raise DomainError("irreducibility needs degree >= 1")
    f = primitive(f)
    if n == 1:
        return Irreducibility(True, None, "degree 1")
    if f[0] == 0:
        return Irreducibility(False, (0, 1), "x divides f")
    sqf = pgcd(f, pderiv(f))
    if degree(sqf) > 0:
        return Irreducibility(False, primitive(sqf), "repeated factor")
    allowed = set(range(1, n))
    patterns = {}
    for p in _primes(200):
        pat = degree_pattern_mod_p(f, p)
        if pat is None:
            continue
        patterns[p] = pat
        if pat == [n]:
            return Irreducibility(True, None, f"irreducible mod {p}")
        allowed &= _subset_sums(pat)
        if not allowed:
            shown = ", ".join(f"{q}:{patterns[q]}" for q in patterns)
            return Irreducibility(True, None, f"incompatible degree patterns mod p ({shown})")
        if len(patterns) >= 12:
            break
    ks = sorted(d for d in allowed if d <= n // 2)
    for k in ks:
        g = _root_subset_factor(f, k)
        if g is not None:
            return Irreducibility(False, primitive(g), f"factor of degree {k}")
    for k in ks:
        g = _search_factor(f, k)
        if g is not None:
            return Irreducibility(False, primitive(g), f"factor of degree {k}")
    return Irreducibility(True, None,
                          f"no factor of degree {sorted(allowed)} from root subsets or bounded search")


def factor_q(f) -> list[tuple[tuple, int]]:
    """Factor f into primitive irreducibles over Z with multiplicities (unit dropped)."""
    out = []
    for g, mult in squarefree_decomposition(f):
        stack = [primitive(g)]
        while stack:
            h = stack.pop()
            res = is_irreducible_q(h)
            if res.irreducible:
                out.append((h, mult))
            else:
                stack.append(primitive(res.factor))
                stack.append(primitive(pquo(h, res.factor)))
    out.sort(key=lambda t: (degree(t[0]), t[0]))
    return out


def sturm_real_root_count(f) -> int:
    """Number of distinct real roots of f (Sturm's theorem, exact)."""
    f = squarefree_part(f)
    if degree(f) < 1:
        return 0
    seq = [f, pderiv(f)]
    while degree(seq[-1]) > 0:
        r = pneg(pmod(seq[-2], seq[-1]))
        if not r:
            break
        seq.append(r)

    def changes(signs):
        signs = [s for s in signs if s]
        return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)

    at_pos = [(1 if lc(s) > 0 else -1) for s in seq]
    at_neg = [(1 if lc(s) > 0 else -1) * (-1) ** degree(s) for s in seq]
    return changes(at_neg) - changes(at_pos)


def is_self_reciprocal(f) -> bool:
    f = poly(f)
    return f == tuple(reversed(f)) or f == pneg(tuple(reversed(f)))


def to_str(p, var="x") -> str:
    if not p:
        return "0"
    terms = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if mono and abs(c) == 1:
            coef = ""
        else:
            coef = str(abs(c))
            if mono:
                coef += "*"
        sign = "-" if c < 0 else "+"
        terms.append((sign, coef + mono))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, t in terms[1:]:
        s += f" {sign} {t}"
    return s
