"""Brute-force reference computations for tests and acceptance runs.

Deliberately naive and self-contained: prime fields are handled with plain
``% p`` arithmetic, determinants by cofactor expansion, and nothing here
calls into the polynomial, code, or lattice routines it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from .errors import TooLarge, TrivialCode

SUBSPACE_BOUND = 3**4
LATTICE_BOUND = 10**6
ROOT_CONDITION_CUTOFF = 1e6


@dataclass(frozen=True)
class OracleReport:
    case: str
    expected: object
    actual: object
    agree: bool


def _prime_of(ctx):
    F = ctx.field
    if not F.is_prime_field:
        raise ValueError("oracles work over prime fields only")
    return F.p


def _shift(a, c, p):
    last = c[-1]
    return tuple([a[0] * last % p] + [(c[i - 1] + a[i] * last) % p for i in range(1, len(c))])


def _span(rows, p, n):
    out = set()
    for coeffs in product(range(p), repeat=len(rows)):
        v = [0] * n
        for c, r in zip(coeffs, rows):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, r)]
        out.add(tuple(v))
    return frozenset(out)


def _echelon_forms(p, n):
    """Every reduced row echelon matrix over F_p with n columns (one per subspace)."""
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
            for values in product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for i, pc in enumerate(pivots):
                    rows[i][pc] = 1
                for (i, j), v in zip(free, values):
                    rows[i][j] = v
                yield rows


def enumerate_ideals_bruteforce(ctx, bound=SUBSPACE_BOUND):
    """All subspaces of F_p^n closed under the shift, as frozensets of vectors."""
    p = _prime_of(ctx)
    n = ctx.n
    if p**n > bound:
        raise TooLarge(f"{p}^{n} exceeds the subspace-scan bound {bound}")
    a = [x % p for x in ctx.a]
    family = []
    for rows in _echelon_forms(p, n):
        span = _span(rows, p, n)
        if all(_shift(a, tuple(r), p) in span for r in rows):
            family.append(span)
    assert len(set(family)) == len(family)
    return family


def _polymul_mod(u, v, p):
    out = [0] * (len(u) + len(v) - 1)
    for i, x in enumerate(u):
        for j, y in enumerate(v):
            out[i + j] = (out[i + j] + x * y) % p
    return out


def min_distance_oracle(code):
    """Minimum weight over b(x) g(x) for every nonzero b with deg b < k."""
    p = _prime_of(code.ctx)
    k = code.k
    if k == 0:
        raise TrivialCode("the zero code has no nonzero codeword")
    g = list(code.g.coeffs)
    best = None
    for b in product(range(p), repeat=k):
        if not any(b):
            continue
        c = _polymul_mod(list(b), g, p)
        w = sum(1 for x in c if x)
        best = w if best is None else min(best, w)
    return best


def _ideal_cols(a, f):
    """Columns f, Hf, ..., H^{n-1} f of the ideal matrix, by direct iteration."""
    n = len(a)
    cols, col = [], list(f)
    for _ in range(n):
        cols.append(col)
        last = col[-1]
        col = [a[0] * last] + [col[i - 1] + a[i] * last for i in range(1, n)]
    return cols


def lattice_member_bruteforce(lat, y, bound=LATTICE_BOUND):
    """Search every x in Z_q^n for y = (H*(f) x; H*(g) x) mod q."""
    n, q = lat.ctx.n, lat.q
    if q**n > bound:
        raise TooLarge(f"{q}^{n} exceeds the lattice-scan bound {bound}")
    a = list(lat.ctx.a)
    cf, cg = _ideal_cols(a, lat.f), _ideal_cols(a, lat.g)
    target = tuple(v % q for v in y)
    for x in product(range(q), repeat=n):
        top = [sum(cf[j][i] * x[j] for j in range(n)) % q for i in range(n)]
        bottom = [sum(cg[j][i] * x[j] for j in range(n)) % q for i in range(n)]
        if tuple(top + bottom) == target:
            return True
    return False


def det_oracle(M):
    """Cofactor expansion along the first row."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j, x in enumerate(M[0]):
        if x:
            minor = [row[:j] + row[j + 1:] for row in M[1:]]
            total += (-1) ** j * x * det_oracle(minor)
    return total


def phi_roots(ctx):
    return np.roots([1.0] + [-float(x) for x in reversed(ctx.a)])


def root_condition(ctx):
    """Condition number of the Vandermonde matrix of the roots of phi."""
    w = phi_roots(ctx)
    V = np.vander(w, len(w), increasing=True)
    return float(np.linalg.cond(V))


def root_product(ctx, f):
    w = phi_roots(ctx)
    vals = np.polyval(list(reversed([float(x) for x in f])), w)
    return complex(np.prod(vals))


def root_product_check(ctx, f, expected, tolerance=1e-6):
    """Compare prod f(w_i) over float roots of phi with an exact value."""
    got = root_product(ctx, f)
    scale = max(abs(expected), 1.0)
    ok = abs(got - expected) <= tolerance * scale
    return OracleReport(f"root product a={ctx.a} f={tuple(f)}", expected, got, ok)


def diagonalization_residual(ctx, f, M):
    """max |W^{-1} diag(f(w)) W - M| with W_{ij} = w_i^j (rows are left eigenvectors of H)."""
    w = phi_roots(ctx)
    n = len(w)
    W = np.vander(w, n, increasing=True)
    D = np.diag(np.polyval(list(reversed([float(x) for x in f])), w))
    recon = np.linalg.solve(W, D @ W)
    return float(np.max(np.abs(recon - np.array(M, dtype=float))))


def _has_proper_factor(poly, p):
    """Trial division of a monic integer list (low to high) by every monic polynomial of degree <= deg/2."""
    m = len(poly) - 1
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            div = list(low) + [1]
            r = list(poly)
            for k in range(len(r) - 1, d - 1, -1):
                c = r[k]
                if c:
                    for i in range(d + 1):
                        r[k - d + i] = (r[k - d + i] - c * div[i]) % p
            if not any(r[:d]):
                return True
    return False


def count_irreducible_bruteforce(p, m):
    """Count monic irreducibles of degree m over F_p by exhaustive trial division."""
    return sum(
        1 for low in product(range(p), repeat=m)
        if not _has_proper_factor(list(low) + [1], p)
    )
