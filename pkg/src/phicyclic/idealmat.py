"""Ideal matrices H*(f) = [f, Hf, ..., H^{n-1} f] over Z.

H is the integer companion matrix of phi(x) = x^n - a_{n-1}x^{n-1} - ... - a_0,
so H*(f) is the matrix of multiplication by f(x) in Z[x]/<phi>.  Everything
here is exact; no floating point on any path.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DimensionMismatch, InternalMismatch, InvalidArgument, NotInvertibleModQ, ZeroConstantTerm
from .linalg import adjugate, bareiss_det, identity, matmul, matvec
from .polyring import ZZ, Polynomial


@dataclass(frozen=True)
class IntPhiContext:
    n: int
    a: tuple
    phi: Polynomial
    H: tuple


def int_phi_context(a):
    a = tuple(int(x) for x in a)
    n = len(a)
    if n < 1:
        raise InvalidArgument("a must have at least one entry")
    if a[0] == 0:
        raise ZeroConstantTerm("a_0 must be nonzero")
    phi = Polynomial(ZZ, tuple(-x for x in a) + (1,))
    H = [[0] * n for _ in range(n)]
    for i in range(1, n):
        H[i][i - 1] = 1
    for i in range(n):
        H[i][n - 1] += a[i]
    return IntPhiContext(n, a, phi, tuple(tuple(r) for r in H))


def companion(ctx):
    return [list(r) for r in ctx.H]


def _check(ctx, v, name="vector"):
    if len(v) != ctx.n:
        raise DimensionMismatch(f"{name} has length {len(v)}, expected {ctx.n}")
    return [int(x) for x in v]


def apply_H(ctx, v):
    """H v without forming the matrix: (a_0 v_{n-1}, v_0 + a_1 v_{n-1}, ...)."""
    last = v[-1]
    return [ctx.a[0] * last] + [v[i - 1] + ctx.a[i] * last for i in range(1, ctx.n)]


def _columns_construction(ctx, f):
    cols = []
    col = list(f)
    for _ in range(ctx.n):
        cols.append(col)
        col = apply_H(ctx, col)
    return [list(r) for r in zip(*cols)]


def _power_sum_construction(ctx, f):
    n = ctx.n
    H = companion(ctx)
    acc = [[0] * n for _ in range(n)]
    P = identity(n)
    for fi in f:
        if fi:
            for i in range(n):
                for j in range(n):
                    acc[i][j] += fi * P[i][j]
        P = matmul(H, P)
    return acc


@dataclass(frozen=True)
class IdealMatrix:
    ctx: IntPhiContext
    f: tuple
    M: tuple

    def as_lists(self):
        return [list(r) for r in self.M]


def ideal_matrix(ctx, f):
    """H*(f), built as the column sequence and as sum f_i H^i; both must agree."""
    f = _check(ctx, f)
    by_columns = _columns_construction(ctx, f)
    by_powers = _power_sum_construction(ctx, f)
    if by_columns != by_powers:
        raise InternalMismatch("column construction and power-sum construction differ")
    return IdealMatrix(ctx, tuple(f), tuple(tuple(r) for r in by_columns))


def ideal_lists(ctx, f):
    """H*(f) as a list of rows, column construction only (hot paths)."""
    return _columns_construction(ctx, _check(ctx, f))


def star(ctx, f, g):
    """f * g = H*(f) g, the coefficients of f(x) g(x) mod phi(x)."""
    f = _check(ctx, f)
    g = _check(ctx, g)
    return matvec(_columns_construction(ctx, f), g)


def idealmat_det(ctx, f):
    return bareiss_det(_columns_construction(ctx, _check(ctx, f)))


def invertible_mod(ctx, f, q):
    return gcd(idealmat_det(ctx, f), q) == 1


def idealmat_inverse_mod(ctx, f, q):
    """K over Z_q with K H*(f) = H*(f) K = I (mod q), via det^{-1} * adjugate."""
    if q < 2:
        raise InvalidArgument("modulus must be at least 2")
    M = _columns_construction(ctx, _check(ctx, f))
    det, adj = adjugate(M)
    if gcd(det, q) != 1:
        raise NotInvertibleModQ(f"det H*(f) = {det} shares a factor with {q}")
    u = pow(det, -1, q)
    return [[u * x % q for x in row] for row in adj]


def inverse_vector_mod(ctx, f, q):
    """k with H*(k) = H*(f)^{-1} mod q; the first column of the inverse."""
    K = idealmat_inverse_mod(ctx, f, q)
    return [row[0] for row in K]
