"""phi-cyclic codes: linear codes in F_q^n closed under the shift tau_phi.

For a = (a_0, ..., a_{n-1}) with a_0 != 0, phi(x) = x^n - a_{n-1}x^{n-1} - ... - a_0
and tau_phi is multiplication by x in F_q[x]/<phi>.  Codes correspond to monic
divisors g of phi; vectors are lists of raw field representations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .errors import (
    DimensionMismatch,
    InvalidArgument,
    NotDivisor,
    NotIrreducible,
    NotMonic,
    NotSeparable,
    TooLarge,
    TrivialCode,
    ZeroConstantTerm,
)
from .field import ext_field_make
from .linalg import field_matmul_t, field_rank, field_right_kernel
from .polyring import Polynomial, is_irreducible, is_separable, monic_divisors, poly_divmod, poly_xgcd

REVERSED_SHIFTS = "paper-construction"
KERNEL_FALLBACK = "kernel-fallback"


@dataclass(frozen=True)
class PhiContext:
    field: object
    n: int
    a: tuple
    phi: Polynomial
    T: tuple


def phi_context_make(field, a):
    """Build phi and the n x n shift matrix T from the vector a."""
    a = tuple(field.coerce(x) for x in a)
    n = len(a)
    if n < 1:
        raise InvalidArgument("a must have at least one entry")
    if field.is_zero(a[0]):
        raise ZeroConstantTerm("a_0 must be nonzero")
    phi = Polynomial(field, tuple(field.neg(x) for x in a) + (field.one,))
    T = [[field.zero] * n for _ in range(n)]
    for i in range(1, n):
        T[i][i - 1] = field.one
    for i in range(n):
        T[i][n - 1] = field.add(T[i][n - 1], a[i])
    return PhiContext(field, n, a, phi, tuple(tuple(r) for r in T))


def _vec(ctx, c):
    if len(c) != ctx.n:
        raise DimensionMismatch(f"expected length {ctx.n}, got {len(c)}")
    return [ctx.field.coerce(x) for x in c]


def tau_apply(ctx, c):
    F = ctx.field
    c = _vec(ctx, c)
    last = c[-1]
    out = [F.mul(ctx.a[0], last)]
    for i in range(1, ctx.n):
        out.append(F.add(c[i - 1], F.mul(ctx.a[i], last)))
    return out


def tau_power(ctx, c, k):
    for _ in range(k):
        c = tau_apply(ctx, c)
    return list(c)


def ring_mul(ctx, u, v):
    """Coefficient vector of u(x) v(x) mod phi(x)."""
    prod_ = Polynomial(ctx.field, tuple(_vec(ctx, u))) * Polynomial(ctx.field, tuple(_vec(ctx, v)))
    return (prod_ % ctx.phi).to_vector(ctx.n)


@dataclass(frozen=True)
class PhiCyclicCode:
    ctx: PhiContext
    g: Polynomial
    h: Polynomial
    k: int
    G: tuple
    H: tuple
    parity_source: str

    @property
    def n(self):
        return self.ctx.n

    @property
    def field(self):
        return self.ctx.field


def _as_poly(ctx, g):
    if isinstance(g, Polynomial):
        return g
    return Polynomial(ctx.field, tuple(g))


def reversed_shift_rows(ctx, h):
    """Reversed coefficient vector of h and its n-k-1 successive tau images."""
    k = h.degree
    if k == ctx.n:
        return []
    row = list(reversed(h.to_vector(ctx.n)))
    rows = []
    for _ in range(ctx.n - k):
        rows.append(row)
        row = tau_apply(ctx, row)
    return rows


def code_from_generator(ctx, g):
    """The phi-cyclic code generated by the monic divisor g of phi."""
    F = ctx.field
    g = _as_poly(ctx, g)
    if not g.is_monic():
        raise NotMonic(f"generator {g!r} is not monic")
    h, rem = poly_divmod(ctx.phi, g)
    if not rem.is_zero():
        raise NotDivisor(f"{g!r} does not divide {ctx.phi!r}")
    n = ctx.n
    k = n - g.degree
    G = []
    row = g.to_vector(n) if k else None
    for _ in range(k):
        G.append(row)
        row = tau_apply(ctx, row)

    H = reversed_shift_rows(ctx, h)
    source = REVERSED_SHIFTS
    orthogonal = all(F.is_zero(x) for r in field_matmul_t(F, G, H) for x in r)
    if not orthogonal or (H and field_rank(F, H) != n - k):
        H = field_right_kernel(F, G, n)
        source = KERNEL_FALLBACK
    return PhiCyclicCode(
        ctx, g, h, k,
        tuple(tuple(r) for r in G),
        tuple(tuple(r) for r in H),
        source,
    )


def encode(code, m):
    F = code.field
    if len(m) != code.k:
        raise DimensionMismatch(f"message length {len(m)} != k = {code.k}")
    out = [F.zero] * code.n
    for mi, row in zip(m, code.G):
        mi = F.coerce(mi)
        if F.is_zero(mi):
            continue
        out = [F.add(x, F.mul(mi, y)) for x, y in zip(out, row)]
    return out


def is_codeword(code, c):
    """Membership by divisibility of c(x) by the generator polynomial."""
    c = _vec(code.ctx, c)
    return (Polynomial(code.field, tuple(c)) % code.g).is_zero()


def syndrome(code, c):
    c = _vec(code.ctx, c)
    return field_matmul_t(code.field, [c], code.H)[0] if code.H else []


def codewords(code):
    """Every codeword, by enumerating all q^k messages."""
    F = code.field
    for m in product(F.elements(), repeat=code.k):
        yield encode(code, m)


def idempotent(code):
    """The codeword d(x) = a(x) g(x) mod phi with d * c = c for every codeword c."""
    if not 1 <= code.k <= code.n - 1:
        raise TrivialCode("idempotent is defined for 1 <= k <= n-1")
    if not is_separable(code.ctx.phi):
        raise NotSeparable(f"{code.ctx.phi!r} is not separable")
    d, a, _ = poly_xgcd(code.g, code.h)
    assert d.degree == 0
    return (a * code.g) % code.ctx.phi


@lru_cache(maxsize=256)
def root_field(field, g_coeffs):
    """The extension field[y]/<g>; its generator is a root of g."""
    return ext_field_make(field, g_coeffs)


def _root_field_for(ctx, g):
    if not is_irreducible(g):
        raise NotIrreducible(f"{g!r} is not irreducible")
    return root_field(ctx.field, g.coeffs)


def maximal_membership(code, c):
    """Membership by c(theta) == 0 for a root theta of the irreducible generator."""
    E = _root_field_for(code.ctx, code.g)
    c = _vec(code.ctx, c)
    return Polynomial(code.field, tuple(c))(E.gen()).is_zero()


@dataclass(frozen=True)
class VandermondeParity:
    ext: object
    roots: tuple
    rows: tuple

    def syndrome(self, field, c):
        E = self.ext
        cs = [E.embed(field, field.coerce(x)) for x in c]
        return field_matmul_t(E, [cs], self.rows)[0]

    def accepts(self, field, c):
        return all(self.ext.is_zero(s) for s in self.syndrome(field, c))


def vandermonde_parity(ctx, g):
    """Rows (1, b, b^2, ..., b^{n-1}) for the Frobenius conjugates b of a root of g."""
    g = _as_poly(ctx, g)
    E = _root_field_for(ctx, g)
    if not (ctx.phi % g).is_zero():
        raise NotDivisor(f"{g!r} does not divide {ctx.phi!r}")
    q = ctx.field.order
    beta = E.gen().rep
    roots, rows = [], []
    for _ in range(g.degree):
        roots.append(beta)
        rows.append(tuple(E.pow(beta, j) for j in range(ctx.n)))
        beta = E.pow(beta, q)
    return VandermondeParity(E, tuple(roots), tuple(rows))


def min_distance(code, bound=10**6):
    """Exact minimum Hamming weight over nonzero codewords."""
    if code.k == 0:
        raise TrivialCode("the zero code has no nonzero codeword")
    F = code.field
    if F.order ** code.k > bound:
        raise TooLarge(f"{F.order}^{code.k} codewords exceed the bound {bound}")
    best = code.n
    for c in codewords(code):
        w = sum(1 for x in c if not F.is_zero(x))
        if 0 < w < best:
            best = w
    return best


def enumerate_codes(ctx, bound=10**6):
    """One code per monic divisor of phi, trivial codes included."""
    return [code_from_generator(ctx, g) for g in monic_divisors(ctx.phi, bound)]


def constant_code_is_phi_cyclic(ctx):
    """Closed-form test: a_1 = ... = a_{n-1} = b and a_0 = 1 + b."""
    if ctx.n < 2:
        raise InvalidArgument("needs n >= 2")
    F = ctx.field
    b = ctx.a[-1]
    return all(x == b for x in ctx.a[1:]) and ctx.a[0] == F.add(F.one, b)


def constant_code_divides(ctx):
    """Direct test: 1 + x + ... + x^{n-1} divides phi."""
    ones = Polynomial(ctx.field, (ctx.field.one,) * ctx.n)
    return (ctx.phi % ones).is_zero()


def columns_independent(field, rows, t):
    """True if every set of t columns of the matrix is linearly independent.

    Diagnostic only: with all t = d-1 subsets independent the code has
    minimum distance at least d.
    """
    if t <= 0:
        return True
    ncols = len(rows[0]) if rows else 0
    if t > len(rows):
        return False
    for cols in combinations(range(ncols), t):
        sub = [[r[c] for r in rows] for c in cols]
        if field_rank(field, sub) < t:
            return False
    return True
