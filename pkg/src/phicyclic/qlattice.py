"""The q-ary lattice spanned mod q by the columns of [H*(f); H*(g)].

A vector y = (top; bottom) in Z^{2n} is a member iff y = (H*(f) x; H*(g) x)
mod q for some x in Z^n.  When H*(f) is invertible mod q the lattice is
{(u; H*(h) u) mod q} with h = H*(f)^{-1} g, and its Hermite normal form has
the rows of

    [[ I_n, H*(h)^T ],
     [ 0,   q I_n   ]]

as a basis.  Basis vectors are the ROWS of N throughout this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DimensionMismatch, InvalidArgument, NotInvertibleModQ, Undecidable, VerificationFailed
from .idealmat import _check, apply_H, ideal_lists, idealmat_inverse_mod
from .linalg import bareiss_det, matvec, rational_solve, transpose

BRUTE_FORCE_BOUND = 10**6


@dataclass(frozen=True)
class ConvLattice:
    ctx: object
    f: tuple
    g: tuple
    q: int
    A: tuple
    A_prime: tuple
    f_inv: tuple | None
    h: tuple | None
    N: tuple | None

    @property
    def n(self):
        return self.ctx.n

    @property
    def has_basis(self):
        return self.N is not None


def hnf_matrix(ctx, h, q):
    """[[I, H*(h)^T], [0, qI]] for a public vector h."""
    n = ctx.n
    Hh = ideal_lists(ctx, h)
    N = []
    for i in range(n):
        N.append([1 if j == i else 0 for j in range(n)] + [Hh[j][i] for j in range(n)])
    for i in range(n):
        N.append([0] * n + [q if j == i else 0 for j in range(n)])
    return N


def build_lattice(ctx, f, g, q):
    f = _check(ctx, f, "f")
    g = _check(ctx, g, "g")
    if q < 2:
        raise InvalidArgument("q must be at least 2")
    Hf = ideal_lists(ctx, f)
    Hg = ideal_lists(ctx, g)
    A_prime = Hf + Hg
    try:
        K = idealmat_inverse_mod(ctx, f, q)
    except NotInvertibleModQ:
        K = h = N = None
    else:
        h = [x % q for x in matvec(K, g)]
        N = hnf_matrix(ctx, h, q)
    freeze = lambda M: None if M is None else tuple(tuple(r) for r in M)
    return ConvLattice(
        ctx, tuple(f), tuple(g), q,
        A=freeze(transpose(A_prime)),
        A_prime=freeze(A_prime),
        f_inv=freeze(K),
        h=None if h is None else tuple(h),
        N=freeze(N),
    )


def public_lattice(ctx, h, q):
    """The same lattice rebuilt from a public vector: generators (I; H*(h))."""
    e1 = [1] + [0] * (ctx.n - 1)
    return build_lattice(ctx, e1, h, q)


def _split(lat, y):
    n = lat.n
    if len(y) != 2 * n:
        raise DimensionMismatch(f"expected length {2 * n}, got {len(y)}")
    y = [int(v) for v in y]
    return y[:n], y[n:]


def lat_member(lat, y, bound=BRUTE_FORCE_BOUND):
    top, bottom = _split(lat, y)
    q = lat.q
    n = lat.n
    if lat.f_inv is not None:
        x = [v % q for v in matvec(lat.f_inv, top)]
        Hg = lat.A_prime[n:]
        return all((a - b) % q == 0 for a, b in zip(matvec(Hg, x), bottom))
    if q ** n > bound:
        raise Undecidable(f"H*(f) is singular mod {q} and {q}^{n} exceeds the search bound")
    target = [v % q for v in top + bottom]
    for x in product(range(q), repeat=n):
        if [v % q for v in matvec(lat.A_prime, x)] == target:
            return True
    return False


def sigma_apply(lat, y):
    top, bottom = _split(lat, y)
    return apply_H(lat.ctx, top) + apply_H(lat.ctx, bottom)


def hnf_basis(lat):
    if lat.N is None:
        raise NotInvertibleModQ(f"H*(f) is not invertible mod {lat.q}")
    return [list(r) for r in lat.N]


@dataclass(frozen=True)
class BasisReport:
    rows_are_members: bool
    generators_in_span: bool
    det: int
    det_ok: bool


def verify_basis(lat, N=None):
    """Check that the rows of N span exactly the lattice.

    (a) every row is a member; (b) every generator column of A', reduced
    mod q, is an integer combination of the rows; (c) |det N| = q^n.
    Raises VerificationFailed naming the first clause that fails.
    """
    N = hnf_basis(lat) if N is None else [list(r) for r in N]
    n, q = lat.n, lat.q
    if len(N) != 2 * n or any(len(r) != 2 * n for r in N):
        raise VerificationFailed("a", "basis must be 2n x 2n")
    for i, row in enumerate(N):
        if not lat_member(lat, row):
            raise VerificationFailed("a", f"row {i} is not a lattice member")
    Nt = transpose(N)
    for i in range(n):
        gen = [lat.A_prime[r][i] % q for r in range(2 * n)]
        coeffs = rational_solve(Nt, gen)
        if coeffs is None or any(c.denominator != 1 for c in coeffs):
            raise VerificationFailed("b", f"generator {i} is not an integer combination of the rows")
    det = bareiss_det(N)
    if abs(det) != q ** n:
        raise VerificationFailed("c", f"|det N| = {abs(det)} != q^n = {q ** n}")
    return BasisReport(True, True, det, True)
