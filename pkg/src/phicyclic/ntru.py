"""NTRU over Z[x]/<phi(x)> for a general monic phi, in ideal-matrix form.

Private key (f, g) with f = e_1 + p F and g = p G for ternary F, G; public
vector h = H*(f)^{-1} g mod q.  Encryption is c = m + H*(h) r mod q;
decryption multiplies by H*(f), centres mod q, then centres mod p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd

from .errors import BadShape, Infeasible, InvalidParams, MaxRetriesExceeded, NotInvertibleModQ
from .field import is_prime
from .idealmat import ideal_lists, idealmat_det, int_phi_context
from .linalg import matvec
from .polyring import is_separable
from .qlattice import build_lattice


@dataclass(frozen=True)
class NtruParams:
    n: int
    q: int
    p: int
    d_f: int
    a: tuple

    @cached_property
    def ctx(self):
        return int_phi_context(self.a)

    def as_dict(self):
        return {"n": self.n, "q": self.q, "p": self.p, "d_f": self.d_f, "a": list(self.a)}


def decryption_bound_holds(q, p, d_f):
    """d_f < (q/2 - 1)/(4p) - 1/2, evaluated exactly."""
    return Fraction(d_f) < (Fraction(q, 2) - 1) / (4 * p) - Fraction(1, 2)


def params_validate(n, q, p, d_f, a):
    """Return NtruParams, or raise InvalidParams listing every violated condition."""
    bad = []
    a = tuple(int(x) for x in a)
    if not is_prime(n):
        bad.append(f"n = {n} is not prime")
    if not 1 < p < q:
        bad.append(f"need 1 < p < q, got p = {p}, q = {q}")
    if gcd(p, q) != 1:
        bad.append(f"gcd(p, q) = {gcd(p, q)} != 1")
    if len(a) != n:
        bad.append(f"a has {len(a)} entries, expected n = {n}")
    elif a[0] == 0:
        bad.append("a_0 must be nonzero")
    else:
        if not is_separable(int_phi_context(a).phi):
            bad.append("phi is not separable")
    if d_f < 0:
        bad.append("d_f must be non-negative")
    if p > 0 and not decryption_bound_holds(q, p, d_f):
        bad.append(f"d_f = {d_f} violates d_f < (q/2 - 1)/(4p) - 1/2")
    if 2 * d_f + 1 > n - 1:
        bad.append(f"2*d_f + 1 = {2 * d_f + 1} exceeds n - 1 = {n - 1}")
    if bad:
        raise InvalidParams(bad)
    return NtruParams(n, q, p, d_f, a)


def sample_ternary(count_pos, count_neg, length, scale, rng, zero_positions=()):
    """Exactly count_pos entries +scale and count_neg entries -scale, zeros elsewhere.

    Free positions (ascending, excluding zero_positions) are shuffled by the
    stream; the first count_pos get +scale, the next count_neg get -scale.
    """
    blocked = set(zero_positions)
    free = [i for i in range(length) if i not in blocked]
    if count_pos < 0 or count_neg < 0 or count_pos + count_neg > len(free):
        raise Infeasible(f"{count_pos}+{count_neg} nonzeros do not fit in {len(free)} free positions")
    rng.shuffle(free)
    v = [0] * length
    for i in free[:count_pos]:
        v[i] = scale
    for i in free[count_pos:count_pos + count_neg]:
        v[i] = -scale
    return v


def sample_plain(params, rng):
    return sample_ternary(params.d_f + 1, params.d_f, params.n, 1, rng)


def check_plain(params, m, name="vector"):
    m = [int(x) for x in m]
    if len(m) != params.n:
        raise BadShape(f"{name} has length {len(m)}, expected {params.n}")
    if any(x not in (-1, 0, 1) for x in m):
        raise BadShape(f"{name} entries must lie in {{-1, 0, 1}}")
    pos, neg = m.count(1), m.count(-1)
    if (pos, neg) != (params.d_f + 1, params.d_f):
        raise BadShape(f"{name} has {pos} entries +1 and {neg} entries -1, expected {params.d_f + 1} and {params.d_f}")
    return m


def is_plain(params, m):
    try:
        check_plain(params, m)
    except BadShape:
        return False
    return True


@dataclass(frozen=True)
class NtruKeyPair:
    params: NtruParams
    f: tuple
    g: tuple
    h: tuple
    lattice: object = field(repr=False, compare=False)

    @property
    def N(self):
        return [list(r) for r in self.lattice.N]


def keypair_from_private(params, f, g):
    """Derive h and the public basis from (f, g); checks the mod-p congruences."""
    ctx = params.ctx
    lat = build_lattice(ctx, f, g, params.q)
    if lat.h is None:
        raise NotInvertibleModQ(f"H*(f) is not invertible mod {params.q}")
    p, n = params.p, params.n
    Hf, Hg = ideal_lists(ctx, f), ideal_lists(ctx, g)
    if any((Hf[i][j] - (i == j)) % p for i in range(n) for j in range(n)):
        raise InvalidParams(["H*(f) is not congruent to I mod p"])
    if any(x % p for row in Hg for x in row):
        raise InvalidParams(["H*(g) is not congruent to 0 mod p"])
    return NtruKeyPair(params, tuple(lat.f), tuple(lat.g), lat.h, lat)


def keygen(params, rng, max_retries=1000):
    """Draw f until H*(f) is invertible mod q, then draw g."""
    n, p, d = params.n, params.p, params.d_f
    for _ in range(max_retries):
        F = sample_ternary(d + 1, d, n, p, rng, zero_positions=(0,))
        f = [1 + F[0]] + F[1:]
        if gcd(idealmat_det(params.ctx, f), params.q) == 1:
            break
    else:
        raise MaxRetriesExceeded(f"no invertible f after {max_retries} draws")
    g = sample_ternary(d + 1, d, n, p, rng)
    return keypair_from_private(params, f, g)


@dataclass(frozen=True)
class Ciphertext:
    c: tuple
    n: int
    q: int


def encrypt(h, params, m, r):
    """c = m + H*(h) r mod q, residues in [0, q)."""
    m = check_plain(params, m, "m")
    r = check_plain(params, r, "r")
    if len(h) != params.n:
        raise BadShape(f"h has length {len(h)}, expected {params.n}")
    Hr = matvec(ideal_lists(params.ctx, list(h)), r)
    q = params.q
    return Ciphertext(tuple((mi + x) % q for mi, x in zip(m, Hr)), params.n, q)


def center(x, modulus):
    """Representative of x mod modulus in [-modulus/2, modulus/2)."""
    v = x % modulus
    return v - modulus if 2 * v >= modulus else v


def center_plain(x, p):
    """Representative of x mod p in (-p/2, p/2]."""
    v = x % p
    return v - p if 2 * v > p else v


def decrypt_detail(keypair, c):
    """Return (m', a) where a is the centred H*(f) c mod q."""
    params = keypair.params
    values = c.c if isinstance(c, Ciphertext) else tuple(c)
    if len(values) != params.n:
        raise BadShape(f"ciphertext has length {len(values)}, expected {params.n}")
    values = [int(x) % params.q for x in values]
    a = [center(x, params.q) for x in matvec(ideal_lists(params.ctx, list(keypair.f)), values)]
    return tuple(center_plain(x, params.p) for x in a), tuple(a)


def decrypt(keypair, c):
    return decrypt_detail(keypair, c)[0]


@dataclass(frozen=True)
class MarginReport:
    exact: tuple
    max_abs: int
    bound: float
    wrapped: bool
    decrypted: tuple
    success: bool

    def as_dict(self):
        return {
            "exact": list(self.exact),
            "max_abs": self.max_abs,
            "bound": self.bound,
            "wrapped": self.wrapped,
            "decrypted": list(self.decrypted),
            "success": self.success,
        }


def roundtrip_check(keypair, m, r):
    """Exact pre-reduction vector H*(f) m + H*(g) r and whether decryption survives."""
    params = keypair.params
    m = check_plain(params, m, "m")
    r = check_plain(params, r, "r")
    ctx, q = params.ctx, params.q
    exact = [x + y for x, y in zip(matvec(ideal_lists(ctx, list(keypair.f)), m),
                                   matvec(ideal_lists(ctx, list(keypair.g)), r))]
    wrapped = any(not -q <= 2 * v < q for v in exact)
    out = decrypt(keypair, encrypt(keypair.h, params, m, r))
    return MarginReport(
        exact=tuple(exact),
        max_abs=max(abs(v) for v in exact),
        bound=q / 2,
        wrapped=wrapped,
        decrypted=out,
        success=list(out) == m,
    )
