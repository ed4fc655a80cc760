"""Dense univariate polynomials over a finite field, Z, or Z/qZ.

Coefficient index i holds the coefficient of x^i.  Coefficients are raw
representations of the domain (ints for Z, Z/qZ and prime fields).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .errors import (
    BothZero,
    DivisionByZero,
    FieldMismatch,
    InvalidArgument,
    LeadingCoefficientNotUnit,
    TooLarge,
    ZeroPolynomial,
)
from .field import FieldElement, FieldSpec, prime_power
from .linalg import bareiss_det


class Integers:
    """The ring Z."""

    zero = 0
    one = 1

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("ZZ")

    def __repr__(self):
        return "ZZ"

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise FieldMismatch(f"{x!r} is not an integer")
        return x

    def is_zero(self, x):
        return x == 0

    def is_unit(self, x):
        return x in (1, -1)

    def inv(self, x):
        if not self.is_unit(x):
            raise LeadingCoefficientNotUnit(f"{x} is not a unit in Z")
        return x

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def neg(self, x):
        return -x

    def mul(self, x, y):
        return x * y

    def key(self, x):
        return x


class IntegersMod:
    """The ring Z/qZ, residues stored in [0, q)."""

    def __init__(self, q):
        if q < 2:
            raise InvalidArgument("modulus must be at least 2")
        self.q = q
        self.zero = 0
        self.one = 1

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and other.q == self.q

    def __hash__(self):
        return hash(("Zmod", self.q))

    def __repr__(self):
        return f"Z/{self.q}Z"

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise FieldMismatch(f"{x!r} is not an integer")
        return x % self.q

    def is_zero(self, x):
        return x == 0

    def is_unit(self, x):
        return gcd(x, self.q) == 1

    def inv(self, x):
        if not self.is_unit(x):
            raise LeadingCoefficientNotUnit(f"{x} is not a unit mod {self.q}")
        return pow(x, -1, self.q)

    def add(self, x, y):
        return (x + y) % self.q

    def sub(self, x, y):
        return (x - y) % self.q

    def neg(self, x):
        return -x % self.q

    def mul(self, x, y):
        return x * y % self.q

    def key(self, x):
        return x


ZZ = Integers()


@dataclass(frozen=True)
class Polynomial:
    domain: object
    coeffs: tuple

    def __post_init__(self):
        D = self.domain
        cs = [D.coerce(c) for c in self.coeffs]
        while cs and D.is_zero(cs[-1]):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, domain, degree, c=None):
        c = domain.one if c is None else c
        return cls(domain, (domain.zero,) * degree + (c,))

    @classmethod
    def one(cls, domain):
        return cls(domain, (domain.one,))

    @classmethod
    def zero(cls, domain):
        return cls(domain, ())

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.domain.one

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.domain.zero

    def to_vector(self, n):
        if len(self.coeffs) > n:
            raise ValueError(f"degree {self.degree} does not fit in length {n}")
        return list(self.coeffs) + [self.domain.zero] * (n - len(self.coeffs))

    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.domain != self.domain:
            raise FieldMismatch(f"{self.domain!r} vs {other.domain!r}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        D = self.domain
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(D, tuple(D.add(self[i], other[i]) for i in range(n)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        D = self.domain
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(D, tuple(D.sub(self[i], other[i]) for i in range(n)))

    def __neg__(self):
        return Polynomial(self.domain, tuple(self.domain.neg(c) for c in self.coeffs))

    def __mul__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        D = self.domain
        if self.is_zero() or other.is_zero():
            return Polynomial(D, ())
        out = [D.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if D.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = D.add(out[i + j], D.mul(a, b))
        return Polynomial(D, tuple(out))

    def scale(self, c):
        D = self.domain
        return Polynomial(D, tuple(D.mul(c, a) for a in self.coeffs))

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomial("zero polynomial has no monic associate")
        return self.scale(self.domain.inv(self.lc))

    def derivative(self):
        D = self.domain
        lift = D.from_int if isinstance(D, FieldSpec) else D.coerce
        return Polynomial(D, tuple(D.mul(lift(i), c) for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, x):
        return poly_eval(self, x)

    def key(self):
        """Sort key: degree, then coefficients low to high."""
        return (self.degree, tuple(self.domain.key(c) for c in self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if self.domain.is_zero(c):
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if c == self.domain.one and i > 0:
                terms.append(mono)
            else:
                terms.append(f"{c}{mono}")
        return " + ".join(terms)


def poly(domain, coeffs):
    return Polynomial(domain, tuple(coeffs))


def poly_divmod(f, g):
    """Return (quotient, remainder) with f = quotient*g + remainder."""
    if f.domain != g.domain:
        raise FieldMismatch(f"{f.domain!r} vs {g.domain!r}")
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    D = f.domain
    if not D.is_unit(g.lc):
        raise LeadingCoefficientNotUnit(f"leading coefficient {g.lc} is not a unit in {D!r}")
    inv_lc = D.inv(g.lc)
    r = list(f.coeffs)
    dg = g.degree
    if len(r) <= dg:
        return Polynomial(D, ()), f
    quot = [D.zero] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = D.mul(r[k], inv_lc)
        if D.is_zero(c):
            continue
        quot[k - dg] = c
        for i, gi in enumerate(g.coeffs):
            r[k - dg + i] = D.sub(r[k - dg + i], D.mul(c, gi))
    return Polynomial(D, tuple(quot)), Polynomial(D, tuple(r[:dg]))


def poly_mulmod(f, g, m):
    return poly_divmod(f * g, m)[1]


def poly_xgcd(f, g):
    """Return (d, a, b) with a*f + b*g = d and d monic; coefficients in a field."""
    if f.domain != g.domain:
        raise FieldMismatch(f"{f.domain!r} vs {g.domain!r}")
    D = f.domain
    if not isinstance(D, FieldSpec):
        raise InvalidArgument("extended gcd needs field coefficients")
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    zero, one = Polynomial.zero(D), Polynomial.one(D)
    r0, r1 = f, g
    a0, a1 = one, zero
    b0, b1 = zero, one
    while not r1.is_zero():
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
    u = D.inv(r0.lc)
    return r0.scale(u), a0.scale(u), b0.scale(u)


def poly_gcd(f, g):
    return poly_xgcd(f, g)[0]


def is_separable(phi):
    """True iff phi has no repeated root in a splitting field."""
    if phi.is_zero():
        raise ZeroPolynomial("separability of the zero polynomial")
    if phi.degree == 0:
        return True
    D = phi.domain
    if isinstance(D, FieldSpec):
        return poly_gcd(phi, phi.derivative()).degree == 0
    if isinstance(D, Integers):
        return poly_resultant(phi, phi.derivative()) != 0
    raise InvalidArgument(f"separability over {D!r} is not supported")


def monic_polys(F, degree):
    """All monic polynomials of the given degree over F, in index order."""
    for low in product(F.elements(), repeat=degree):
        yield Polynomial(F, tuple(reversed(low)) + (F.one,))


def monic_divisors(phi, bound=10**6):
    """All monic divisors of phi over a finite field, sorted by Polynomial.key."""
    F = phi.domain
    if not isinstance(F, FieldSpec):
        raise InvalidArgument("monic divisors are enumerated over a finite field")
    if not phi.is_monic():
        raise InvalidArgument("phi must be monic")
    n = phi.degree
    space = sum(F.order ** d for d in range(n + 1))
    if space > bound:
        raise TooLarge(f"{space} candidates exceed the bound {bound}")
    found = []
    for d in range(n + 1):
        for g in monic_polys(F, d):
            if poly_divmod(phi, g)[1].is_zero():
                found.append(g)
    return sorted(found, key=Polynomial.key)


def is_irreducible(f):
    """Trial division by every monic polynomial of degree up to deg(f)/2."""
    F = f.domain
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        for g in monic_polys(F, d):
            if poly_divmod(f, g)[1].is_zero():
                return False
    return True


def mobius(n):
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    return -result if m > 1 else result


def count_irreducible(q, m):
    """Number of monic irreducible polynomials of degree m over F_q (Moebius sum)."""
    if not isinstance(q, int) or prime_power(q) is None:
        raise InvalidArgument(f"{q} is not a prime power")
    if not isinstance(m, int) or m < 1:
        raise InvalidArgument("degree must be at least 1")
    total = sum(mobius(d) * q ** (m // d) for d in range(1, m + 1) if m % d == 0)
    assert total % m == 0
    return total // m


def sylvester_matrix(f, g):
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return rows


def _int_check(f, g):
    for h in (f, g):
        if not isinstance(h.domain, Integers):
            raise InvalidArgument("resultants are computed over Z")
        if h.is_zero():
            raise ZeroPolynomial("resultant with the zero polynomial")


def poly_resultant(f, g):
    """Res(f, g) as the determinant of the Sylvester matrix."""
    _int_check(f, g)
    return bareiss_det(sylvester_matrix(f, g))


def _prem(a, b):
    """Pseudo-remainder of integer coefficient lists (low to high)."""
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - 1 - db + 1
    while len(a) - 1 >= db and any(a):
        c = a[-1]
        shift = len(a) - 1 - db
        a = [lb * x for x in a]
        for i, bi in enumerate(b):
            a[shift + i] -= c * bi
        a.pop()
        e -= 1
        while a and a[-1] == 0:
            a.pop()
    return [x * lb ** e for x in a]


def resultant_subresultant(f, g):
    """Res(f, g) by the subresultant pseudo-remainder sequence."""
    _int_check(f, g)
    A, B = list(f.coeffs), list(g.coeffs)
    s = 1
    if len(A) < len(B):
        if (len(A) - 1) * (len(B) - 1) % 2:
            s = -1
        A, B = B, A
    if len(B) == 1:
        return s * B[0] ** (len(A) - 1)
    gg, h = Fraction(1), Fraction(1)
    while True:
        da, db = len(A) - 1, len(B) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        R = _prem(A, B)
        if not R:
            return 0
        divisor = gg * h ** delta
        A = B
        B = [Fraction(x) / divisor for x in R]
        assert all(x.denominator == 1 for x in B)
        B = [int(x) for x in B]
        gg = Fraction(A[-1])
        h = h ** (1 - delta) * gg ** delta
        if len(B) == 1:
            da = len(A) - 1
            res = s * h ** (1 - da) * Fraction(B[0]) ** da
            assert res.denominator == 1
            return int(res)


def poly_eval(f, x):
    """Horner evaluation of f at x.

    For field coefficients, x is a FieldElement of the coefficient field or of
    an extension built over it.  Integer-like domains take plain ints.
    """
    D = f.domain
    if isinstance(D, FieldSpec):
        if isinstance(x, int):
            x = D(x)
        if not isinstance(x, FieldElement):
            raise FieldMismatch(f"cannot evaluate over {D!r} at {x!r}")
        E = x.field
        acc = E.zero
        for c in reversed(f.coeffs):
            acc = E.add(E.mul(acc, x.rep), E.embed(D, c))
        return FieldElement(E, acc)
    acc = D.zero
    for c in reversed(f.coeffs):
        acc = D.add(D.mul(acc, D.coerce(x)), c)
    return acc
