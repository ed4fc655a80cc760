"""Exact arithmetic in small finite fields.

A prime field F_p stores elements as ints in [0, p).  An extension
F[y]/<g(y)> over any already-built field stores elements as tuples of
length deg g holding base-field representations, lowest power first.
Arithmetic on raw representations lives on :class:`FieldSpec`; the
:class:`FieldElement` wrapper adds operators and field checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import DivisionByZero, FieldMismatch, NotMonic, NotPrime, Reducible


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power(q):
    """Return (p, m) with q = p**m, or None if q is not a prime power."""
    if q < 2:
        return None
    p = 2
    while q % p:
        p += 1
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    return (p, m) if r == 1 else None


class FieldSpec:
    """A finite field; either F_p or a single extension of another FieldSpec."""

    __slots__ = ("p", "base", "modulus", "degree", "order", "_key")

    def __init__(self, p, base=None, modulus=None):
        self.p = p
        self.base = base
        self.modulus = modulus
        if base is None:
            self.degree = 1
            self.order = p
        else:
            self.degree = len(modulus) - 1
            self.order = base.order ** self.degree
        self._key = (p, None if base is None else (base._key, modulus))

    # identity

    @property
    def is_prime_field(self):
        return self.base is None

    @property
    def kind(self):
        return "prime" if self.base is None else "extension"

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.base is None:
            return f"GF({self.p})"
        terms = []
        for i, c in enumerate(self.modulus):
            if self.base.is_zero(c):
                continue
            coeff = "" if (c == self.base.one and i > 0) else str(c)
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            terms.append(coeff + mono)
        return f"{self.base!r}[y]/({'+'.join(reversed(terms))})"

    # representations

    @property
    def zero(self):
        if self.base is None:
            return 0
        return (self.base.zero,) * self.degree

    @property
    def one(self):
        if self.base is None:
            return 1
        return (self.base.one,) + (self.base.zero,) * (self.degree - 1)

    def is_zero(self, x):
        return x == self.zero

    def is_unit(self, x):
        return not self.is_zero(x)

    def key(self, x):
        return self.index(x)

    def from_int(self, n):
        """Image of the integer n under Z -> F."""
        if self.base is None:
            return n % self.p
        return (self.base.from_int(n),) + (self.base.zero,) * (self.degree - 1)

    def coerce(self, x):
        """Accept an int, a FieldElement of this field, or a raw representation."""
        if isinstance(x, FieldElement):
            if x.field != self:
                raise FieldMismatch(f"{x.field!r} is not {self!r}")
            return x.rep
        if isinstance(x, int):
            return self.from_int(x)
        if self.base is not None and isinstance(x, (tuple, list)):
            if len(x) != self.degree:
                raise FieldMismatch(f"expected {self.degree} coordinates, got {len(x)}")
            return tuple(self.base.coerce(c) for c in x)
        raise FieldMismatch(f"cannot interpret {x!r} in {self!r}")

    def index(self, x):
        """Bijection F -> [0, order), base-digit expansion for extensions."""
        if self.base is None:
            return x
        r = 0
        for c in reversed(x):
            r = r * self.base.order + self.base.index(c)
        return r

    def from_index(self, i):
        if not 0 <= i < self.order:
            raise ValueError(f"index {i} out of range for {self!r}")
        if self.base is None:
            return i
        digits = []
        for _ in range(self.degree):
            i, d = divmod(i, self.base.order)
            digits.append(self.base.from_index(d))
        return tuple(digits)

    def elements(self):
        return [self.from_index(i) for i in range(self.order)]

    def embed(self, field, x):
        """Map x from ``field`` (this field or a field under it) into this field."""
        if field == self:
            return x
        if self.base is None:
            raise FieldMismatch(f"{field!r} does not embed in {self!r}")
        return (self.base.embed(field, x),) + (self.base.zero,) * (self.degree - 1)

    # arithmetic on representations

    def add(self, x, y):
        if self.base is None:
            return (x + y) % self.p
        return tuple(self.base.add(a, b) for a, b in zip(x, y))

    def neg(self, x):
        if self.base is None:
            return -x % self.p
        return tuple(self.base.neg(a) for a in x)

    def sub(self, x, y):
        if self.base is None:
            return (x - y) % self.p
        return tuple(self.base.sub(a, b) for a, b in zip(x, y))

    def mul(self, x, y):
        if self.base is None:
            return x * y % self.p
        b = self.base
        m = self.degree
        prod_ = [b.zero] * (2 * m - 1)
        for i, xi in enumerate(x):
            if b.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                prod_[i + j] = b.add(prod_[i + j], b.mul(xi, yj))
        # modulus is monic: y^m = -(g_0 + ... + g_{m-1} y^{m-1})
        for k in range(2 * m - 2, m - 1, -1):
            c = prod_[k]
            if b.is_zero(c):
                continue
            for i in range(m):
                prod_[k - m + i] = b.sub(prod_[k - m + i], b.mul(c, self.modulus[i]))
        return tuple(prod_[:m])

    def pow(self, x, e):
        if e < 0:
            return self.pow(self.inv(x), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    def inv(self, x):
        if self.is_zero(x):
            raise DivisionByZero(f"zero has no inverse in {self!r}")
        if self.base is None:
            return pow(x, -1, self.p)
        return self.pow(x, self.order - 2)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    # element wrappers

    def __call__(self, x):
        return FieldElement(self, self.coerce(x))

    def gen(self):
        """Residue class of y; for a prime field, 1."""
        if self.base is None:
            return FieldElement(self, 1)
        if self.degree == 1:
            # F[y]/<y + g_0> identifies y with -g_0
            return FieldElement(self, (self.base.neg(self.modulus[0]),))
        return FieldElement(self, (self.base.zero, self.base.one) + (self.base.zero,) * (self.degree - 2))


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    rep: object

    def _other(self, y):
        if isinstance(y, FieldElement):
            if y.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {y.field!r}")
            return y.rep
        if isinstance(y, int):
            return self.field.from_int(y)
        return NotImplemented

    def __add__(self, y):
        r = self._other(y)
        return NotImplemented if r is NotImplemented else FieldElement(self.field, self.field.add(self.rep, r))

    __radd__ = __add__

    def __sub__(self, y):
        r = self._other(y)
        return NotImplemented if r is NotImplemented else FieldElement(self.field, self.field.sub(self.rep, r))

    def __rsub__(self, y):
        r = self._other(y)
        return NotImplemented if r is NotImplemented else FieldElement(self.field, self.field.sub(r, self.rep))

    def __mul__(self, y):
        r = self._other(y)
        return NotImplemented if r is NotImplemented else FieldElement(self.field, self.field.mul(self.rep, r))

    __rmul__ = __mul__

    def __truediv__(self, y):
        r = self._other(y)
        return NotImplemented if r is NotImplemented else FieldElement(self.field, self.field.div(self.rep, r))

    def __rtruediv__(self, y):
        r = self._other(y)
        return NotImplemented if r is NotImplemented else FieldElement(self.field, self.field.div(r, self.rep))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.rep))

    def __pow__(self, e):
        return FieldElement(self.field, self.field.pow(self.rep, e))

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.rep))

    def is_zero(self):
        return self.field.is_zero(self.rep)

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"{self.rep!r}@{self.field!r}"


# module-level API


def field_make(p):
    """The prime field F_p."""
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    return FieldSpec(p)


def _rem(base, f, g):
    """Remainder of f by monic g; coefficient lists over ``base``, low to high."""
    f = list(f)
    dg = len(g) - 1
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if base.is_zero(c):
            continue
        for i in range(dg + 1):
            f[k - dg + i] = base.sub(f[k - dg + i], base.mul(c, g[i]))
    return f[:dg]


def _monic_polys(base, degree):
    for low in product(base.elements(), repeat=degree):
        yield list(low) + [base.one]


def has_factor_of_degree_at_most(base, g, bound):
    """True if monic g has a monic divisor of degree in [1, bound] over ``base``."""
    for d in range(1, bound + 1):
        for cand in _monic_polys(base, d):
            if all(base.is_zero(c) for c in _rem(base, g, cand)):
                return True
    return False


def ext_field_make(base, g):
    """The field base[y]/<g(y)>.

    ``g`` is a Polynomial over ``base`` or a coefficient sequence (lowest
    power first).  Irreducibility is checked by trial division up to
    degree deg(g)/2.
    """
    coeffs = getattr(g, "coeffs", g)
    coeffs = [base.coerce(c) for c in coeffs]
    while coeffs and base.is_zero(coeffs[-1]):
        coeffs.pop()
    if len(coeffs) < 2:
        raise Reducible("modulus must have degree at least 1")
    if coeffs[-1] != base.one:
        raise NotMonic("extension modulus must be monic")
    m = len(coeffs) - 1
    if has_factor_of_degree_at_most(base, coeffs, m // 2):
        raise Reducible(f"modulus of degree {m} factors over {base!r}")
    return FieldSpec(base.p, base=base, modulus=tuple(coeffs))


def field_from_order(q):
    """F_q for a prime power q; extensions use the first monic irreducible in index order."""
    pm = prime_power(q) if isinstance(q, int) else None
    if pm is None:
        raise NotPrime(f"{q} is not a prime power")
    p, m = pm
    base = FieldSpec(p)
    if m == 1:
        return base
    for cand in _monic_polys(base, m):
        if not has_factor_of_degree_at_most(base, cand, m // 2):
            return FieldSpec(p, base=base, modulus=tuple(cand))
    raise AssertionError("an irreducible polynomial exists for every degree")
