import random
from itertools import product

import pytest

from phicyclic.errors import DimensionMismatch, NotDivisor, TrivialCode, ZeroConstantTerm
from phicyclic.field import field_make
from phicyclic.linalg import field_matmul_t
from phicyclic.oracles import enumerate_ideals_bruteforce, min_distance_oracle
from phicyclic.phicode import (
    KERNEL_FALLBACK,
    REVERSED_SHIFTS,
    code_from_generator,
    codewords,
    constant_code_divides,
    constant_code_is_phi_cyclic,
    encode,
    enumerate_codes,
    idempotent,
    is_codeword,
    maximal_membership,
    min_distance,
    phi_context_make,
    ring_mul,
    syndrome,
    tau_apply,
    vandermonde_parity,
)
from phicyclic.polyring import is_separable, poly


def test_context_layout(F2, F3):
    ctx = phi_context_make(F3, (1, 0))
    assert ctx.phi == poly(F3, [2, 0, 1])
    assert ctx.T == ((0, 1), (1, 0))
    ctx = phi_context_make(F2, (1, 0, 0))
    assert ctx.phi == poly(F2, [1, 0, 0, 1])
    assert ctx.T == ((0, 0, 1), (1, 0, 0), (0, 1, 0))
    with pytest.raises(ZeroConstantTerm):
        phi_context_make(F3, (0, 1))


def test_shift(F2, F3):
    ctx = phi_context_make(F2, (1, 0, 0))
    assert tau_apply(ctx, [1, 0, 1]) == [1, 1, 0]
    ctx = phi_context_make(F3, (2, 1, 1))
    assert tau_apply(ctx, [1, 0, 1]) == [2, 2, 1]
    assert tau_apply(ctx, [0, 0, 0]) == [0, 0, 0]
    with pytest.raises(DimensionMismatch):
        tau_apply(ctx, [1, 0])


def test_shift_matches_matrix(F3):
    rng = random.Random(1)
    for _ in range(100):
        n = rng.randint(1, 5)
        a = [rng.randint(1, 2)] + [rng.randrange(3) for _ in range(n - 1)]
        ctx = phi_context_make(F3, a)
        c = [rng.randrange(3) for _ in range(n)]
        by_matrix = [sum(ctx.T[i][j] * c[j] for j in range(n)) % 3 for i in range(n)]
        assert tau_apply(ctx, c) == by_matrix
        assert ring_mul(ctx, [0, 1] + [0] * (n - 2), c) == by_matrix if n >= 2 else True


def test_small_code(F3):
    ctx = phi_context_make(F3, (1, 0))
    code = code_from_generator(ctx, poly(F3, [1, 1]))
    assert code.k == 1
    assert code.G == ((1, 1),)
    assert code.h == poly(F3, [2, 1])
    assert code.H == ((1, 2),)
    assert code.parity_source == REVERSED_SHIFTS
    assert encode(code, [2]) == [2, 2]
    assert encode(code, [0]) == [0, 0]
    assert not is_codeword(code, [1, 2])
    assert is_codeword(code, [0, 0])
    assert syndrome(code, [1, 1]) == [0]
    assert min_distance(code) == 2
    assert min_distance(code) == min_distance_oracle(code)


def test_trivial_codes(F3):
    ctx = phi_context_make(F3, (1, 0))
    zero = code_from_generator(ctx, ctx.phi)
    assert zero.k == 0 and list(codewords(zero)) == [[0, 0]]
    whole = code_from_generator(ctx, poly(F3, [1]))
    assert whole.k == 2 and len(list(codewords(whole))) == 9
    assert min_distance(whole) == 1
    with pytest.raises(TrivialCode):
        min_distance(zero)
    with pytest.raises(TrivialCode):
        idempotent(whole)
    with pytest.raises(NotDivisor):
        code_from_generator(ctx, poly(F3, [0, 1]))


def test_encode_unit_message_is_generator(F2):
    ctx = phi_context_make(F2, (1, 0, 0))
    for code in enumerate_codes(ctx):
        if code.k:
            assert encode(code, [1] + [0] * (code.k - 1)) == code.g.to_vector(3)
            assert all(is_codeword(code, r) for r in code.G)


def test_idempotent_example(F3):
    ctx = phi_context_make(F3, (1, 0))
    code = code_from_generator(ctx, poly(F3, [1, 1]))
    d = idempotent(code)
    assert d == poly(F3, [2, 2])
    dv = d.to_vector(2)
    assert ring_mul(ctx, [1, 1], dv) == [1, 1]
    assert ring_mul(ctx, dv, dv) == dv


def test_maximal_membership_and_vandermonde(F2):
    # (x^3+x+1)(x+1) = x^4 + x^3 + x^2 + 1, so a = (1, 0, 1, 1)
    ctx = phi_context_make(F2, (1, 0, 1, 1))
    g = poly(F2, [1, 1, 0, 1])
    assert (ctx.phi % g).is_zero()
    code = code_from_generator(ctx, g)
    assert maximal_membership(code, g.to_vector(4))
    assert not maximal_membership(code, [1, 0, 0, 0])
    xg = (poly(F2, [0, 1]) * g % ctx.phi).to_vector(4)
    assert maximal_membership(code, xg)
    vp = vandermonde_parity(ctx, g)
    E = vp.ext
    theta = E.gen().rep
    assert list(vp.roots) == [theta, E.pow(theta, 2), E.pow(theta, 4)]
    assert vp.accepts(F2, g.to_vector(4))


def test_vandermonde_single_root(F3):
    ctx = phi_context_make(F3, (1, 0))
    g = poly(F3, [1, 1])  # x - 2
    vp = vandermonde_parity(ctx, g)
    assert len(vp.rows) == 1
    assert [vp.ext.index(x) for x in vp.rows[0]] == [1, 2]


def test_enumeration_counts(F2, F3):
    assert len(enumerate_codes(phi_context_make(F3, (1, 0)))) == 4
    assert len(enumerate_codes(phi_context_make(F2, (1, 0, 0)))) == 4
    assert len(enumerate_codes(phi_context_make(F2, (1, 1)))) == 2
    assert len(enumerate_ideals_bruteforce(phi_context_make(F3, (1, 0)))) == 4
    assert len(enumerate_ideals_bruteforce(phi_context_make(F2, (1, 1)))) == 2


def test_constant_code(F2, F3):
    for F, n in ((F2, 3), (F3, 4)):
        ctx = phi_context_make(F, [1] + [0] * (n - 1))
        assert constant_code_is_phi_cyclic(ctx) and constant_code_divides(ctx)
    ctx = phi_context_make(F3, (2, 1, 1))
    assert constant_code_is_phi_cyclic(ctx)
    assert poly(F3, [1, 1, 1]) * poly(F3, [1, 1]) == ctx.phi
    assert not constant_code_is_phi_cyclic(phi_context_make(F3, (1, 1, 0)))
    ctx = phi_context_make(F2, (1, 0, 0))
    rep = code_from_generator(ctx, poly(F2, [1, 1, 1]))
    assert min_distance(rep) == 3


def test_closed_form_matches_divisibility():
    for p in (2, 3, 5):
        F = field_make(p)
        for n in (2, 3, 4):
            for a in product(range(p), repeat=n):
                if a[0] == 0:
                    continue
                ctx = phi_context_make(F, a)
                assert constant_code_is_phi_cyclic(ctx) == constant_code_divides(ctx)


def test_parity_always_orthogonal():
    for p, nmax in ((2, 5), (3, 3)):
        F = field_make(p)
        fallbacks = 0
        for n in range(1, nmax + 1):
            for a in product(range(p), repeat=n):
                if a[0] == 0:
                    continue
                for code in enumerate_codes(phi_context_make(F, a)):
                    assert len(code.H) == n - code.k
                    assert all(x == 0 for r in field_matmul_t(F, code.G, code.H) for x in r)
                    fallbacks += code.parity_source == KERNEL_FALLBACK
        assert fallbacks >= 0


def test_min_distance_oracle_agreement():
    F = field_make(2)
    for a in product(range(2), repeat=5):
        if a[0] == 0:
            continue
        for code in enumerate_codes(phi_context_make(F, a)):
            if code.k:
                assert min_distance(code) == min_distance_oracle(code)


def test_extension_field_codes():
    from phicyclic.field import field_from_order
    F4 = field_from_order(4)
    ctx = phi_context_make(F4, (F4.one, F4.zero, F4.zero))
    codes = enumerate_codes(ctx)
    # x^3 - 1 splits into three distinct linear factors over F_4
    assert len(codes) == 8
    for code in codes:
        assert len(list(codewords(code))) == 4 ** code.k
        for c in codewords(code):
            assert is_codeword(code, tau_apply(ctx, c))
    assert is_separable(ctx.phi)
