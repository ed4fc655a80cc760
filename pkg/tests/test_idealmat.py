import random

import pytest
from hypothesis import given, settings, strategies as st

from phicyclic.errors import DimensionMismatch, NotInvertibleModQ, ZeroConstantTerm
from phicyclic.idealmat import (
    apply_H,
    companion,
    ideal_matrix,
    idealmat_det,
    idealmat_inverse_mod,
    int_phi_context,
    inverse_vector_mod,
    invertible_mod,
    star,
)
from phicyclic.linalg import identity, matmul
from phicyclic.oracles import det_oracle


def test_companion_layout():
    assert companion(int_phi_context((1, 0))) == [[0, 1], [1, 0]]
    assert companion(int_phi_context((1, 0, 0))) == [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
    ctx = int_phi_context((4, -2, 7, 1))
    for k in range(3):
        e = [int(i == k) for i in range(4)]
        assert apply_H(ctx, e) == [int(i == k + 1) for i in range(4)]
    with pytest.raises(ZeroConstantTerm):
        int_phi_context((0, 1))


def test_ideal_matrix_examples():
    assert ideal_matrix(int_phi_context((1, 0, 0)), (1, 2, 3)).as_lists() == [[1, 3, 2], [2, 1, 3], [3, 2, 1]]
    assert ideal_matrix(int_phi_context((1, 0)), (1, 3)).as_lists() == [[1, 3], [3, 1]]
    ctx = int_phi_context((5, -1, 2))
    assert ideal_matrix(ctx, (1, 0, 0)).as_lists() == identity(3)
    with pytest.raises(DimensionMismatch):
        ideal_matrix(ctx, (1, 0))


def test_star_examples():
    ctx = int_phi_context((1, 0))
    assert star(ctx, (1, 3), (3, 0)) == [3, 9]
    ctx = int_phi_context((3, -1, 4))
    assert star(ctx, (2, 7, -1), (1, 0, 0)) == [2, 7, -1]


vec = lambda n: st.lists(st.integers(-20, 20), min_size=n, max_size=n)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(vec(n), vec(n), vec(n))))
def test_star_commutative_associative(data):
    a, f, g = data
    if a[0] == 0:
        a = [1] + a[1:]
    ctx = int_phi_context(a)
    assert star(ctx, f, g) == star(ctx, g, f)
    h = [x - 1 for x in f]
    assert star(ctx, star(ctx, f, g), h) == star(ctx, f, star(ctx, g, h))
    Mf, Mg = ideal_matrix(ctx, f).as_lists(), ideal_matrix(ctx, g).as_lists()
    assert matmul(Mf, Mg) == ideal_matrix(ctx, star(ctx, f, g)).as_lists()


def test_determinant_examples():
    ctx = int_phi_context((1, 0))
    assert idealmat_det(ctx, (3, 1)) == 8
    assert idealmat_det(ctx, (1, 3)) == -8
    assert idealmat_det(ctx, (1, 0)) == 1
    assert idealmat_det(ctx, (0, 0)) == 0


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(9)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = [rng.choice([-3, -2, -1, 1, 2, 3])] + [rng.randint(-3, 3) for _ in range(n - 1)]
        f = [rng.randint(-9, 9) for _ in range(n)]
        ctx = int_phi_context(a)
        assert idealmat_det(ctx, f) == det_oracle(ideal_matrix(ctx, f).as_lists())


def test_inverse_mod_examples():
    ctx = int_phi_context((1, 0))
    K = idealmat_inverse_mod(ctx, (1, 3), 29)
    assert K == [[18, 4], [4, 18]]
    assert inverse_vector_mod(ctx, (1, 3), 29) == [18, 4]
    for q in (2, 7, 128):
        assert idealmat_inverse_mod(ctx, (1, 0), q) == identity(2)
    with pytest.raises(NotInvertibleModQ):
        idealmat_inverse_mod(ctx, (1, 1), 5)
    assert not invertible_mod(ctx, (1, 1), 5)


def test_inverse_mod_random():
    rng = random.Random(4)
    hits = 0
    for _ in range(300):
        n = rng.randint(1, 6)
        q = rng.choice([2, 3, 7, 29, 128, 257])
        a = [rng.choice([-2, -1, 1, 2])] + [rng.randint(-2, 2) for _ in range(n - 1)]
        f = [rng.randint(-5, 5) for _ in range(n)]
        ctx = int_phi_context(a)
        if not invertible_mod(ctx, f, q):
            with pytest.raises(NotInvertibleModQ):
                idealmat_inverse_mod(ctx, f, q)
            continue
        hits += 1
        K = idealmat_inverse_mod(ctx, f, q)
        M = ideal_matrix(ctx, f).as_lists()
        I = identity(n)
        assert [[x % q for x in r] for r in matmul(K, M)] == I
        assert [[x % q for x in r] for r in matmul(M, K)] == I
        # the inverse is itself an ideal matrix
        k = [r[0] for r in K]
        assert [[x % q for x in r] for r in ideal_matrix(ctx, k).as_lists()] == K
    assert hits > 50
