import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suslin_clifford import (
    ZZ,
    Mat,
    ModularRing,
    PolyRing,
    SuslinPair,
    bar,
    basic_automorphism,
    det,
    form_J,
    lambda_mat,
    phi,
    star,
    star_blockwise,
    sus,
)
from suslin_clifford.sampling import generic_mat, pair_ring, random_mat

Z7 = ModularRing(7)


def test_J_examples():
    assert form_J(1) == Mat.from_rows(ZZ, [[0, 1], [-1, 0]])
    assert form_J(2) == Mat.from_rows(ZZ, [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
    assert form_J(0) == Mat.identity(ZZ, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_J_invariants(n):
    J = form_J(n)
    assert det(J) == 1
    assert J @ J.T == Mat.identity(ZZ, 2 ** n)
    sign = (-1) ** (n * (n + 1) // 2)
    assert J.T == J.scale(sign)


def test_J_ring_tagged():
    assert form_J(2, Z7).ring == Z7


def test_star_examples():
    assert star(Mat.identity(ZZ, 4)) == Mat.identity(ZZ, 4)
    X = sus(SuslinPair.of(ZZ, (3, 5), (7, 11)))
    assert star(X.mat) == bar(X).mat
    assert star_blockwise(Mat.from_rows(ZZ, [[9]]), 0) == Mat.from_rows(ZZ, [[9]])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_star_phi(n):
    R = pair_ring(n)
    x = phi(SuslinPair.symbolic(R, n))
    assert star(x.mat) == -x.mat
    assert basic_automorphism(x.mat, n) == -x.mat


@pytest.mark.parametrize("k", [1, 2, 3])
def test_star_generic(k):
    size = 2 ** k
    G = generic_mat(size, "m")
    H = generic_mat(size, "n")
    R = PolyRing(G.ring.variables + H.ring.variables)
    M = Mat.from_rows(R, G.to_text_rows())
    N = Mat.from_rows(R, H.to_text_rows())
    assert star(star(M)) == M
    assert star(M @ N) == star(N) @ star(M)
    assert star_blockwise(M) == star(M)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2 ** 32), st.integers(1, 4))
def test_star_antiautomorphism_random(seed, k):
    rng = random.Random(seed)
    M, N = random_mat(Z7, 2 ** k, rng), random_mat(Z7, 2 ** k, rng)
    assert star(M @ N) == star(N) @ star(M)
    assert star(M + N) == star(M) + star(N)
    assert star(star(M)) == M
    assert star_blockwise(M) == star(M)


def test_star_blockwise_50_random():
    rng = random.Random(0)
    for _ in range(50):
        M = random_mat(Z7, 4, rng)
        assert star_blockwise(M, 2) == star(M, 2)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_eq1(n):
    R = pair_ring(n + 1)
    S = sus(SuslinPair.symbolic(R, n + 1))
    J = form_J(n, R)
    want = S.mat if n % 2 == 0 else bar(S).mat
    assert J @ S.mat.T @ J.T == want


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lambda(n):
    lam = lambda_mat(n)
    assert star(lam) == (lam if n % 2 == 0 else -lam)
    assert lam @ lam == Mat.identity(ZZ, 2 ** n)


def test_basic_automorphism_fixes_even():
    rng = random.Random(1)
    A, D = random_mat(Z7, 4, rng), random_mat(Z7, 4, rng)
    M = Mat.block_diag(A, D)
    assert basic_automorphism(M, 3) == M


def test_size_mismatch():
    with pytest.raises(ValueError):
        star(Mat.identity(ZZ, 4), 3)
    with pytest.raises(ValueError):
        star(Mat.identity(ZZ, 3))
