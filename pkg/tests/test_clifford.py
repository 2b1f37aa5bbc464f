import random

import pytest

from suslin_clifford import (
    ZZ,
    CliffordElem,
    GeneratorWord,
    Mat,
    ModularRing,
    SuslinPair,
    eval_word,
    gen_e,
    gen_f,
    generators,
    grade_split,
    phi,
    span_check,
    sus,
)
from suslin_clifford.clifford import polarization
from suslin_clifford.sampling import pair_ring, random_mat, random_pair


def test_phi_examples():
    x = phi(SuslinPair.of(ZZ, (1, 0), (0, 0)))
    assert x.mat == Mat.block_antidiag(sus(SuslinPair.of(ZZ, (1, 0), (0, 0))).mat,
                                       sus(SuslinPair.of(ZZ, (0, 0), (1, 0))).mat.T)
    assert (x @ x).mat.is_zero()
    y = phi(SuslinPair.of(ZZ, (1, 0), (1, 0)))
    assert (y @ y).mat == Mat.identity(ZZ, 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_square(n):
    R = pair_ring(n)
    p = SuslinPair.symbolic(R, n)
    x = phi(p)
    assert (x @ x).mat == Mat.scalar(R, 2 ** n, p.q())
    assert x.is_odd()


def test_phi_linear():
    rng = random.Random(5)
    R = ModularRing(7)
    for _ in range(20):
        p, q = random_pair(R, 3, rng), random_pair(R, 3, rng)
        assert phi(p + q).mat == phi(p).mat + phi(q).mat
        assert phi(p.scale(4)).mat == phi(p).mat.scale(4)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_clifford_relations(n):
    gens = generators(n)
    assert [name for name, _ in gens[:2]] == ["e1", "f1"]
    I = Mat.identity(ZZ, 2 ** n)
    for i in range(1, n + 1):
        e, f = gen_e(i, n), gen_f(i, n)
        assert (e @ e).mat.is_zero() and (f @ f).mat.is_zero()
        assert (e @ f + f @ e).mat == I
    for (_, z1) in gens:
        for (_, z2) in gens:
            lhs = (z1 @ z2 + z2 @ z1).mat
            s1 = (z1 + z2) @ (z1 + z2)
            b = s1 - z1 @ z1 - z2 @ z2
            assert lhs == b.mat
            assert lhs.is_scalar()


def test_polarization():
    a = SuslinPair.of(ZZ, (1, 2), (3, 4))
    b = SuslinPair.of(ZZ, (5, 6), (7, 8))
    # q(a+b) - q(a) - q(b)
    assert polarization(a, b) == (6 * 10 + 8 * 12) - (3 + 8) - (35 + 48)
    x, y = phi(a), phi(b)
    assert (x @ y + y @ x).mat == Mat.scalar(ZZ, 4, polarization(a, b))


def test_words():
    w = GeneratorWord.parse("", coeff="5")
    assert eval_word(w, 2).mat == Mat.scalar(ZZ, 4, 5)
    ef = eval_word(GeneratorWord.parse("e1 f1"), 2)
    assert ef @ ef == ef
    e12 = eval_word(GeneratorWord.parse("e1 e2"), 2)
    assert (e12 @ e12).mat.is_zero()
    w3 = eval_word(GeneratorWord.parse("e1 f2 e3", coeff="3"), 3)
    assert w3.mat == (gen_e(1, 3) @ gen_f(2, 3) @ gen_e(3, 3)).mat.scale(3)
    with pytest.raises(ValueError):
        GeneratorWord.parse("e1 g2")


def test_grade_split():
    R = pair_ring(2)
    x = phi(SuslinPair.symbolic(R, 2))
    even, odd = grade_split(x)
    assert even.mat.is_zero() and odd == x
    one = CliffordElem.one(2)
    even, odd = grade_split(one)
    assert even == one and odd.mat.is_zero()
    y = gen_e(1, 2) @ gen_f(2, 2)
    even, odd = grade_split(y)
    assert even == y and odd.mat.is_zero()


def test_grade_parity_random():
    rng = random.Random(2)
    R = ModularRing(7)
    for _ in range(20):
        a = CliffordElem(3, Mat.block_antidiag(random_mat(R, 4, rng), random_mat(R, 4, rng)))
        b = CliffordElem(3, Mat.block_antidiag(random_mat(R, 4, rng), random_mat(R, 4, rng)))
        c = CliffordElem(3, Mat.block_diag(random_mat(R, 4, rng), random_mat(R, 4, rng)))
        assert (a @ b).is_even()
        assert (a @ c).is_odd() and (c @ a).is_odd()
        even, odd = grade_split(a + c)
        assert even == c and odd == a


@pytest.mark.parametrize("n, rank", [(1, 4), (2, 16), (3, 64)])
def test_span(n, rank):
    assert span_check(n, 7) == rank


def test_star_method():
    x = gen_e(1, 2) @ gen_f(2, 2)
    assert x.star() == gen_f(2, 2).star() @ gen_e(1, 2).star()
    assert gen_e(2, 2).star() == -gen_e(2, 2)
