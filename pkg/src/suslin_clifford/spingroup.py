"""Unit-norm even elements, Spin membership, and the groups ``G``/``SG``.

An even element of ``M_{2^n}(R)`` is a block-diagonal pair ``(g1, g2)``.  For
odd ``n`` the projection ``(g, (g*)^-1) -> g`` identifies ``Spin_{2n}(R)`` with

    SG = {g in GL_{2^{n-1}}(R) : g S g* is Suslin for all Suslin S, l(g g*) = 1}

where ``*`` is the involution on ``M_{2^{n-1}}(R)``.  For even ``n`` the
projection has kernel ``{(1, u I) : u^2 = 1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .clifford import CliffordElem, generators
from .forms import star
from .matrix import Mat, det, inverse
from .ring import Ring, RingElem
from .suslin import SuslinMatrix, SuslinPair, bar, extract, gen_E, gen_F, sus

__all__ = [
    "SpinPair",
    "odd_coords",
    "in_U0",
    "in_spin",
    "spin_action",
    "in_G",
    "in_SG",
    "norm_d",
    "chi_inverse",
    "kernel_element",
    "spin4_check",
    "spin6_from_sl4",
    "l_MMstar_closed_form",
    "jordan_check",
]


@dataclass(frozen=True)
class SpinPair:
    """The even element ``diag(g1, g2)`` of ``M_{2^n}(R)``."""

    n: int
    g1: Mat
    g2: Mat

    def __post_init__(self):
        half = 2 ** (self.n - 1)
        if self.n < 1 or self.g1.size != half or self.g2.size != half:
            raise ValueError(f"SpinPair for n={self.n} needs blocks of size {half}")
        if self.g1.ring != self.g2.ring:
            raise ValueError("blocks must share a ring")

    @property
    def ring(self) -> Ring:
        return self.g1.ring

    @property
    def mat(self) -> Mat:
        return Mat.block_diag(self.g1, self.g2)

    def as_clifford(self) -> CliffordElem:
        return CliffordElem(self.n, self.mat)

    @classmethod
    def from_mat(cls, n: int, M: Mat) -> "SpinPair":
        A, B, C, D = M.quarters()
        if not (B.is_zero() and C.is_zero()):
            raise ValueError("element is not even (not block diagonal)")
        return cls(n, A, D)

    @classmethod
    def identity(cls, n: int, ring: Ring) -> "SpinPair":
        one = Mat.identity(ring, 2 ** (n - 1))
        return cls(n, one, one)

    def __matmul__(self, other: "SpinPair") -> "SpinPair":
        return SpinPair(self.n, self.g1 @ other.g1, self.g2 @ other.g2)

    __mul__ = __matmul__

    def star(self) -> "SpinPair":
        return SpinPair.from_mat(self.n, star(self.mat, self.n))


def odd_coords(Y: Mat, n: int) -> Optional[SuslinPair]:
    """If ``Y == phi(v, w)`` for some ``(v, w)`` in ``H(R^n)``, return it."""
    A, B, C, D = Y.quarters()
    if not (A.is_zero() and D.is_zero()):
        return None
    R = Y.ring
    if n == 1:
        return SuslinPair(R, (R.elem(B.data[0]),), (R.elem(C.data[0]),))
    pair = extract(B)
    if pair is None:
        return None
    if C != bar(sus(pair)).mat:
        return None
    return pair


def in_U0(x: SpinPair) -> bool:
    M = x.mat
    return M @ star(M, x.n) == Mat.identity(x.ring, M.size)


def in_spin(x: SpinPair) -> bool:
    """``x x* = 1`` and conjugation by ``x`` maps ``H(R^n)`` onto itself.

    Checked on the basis ``e_i, f_i`` in both directions (``x z x^-1`` and
    ``x^-1 z x``); by linearity that gives ``x H x^-1 = H``.
    """
    if not in_U0(x):
        return False
    M = x.mat
    Minv = star(M, x.n)
    for _, z in generators(x.n, x.ring):
        if odd_coords(M @ z.mat @ Minv, x.n) is None:
            return False
        if odd_coords(Minv @ z.mat @ M, x.n) is None:
            return False
    return True


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError(f"this operation needs odd n >= 3, got n={n}")


def _act(g: Mat, S: Mat, n: int) -> Mat:
    return g @ S @ star(g, n - 1)


def spin_action(g: Mat, S: SuslinMatrix, n: int) -> SuslinMatrix:
    """``g . S = g S g*`` as a Suslin matrix (odd ``n``)."""
    _require_odd(n)
    if S.m != n:
        raise ValueError(f"S must come from length-{n} vectors")
    P = _act(g, S.mat, n)
    pair = extract(P)
    if pair is None:
        raise ValueError("g not in G: g S g* is not a Suslin matrix")
    return SuslinMatrix(pair, P)


def in_G(g: Mat, n: int) -> bool:
    """``g`` invertible and ``g S g*`` Suslin for every basis Suslin matrix."""
    _require_odd(n)
    if g.size != 2 ** (n - 1):
        raise ValueError("size mismatch")
    if not det(g).is_unit():
        return False
    R = g.ring
    for i in range(1, n + 1):
        for X in (gen_E(i, n, R), gen_F(i, n, R)):
            if extract(_act(g, X.mat, n)) is None:
                return False
    return True


def norm_d(g: Mat, n: int) -> RingElem:
    """``d(g) = l(g g*)``; raises ``ValueError`` for ``g`` outside ``G``."""
    if not in_G(g, n):
        raise ValueError("g not in G")
    pair = extract(g @ star(g, n - 1))
    assert pair is not None  # g g* = g . I and I = E_1 + F_1
    return pair.q()


def in_SG(g: Mat, n: int) -> bool:
    if not in_G(g, n):
        return False
    return norm_d(g, n) == 1


def chi_inverse(g: Mat, n: int) -> SpinPair:
    """``g -> (g, (g*)^-1)``, the inverse of the projection ``Spin -> SG``."""
    if not in_SG(g, n):
        raise ValueError("g is not in SG")
    return SpinPair(n, g, inverse(star(g, n - 1)))


def kernel_element(n: int, u, ring: Ring) -> SpinPair:
    """``(I, u I)`` with ``u^2 = 1``: a kernel element of the projection, n even."""
    if n % 2:
        raise ValueError("kernel elements are for even n")
    u = ring(u)
    if u * u != 1:
        raise ValueError("u must satisfy u^2 = 1")
    h = 2 ** (n - 1)
    return SpinPair(n, Mat.identity(ring, h), Mat.scalar(ring, h, u))


def spin4_check(g1: Mat, g2: Mat) -> bool:
    """``(g1, g2)`` lies in ``Spin_4`` iff both have determinant 1."""
    ans = det(g1) == 1 and det(g2) == 1
    if ans != in_spin(SpinPair(2, g1, g2)):
        raise AssertionError("Spin_4 = SL_2 x SL_2 disagrees with in_spin")
    return ans


def spin6_from_sl4(M: Mat) -> SpinPair:
    """The Spin_6 element ``(M, (M*)^-1)`` for ``M`` in ``SL_4``."""
    if M.size != 4:
        raise ValueError("spin6_from_sl4 needs a 4x4 matrix")
    pair = extract(M @ star(M, 2))
    if pair is None:
        raise AssertionError("M M* is not a Suslin matrix")
    if pair.q() != 1:
        raise ValueError("det M != 1")
    return chi_inverse(M, 3)


def l_MMstar_closed_form(M: Mat) -> Mat:
    """``AA*DD* + BB*CC* - AC*DB* - BD*CA*`` for ``M = [[A, B], [C, D]]`` (4x4).

    Each term is a 2x2 matrix; the sum is the 2x2 scalar ``l(M M*) I``.  The
    cross terms enter with a minus sign: ``l(MM*) = xw + det(Y)`` for
    ``MM* = [[xI, Y], [., wI]]`` and ``det(Y) = YY*`` with ``Y = BD* - AC*``.
    """
    if M.size != 4:
        raise ValueError("closed form is for 4x4 matrices")
    A, B, C, D = M.quarters()
    s = lambda X: star(X, 1)  # noqa: E731
    return (A @ s(A) @ D @ s(D) + B @ s(B) @ C @ s(C)
            - A @ s(C) @ D @ s(B) - B @ s(D) @ C @ s(A))


def jordan_check(M: Mat) -> bool:
    """``M == M*`` for 4x4 ``M``; agrees with being a Suslin matrix when 2 is regular."""
    if M.size != 4:
        raise ValueError("jordan_check is for 4x4 matrices")
    if M.ring.char_two_zero_divisor:
        raise ValueError("jordan_check needs a ring where 2 is not a zero divisor")
    ans = M == star(M, 2)
    if ans != (extract(M) is not None):
        raise AssertionError("self-adjointness and the Suslin shape disagree")
    return ans
