"""The forms ``J_n``, the standard involution ``M* = J M^T J^T``, and ``lambda``."""

from __future__ import annotations

from functools import lru_cache

from .matrix import Mat
from .ring import Ring, ZZ

__all__ = [
    "form_J",
    "level_of",
    "star",
    "star_blockwise",
    "lambda_mat",
    "basic_automorphism",
]


@lru_cache(maxsize=None)
def form_J(n: int, ring: Ring = ZZ) -> Mat:
    """``J_0 = (1)``; ``diag(J, -J)`` at even ``n``; ``[[0, J], [-J, 0]]`` at odd ``n``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return Mat.identity(ring, 1)
    prev = form_J(n - 1, ring)
    if n % 2 == 0:
        return Mat.block_diag(prev, -prev)
    return Mat.block_antidiag(prev, -prev)


def level_of(M: Mat, n: int | None = None) -> int:
    """The ``n`` with ``M.size == 2**n``; validates an explicit ``n``."""
    k = M.size
    if k & (k - 1):
        raise ValueError(f"size {k} is not a power of two")
    lvl = k.bit_length() - 1
    if n is not None and n != lvl:
        raise ValueError(f"size mismatch: matrix of size {k} is not 2**{n}")
    return lvl


def star(M: Mat, n: int | None = None) -> Mat:
    """The standard involution of ``Cl(H(R^n)) = M_{2^n}(R)``."""
    n = level_of(M, n)
    J = form_J(n, M.ring)
    return J @ M.T @ J.T


def star_blockwise(M: Mat, n: int | None = None) -> Mat:
    """Same map as :func:`star`, evaluated by recursion on 2x2 blocks.

    odd n:  [[A, B], [C, D]]* = [[D*, -B*], [-C*, A*]]
    even n: [[A, B], [C, D]]* = [[A*, -C*], [-B*, D*]]
    """
    n = level_of(M, n)
    if n == 0:
        return M
    A, B, C, D = M.quarters()
    s = lambda X: star_blockwise(X, n - 1)  # noqa: E731
    if n % 2:
        return Mat.from_blocks([[s(D), -s(B)], [-s(C), s(A)]])
    return Mat.from_blocks([[s(A), -s(C)], [-s(B), s(D)]])


@lru_cache(maxsize=None)
def lambda_mat(n: int, ring: Ring = ZZ) -> Mat:
    """``diag(I, -I)`` of size ``2**n``."""
    if n < 1:
        raise ValueError("lambda needs n >= 1")
    half = Mat.identity(ring, 2 ** (n - 1))
    return Mat.block_diag(half, -half)


def basic_automorphism(M: Mat, n: int | None = None) -> Mat:
    """``lambda M lambda``: fixes the even part, negates the odd part."""
    n = level_of(M, n)
    lam = lambda_mat(n, M.ring)
    return lam @ M @ lam
