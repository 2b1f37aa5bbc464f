"""Suslin matrices ``S(v, w)`` and their conjugates.

For vectors ``v = (a0, v1)``, ``w = (b0, w1)`` of length ``m`` the Suslin
matrix has size ``2**(m-1)`` and is built recursively::

    S(v, w) = [[ a0*I,             S(v1, w1) ],
               [ -S(w1, v1)^T,     b0*I      ]]

with ``S((a0,), (b0,)) = (a0)``.  The conjugate is ``bar(S) = S(w, v)^T``;
``S @ bar(S) == (v . w) * I``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional, Sequence

from .matrix import Mat
from .ring import Ring, RingElem, RingMismatch, ZZ

__all__ = [
    "SuslinPair",
    "SuslinMatrix",
    "sus",
    "sus_mat",
    "bar",
    "length",
    "extract",
    "is_suslin",
    "gen_E",
    "gen_F",
    "xyx",
]


@dataclass(frozen=True)
class SuslinPair:
    """A point ``(v, w)`` of the hyperbolic space ``H(R^m)``."""

    ring: Ring
    v: tuple
    w: tuple

    def __post_init__(self):
        if len(self.v) != len(self.w):
            raise ValueError(f"length mismatch: |v|={len(self.v)}, |w|={len(self.w)}")
        if not self.v:
            raise ValueError("vectors must have length >= 1")
        R = self.ring
        object.__setattr__(self, "v", tuple(R(x) for x in self.v))
        object.__setattr__(self, "w", tuple(R(x) for x in self.w))

    @classmethod
    def of(cls, ring: Ring, v: Sequence[Any], w: Sequence[Any]) -> "SuslinPair":
        return cls(ring, tuple(v), tuple(w))

    @classmethod
    def symbolic(cls, ring: Ring, m: int, a: str = "a", b: str = "b") -> "SuslinPair":
        """``((a1..am), (b1..bm))`` as indeterminates of ``ring``."""
        return cls(ring, tuple(ring.var(f"{a}{i}") for i in range(1, m + 1)),
                   tuple(ring.var(f"{b}{i}") for i in range(1, m + 1)))

    @property
    def m(self) -> int:
        return len(self.v)

    def q(self) -> RingElem:
        """The hyperbolic form ``v . w``."""
        R = self.ring
        return R.elem(R.dot((x.value, y.value) for x, y in zip(self.v, self.w)))

    def bar(self) -> "SuslinPair":
        """Coordinates of the conjugate: ``((b0, -v1), (a0, -w1))``."""
        return SuslinPair(self.ring, (self.w[0],) + tuple(-x for x in self.v[1:]),
                          (self.v[0],) + tuple(-x for x in self.w[1:]))

    def __add__(self, other: "SuslinPair") -> "SuslinPair":
        if other.ring != self.ring:
            raise RingMismatch()
        return SuslinPair(self.ring, tuple(x + y for x, y in zip(self.v, other.v)),
                          tuple(x + y for x, y in zip(self.w, other.w)))

    def scale(self, r) -> "SuslinPair":
        r = self.ring(r)
        return SuslinPair(self.ring, tuple(r * x for x in self.v), tuple(r * x for x in self.w))

    def coords(self) -> tuple:
        """``v`` followed by ``w``."""
        return self.v + self.w

    def __str__(self):
        return "((" + ", ".join(map(str, self.v)) + "), (" + ", ".join(map(str, self.w)) + "))"


def sus_mat(ring: Ring, v: Sequence[Any], w: Sequence[Any]) -> Mat:
    """The Suslin matrix for raw payload vectors ``v``, ``w``."""
    m = len(v)
    if m != len(w):
        raise ValueError("length mismatch")
    if m == 1:
        return Mat(ring, 1, [v[0]])
    top = sus_mat(ring, v[1:], w[1:])
    low = -sus_mat(ring, w[1:], v[1:]).T
    h = top.size
    return Mat.from_blocks([[Mat.diag_raw(ring, h, v[0]), top],
                            [low, Mat.diag_raw(ring, h, w[0])]])


@dataclass(frozen=True, eq=False)
class SuslinMatrix:
    pair: SuslinPair
    mat: Mat

    def __post_init__(self):
        if self.mat != _build(self.pair):
            raise ValueError("matrix does not match its Suslin coordinates")

    @property
    def ring(self) -> Ring:
        return self.pair.ring

    @property
    def m(self) -> int:
        return self.pair.m

    def bar(self) -> "SuslinMatrix":
        return bar(self)

    def length(self) -> RingElem:
        return length(self)

    def __eq__(self, other):
        if not isinstance(other, SuslinMatrix):
            return NotImplemented
        return self.pair == other.pair

    def __hash__(self):
        return hash(self.pair)

    def __repr__(self):
        return f"SuslinMatrix{self.pair}"


def _build(pair: SuslinPair) -> Mat:
    return sus_mat(pair.ring, [x.value for x in pair.v], [x.value for x in pair.w])


def sus(pair: SuslinPair) -> SuslinMatrix:
    return SuslinMatrix(pair, _build(pair))


def bar(S: SuslinMatrix) -> SuslinMatrix:
    p = S.pair
    R = p.ring
    # S(w, v)^T by definition; the coordinate form is checked by SuslinMatrix
    mat = sus_mat(R, [x.value for x in p.w], [x.value for x in p.v]).T
    return SuslinMatrix(p.bar(), mat)


def length(S: SuslinMatrix) -> RingElem:
    """``l(S) = v . w``, after checking ``S @ bar(S) == l(S) * I``."""
    q = S.pair.q()
    prod = S.mat @ bar(S).mat
    if prod != Mat.diag_raw(S.ring, S.mat.size, q.value):
        raise AssertionError("S * bar(S) is not the scalar v.w; construction bug")
    return q


def _log2(k: int) -> Optional[int]:
    if k < 1 or k & (k - 1):
        return None
    return k.bit_length() - 1


def _extract_raw(M: Mat):
    k = M.size
    R = M.ring
    if k == 2:
        return (M.raw(0, 0), M.raw(0, 1)), (M.raw(1, 1), R.neg(M.raw(1, 0)))
    A, B, C, D = M.quarters()
    if not (A.is_scalar() and D.is_scalar()):
        return None
    inner = _extract_raw(B)
    if inner is None:
        return None
    v1, w1 = inner
    if C != -sus_mat(R, w1, v1).T:
        return None
    return (A.data[0],) + v1, (D.data[0],) + w1


def extract(M: Mat) -> Optional[SuslinPair]:
    """Recover ``(v, w)`` from a Suslin matrix, or ``None`` if ``M`` is not one.

    ``M`` must have size ``2**(m-1)`` with ``m >= 2``; a 1x1 matrix does not
    determine ``b0`` and is rejected.
    """
    e = _log2(M.size)
    if e is None or e == 0:
        raise ValueError(f"extract needs a matrix of size 2**(m-1) with m >= 2, got {M.size}")
    found = _extract_raw(M)
    if found is None:
        return None
    R = M.ring
    return SuslinPair(R, tuple(R.elem(x) for x in found[0]), tuple(R.elem(x) for x in found[1]))


def is_suslin(M: Mat) -> bool:
    return extract(M) is not None


def _basis_pair(ring: Ring, i: int, m: int, which: str) -> SuslinPair:
    if not 1 <= i <= m:
        raise IndexError(f"index {i} out of range 1..{m}")
    unit = tuple(1 if k == i else 0 for k in range(1, m + 1))
    zero = (0,) * m
    return SuslinPair(ring, unit, zero) if which == "e" else SuslinPair(ring, zero, unit)


@lru_cache(maxsize=512)
def gen_E(i: int, m: int, ring: Ring = ZZ) -> SuslinMatrix:
    """``E_i = S(e_i, 0)``."""
    return sus(_basis_pair(ring, i, m, "e"))


@lru_cache(maxsize=512)
def gen_F(i: int, m: int, ring: Ring = ZZ) -> SuslinMatrix:
    """``F_i = S(0, f_i)``."""
    return sus(_basis_pair(ring, i, m, "f"))


def xyx(X: SuslinMatrix, Y: SuslinMatrix) -> SuslinMatrix:
    """``X @ Y @ X`` as a Suslin matrix; also checks ``bar(XYX) == bar X bar Y bar X``."""
    if X.mat.size != Y.mat.size:
        raise ValueError("X and Y must have the same size")
    P = X.mat @ Y.mat @ X.mat
    pair = extract(P)
    if pair is None:
        raise AssertionError("XYX is not a Suslin matrix")
    Z = SuslinMatrix(pair, P)
    bX, bY = bar(X).mat, bar(Y).mat
    if bar(Z).mat != bX @ bY @ bX:
        raise AssertionError("bar(XYX) != bar(X) bar(Y) bar(X)")
    return Z
