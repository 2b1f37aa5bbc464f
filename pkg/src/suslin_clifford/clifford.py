"""The matrix model of the Clifford algebra of ``H(R^n)``.

``phi(v, w) = [[0, S(v, w)], [bar S(v, w), 0]]`` has square ``q(v, w) * I`` and
extends to an isomorphism ``Cl(H(R^n)) -> M_{2^n}(R)``.  The even part ``Cl_0``
is the block-diagonal matrices and the odd part the block-anti-diagonal ones.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .forms import basic_automorphism, star
from .matrix import Mat
from .ring import ModularRing, Ring, RingElem, ZZ
from .suslin import SuslinPair, bar, sus

__all__ = [
    "CliffordElem",
    "GeneratorWord",
    "phi",
    "gen_e",
    "gen_f",
    "generators",
    "eval_word",
    "grade_split",
    "span_check",
    "polarization",
]


@dataclass(frozen=True)
class CliffordElem:
    n: int
    mat: Mat

    def __post_init__(self):
        if self.mat.size != 2 ** self.n:
            raise ValueError(f"Clifford element for n={self.n} needs size {2 ** self.n}")

    @property
    def ring(self) -> Ring:
        return self.mat.ring

    @classmethod
    def scalar(cls, n: int, r, ring: Ring = ZZ) -> "CliffordElem":
        return cls(n, Mat.scalar(ring, 2 ** n, r))

    @classmethod
    def one(cls, n: int, ring: Ring = ZZ) -> "CliffordElem":
        return cls(n, Mat.identity(ring, 2 ** n))

    def _same(self, other: "CliffordElem"):
        if not isinstance(other, CliffordElem):
            raise TypeError("expected a CliffordElem")
        if other.n != self.n:
            raise ValueError("dimension mismatch")

    def __add__(self, other):
        self._same(other)
        return CliffordElem(self.n, self.mat + other.mat)

    def __sub__(self, other):
        self._same(other)
        return CliffordElem(self.n, self.mat - other.mat)

    def __neg__(self):
        return CliffordElem(self.n, -self.mat)

    def __matmul__(self, other):
        self._same(other)
        return CliffordElem(self.n, self.mat @ other.mat)

    __mul__ = __matmul__

    def scale(self, r) -> "CliffordElem":
        return CliffordElem(self.n, self.mat.scale(r))

    def star(self) -> "CliffordElem":
        return CliffordElem(self.n, star(self.mat, self.n))

    def basic_automorphism(self) -> "CliffordElem":
        return CliffordElem(self.n, basic_automorphism(self.mat, self.n))

    def is_even(self) -> bool:
        if self.n == 0:
            return True
        _, B, C, _ = self.mat.quarters()
        return B.is_zero() and C.is_zero()

    def is_odd(self) -> bool:
        if self.n == 0:
            return self.mat.is_zero()
        A, _, _, D = self.mat.quarters()
        return A.is_zero() and D.is_zero()


def phi(pair: SuslinPair) -> CliffordElem:
    """Image of ``(v, w)`` in ``M_{2^n}(R)``, ``n = len(v)``; checks ``phi^2 = q I``."""
    n = pair.m
    S = sus(pair)
    x = CliffordElem(n, Mat.block_antidiag(S.mat, bar(S).mat))
    sq = x.mat @ x.mat
    if sq != Mat.diag_raw(pair.ring, 2 ** n, pair.q().value):
        raise AssertionError("phi(x)^2 != q(x) I")
    return x


def _unit_pair(ring: Ring, i: int, n: int, which: str) -> SuslinPair:
    if not 1 <= i <= n:
        raise IndexError(f"generator index {i} out of range 1..{n}")
    unit = tuple(1 if k == i else 0 for k in range(1, n + 1))
    zero = (0,) * n
    return SuslinPair(ring, unit, zero) if which == "e" else SuslinPair(ring, zero, unit)


@lru_cache(maxsize=512)
def gen_e(i: int, n: int, ring: Ring = ZZ) -> CliffordElem:
    return phi(_unit_pair(ring, i, n, "e"))


@lru_cache(maxsize=512)
def gen_f(i: int, n: int, ring: Ring = ZZ) -> CliffordElem:
    return phi(_unit_pair(ring, i, n, "f"))


def generators(n: int, ring: Ring = ZZ) -> list[tuple[str, CliffordElem]]:
    """``[("e1", e1), ("f1", f1), ("e2", e2), ...]`` in the canonical order."""
    out = []
    for i in range(1, n + 1):
        out.append((f"e{i}", gen_e(i, n, ring)))
        out.append((f"f{i}", gen_f(i, n, ring)))
    return out


def polarization(x: SuslinPair, y: SuslinPair) -> RingElem:
    """``B(x, y) = q(x + y) - q(x) - q(y)``."""
    return (x + y).q() - x.q() - y.q()


_TOKEN = re.compile(r"([ef])(\d+)")


@dataclass(frozen=True)
class GeneratorWord:
    """``coeff * g_1 g_2 ... g_k`` with each ``g`` one of ``e_i`` / ``f_i``."""

    tokens: tuple[tuple[str, int], ...]
    coeff: RingElem

    @classmethod
    def parse(cls, text: str, coeff="1", ring: Ring = ZZ) -> "GeneratorWord":
        toks = []
        for part in text.replace(",", " ").replace("*", " ").split():
            m = _TOKEN.fullmatch(part)
            if m is None:
                raise ValueError(f"bad generator token {part!r}; expected e<i> or f<i>")
            toks.append((m.group(1), int(m.group(2))))
        return cls(tuple(toks), ring(coeff))

    def __str__(self):
        body = " ".join(f"{k}{i}" for k, i in self.tokens)
        return f"{self.coeff} * {body}" if body else str(self.coeff)


def eval_word(word: GeneratorWord, n: int) -> CliffordElem:
    ring = word.coeff.ring
    x = CliffordElem.one(n, ring)
    cache: dict = {}
    for kind, i in word.tokens:
        if (kind, i) not in cache:
            cache[kind, i] = gen_e(i, n, ring) if kind == "e" else gen_f(i, n, ring)
        x = x @ cache[kind, i]
    return x.scale(word.coeff)


def grade_split(x: CliffordElem) -> tuple[CliffordElem, CliffordElem]:
    """``(even, odd)`` parts: block-diagonal and block-anti-diagonal."""
    if x.n == 0:
        return x, CliffordElem(0, Mat.zeros(x.ring, 1))
    A, B, C, D = x.mat.quarters()
    even = Mat.block_diag(A, D)
    odd = Mat.block_antidiag(B, C)
    return CliffordElem(x.n, even), CliffordElem(x.n, odd)


def _rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c] % p:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def span_check(n: int, p: int = 7) -> int:
    """Rank over ``Z/p`` of all ``4**n`` ordered products of distinct generators."""
    if n > 3:
        raise ValueError("span_check supports n <= 3")
    ring = ModularRing(p)
    gens = [g for _, g in generators(n, ring)]
    vectors = []
    for r in range(len(gens) + 1):
        for subset in itertools.combinations(gens, r):
            x = CliffordElem.one(n, ring)
            for g in subset:
                x = x @ g
            vectors.append(x.mat.data)
    return _rank_mod_p(vectors, p)
