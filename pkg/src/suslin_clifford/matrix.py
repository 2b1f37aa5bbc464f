"""Dense square matrices over a :class:`~suslin_clifford.ring.Ring`.

Everything here is division free, so it works over rings with zero divisors:
the determinant comes from Berkowitz's characteristic-polynomial algorithm and
the inverse from the adjugate obtained by Cayley-Hamilton.
"""

from __future__ import annotations

from typing import Any, Sequence

from .ring import Ring, RingElem, RingMismatch

__all__ = [
    "Mat",
    "NotInvertible",
    "charpoly",
    "det",
    "inverse",
    "mat_arith",
]


class NotInvertible(ArithmeticError):
    def __init__(self, msg: str = "matrix not invertible over ring"):
        super().__init__(msg)


class Mat:
    """Immutable ``size x size`` matrix; ``data`` holds raw payloads row-major."""

    __slots__ = ("ring", "size", "data", "_hash")

    def __init__(self, ring: Ring, size: int, data: Sequence[Any]):
        if size < 1:
            raise ValueError("matrix size must be positive")
        if len(data) != size * size:
            raise ValueError(f"expected {size * size} entries, got {len(data)}")
        self.ring = ring
        self.size = size
        self.data = tuple(data)
        self._hash = None

    # construction ------------------------------------------------------------
    @classmethod
    def from_rows(cls, ring: Ring, rows: Sequence[Sequence[Any]]) -> "Mat":
        """Rows may contain ints, strings in the ring's text grammar, or RingElems."""
        k = len(rows)
        if any(len(r) != k for r in rows):
            raise ValueError("matrix must be square")
        return cls(ring, k, [ring.coerce(x) for r in rows for x in r])

    @classmethod
    def identity(cls, ring: Ring, size: int) -> "Mat":
        return cls.diag_raw(ring, size, ring.one())

    @classmethod
    def zeros(cls, ring: Ring, size: int) -> "Mat":
        z = ring.zero()
        return cls(ring, size, [z] * (size * size))

    @classmethod
    def scalar(cls, ring: Ring, size: int, value) -> "Mat":
        """``value * I``; ``value`` is anything :meth:`Ring.coerce` accepts."""
        return cls.diag_raw(ring, size, ring.coerce(value))

    @classmethod
    def diag_raw(cls, ring: Ring, size: int, payload) -> "Mat":
        data = [ring.zero()] * (size * size)
        for i in range(size):
            data[i * size + i] = payload
        return cls(ring, size, data)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["Mat"]]) -> "Mat":
        """Assemble a 2x2 (or larger) grid of equally sized blocks."""
        nb = len(blocks)
        b = blocks[0][0].size
        ring = blocks[0][0].ring
        for row in blocks:
            if len(row) != nb:
                raise ValueError("block grid must be square")
            for blk in row:
                if blk.size != b:
                    raise ValueError("blocks must share a size")
                if blk.ring != ring:
                    raise RingMismatch()
        k = nb * b
        data = []
        for bi in range(nb):
            for r in range(b):
                for bj in range(nb):
                    blk = blocks[bi][bj]
                    data.extend(blk.data[r * b:(r + 1) * b])
        return cls(ring, k, data)

    @classmethod
    def block_diag(cls, a: "Mat", d: "Mat") -> "Mat":
        z = cls.zeros(a.ring, a.size)
        return cls.from_blocks([[a, z], [z, d]])

    @classmethod
    def block_antidiag(cls, b: "Mat", c: "Mat") -> "Mat":
        """``[[0, b], [c, 0]]``."""
        z = cls.zeros(b.ring, b.size)
        return cls.from_blocks([[z, b], [c, z]])

    # access --------------------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> RingElem:
        i, j = ij
        return RingElem(self.ring, self.data[i * self.size + j])

    def raw(self, i: int, j: int):
        return self.data[i * self.size + j]

    def rows(self) -> list[list[Any]]:
        k = self.size
        return [list(self.data[i * k:(i + 1) * k]) for i in range(k)]

    def block(self, bi: int, bj: int, nblocks: int = 2) -> "Mat":
        """Block ``(bi, bj)`` of an ``nblocks x nblocks`` partition."""
        k = self.size
        if k % nblocks:
            raise ValueError("size not divisible by block count")
        b = k // nblocks
        data = []
        for r in range(bi * b, (bi + 1) * b):
            data.extend(self.data[r * k + bj * b:r * k + (bj + 1) * b])
        return Mat(self.ring, b, data)

    def quarters(self) -> tuple["Mat", "Mat", "Mat", "Mat"]:
        """``(A, B, C, D)`` for ``self == [[A, B], [C, D]]``."""
        return self.block(0, 0), self.block(0, 1), self.block(1, 0), self.block(1, 1)

    def is_zero(self) -> bool:
        iz = self.ring.is_zero
        return all(iz(x) for x in self.data)

    def is_scalar(self) -> bool:
        """True if ``self == r*I`` for some ``r``."""
        k = self.size
        d0 = self.data[0]
        iz = self.ring.is_zero
        for i in range(k):
            for j in range(k):
                x = self.data[i * k + j]
                if i == j:
                    if x != d0:
                        return False
                elif not iz(x):
                    return False
        return True

    # arithmetic ------------------------------------------------------------------
    def _check(self, other: "Mat"):
        if not isinstance(other, Mat):
            raise TypeError("expected a Mat")
        if other.ring != self.ring:
            raise RingMismatch()
        if other.size != self.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")

    def __add__(self, other: "Mat") -> "Mat":
        self._check(other)
        add = self.ring.add
        return Mat(self.ring, self.size, [add(a, b) for a, b in zip(self.data, other.data)])

    def __sub__(self, other: "Mat") -> "Mat":
        self._check(other)
        sub = self.ring.sub
        return Mat(self.ring, self.size, [sub(a, b) for a, b in zip(self.data, other.data)])

    def __neg__(self) -> "Mat":
        neg = self.ring.neg
        return Mat(self.ring, self.size, [neg(a) for a in self.data])

    def __matmul__(self, other: "Mat") -> "Mat":
        self._check(other)
        R = self.ring
        k = self.size
        iz = R.is_zero
        A, B = self.data, other.data
        rows = [[(t, A[i * k + t]) for t in range(k) if not iz(A[i * k + t])] for i in range(k)]
        cols = [{t: B[t * k + j] for t in range(k) if not iz(B[t * k + j])} for j in range(k)]
        zero = R.zero()
        out = []
        for i in range(k):
            row = rows[i]
            for j in range(k):
                col = cols[j]
                pairs = [(a, col[t]) for t, a in row if t in col]
                out.append(R.dot(pairs) if pairs else zero)
        return Mat(R, k, out)

    __mul__ = __matmul__

    def scale(self, r) -> "Mat":
        """``r * self`` for a ring scalar ``r``."""
        R = self.ring
        v = R.coerce(r)
        return self.scale_raw(v)

    def scale_raw(self, v) -> "Mat":
        R = self.ring
        mul = R.mul
        return Mat(R, self.size, [mul(v, a) for a in self.data])

    @property
    def T(self) -> "Mat":
        k = self.size
        d = self.data
        return Mat(self.ring, k, [d[j * k + i] for i in range(k) for j in range(k)])

    def transpose(self) -> "Mat":
        return self.T

    def apply(self, vec: Sequence[Any]) -> list:
        """``self @ vec`` for a column vector of raw payloads."""
        k = self.size
        R = self.ring
        return [R.dot((self.data[i * k + t], vec[t]) for t in range(k)) for i in range(k)]

    def det(self) -> RingElem:
        return det(self)

    def inverse(self) -> "Mat":
        return inverse(self)

    # comparisons / display -------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.ring == other.ring and self.size == other.size and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            key = self.ring.key
            self._hash = hash((self.ring, self.size, tuple(key(x) for x in self.data)))
        return self._hash

    def to_text_rows(self) -> list[list[str]]:
        fmt = self.ring.format
        return [[fmt(x) for x in row] for row in self.rows()]

    def __repr__(self):
        return f"Mat({self.ring!r}, {self.to_text_rows()!r})"

    def __str__(self):
        cells = self.to_text_rows()
        w = max(len(c) for row in cells for c in row)
        return "\n".join("[" + "  ".join(c.rjust(w) for c in row) + "]" for row in cells)


def charpoly(M: Mat) -> list:
    """Coefficients ``[1, c1, ..., cn]`` of ``det(t*I - M)`` (Berkowitz).

    Division free: only ring additions and multiplications are used.
    """
    R = M.ring
    n = M.size
    A = M.rows()
    one = R.one()
    neg = R.neg
    C = [one, neg(A[0][0])]
    for r in range(1, n):
        row = A[r][:r]
        col = [A[i][r] for i in range(r)]
        lead = [A[i][:r] for i in range(r)]
        t = [one, neg(A[r][r])]
        vec = col
        for step in range(r):
            t.append(neg(R.dot(zip(row, vec))))
            if step < r - 1:
                vec = [R.dot(zip(lead[i], vec)) for i in range(r)]
        # lower-triangular Toeplitz (first column t) times C
        new = []
        for i in range(r + 2):
            new.append(R.dot((t[i - j], C[j]) for j in range(min(i, r) + 1)))
        C = new
    return C


def det(M: Mat) -> RingElem:
    R = M.ring
    c = charpoly(M)[-1]
    return RingElem(R, c if M.size % 2 == 0 else R.neg(c))


def inverse(M: Mat) -> Mat:
    """Exact inverse when ``det(M)`` is a unit of the ring."""
    R = M.ring
    n = M.size
    c = charpoly(M)
    d = c[-1] if n % 2 == 0 else R.neg(c[-1])
    if not R.is_unit(d):
        raise NotInvertible()
    # Horner: B = M^{n-1} + c1 M^{n-2} + ... + c_{n-1} I;  adj(M) = (-1)^{n-1} B
    B = Mat.identity(R, n)
    for k in range(1, n):
        B = M @ B + Mat.diag_raw(R, n, c[k])
    dinv = R.inv(d)
    if n % 2 == 0:
        dinv = R.neg(dinv)
    return B.scale_raw(dinv)


def mat_arith(op: str, *args) -> Mat:
    """Dispatch ``op`` in {add, sub, mul, neg, transpose, scalar_mul}."""
    if op == "add":
        return args[0] + args[1]
    if op == "sub":
        return args[0] - args[1]
    if op == "mul":
        return args[0] @ args[1]
    if op == "neg":
        return -args[0]
    if op == "transpose":
        return args[0].T
    if op == "scalar_mul":
        r, m = args
        return m.scale(r)
    raise ValueError(f"unknown op {op!r}")

