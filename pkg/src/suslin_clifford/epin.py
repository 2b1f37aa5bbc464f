"""Elementary orthogonal matrices, Epin generators and their relations.

Conventions: indices are 1-based; the hyperbolic basis of ``H(R^n)`` is
``e_1..e_n, f_1..f_n`` and ``partial`` swaps ``k <-> k + n``.  For odd ``n`` the
group ``EG`` (the image of Epin under ``Spin -> SG``) is generated by
``1 + a E_1 E_i``, ``1 + a E_i E_1``, ``1 + a F_1 F_i``, ``1 + a F_i F_1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .clifford import CliffordElem, gen_e, gen_f
from .matrix import Mat, inverse
from .report import CheckReport
from .ring import IntegerRing, PolyRing, Ring, ZZ
from .spingroup import SpinPair, in_U0, odd_coords
from .forms import star
from .suslin import bar, gen_E, gen_F

__all__ = [
    "OrthoMat",
    "partial",
    "oe",
    "q_gram_preserved",
    "q_symbolic_preserved",
    "epin_gen",
    "u_mat",
    "gen_e_primed",
    "gen_f_primed",
    "epin_gen_primed",
    "EG_KINDS",
    "eg_gen",
    "table1_check",
    "commutator",
    "commutator_relations_check",
    "pi",
    "elementary",
    "is_elementary",
    "epin6_equals_e4_check",
]


def partial(k: int, n: int) -> int:
    return k + n if k <= n else k - n


def q_gram_preserved(M: Mat, n: int) -> bool:
    """``q(M z) == q(z)`` as polynomials in ``z``, by comparing coefficients.

    With ``q(z) = z^T U z``, ``U = [[0, I], [0, 0]]``, the condition is that
    ``N = M^T U M`` has zero diagonal and ``N + N^T == U + U^T``.  Valid over any
    commutative ring, including characteristic 2.
    """
    R = M.ring
    k = 2 * n
    if M.size != k:
        raise ValueError("size mismatch")
    U = Mat(R, k, [R.one() if c == r + n else R.zero() for r in range(k) for c in range(k)])
    N = M.T @ U @ M
    if any(not R.is_zero(N.raw(a, a)) for a in range(k)):
        return False
    return N + N.T == U + U.T


def q_symbolic_preserved(M: Mat, n: int) -> bool:
    """Literal check: adjoin indeterminates ``z1..z2n`` and expand ``q(Mz) - q(z)``.

    Only for integer or integer-polynomial matrices.
    """
    R = M.ring
    k = 2 * n
    names = tuple(f"z{t}" for t in range(1, k + 1))
    if isinstance(R, IntegerRing):
        Z = PolyRing(names)
        lift = Z.from_int
    elif isinstance(R, PolyRing):
        if set(names) & set(R.variables):
            raise ValueError("matrix ring already uses z-variables")
        Z = PolyRing(R.variables + names)
        lift = dict  # packed monomials of R stay valid: its variables come first
    else:
        raise TypeError("symbolic q-check needs an integer or polynomial ring")
    z = [Z.gen(v) for v in names]
    ML = Mat(Z, k, [lift(x) for x in M.data])
    img = ML.apply(z)

    def q(vec):
        return Z.dot((vec[t], vec[t + n]) for t in range(n))

    return q(img) == q(z)


@dataclass(frozen=True)
class OrthoMat:
    """A ``2n x 2n`` matrix acting on the coordinates ``(v, w)`` of ``H(R^n)``."""

    n: int
    mat: Mat

    def __post_init__(self):
        if self.mat.size != 2 * self.n:
            raise ValueError("OrthoMat needs size 2n")

    def preserves_q(self) -> bool:
        return q_gram_preserved(self.mat, self.n)

    def __matmul__(self, other: "OrthoMat") -> "OrthoMat":
        return OrthoMat(self.n, self.mat @ other.mat)


def oe(i: int, j: int, a, n: int, ring: Ring = ZZ) -> OrthoMat:
    """``I + a e_ij - a e_{partial(j) partial(i)}``, built as written."""
    k = 2 * n
    if not (1 <= i <= k and 1 <= j <= k):
        raise IndexError(f"indices must lie in 1..{k}")
    a = ring.coerce(a)
    data = list(Mat.identity(ring, k).data)
    p, q = i - 1, j - 1
    data[p * k + q] = ring.add(data[p * k + q], a)
    p, q = partial(j, n) - 1, partial(i, n) - 1
    data[p * k + q] = ring.sub(data[p * k + q], a)
    return OrthoMat(n, Mat(ring, k, data))


def _check_pair(i: int, j: int, n: int) -> None:
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices must lie in 1..{n}")
    if i == j:
        raise ValueError("generator needs i != j")


def epin_gen(kind: str, i: int, j: int, a, n: int, ring: Ring = ZZ) -> CliffordElem:
    """``1 + a e_i e_j`` (kind ``ee``) or ``1 + a f_i f_j`` (kind ``ff``)."""
    _check_pair(i, j, n)
    if kind == "ee":
        x = gen_e(i, n, ring) @ gen_e(j, n, ring)
    elif kind == "ff":
        x = gen_f(i, n, ring) @ gen_f(j, n, ring)
    else:
        raise ValueError(f"kind must be 'ee' or 'ff', got {kind!r}")
    return CliffordElem.one(n, ring) + x.scale(a)


def u_mat(n: int, ring: Ring = ZZ) -> Mat:
    """``[[0, I], [I, 0]]`` of size ``2**n``; swaps the two blocks of a pair."""
    half = Mat.identity(ring, 2 ** (n - 1))
    return Mat.block_antidiag(half, half)


def gen_e_primed(i: int, n: int, ring: Ring = ZZ) -> CliffordElem:
    """``e_i u = diag(E_i, bar E_i)``."""
    return CliffordElem(n, gen_e(i, n, ring).mat @ u_mat(n, ring))


def gen_f_primed(i: int, n: int, ring: Ring = ZZ) -> CliffordElem:
    return CliffordElem(n, gen_f(i, n, ring).mat @ u_mat(n, ring))


def epin_gen_primed(kind: str, i: int, j: int, a, n: int, ring: Ring = ZZ) -> CliffordElem:
    """``u (1 + a e_i e_j) u`` (or the ``f`` version)."""
    u = u_mat(n, ring)
    return CliffordElem(n, u @ epin_gen(kind, i, j, a, n, ring).mat @ u)


# E1Fi and FiE1 are needed for E_24 and E_23; table1_check relates them to F1Fi and FiF1
EG_KINDS = ("E1Ei", "EiE1", "F1Fi", "FiF1", "E1Fi", "FiE1")


def eg_gen(kind: str, i: int, a, n: int, ring: Ring = ZZ) -> Mat:
    """``I + a * (product named by kind)`` in ``M_{2^{n-1}}(R)``, odd ``n``."""
    if n < 3 or n % 2 == 0:
        raise ValueError("eg_gen needs odd n >= 3")
    if not 2 <= i <= n:
        raise IndexError(f"i must lie in 2..{n}")
    E1, F1 = gen_E(1, n, ring).mat, gen_F(1, n, ring).mat
    Ei, Fi = gen_E(i, n, ring).mat, gen_F(i, n, ring).mat
    products = {
        "E1Ei": lambda: E1 @ Ei,
        "EiE1": lambda: Ei @ E1,
        "F1Fi": lambda: F1 @ Fi,
        "FiF1": lambda: Fi @ F1,
        "E1Fi": lambda: E1 @ Fi,
        "FiE1": lambda: Fi @ E1,
    }
    if kind not in products:
        raise ValueError(f"kind must be one of {EG_KINDS}")
    return Mat.identity(ring, 2 ** (n - 1)) + products[kind]().scale(a)


def table1_check(n: int, ring: Ring = ZZ) -> CheckReport:
    """The multiplication table of ``E_1, F_1`` against ``E_i, F_i`` (``i != 1``)."""
    if n < 3 or n % 2 == 0:
        raise ValueError("table1_check needs odd n >= 3")
    rep = CheckReport(f"table1(n={n})")
    sE = lambda i: gen_E(i, n, ring)  # noqa: E731
    sF = lambda i: gen_F(i, n, ring)  # noqa: E731
    E1, F1 = sE(1).mat, sF(1).mat
    zero = Mat.zeros(ring, E1.size)
    rep.equal("E1^2 = E1", E1 @ E1, E1)
    rep.equal("F1^2 = F1", F1 @ F1, F1)
    for i in range(2, n + 1):
        Ei, Fi = sE(i).mat, sF(i).mat
        rep.equal(f"bar(E{i}) = -E{i}", bar(sE(i)).mat, -Ei)
        rep.equal(f"bar(F{i}) = -F{i}", bar(sF(i)).mat, -Fi)
        rep.equal(f"E{i}^2 = 0", Ei @ Ei, zero)
        rep.equal(f"F{i}^2 = 0", Fi @ Fi, zero)
        rep.equal(f"E{i}E1 = F1E{i}", Ei @ E1, F1 @ Ei)
        rep.equal(f"F{i}E1 = F1F{i}", Fi @ E1, F1 @ Fi)
        rep.equal(f"E1E{i} = E{i}F1", E1 @ Ei, Ei @ F1)
        rep.equal(f"E1F{i} = F{i}F1", E1 @ Fi, Fi @ F1)
        rep.equal(f"E{i}E1 + E1E{i} = E{i}", Ei @ E1 + E1 @ Ei, Ei)
        rep.equal(f"F{i}E1 + E1F{i} = F{i}", Fi @ E1 + E1 @ Fi, Fi)
        rep.equal(f"E1E{i}E1 = 0", E1 @ Ei @ E1, zero)
        rep.equal(f"E{i}E1E{i} = 0", Ei @ E1 @ Ei, zero)
        rep.equal(f"F1F{i}F1 = 0", F1 @ Fi @ F1, zero)
        rep.equal(f"F{i}F1F{i} = 0", Fi @ F1 @ Fi, zero)
    return rep


def commutator(g: Mat, h: Mat) -> Mat:
    """``g h g^-1 h^-1``; raises :class:`NotInvertible` for singular input."""
    return g @ h @ inverse(g) @ inverse(h)


def commutator_relations_check(n: int) -> CheckReport:
    """``1 + aE_iE_j = [1 + aE_iE_1, 1 + E_1E_j]`` and the F mirror, symbolic ``a``."""
    if n < 3 or n % 2 == 0:
        raise ValueError("commutator relations are stated for odd n >= 3")
    R = PolyRing(("a",))
    a = R.var("a")
    rep = CheckReport(f"commutators(n={n})")
    I = Mat.identity(R, 2 ** (n - 1))
    E = {i: gen_E(i, n, R).mat for i in range(1, n + 1)}
    F = {i: gen_F(i, n, R).mat for i in range(1, n + 1)}
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            if i == j:
                continue
            lhs = I + (E[i] @ E[j]).scale(a)
            rhs = commutator(I + (E[i] @ E[1]).scale(a), I + E[1] @ E[j])
            rep.equal(f"1+aE{i}E{j} = [1+aE{i}E1, 1+E1E{j}]", lhs, rhs)
            lhs = I + (F[i] @ F[j]).scale(a)
            rhs = commutator(I + (F[i] @ F[1]).scale(a), I + F[1] @ F[j])
            rep.equal(f"1+aF{i}F{j} = [1+aF{i}F1, 1+F1F{j}]", lhs, rhs)
    return rep


def pi(x: SpinPair) -> OrthoMat:
    """Matrix of ``z -> x z x^-1`` on ``H(R^n)`` in the basis ``e_1..e_n, f_1..f_n``."""
    if not in_U0(x):
        raise ValueError("x is not in U0, so not in Spin")
    n = x.n
    R = x.ring
    M = x.mat
    Minv = star(M, n)
    cols = []
    for which in ("e", "f"):
        for i in range(1, n + 1):
            z = gen_e(i, n, R) if which == "e" else gen_f(i, n, R)
            pair = odd_coords(M @ z.mat @ Minv, n)
            if pair is None:
                raise ValueError("x is not in Spin: conjugate left H(R^n)")
            cols.append([c.value for c in pair.coords()])
    k = 2 * n
    return OrthoMat(n, Mat(R, k, [cols[c][r] for r in range(k) for c in range(k)]))


def elementary(i: int, j: int, x, k: int, ring: Ring = ZZ) -> Mat:
    """``E_ij(x)``: the identity plus ``x`` in position ``(i, j)``."""
    if i == j or not (1 <= i <= k and 1 <= j <= k):
        raise IndexError("elementary matrix needs 1 <= i != j <= k")
    data = list(Mat.identity(ring, k).data)
    data[(i - 1) * k + (j - 1)] = ring.coerce(x)
    return Mat(ring, k, data)


def is_elementary(M: Mat) -> bool:
    """Ones on the diagonal and at most one other nonzero entry."""
    R = M.ring
    k = M.size
    off = 0
    for r in range(k):
        for c in range(k):
            x = M.raw(r, c)
            if r == c:
                if x != R.one():
                    return False
            elif not R.is_zero(x):
                off += 1
    return off <= 1


def epin6_equals_e4_check() -> CheckReport:
    """Generator-level proof of ``EG_2 = E_4`` over ``Z[x]`` (n = 3)."""
    R = PolyRing(("x",))
    x = R.var("x")
    n = 3
    rep = CheckReport("epin6 = E4")
    I = Mat.identity(R, 4)
    E = {i: gen_E(i, n, R).mat for i in (1, 2, 3)}
    F = {i: gen_F(i, n, R).mat for i in (1, 2, 3)}
    el = lambda i, j, t: elementary(i, j, t, 4, R)  # noqa: E731

    rep.equal("E13(x) = 1 + xE1E2", el(1, 3, x), I + (E[1] @ E[2]).scale(x))
    rep.equal("E14(x) = 1 + xE1E3", el(1, 4, x), I + (E[1] @ E[3]).scale(x))
    rep.equal("E24(x) = 1 + xE1F2", el(2, 4, x), I + (E[1] @ F[2]).scale(x))
    rep.equal("E23(x) = 1 - xE1F3", el(2, 3, x), I - (E[1] @ F[3]).scale(x))

    rep.equal("E1^T = E1", E[1].T, E[1])
    for i in (2, 3):
        rep.equal(f"E{i}^T = -F{i}", E[i].T, -F[i])
        rep.equal(f"F{i}^T = -E{i}", F[i].T, -E[i])

    for i in (2, 3):
        for kind in EG_KINDS[:4]:
            g = eg_gen(kind, i, x, n, R)
            rep.record(f"1 + x{kind.replace('i', str(i))} is elementary", is_elementary(g),
                       matrix=g)
        # transposes of generators are again generators
        rep.equal(f"(1+xE1E{i})^T = 1 - xF{i}E1", eg_gen("E1Ei", i, x, n, R).T,
                  I - (F[i] @ E[1]).scale(x))
        rep.equal(f"(1+xE{i}E1)^T = 1 - xE1F{i}", eg_gen("EiE1", i, x, n, R).T,
                  I - (E[1] @ F[i]).scale(x))
        rep.equal(f"(1+xF1F{i})^T = 1 - xE{i}F1", eg_gen("F1Fi", i, x, n, R).T,
                  I - (E[i] @ F[1]).scale(x))
        rep.equal(f"(1+xF{i}F1)^T = 1 - xF1E{i}", eg_gen("FiF1", i, x, n, R).T,
                  I - (F[1] @ E[i]).scale(x))

    rep.equal("E12(x) = [E13(x), E32(1)]", el(1, 2, x), commutator(el(1, 3, x), el(3, 2, 1)))
    rep.equal("E34(x) = [E31(x), E14(1)]", el(3, 4, x), commutator(el(3, 1, x), el(1, 4, 1)))
    return rep
