"""Random and generic inputs for identity checks.  All randomness goes through
an explicit ``random.Random`` so results are reproducible from a seed."""

from __future__ import annotations

import random

from .epin import epin_gen, eg_gen
from .matrix import Mat, det
from .ring import ModularRing, PolyRing, Ring
from .spingroup import SpinPair
from .suslin import SuslinPair


def random_elem(ring: ModularRing, rng: random.Random) -> int:
    return rng.randrange(ring.modulus)


def random_mat(ring: ModularRing, k: int, rng: random.Random) -> Mat:
    return Mat(ring, k, [rng.randrange(ring.modulus) for _ in range(k * k)])


def random_pair(ring: ModularRing, m: int, rng: random.Random) -> SuslinPair:
    p = ring.modulus
    return SuslinPair(ring, tuple(rng.randrange(p) for _ in range(m)),
                      tuple(rng.randrange(p) for _ in range(m)))


def random_unit(ring: ModularRing, rng: random.Random) -> int:
    units = [u for u in range(1, ring.modulus) if ring.is_unit(u)]
    return rng.choice(units)


def random_sl2(ring: ModularRing, rng: random.Random) -> Mat:
    while True:
        M = random_mat(ring, 2, rng)
        if det(M) == 1:
            return M


def random_gl2_not_sl2(ring: ModularRing, rng: random.Random) -> Mat:
    while True:
        M = random_mat(ring, 2, rng)
        if det(M) != 1:
            return M


def generic_mat(k: int, prefix: str = "m") -> Mat:
    """The ``k x k`` matrix of distinct indeterminates ``m11 .. mkk``."""
    names = tuple(f"{prefix}{i}{j}" for i in range(1, k + 1) for j in range(1, k + 1)) \
        if k < 10 else tuple(f"{prefix}{i}_{j}" for i in range(1, k + 1) for j in range(1, k + 1))
    R = PolyRing(names)
    return Mat(R, k, [R.gen(v) for v in names])


def pair_ring(m: int, extra: tuple[str, ...] = ()) -> PolyRing:
    """``Z[a1..am, b1..bm, *extra]``."""
    return PolyRing(tuple(f"a{i}" for i in range(1, m + 1))
                    + tuple(f"b{i}" for i in range(1, m + 1)) + extra)


def random_eg_product(n: int, ring: Ring, rng: random.Random, length: int = 4,
                      scale_by_unit: bool = True) -> tuple[Mat, int]:
    """``u * g_1 ... g_length`` with ``g_t`` random EG generators; returns ``(g, u)``."""
    g = Mat.identity(ring, 2 ** (n - 1))
    for _ in range(length):
        kind = rng.choice(("E1Ei", "EiE1", "F1Fi", "FiF1"))
        i = rng.randrange(2, n + 1)
        g = g @ eg_gen(kind, i, random_elem(ring, rng), n, ring)
    u = random_unit(ring, rng) if scale_by_unit else 1
    return g.scale(u), u


def random_epin_product(n: int, ring: ModularRing, rng: random.Random,
                        length: int = 4) -> SpinPair:
    """Product of random ``1 + a e_i e_j`` / ``1 + a f_i f_j`` as a spin pair."""
    x = Mat.identity(ring, 2 ** n)
    for _ in range(length):
        kind = rng.choice(("ee", "ff"))
        i, j = rng.sample(range(1, n + 1), 2)
        x = x @ epin_gen(kind, i, j, random_elem(ring, rng), n, ring).mat
    return SpinPair.from_mat(n, x)
