"""Verification suites.  Each suite returns a :class:`CheckReport`; the CLI only
formats these reports, so library calls and ``verify`` always agree."""

from __future__ import annotations

import random
import time
from typing import Callable, Optional, Sequence

from . import sampling
from .clifford import phi
from .epin import (
    commutator_relations_check,
    epin6_equals_e4_check,
    epin_gen,
    oe,
    pi,
    q_gram_preserved,
    q_symbolic_preserved,
    table1_check,
)
from .forms import basic_automorphism, form_J, lambda_mat, star, star_blockwise
from .matrix import Mat, det, inverse
from .report import CheckReport
from .ring import ModularRing, PolyRing, Ring
from .spingroup import (
    SpinPair,
    chi_inverse,
    in_G,
    in_spin,
    in_U0,
    kernel_element,
    l_MMstar_closed_form,
    norm_d,
    spin_action,
)
from .suslin import SuslinPair, bar, extract, sus, xyx

SYMBOLIC_CAP = 5
MODULAR_CAP = 6


class UnsupportedN(ValueError):
    pass


def _ns(n: Optional[Sequence[int]], default: Sequence[int], lo: int, hi: int,
        allow_large: bool) -> list[int]:
    vals = list(default if n is None else n)
    for k in vals:
        if k < lo or (k > hi and not allow_large):
            raise UnsupportedN(f"unsupported n={k} (supported {lo}..{hi}; use --allow-large to override)")
    return vals


# --------------------------------------------------------------------------- core


def suite_core(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("core")
    for m in _ns(n, range(1, 6), 1, SYMBOLIC_CAP, allow_large):
        R = sampling.pair_ring(m)
        S = sus(SuslinPair.symbolic(R, m))
        B = bar(S)
        q = S.pair.q()
        qI = Mat.diag_raw(R, S.mat.size, q.value)
        rep.equal(f"m={m}: S*bar(S) = q I", S.mat @ B.mat, qI)
        rep.equal(f"m={m}: bar(S)*S = q I", B.mat @ S.mat, qI)
        rep.equal(f"m={m}: bar(bar(S)) = S", bar(B).mat, S.mat)
        rep.equal(f"m={m}: l(bar S) = l(S)", B.pair.q(), q)
        if m >= 2:
            rep.equal(f"m={m}: extract(sus(p)) = p", extract(S.mat), S.pair)
        if 2 <= m <= 4:
            rep.equal(f"m={m}: det S = q^(2^(m-2))", det(S.mat), q ** (2 ** (m - 2)))
    return rep


def suite_eq1(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("eq1")
    for k in _ns(n, range(1, 5), 0, SYMBOLIC_CAP, allow_large):
        R = sampling.pair_ring(k + 1)
        S = sus(SuslinPair.symbolic(R, k + 1))
        J = form_J(k, R)
        lhs = J @ S.mat.T @ J.T
        want = S.mat if k % 2 == 0 else bar(S).mat
        rep.equal(f"n={k}: J S^T J^T = {'S' if k % 2 == 0 else 'bar(S)'}", lhs, want)
    return rep


def suite_involution(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("involution")
    levels = _ns(n, range(1, 4), 0, 3 if not allow_large else 6, allow_large)
    for k in levels:
        size = 2 ** k
        M = sampling.generic_mat(size, "m")
        N = sampling.generic_mat(size, "n")
        R = PolyRing(M.ring.variables + N.ring.variables)
        # both generic matrices in one ring; packed monomials of N shift by len(M vars)
        shift = 16 * len(M.ring.variables)
        M = Mat(R, size, M.data)
        N = Mat(R, size, [{mono << shift: c for mono, c in x.items()} for x in N.data])
        rep.equal(f"level {k}: star(star(M)) = M", star(star(M, k), k), M)
        rep.equal(f"level {k}: star(MN) = star(N) star(M)", star(M @ N, k), star(N, k) @ star(M, k))
        rep.equal(f"level {k}: star = star_blockwise", star_blockwise(M, k), star(M, k))
        lam = lambda_mat(k, R)
        rep.equal(f"level {k}: lambda* = {'lambda' if k % 2 == 0 else '-lambda'}",
                  star(lam, k), lam if k % 2 == 0 else -lam)
    rng = random.Random(seed)
    Rm = ring if isinstance(ring, ModularRing) else ModularRing(7)
    count = 50 if samples is None else samples
    bad = None
    for _ in range(count):
        X = sampling.random_mat(Rm, 4, rng)
        if star_blockwise(X, 2) != star(X, 2):
            bad = X
            break
    rep.record(f"star = star_blockwise on {count} random 4x4 over {Rm}", bad is None, M=bad)
    for k in range(1, 5):
        R = sampling.pair_ring(k)
        x = phi(SuslinPair.symbolic(R, k))
        rep.equal(f"n={k}: star(phi(v,w)) = -phi(v,w)", star(x.mat, k), -x.mat)
        rep.equal(f"n={k}: lambda phi lambda = -phi", basic_automorphism(x.mat, k), -x.mat)
    return rep


def suite_fundamental(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("fundamental")
    for m in _ns(n, (2, 3), 2, 4, allow_large):
        R = PolyRing(tuple(f"{c}{i}" for c in "abcd" for i in range(1, m + 1)))
        X = sus(SuslinPair.symbolic(R, m, "a", "b"))
        Y = sus(SuslinPair.symbolic(R, m, "c", "d"))
        try:
            Z = xyx(X, Y)
            rep.record(f"m={m}: XYX Suslin and bar(XYX) = bar X bar Y bar X (symbolic)", True)
            rep.equal(f"m={m}: l(XYX) = l(X)^2 l(Y)", Z.pair.q(), X.pair.q() ** 2 * Y.pair.q())
        except AssertionError as exc:
            rep.record(f"m={m}: XYX Suslin and bar(XYX) = bar X bar Y bar X (symbolic)", False,
                       error=str(exc))
    rng = random.Random(seed)
    Rm = ring if isinstance(ring, ModularRing) else ModularRing(7)
    count = 500 if samples is None else samples
    bad = None
    for _ in range(count):
        X = sus(sampling.random_pair(Rm, 4, rng))
        Y = sus(sampling.random_pair(Rm, 4, rng))
        try:
            Z = xyx(X, Y)
            if Z.pair.q() != X.pair.q() ** 2 * Y.pair.q():
                bad = (X, Y)
                break
        except AssertionError:
            bad = (X, Y)
            break
    rep.record(f"m=4: XYX over {Rm}, {count} random pairs", bad is None,
               X=bad and bad[0].mat, Y=bad and bad[1].mat)
    return rep


# --------------------------------------------------------------------------- groups


def suite_spin_odd(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("spin-odd")
    ns = _ns(n, (3,), 3, MODULAR_CAP, allow_large)
    rings = [ring] if isinstance(ring, ModularRing) else [ModularRing(6), ModularRing(7)]
    count = 300 if samples is None else samples
    for k in ns:
        if k % 2 == 0:
            raise UnsupportedN(f"spin-odd needs odd n, got {k}")
        for R in rings:
            rng = random.Random(seed)
            fails = {"d(gh)": None, "l(g.S)": None, "bar": None, "spin": None, "G": None}
            for _ in range(count):
                g, u = sampling.random_eg_product(k, R, rng)
                h, _ = sampling.random_eg_product(k, R, rng)
                if not (in_G(g, k) and in_G(h, k)):
                    fails["G"] = fails["G"] or {"g": g, "h": h}
                    continue
                dg, dh = norm_d(g, k), norm_d(h, k)
                if norm_d(g @ h, k) != dg * dh:
                    fails["d(gh)"] = fails["d(gh)"] or {"g": g, "h": h}
                S = sus(sampling.random_pair(R, k, rng))
                gS = spin_action(g, S, k)
                if gS.pair.q() != dg * S.pair.q():
                    fails["l(g.S)"] = fails["l(g.S)"] or {"g": g, "S": S.mat}
                g0, _ = sampling.random_eg_product(k, R, rng, scale_by_unit=False)
                gstar_inv = inverse(star(g0, k - 1))
                lhs = bar(spin_action(g0, S, k)).mat
                rhs = gstar_inv @ bar(S).mat @ star(gstar_inv, k - 1)
                if lhs != rhs:
                    fails["bar"] = fails["bar"] or {"g": g0, "S": S.mat}
                if not in_spin(chi_inverse(g0, k)):
                    fails["spin"] = fails["spin"] or {"g": g0}
            tag = f"n={k}, {R}, {count} samples"
            rep.record(f"{tag}: generator products lie in G", fails["G"] is None, **(fails["G"] or {}))
            rep.record(f"{tag}: d(gh) = d(g) d(h)", fails["d(gh)"] is None, **(fails["d(gh)"] or {}))
            rep.record(f"{tag}: l(g.S) = l(gg*) l(S)", fails["l(g.S)"] is None, **(fails["l(g.S)"] or {}))
            rep.record(f"{tag}: d(g)=1 => bar(g.S) = (g*)^-1 . bar(S)", fails["bar"] is None,
                       **(fails["bar"] or {}))
            rep.record(f"{tag}: chi_inverse(g) in Spin", fails["spin"] is None, **(fails["spin"] or {}))
    return rep


def suite_spin4(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("spin4")
    R = ring if isinstance(ring, ModularRing) else ModularRing(5)
    rng = random.Random(seed)
    count = 200 if samples is None else samples
    bad_spin = bad_det = None
    for _ in range(count):
        g1, g2 = sampling.random_sl2(R, rng), sampling.random_sl2(R, rng)
        if not in_spin(SpinPair(2, g1, g2)):
            bad_spin = bad_spin or {"g1": g1, "g2": g2}
        S = sampling.random_mat(R, 2, rng)
        if det(g1 @ S @ inverse(g2)) != det(S):
            bad_det = bad_det or {"g1": g1, "g2": g2, "S": S}
    rep.record(f"{count} pairs in SL2({R})^2 lie in Spin_4", bad_spin is None, **(bad_spin or {}))
    rep.record(f"S -> g1 S g2^-1 preserves det ({count} pairs)", bad_det is None, **(bad_det or {}))
    neg = 50 if samples is None else max(1, samples // 4)
    bad_u0 = None
    for t in range(neg):
        g1 = sampling.random_gl2_not_sl2(R, rng)
        g2 = sampling.random_sl2(R, rng) if t % 2 else sampling.random_gl2_not_sl2(R, rng)
        if t % 3 == 0:
            g1, g2 = g2, g1
        if in_U0(SpinPair(2, g1, g2)):
            bad_u0 = bad_u0 or {"g1": g1, "g2": g2}
    rep.record(f"{neg} pairs with a det != 1 are not in U0", bad_u0 is None, **(bad_u0 or {}))
    return rep


def suite_spin6(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("spin6")
    G = sampling.generic_mat(4, "m")
    names = G.ring.variables + ("a1", "a2", "a3", "b1", "b2", "b3")
    R = PolyRing(names)
    M = Mat(R, 4, G.data)
    S = sus(SuslinPair.symbolic(R, 3))
    P = M @ S.mat @ star(M, 2)
    rep.record("M S M* is Suslin (generic M, generic S)", extract(P) is not None, product=P)
    MM = extract(M @ star(M, 2))
    dM = det(M)
    rep.record("M M* is Suslin (generic M)", MM is not None)
    if MM is not None:
        rep.equal("l(MM*) = det M (16 indeterminates)", MM.q(), dM)
    rep.equal("AA*DD* + BB*CC* - AC*DB* - BD*CA* = det M", l_MMstar_closed_form(M),
              Mat.diag_raw(R, 2, dM.value))
    return rep


def suite_epin(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("epin")
    rep.extend(epin6_equals_e4_check(), "epin6=E4: ")
    Ra = PolyRing(("a",))
    for k in (2, 3):
        bad = [(i, j) for i in range(1, 2 * k + 1) for j in range(1, 2 * k + 1)
               if i != j and not q_symbolic_preserved(oe(i, j, "a", k, Ra).mat, k)]
        rep.record(f"n={k}: every oe_ij(a) preserves q (symbolic a, z)", not bad, indices=bad)
    k = 3
    for kind in ("ee", "ff"):
        for i, j in ((1, 2), (2, 3), (3, 1)):
            x = SpinPair.from_mat(k, epin_gen(kind, i, j, "a", k, Ra).mat)
            ok = in_spin(x)
            rep.record(f"n=3: 1 + a {kind[0]}{i}{kind[1]}{j} in Spin (symbolic a)", ok)
            if ok:
                P = pi(x).mat
                rep.record(f"n=3: pi(1 + a {kind[0]}{i}{kind[1]}{j}) preserves q (symbolic)",
                           q_symbolic_preserved(P, k), pi=P)
                rep.equal(f"n=3: det pi(1 + a {kind[0]}{i}{kind[1]}{j}) = 1", det(P), Ra(1))
    Rm = ring if isinstance(ring, ModularRing) else ModularRing(7)
    rng = random.Random(seed)
    count = 100 if samples is None else samples
    bad = None
    for _ in range(count):
        x = sampling.random_epin_product(k, Rm, rng)
        y = sampling.random_epin_product(k, Rm, rng)
        if pi(x @ y).mat != pi(x).mat @ pi(y).mat or not q_gram_preserved(pi(x).mat, k):
            bad = {"x": x.mat, "y": y.mat}
            break
    rep.record(f"n=3: pi(xy) = pi(x) pi(y), {count} Epin products over {Rm}", bad is None,
               **(bad or {}))
    R8 = ModularRing(8)
    for k in (2, 4):
        x = kernel_element(k, 3, R8)
        rep.record(f"n={k}: (I, 3I) in Spin over Z/8", in_spin(x))
        rep.equal(f"n={k}: chi(I, 3I) = I", x.g1, Mat.identity(R8, 2 ** (k - 1)))
        rep.equal(f"n={k}: pi(I, 3I) = 3 I", pi(x).mat, Mat.scalar(R8, 2 * k, 3))
    return rep


def suite_table1(n=None, ring=None, seed=0, samples=None, allow_large=False) -> CheckReport:
    rep = CheckReport("table1")
    for k in _ns(n, (3, 5), 3, 7, allow_large):
        if k % 2 == 0:
            raise UnsupportedN(f"table1 needs odd n, got {k}")
        rep.extend(table1_check(k), f"n={k}: ")
        rep.extend(commutator_relations_check(k), f"n={k}: ")
    return rep


SUITES: dict[str, Callable[..., CheckReport]] = {
    "core": suite_core,
    "eq1": suite_eq1,
    "involution": suite_involution,
    "fundamental": suite_fundamental,
    "spin-odd": suite_spin_odd,
    "spin4": suite_spin4,
    "spin6": suite_spin6,
    "epin": suite_epin,
    "table1": suite_table1,
}


def run_suite(name: str, n: Optional[Sequence[int]] = None, ring: Optional[Ring] = None,
              seed: int = 0, samples: Optional[int] = None, allow_large: bool = False,
              timing: bool = False) -> CheckReport:
    """Run one suite (or ``all``); deterministic for a given seed.

    ``wall_time`` is only filled in when ``timing`` is set, so that reports for
    the same parameters are byte-identical.
    """
    t0 = time.perf_counter()
    if name == "all":
        rep = CheckReport("all")
        for key, fn in SUITES.items():
            rep.extend(fn(n=None, ring=None, seed=seed, samples=samples), f"[{key}] ")
    elif name in SUITES:
        rep = SUITES[name](n=n, ring=ring, seed=seed, samples=samples, allow_large=allow_large)
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    if timing:
        rep.wall_time = time.perf_counter() - t0
    return rep


__all__ = ["SUITES", "run_suite", "UnsupportedN"]
