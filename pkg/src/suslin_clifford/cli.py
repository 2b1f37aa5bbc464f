"""Command-line front end.

Constructions print Mat JSON on stdout; checks print a JSON report.  Exit
status is 0 when every requested check passes, 1 when one fails and 2 on a
usage or parse error.  ``SUSLIN_SEED`` in the environment overrides ``--seed``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .checks import SUITES, UnsupportedN, run_suite
from .clifford import GeneratorWord, eval_word, phi
from .epin import epin6_equals_e4_check, epin_gen, pi, q_gram_preserved, table1_check, \
    commutator_relations_check
from .forms import form_J, star
from .matrix import Mat
from .report import CheckReport
from .ring import ParseError
from .spingroup import SpinPair, in_G, in_spin, in_U0, norm_d, spin_action
from .suslin import SuslinPair, extract, sus
from .textio import dumps_mat, loads_mat, parse_ring, parse_vector, variables_in

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _out(obj) -> None:
    sys.stdout.write((obj if isinstance(obj, str) else json.dumps(obj)) + "\n")


def _read_mat(path: str) -> Mat:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return loads_mat(text)


def _ring(kind: str, texts: Sequence[str]):
    if kind == "auto":
        kind = "poly" if variables_in(texts) else "int"
    return parse_ring(kind, texts)


def _pair(args, m: int) -> SuslinPair:
    ring = _ring(args.ring, [args.v, args.w])
    v, w = parse_vector(ring, args.v), parse_vector(ring, args.w)
    if len(v) != m or len(w) != m:
        raise UsageError(f"--v and --w need {m} entries each (got {len(v)} and {len(w)})")
    return SuslinPair(ring, v, w)


def _n_list(text: Optional[str]) -> Optional[list[int]]:
    """``3``, ``1..5`` or ``1,3,5``."""
    if text is None:
        return None
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --n value {text!r}; use 3, 1..5 or 1,3") from exc


def _seed(args) -> int:
    env = os.environ.get("SUSLIN_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"SUSLIN_SEED must be an integer, got {env!r}") from exc
    return args.seed


def _report(rep: CheckReport) -> int:
    _out(rep.to_json())
    return EXIT_PASS if rep.ok else EXIT_FAIL


# ------------------------------------------------------------------ handlers


def cmd_verify(args) -> int:
    ring = parse_ring(args.ring) if args.ring else None
    rep = run_suite(args.suite, n=_n_list(args.n), ring=ring, seed=_seed(args),
                    samples=args.samples, allow_large=args.allow_large, timing=args.timing)
    return _report(rep)


def cmd_sus_gen(args) -> int:
    _out(dumps_mat(sus(_pair(args, args.m)).mat))
    return EXIT_PASS


def cmd_sus_extract(args) -> int:
    M = _read_mat(args.input)
    try:
        pair = extract(M)
    except ValueError:
        pair = None
    if pair is None:
        _out("not-suslin")
        return EXIT_FAIL
    _out({"ring": pair.ring.descriptor(), "v": [str(x) for x in pair.v],
          "w": [str(x) for x in pair.w], "length": str(pair.q())})
    return EXIT_PASS


def cmd_forms_J(args) -> int:
    _out(dumps_mat(form_J(args.n, _ring(args.ring, []))))
    return EXIT_PASS


def cmd_forms_star(args) -> int:
    _out(dumps_mat(star(_read_mat(args.input), args.n)))
    return EXIT_PASS


def cmd_cl_phi(args) -> int:
    _out(dumps_mat(phi(_pair(args, args.n)).mat))
    return EXIT_PASS


def cmd_cl_word(args) -> int:
    ring = _ring(args.ring, [args.coeff])
    word = GeneratorWord.parse(args.word, args.coeff, ring)
    for _, i in word.tokens:
        if not 1 <= i <= args.n:
            raise UsageError(f"generator index {i} out of range 1..{args.n}")
    _out(dumps_mat(eval_word(word, args.n).mat))
    return EXIT_PASS


def _spin_pair(args) -> SpinPair:
    g1, g2 = _read_mat(args.g1), _read_mat(args.g2)
    return SpinPair(args.n, g1, g2)


def cmd_spin_check(args) -> int:
    x = _spin_pair(args)
    rep = CheckReport("spin-check")
    rep.record("x x* = 1 (U0)", in_U0(x), g1=x.g1, g2=x.g2)
    rep.record("x H x^-1 = H (Spin)", in_spin(x), g1=x.g1, g2=x.g2)
    return _report(rep)


def cmd_spin_act(args) -> int:
    g = _read_mat(args.g)
    S = extract(_read_mat(args.S))
    if S is None:
        raise UsageError("--S is not a Suslin matrix")
    _out(dumps_mat(spin_action(g, sus(S), args.n).mat))
    return EXIT_PASS


def cmd_spin_d(args) -> int:
    g = _read_mat(args.g)
    if not in_G(g, args.n):
        _out({"in_G": False})
        return EXIT_FAIL
    _out({"in_G": True, "d": str(norm_d(g, args.n))})
    return EXIT_PASS


def cmd_epin_gen(args) -> int:
    ring = _ring(args.ring, [args.a])
    _out(dumps_mat(epin_gen(args.kind, args.i, args.j, ring(args.a), args.n, ring).mat))
    return EXIT_PASS


def cmd_epin_table1(args) -> int:
    if args.n < 3 or args.n % 2 == 0:
        raise UsageError("table1 needs odd n >= 3")
    rep = CheckReport("table1")
    rep.extend(table1_check(args.n))
    rep.extend(commutator_relations_check(args.n))
    return _report(rep)


def cmd_epin_pi(args) -> int:
    x = _spin_pair(args)
    if not in_spin(x):
        _out({"in_spin": False})
        return EXIT_FAIL
    P = pi(x).mat
    if not q_gram_preserved(P, args.n):
        _out({"in_spin": True, "preserves_q": False})
        return EXIT_FAIL
    _out(dumps_mat(P))
    return EXIT_PASS


def cmd_epin_verify6(args) -> int:
    return _report(epin6_equals_e4_check())


def cmd_emit(args) -> int:
    k = args.what
    if k == "suslin":
        if args.m is None:
            raise UsageError("emit suslin needs --m")
        return cmd_sus_gen(args)
    if args.n is None:
        raise UsageError(f"emit {k} needs --n")
    if k == "J":
        return cmd_forms_J(args)
    if k == "phi":
        return cmd_cl_phi(args)
    if k == "epin-gen":
        return cmd_epin_gen(args)
    if k == "pi":
        return cmd_epin_pi(args)
    raise UsageError(f"unknown kind {k}")


# ------------------------------------------------------------------ parser


def _vw(p, required=True):
    p.add_argument("--v", required=required, help="comma separated entries, e.g. 'a1,a2'")
    p.add_argument("--w", required=required, help="comma separated entries")
    p.add_argument("--ring", default="auto",
                   help="int, mod:N, poly[:vars] or auto (poly if any entry names a variable)")


def _epin_args(p, required=True):
    p.add_argument("--kind", choices=("ee", "ff"), required=required)
    p.add_argument("--i", type=int, required=required)
    p.add_argument("--j", type=int, required=required)
    p.add_argument("--a", default="1", help="coefficient (ring element)")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="suslin", description="Suslin matrices, Clifford model and spin groups.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    p.add_argument("--n", help="3, 1..5 or 1,3,5")
    p.add_argument("--ring", help="ring for the random samples, e.g. mod:7")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int)
    p.add_argument("--allow-large", action="store_true", help="lift the default n caps")
    p.add_argument("--timing", action="store_true", help="include wall_time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("emit", help="print a constructed matrix as JSON")
    p.add_argument("what", choices=("suslin", "J", "phi", "epin-gen", "pi"))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    _vw(p, required=False)
    _epin_args(p, required=False)
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.set_defaults(func=_emit_checked)

    sus_p = sub.add_parser("sus", help="Suslin matrices").add_subparsers(
        dest="op", required=True, parser_class=_Parser)
    p = sus_p.add_parser("gen")
    p.add_argument("--m", type=int, required=True)
    _vw(p)
    p.set_defaults(func=cmd_sus_gen)
    p = sus_p.add_parser("extract")
    p.add_argument("--in", dest="input", required=True, help="Mat JSON file or -")
    p.set_defaults(func=cmd_sus_extract)

    forms_p = sub.add_parser("forms", help="J-form and involution").add_subparsers(
        dest="op", required=True, parser_class=_Parser)
    p = forms_p.add_parser("J")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", default="int")
    p.set_defaults(func=cmd_forms_J)
    p = forms_p.add_parser("star")
    p.add_argument("--n", type=int)
    p.add_argument("--in", dest="input", required=True)
    p.set_defaults(func=cmd_forms_star)

    cl_p = sub.add_parser("cl", help="Clifford algebra model").add_subparsers(
        dest="op", required=True, parser_class=_Parser)
    p = cl_p.add_parser("phi")
    p.add_argument("--n", type=int, required=True)
    _vw(p)
    p.set_defaults(func=cmd_cl_phi)
    p = cl_p.add_parser("word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", required=True, help="e.g. 'e1 f2 e3'")
    p.add_argument("--coeff", default="1")
    p.add_argument("--ring", default="auto")
    p.set_defaults(func=cmd_cl_word)

    spin_p = sub.add_parser("spin", help="spin groups").add_subparsers(
        dest="op", required=True, parser_class=_Parser)
    p = spin_p.add_parser("check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.set_defaults(func=cmd_spin_check)
    p = spin_p.add_parser("act")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--S", required=True)
    p.set_defaults(func=cmd_spin_act)
    p = spin_p.add_parser("d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g", required=True)
    p.set_defaults(func=cmd_spin_d)

    epin_p = sub.add_parser("epin", help="elementary spin group").add_subparsers(
        dest="op", required=True, parser_class=_Parser)
    p = epin_p.add_parser("gen")
    p.add_argument("--n", type=int, required=True)
    _epin_args(p)
    p.add_argument("--ring", default="auto")
    p.set_defaults(func=cmd_epin_gen)
    p = epin_p.add_parser("table1")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_epin_table1)
    p = epin_p.add_parser("pi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.set_defaults(func=cmd_epin_pi)
    p = epin_p.add_parser("verify-epin6")
    p.set_defaults(func=cmd_epin_verify6)
    return ap


def _emit_checked(args) -> int:
    if args.what in ("suslin", "phi") and (args.v is None or args.w is None):
        raise UsageError(f"emit {args.what} needs --v and --w")
    if args.what == "epin-gen" and None in (args.kind, args.i, args.j):
        raise UsageError("emit epin-gen needs --kind, --i and --j")
    if args.what == "pi" and (args.g1 is None or args.g2 is None):
        raise UsageError("emit pi needs --g1 and --g2")
    return cmd_emit(args)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UnsupportedN, ValueError, IndexError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
