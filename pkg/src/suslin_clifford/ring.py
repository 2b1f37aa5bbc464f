"""Commutative unital rings with decidable equality.

Three rings are supported: the integers, ``Z/m`` for any modulus ``m >= 2``
(zero divisors allowed), and multivariate polynomials with integer
coefficients.  A ring object does arithmetic on *raw payloads* (``int`` for
the first two, a ``{monomial: coeff}`` dict for polynomials); :class:`RingElem`
wraps a payload together with its ring for user-facing code.

Polynomial monomials are packed into a single ``int`` with 16 bits per
exponent, so monomial multiplication is integer addition.  Exponents must stay
below ``2**16``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

__all__ = [
    "RingMismatch",
    "NotAUnit",
    "ParseError",
    "Ring",
    "IntegerRing",
    "ModularRing",
    "PolyRing",
    "RingElem",
    "ZZ",
    "elem_arith",
]

EXP_BITS = 16
EXP_MASK = (1 << EXP_BITS) - 1
# the top bit of each field is a guard: exponents stay below 2^15, so a sum of
# two valid exponents never carries into the next field
MAX_EXP = (1 << (EXP_BITS - 1)) - 1


class RingMismatch(ValueError):
    def __init__(self, msg: str = "ring mismatch"):
        super().__init__(msg)


class NotAUnit(ArithmeticError):
    def __init__(self, msg: str = "not a unit"):
        super().__init__(msg)


class ParseError(ValueError):
    """Malformed ring-element text; ``pos`` is the 0-based column."""

    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


class Ring:
    """Base class; subclasses are frozen dataclasses so equality is structural."""

    kind: str = ""

    # payload arithmetic -------------------------------------------------
    def zero(self) -> Any:
        raise NotImplementedError

    def one(self) -> Any:
        raise NotImplementedError

    def from_int(self, k: int) -> Any:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def dot(self, pairs: Iterable[tuple[Any, Any]]):
        """Sum of ``a*b`` over ``pairs``."""
        acc = self.zero()
        for a, b in pairs:
            acc = self.add(acc, self.mul(a, b))
        return acc

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def is_unit(self, a) -> bool:
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def pow(self, a, e: int):
        if e < 0:
            return self.pow(self.inv(a), -e)
        result = self.one()
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def key(self, a):
        """Hashable form of a payload."""
        return a

    def coerce(self, x) -> Any:
        """Turn an ``int``, ``str``, :class:`RingElem` or payload into a payload."""
        if isinstance(x, RingElem):
            if x.ring != self:
                raise RingMismatch()
            return x.value
        if isinstance(x, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into {self}")

    # text -----------------------------------------------------------------
    def format(self, a) -> str:
        raise NotImplementedError

    def parse(self, text: str) -> Any:
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    @property
    def char_two_zero_divisor(self) -> bool:
        """True if 2 is a zero divisor (or zero) in this ring."""
        return False

    # user-facing helpers ---------------------------------------------------
    def __call__(self, x) -> "RingElem":
        return RingElem(self, self.coerce(x))

    def elem(self, payload) -> "RingElem":
        return RingElem(self, payload)

    @staticmethod
    def from_descriptor(desc: dict) -> "Ring":
        kind = str(desc.get("kind", "")).lower()
        if kind in ("integer", "int", "zz"):
            return IntegerRing()
        if kind in ("modular", "mod"):
            return ModularRing(int(desc["modulus"]))
        if kind in ("poly", "polynomial"):
            return PolyRing(tuple(desc["variables"]))
        raise ValueError(f"unknown ring kind {desc.get('kind')!r}")


_INT_RE = re.compile(r"\s*([+-]?\s*\d+)\s*$")


@dataclass(frozen=True)
class IntegerRing(Ring):
    kind = "integer"

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def dot(self, pairs):
        return sum(a * b for a, b in pairs)

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a in (1, -1)

    def inv(self, a):
        if a not in (1, -1):
            raise NotAUnit()
        return a

    def format(self, a):
        return str(a)

    def parse(self, text):
        m = _INT_RE.match(text)
        if not m:
            raise ParseError("expected an integer", text, 0)
        return int(m.group(1).replace(" ", ""))

    def descriptor(self):
        return {"kind": "integer"}

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


_MOD_RE = re.compile(r"\s*([+-]?\s*\d+)\s*(?:mod\s+(\d+))?\s*$")


@dataclass(frozen=True)
class ModularRing(Ring):
    modulus: int
    kind = "modular"

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, k):
        return int(k) % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def dot(self, pairs):
        return sum(a * b for a, b in pairs) % self.modulus

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return math.gcd(a, self.modulus) == 1

    def inv(self, a):
        if math.gcd(a, self.modulus) != 1:
            raise NotAUnit()
        return _modinv(a, self.modulus)

    @property
    def char_two_zero_divisor(self):
        return self.modulus % 2 == 0

    def format(self, a):
        return f"{a} mod {self.modulus}"

    def parse(self, text):
        m = _MOD_RE.match(text)
        if not m:
            raise ParseError("expected '<int>' or '<int> mod <m>'", text, 0)
        if m.group(2) is not None and int(m.group(2)) != self.modulus:
            raise RingMismatch(
                f"ring mismatch: modulus {m.group(2)} given, ring is Z/{self.modulus}"
            )
        return int(m.group(1).replace(" ", "")) % self.modulus

    def descriptor(self):
        return {"kind": "modular", "modulus": self.modulus}

    def __repr__(self):
        return f"Z/{self.modulus}"


def _modinv(a: int, m: int) -> int:
    # extended Euclid; the caller guarantees gcd(a, m) == 1
    r0, r1, s0, s1 = a % m, m, 1, 0
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    return s0 % m


def _strip(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _guard_mask(nvars: int) -> int:
    return sum(1 << (EXP_BITS * i + EXP_BITS - 1) for i in range(nvars))


def _check_guard(d: dict, guard: int) -> dict:
    for k in d:
        if k & guard:
            raise OverflowError(f"exponent exceeds {MAX_EXP}")
    return d


@dataclass(frozen=True)
class PolyRing(Ring):
    """``Z[variables]``; payloads are dicts of packed monomial -> nonzero int."""

    variables: tuple[str, ...]
    kind = "poly"
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _guard: int = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        vs = tuple(self.variables)
        object.__setattr__(self, "variables", vs)
        if not vs:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(vs)) != len(vs):
            raise ValueError("polynomial variable names must be distinct")
        for v in vs:
            if not _NAME_RE.fullmatch(v):
                raise ValueError(f"bad variable name {v!r}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(vs)})
        object.__setattr__(self, "_guard", _guard_mask(len(vs)))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    # monomials
    def pack(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        m = 0
        for i, e in enumerate(exps):
            if not 0 <= e <= MAX_EXP:
                raise OverflowError(f"exponent {e} out of range")
            m |= e << (EXP_BITS * i)
        return m

    def unpack(self, m: int) -> tuple[int, ...]:
        return tuple((m >> (EXP_BITS * i)) & EXP_MASK for i in range(self.nvars))

    def var(self, name: str) -> "RingElem":
        return RingElem(self, self.gen(name))

    def gen(self, name: str) -> dict:
        try:
            i = self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r} for {self}") from None
        return {1 << (EXP_BITS * i): 1}

    def gens(self) -> tuple["RingElem", ...]:
        return tuple(self.var(v) for v in self.variables)

    def zero(self):
        return {}

    def one(self):
        return {0: 1}

    def from_int(self, k):
        k = int(k)
        return {0: k} if k else {}

    def add(self, a, b):
        if len(a) < len(b):
            a, b = b, a
        r = dict(a)
        for m, c in b.items():
            s = r.get(m, 0) + c
            if s:
                r[m] = s
            else:
                del r[m]
        return r

    def sub(self, a, b):
        r = dict(a)
        for m, c in b.items():
            s = r.get(m, 0) - c
            if s:
                r[m] = s
            else:
                del r[m]
        return r

    def neg(self, a):
        return {m: -c for m, c in a.items()}

    def mul(self, a, b):
        if not a or not b:
            return {}
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((mb, cb),) = b.items()
            if mb == 0:
                return a if cb == 1 else {m: c * cb for m, c in a.items()}
            return _check_guard({m + mb: c * cb for m, c in a.items()}, self._guard)
        r: dict = {}
        get = r.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                k = ma + mb
                r[k] = get(k, 0) + ca * cb
        return _check_guard(_strip(r), self._guard)

    def dot(self, pairs):
        r: dict = {}
        get = r.get
        for a, b in pairs:
            if not a or not b:
                continue
            for ma, ca in a.items():
                for mb, cb in b.items():
                    k = ma + mb
                    r[k] = get(k, 0) + ca * cb
        return _check_guard(_strip(r), self._guard)

    def is_zero(self, a):
        return not a

    def is_unit(self, a):
        return len(a) == 1 and a.get(0) in (1, -1)

    def inv(self, a):
        if not self.is_unit(a):
            raise NotAUnit()
        return dict(a)

    def key(self, a):
        return frozenset(a.items())

    def sorted_terms(self, a) -> list[tuple[tuple[int, ...], int]]:
        """Terms in decreasing graded-lex order (first variable largest)."""
        terms = [(self.unpack(m), c) for m, c in a.items()]
        terms.sort(key=lambda t: (sum(t[0]), t[0]), reverse=True)
        return terms

    def degree(self, a) -> int:
        return max((sum(self.unpack(m)) for m in a), default=-1)

    def format(self, a):
        if not a:
            return "0"
        out = []
        for exps, c in self.sorted_terms(a):
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def parse(self, text):
        return _PolyParser(self, text).parse()

    def descriptor(self):
        return {"kind": "poly", "variables": list(self.variables)}

    def __repr__(self):
        return "ZZ[" + ",".join(self.variables) + "]"


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


class _PolyParser:
    """Recursive descent over ``expr := term (('+'|'-') term)*`` etc."""

    def __init__(self, ring: PolyRing, text: str):
        self.ring = ring
        self.text = text
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:  # only trailing whitespace left
                break
            if m.group(1) is not None:
                self.tokens.append(("int", m.group(1), m.start(1)))
            elif m.group(2) is not None:
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else ("end", "", len(self.text))

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def fail(self, msg):
        raise ParseError(msg, self.text, self.peek()[2])

    def parse(self):
        if not self.tokens:
            self.fail("empty expression")
        value = self.expr()
        if self.peek()[0] != "end":
            self.fail(f"unexpected {self.peek()[1]!r}")
        return value

    def expr(self):
        R = self.ring
        sign = 1
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            if self.take()[1] == "-":
                sign = -sign
        value = self.term()
        if sign < 0:
            value = R.neg(value)
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            value = R.add(value, rhs) if op == "+" else R.sub(value, rhs)
        return value

    def term(self):
        value = self.power()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value = self.ring.mul(value, self.power())
        return value

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, tok, _ = self.peek()
            if kind != "int":
                self.fail("expected a nonnegative integer exponent")
            self.take()
            return self.ring.pow(base, int(tok))
        return base

    def atom(self):
        kind, tok, pos = self.peek()
        if kind == "int":
            self.take()
            return self.ring.from_int(int(tok))
        if kind == "name":
            if tok not in self.ring._index:
                self.fail(f"unknown variable {tok!r}")
            self.take()
            return self.ring.gen(tok)
        if (kind, tok) == ("op", "("):
            self.take()
            value = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("expected ')'")
            self.take()
            return value
        if (kind, tok) == ("op", "-"):
            self.take()
            return self.ring.neg(self.atom())
        self.fail("expected a number, variable or '('")


@dataclass(frozen=True, eq=False)
class RingElem:
    """An element of ``ring``; immutable, hashable, with arithmetic operators."""

    ring: Ring
    value: Any

    def _other(self, other):
        if isinstance(other, RingElem):
            if other.ring != self.ring:
                raise RingMismatch()
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ring, self.ring.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ring, self.ring.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ring, self.ring.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return RingElem(self.ring, self.ring.mul(self.value, b))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElem(self.ring, self.ring.neg(self.value))

    def __pow__(self, e: int):
        return RingElem(self.ring, self.ring.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.ring.key(self.value)))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def is_unit(self) -> bool:
        return self.ring.is_unit(self.value)

    def inverse(self) -> "RingElem":
        return RingElem(self.ring, self.ring.inv(self.value))

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"RingElem({self.ring!r}, {self.ring.format(self.value)!r})"


def elem_arith(op: str, a: RingElem, b: RingElem) -> RingElem:
    """Apply ``op`` in {add, sub, mul, neg} to ring elements sharing a ring."""
    if a.ring != b.ring:
        raise RingMismatch()
    R = a.ring
    if op == "add":
        return R.elem(R.add(a.value, b.value))
    if op == "sub":
        return R.elem(R.sub(a.value, b.value))
    if op == "mul":
        return R.elem(R.mul(a.value, b.value))
    if op == "neg":
        return R.elem(R.neg(a.value))
    raise ValueError(f"unknown op {op!r}")
