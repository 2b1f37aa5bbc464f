"""Text and JSON formats for rings, vectors and matrices.

Ring elements use a small grammar: integers ``-12``, residues ``7 mod 12``,
polynomials ``2*a1*b2 - 3*x^2 + 1``.  A matrix is serialized as
``{"ring": <descriptor>, "size": k, "rows": [[<elem>, ...], ...]}``.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

from .matrix import Mat
from .ring import ModularRing, PolyRing, Ring, ZZ

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _natural_key(name: str):
    m = re.fullmatch(r"([A-Za-z_]*)(\d*)(.*)", name)
    prefix, digits, rest = m.groups()
    return (prefix, int(digits) if digits else -1, rest)


def variables_in(texts: Iterable[str]) -> tuple[str, ...]:
    """Distinct identifiers in ``texts``, naturally sorted (a1 < a2 < a10 < b1)."""
    found = set()
    for t in texts:
        found.update(_NAME.findall(t))
    found.discard("mod")
    return tuple(sorted(found, key=_natural_key))


def parse_ring(text: str, texts: Sequence[str] = ()) -> Ring:
    """``int``, ``mod:N`` (also ``modN``, ``Z/N``) or ``poly[:v1,v2,...]``.

    Without an explicit variable list a polynomial ring takes its variables
    from ``texts``.
    """
    s = text.strip().lower()
    if s in ("int", "integer", "zz", "z"):
        return ZZ
    m = re.fullmatch(r"(?:mod:?|z/)(\d+)", s)
    if m:
        return ModularRing(int(m.group(1)))
    if s.startswith("poly"):
        rest = text.strip()[4:].lstrip(":")
        names = tuple(v.strip() for v in rest.split(",") if v.strip()) if rest else variables_in(texts)
        if not names:
            names = ("x",)
        return PolyRing(names)
    raise ValueError(f"unknown ring {text!r}; use int, mod:N or poly")


def parse_vector(ring: Ring, text: str) -> tuple:
    """Comma separated ring elements."""
    parts = [p for p in text.split(",")]
    if any(not p.strip() for p in parts):
        raise ValueError(f"empty entry in vector {text!r}")
    return tuple(ring(p) for p in parts)


def ring_to_json(ring: Ring) -> dict:
    return ring.descriptor()


def ring_from_json(desc: dict) -> Ring:
    return Ring.from_descriptor(desc)


def mat_to_json(M: Mat) -> dict:
    return {"ring": M.ring.descriptor(), "size": M.size, "rows": M.to_text_rows()}


def mat_from_json(obj: dict) -> Mat:
    ring = ring_from_json(obj["ring"])
    rows = obj["rows"]
    size = obj.get("size", len(rows))
    if len(rows) != size:
        raise ValueError(f"'size' is {size} but {len(rows)} rows given")
    return Mat.from_rows(ring, [[str(x) for x in row] for row in rows])


def dumps_mat(M: Mat) -> str:
    return json.dumps(mat_to_json(M))


def loads_mat(text: str) -> Mat:
    return mat_from_json(json.loads(text))
