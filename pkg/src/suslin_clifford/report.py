"""Pass/fail reports for identity checks, serializable to JSON."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from .matrix import Mat
from .ring import RingElem


def to_jsonable(x: Any) -> Any:
    """Mats become Mat JSON, ring elements their text form."""
    if isinstance(x, Mat):
        return {"ring": x.ring.descriptor(), "size": x.size, "rows": x.to_text_rows()}
    if isinstance(x, RingElem):
        return str(x)
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Entry:
    name: str
    ok: bool
    counterexample: Optional[dict] = None

    def to_dict(self) -> dict:
        d: dict = {"name": self.name, "status": "pass" if self.ok else "fail"}
        if not self.ok:
            d["counterexample"] = to_jsonable(self.counterexample or {})
        return d


@dataclass
class CheckReport:
    suite: str
    entries: list[Entry] = field(default_factory=list)
    wall_time: Optional[float] = None

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list[Entry]:
        return [e for e in self.entries if not e.ok]

    def record(self, name: str, ok: bool, **counterexample) -> bool:
        self.entries.append(Entry(name, bool(ok), None if ok else counterexample))
        return bool(ok)

    def equal(self, name: str, lhs, rhs, **inputs) -> bool:
        """Record ``lhs == rhs``; on failure keep both sides and the inputs."""
        ok = lhs == rhs
        if ok:
            return self.record(name, True)
        return self.record(name, False, lhs=lhs, rhs=rhs, **inputs)

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(Entry(prefix + e.name, e.ok, e.counterexample))

    def to_dict(self) -> dict:
        d: dict = {
            "suite": self.suite,
            "status": "pass" if self.ok else "fail",
            "checks": len(self.entries),
            "failures": len(self.failures),
            "entries": [e.to_dict() for e in self.entries],
        }
        if self.wall_time is not None:
            d["wall_time"] = round(self.wall_time, 3)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
