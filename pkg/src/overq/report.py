"""Result record shared by every verification entry point."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one coefficientwise comparison.

    mismatch, when present, is (exponent, left value, right value) for the
    first disagreeing coefficient; for indexed checks (Bailey relation,
    oracle sweeps) the first slot is the offending index instead.
    """

    name: str
    order: int
    ok: bool
    mismatch: Optional[tuple[int, Any, Any]] = None
    note: str = ""
    elapsed: float = 0.0

    def render(self) -> str:
        tag = "ok  " if self.ok else "FAIL"
        line = f"{tag} {self.name} (order {self.order}, {self.elapsed:.2f}s)"
        if self.mismatch is not None:
            e, a, b = self.mismatch
            line += f" first mismatch at {e}: {a} != {b}"
        if self.note:
            line += f" [{self.note}]"
        return line

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "name": self.name,
            "order": self.order,
            "ok": self.ok,
        }
        if self.mismatch is not None:
            e, a, b = self.mismatch
            out["mismatch"] = {"at": e, "lhs": str(a), "rhs": str(b)}
        if self.note:
            out["note"] = self.note
        out["elapsed"] = round(self.elapsed, 3)
        return out
