"""Check reports: verdict, per-axiom breakdown and witness tuples."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable

# witnesses kept per axiom; the total violation count is always exact
MAX_WITNESSES = 256
TEXT_WITNESSES = 10


@dataclass
class AxiomResult:
    tag: str
    holds: bool
    witnesses: list[tuple[str, ...]] = field(default_factory=list)
    count: int = 0

    @classmethod
    def of(cls, tag: str, witnesses: Iterable[tuple]) -> AxiomResult:
        """Build a row from the full list of violations (empty means the axiom holds)."""
        ws = [tuple(w) for w in witnesses]
        return cls(tag, not ws, ws[:MAX_WITNESSES], len(ws))

    def to_dict(self) -> dict:
        return {
            "tag": self.tag,
            "holds": self.holds,
            "count": self.count,
            "witnesses": [list(w) for w in self.witnesses],
        }

    @classmethod
    def from_dict(cls, d: dict) -> AxiomResult:
        return cls(d["tag"], d["holds"], [tuple(w) for w in d["witnesses"]], d["count"])


@dataclass
class CheckReport:
    """Outcome of one checker call.

    ``verdict`` is the conjunction of the axiom rows; ``info`` carries
    informational findings (identity found, commutativity flags, ...) that
    do not enter the verdict.
    """

    check: str
    axioms: list[AxiomResult]
    notes: list[str] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(a.holds for a in self.axioms)

    def __bool__(self):
        return self.verdict

    def axiom(self, tag: str) -> AxiomResult:
        for a in self.axioms:
            if a.tag == tag:
                return a
        raise KeyError(tag)

    def witnesses(self, tag: str | None = None) -> list[tuple[str, ...]]:
        rows = self.axioms if tag is None else [self.axiom(tag)]
        return [w for a in rows for w in a.witnesses]

    def failed(self) -> list[str]:
        return [a.tag for a in self.axioms if not a.holds]

    def prefixed(self, prefix: str) -> list[AxiomResult]:
        return [AxiomResult(f"{prefix}{a.tag}", a.holds, list(a.witnesses), a.count) for a in self.axioms]

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "verdict": self.verdict,
            "axioms": [a.to_dict() for a in self.axioms],
            "notes": list(self.notes),
            "info": self.info,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CheckReport:
        return cls(d["check"], [AxiomResult.from_dict(a) for a in d["axioms"]], list(d["notes"]), dict(d["info"]))

    def to_text(self) -> str:
        lines = [f"{self.check}: {'PASS' if self.verdict else 'FAIL'}"]
        for a in self.axioms:
            lines.append(f"  [{'ok' if a.holds else 'FAIL'}] {a.tag}")
            shown = a.witnesses[:TEXT_WITNESSES]
            for w in shown:
                lines.append("      witness (" + ", ".join(w) + ")")
            if a.count > len(shown):
                lines.append(f"      ... {a.count - len(shown)} more")
        for k, v in self.info.items():
            lines.append(f"  {k}: {v}")
        for n in self.notes:
            lines.append(f"  note: {n}")
        return "\n".join(lines)
