"""Verification reports: named checks with pass/fail state, as plain values.

Failures are data, not exceptions; the CLI prints reports and maps them to
exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    """A single named check. ``witness`` carries the first counterexample on failure."""

    name: str
    passed: bool
    witness: str | None = None
    informational: bool = False

    def to_json(self) -> dict:
        out: dict = {"check": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.informational:
            out["informational"] = True
        return out

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        if self.informational:
            verdict = "INFO"
        line = f"{self.name}: {verdict}"
        if self.witness is not None:
            line += f" ({self.witness})"
        return line


@dataclass
class VerificationReport:
    """An ordered list of checks; passes iff every non-informational check passes."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str | None = None,
            informational: bool = False) -> None:
        self.checks.append(Check(name, passed, witness, informational))

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks if not c.informational)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    def render(self) -> str:
        return "\n".join(c.render() for c in self.checks)
