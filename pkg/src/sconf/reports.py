"""Verification reports shared by every checker and by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Violation:
    context: str
    lhs: str
    rhs: str


@dataclass
class VerificationReport:
    """Outcome of one verification sweep.

    ``status`` is ``fail`` when any violation was recorded, ``inconclusive``
    when a bounded search could neither confirm nor refute, and ``pass``
    otherwise.  ``notes`` are human-readable remarks that do not affect the
    status (and are not part of the JSON contract).
    """

    suite: str
    params: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)
    inconclusive: bool = False
    notes: list = field(default_factory=list)

    def record(self, context, lhs, rhs):
        self.violations.append(Violation(context, str(lhs), str(rhs)))

    def merge(self, other):
        """Fold another report's findings in; params stay the caller's own."""
        self.violations.extend(other.violations)
        self.inconclusive = self.inconclusive or other.inconclusive
        self.notes.extend(other.notes)
        return self

    @property
    def passed(self):
        return not self.violations and not self.inconclusive

    @property
    def status(self):
        if self.violations:
            return "fail"
        if self.inconclusive:
            return "inconclusive"
        return "pass"

    @property
    def exit_code(self):
        return {"pass": 0, "fail": 1, "inconclusive": 2}[self.status]

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": dict(self.params),
            "status": self.status,
            "violations": [
                {"context": v.context, "lhs": v.lhs, "rhs": v.rhs}
                for v in sorted(self.violations, key=lambda v: v.context)
            ],
        }

    def summary(self):
        bits = [f"suite={self.suite}"]
        bits += [f"{k}={v}" for k, v in self.params.items()]
        bits.append(f"status={self.status}")
        bits.append(f"violations={len(self.violations)}")
        return " ".join(bits)

    def render_text(self):
        lines = [self.summary()]
        for v in sorted(self.violations, key=lambda v: v.context):
            lines.append(f"  VIOLATION {v.context}: lhs = {v.lhs} ; rhs = {v.rhs}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)
