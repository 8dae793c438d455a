"""Check records used by the verifiers.

Failures are data: each claim becomes one :class:`Check` and a sweep never
aborts on the first bad value.
"""

from dataclasses import dataclass, field
from fractions import Fraction

PASS = "pass"
FAIL = "fail"
SKIP = "skipped"


@dataclass
class Check:
    name: str
    status: str
    lhs: object = None
    rhs: object = None
    note: str = ""

    @property
    def passed(self):
        return self.status == PASS

    @classmethod
    def compare(cls, name, lhs, rhs, note=""):
        return cls(name, PASS if lhs == rhs else FAIL, lhs, rhs, note)

    @classmethod
    def skipped(cls, name, reason):
        return cls(name, SKIP, note=reason)

    def to_json(self):
        out = {"name": self.name, "pass": self.passed, "status": self.status,
               "lhs": _jsonable(self.lhs), "rhs": _jsonable(self.rhs)}
        if self.note:
            out["note"] = self.note
        return out

    def line(self):
        tag = {PASS: "PASS", FAIL: "FAIL", SKIP: "SKIP"}[self.status]
        text = f"[{tag}] {self.name}"
        if self.status != SKIP:
            text += f": {_jsonable(self.lhs)} vs {_jsonable(self.rhs)}"
        if self.note:
            text += f" ({self.note})"
        return text


@dataclass
class Report:
    title: str
    checks: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)
        return check

    def extend(self, checks):
        self.checks.extend(checks)

    @property
    def ok(self):
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if c.status == FAIL]

    @property
    def skips(self):
        return [c for c in self.checks if c.status == SKIP]

    def to_json(self):
        return {"title": self.title, "ok": self.ok,
                "checks": [c.to_json() for c in self.checks]}


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value) if value.denominator != 1 else value.numerator
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if hasattr(value, "to_json"):
        return value.to_json()
    return value
