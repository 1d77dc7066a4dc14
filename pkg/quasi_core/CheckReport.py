from dataclasses import dataclass, field
from typing import Any


def _text(value):
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_text(v) for v in value) + ")"
    return str(value)


@dataclass
class CheckReport:
    """Outcome of one verification: pass/fail plus every witness found."""

    name: str
    passed: bool
    checked: int = 0
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)
    value: Any = field(default=None, repr=False, compare=False)

    @property
    def status(self):
        return self.details.get("status", "pass" if self.passed else "fail")

    def __bool__(self):
        return self.passed

    def lines(self, max_witnesses=10):
        """Stable key = value lines for the text report."""
        out = [f"[check {self.name}]",
               f"status = {self.status}",
               f"checked = {self.checked}",
               f"witnesses = {len(self.witnesses)}"]
        for i, w in enumerate(self.witnesses[:max_witnesses]):
            out.append(f"witness.{i} = {_text(w)}")
        for key in sorted(self.details):
            if key != "status":
                out.append(f"{key} = {_text(self.details[key])}")
        return out

    def to_dict(self):
        return {
            "name": self.name,
            "status": self.status,
            "checked": self.checked,
            "witnesses": [_text(w) for w in self.witnesses],
            "details": {k: _text(v) for k, v in self.details.items() if k != "status"},
        }


def combine(name, reports):
    passed = all(r.passed for r in reports)
    witnesses = []
    for r in reports:
        witnesses.extend((r.name,) + tuple(w if isinstance(w, tuple) else (w,)) for w in r.witnesses)
    return CheckReport(name, passed, sum(r.checked for r in reports), witnesses)
