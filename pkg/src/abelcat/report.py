"""Structured pass/fail trees used by every checker and by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)
    children: list[Report] = field(default_factory=list)

    @classmethod
    def group(cls, name: str, children: list[Report], **details: Any) -> Report:
        return cls(name, all(c.passed for c in children), dict(details), list(children))

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.details:
            out["details"] = self.details
        if self.children:
            out["children"] = [c.to_dict() for c in self.children]
        return out

    def render(self, indent: int = 0, failures_only: bool = False) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = "".join(f" {k}={v}" for k, v in self.details.items()
                        if isinstance(v, (bool, int, str)) or _flat_ints(v))
        lines = [f"{'  ' * indent}[{mark}] {self.name}{extra}"]
        for c in self.children:
            if failures_only and c.passed:
                continue
            lines.append(c.render(indent + 1, failures_only))
        return "\n".join(lines)

    def failures(self) -> list[Report]:
        if self.passed:
            return []
        bad = [f for c in self.children for f in c.failures()]
        return bad or [self]


def _flat_ints(v: Any) -> bool:
    return isinstance(v, (list, tuple)) and all(type(x) is int for x in v)
