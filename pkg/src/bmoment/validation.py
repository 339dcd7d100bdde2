"""Pass/fail reports shared by graph and polytope validation."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    offenders: tuple = ()
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "offenders": [str(o) for o in self.offenders],
            "detail": self.detail,
        }


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...] = field(default_factory=tuple)
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "valid": self.passed,
            "checks": {c.name: c.to_dict() for c in self.checks},
            "notes": list(self.notes),
        }
