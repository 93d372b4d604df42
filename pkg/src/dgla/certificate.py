"""
Pass/fail records produced by the exhaustive validators.
"""

from dataclasses import dataclass, field
from typing import Any, Optional


@dataclass
class CheckResult:
    """Outcome of one axiom family, with the first offending tuple on failure."""

    name: str
    passed: bool
    checked: int = 0
    witness: Optional[str] = None

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "witness": self.witness,
        }


@dataclass
class Certificate:
    """Collection of checks about one object."""

    subject: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [check for check in self.checks if not check.passed]

    def check(self, name: str) -> CheckResult:
        for item in self.checks:
            if item.name == name:
                return item
        raise KeyError(name)

    def add(self, name: str, witness: Optional[str], checked: int) -> CheckResult:
        result = CheckResult(name=name, passed=witness is None, checked=checked, witness=witness)
        self.checks.append(result)
        return result

    def merge(self, other: "Certificate", prefix: str = "") -> "Certificate":
        for item in other.checks:
            self.checks.append(
                CheckResult(prefix + item.name, item.passed, item.checked, item.witness)
            )
        return self

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        lines = [f"{self.subject}: {status}"]
        for item in self.checks:
            mark = "✓" if item.passed else "✗"
            line = f"  {mark} {item.name} ({item.checked} checked)"
            if item.witness:
                line += f": {item.witness}"
            lines.append(line)
        return "\n".join(lines)

    def to_json(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [item.to_json() for item in self.checks],
        }
