"""
Task records and the JSON certification report.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Optional

from src.dgla.certificate import Certificate
from src.utils.config import ReportConfig
from src.utils.config_parser import SCHEMA_VERSION


@dataclass
class TaskRecord:
    """One task: its inputs, computed data and the checks that decided it."""

    task: str
    subject: str
    inputs: dict
    result: dict
    certificate: Certificate

    @property
    def passed(self) -> bool:
        return self.certificate.passed

    def first_witness(self) -> Optional[str]:
        for check in self.certificate.failures:
            return f"{check.name}: {check.witness}"
        return None

    def to_json(self) -> dict[str, Any]:
        return {
            "task": self.task,
            "subject": self.subject,
            "inputs": self.inputs,
            "passed": self.passed,
            "result": self.result,
            "certificate": self.certificate.to_json(),
        }


@dataclass
class Report:
    """Ordered task records plus a summary line derived from them."""

    records: list[TaskRecord] = field(default_factory=list)
    timestamp: Optional[str] = None

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failed(self) -> list[TaskRecord]:
        return [record for record in self.records if not record.passed]

    def summary_line(self) -> str:
        total, failed = len(self.records), len(self.failed)
        status = "PASS" if failed == 0 else "FAIL"
        return f"{status}: {total - failed}/{total} tasks passed"

    def to_json(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "generator": "dgla-cert",
            "records": [record.to_json() for record in self.records],
            "summary": {
                "total": len(self.records),
                "passed": len(self.records) - len(self.failed),
                "failed": len(self.failed),
                "line": self.summary_line(),
            },
        }
        if self.timestamp is not None:
            data["timestamp"] = self.timestamp
        return data

    def render(self, config: Optional[ReportConfig] = None) -> str:
        config = config or ReportConfig()
        text = json.dumps(
            self.to_json(), indent=config.indent, sort_keys=config.sort_keys, ensure_ascii=False
        )
        return text + "\n"

