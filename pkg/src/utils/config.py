"""Configuration for the dgla certification harness."""

import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

WORKERS_ENV = "DGLA_CERT_WORKERS"
REPORT_ENV = "DGLA_CERT_REPORT"


class CertifyConfig(BaseModel):
    """Settings shared by every verification run."""

    # Parallelism of the exhaustive loops (Jacobi triples)
    workers: int = Field(default=1, ge=1)

    # Reporting
    report_path: Optional[Path] = None
    include_timestamp: bool = True

    # Size limits
    max_validation_dim: int = 64

    @classmethod
    def from_env(cls, env_file: Optional[str] = None, **overrides) -> "CertifyConfig":
        """Read DGLA_CERT_WORKERS and DGLA_CERT_REPORT, after loading a .env file."""
        load_dotenv(env_file)
        values: dict = {}
        workers = os.getenv(WORKERS_ENV)
        if workers:
            values["workers"] = workers
        report = os.getenv(REPORT_ENV)
        if report:
            values["report_path"] = Path(report)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class ReportConfig(BaseModel):
    """Configuration for report rendering."""

    indent: int = 2
    sort_keys: bool = True
    show_passed_checks: bool = False
