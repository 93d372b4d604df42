"""
Test harness configuration and the ordered process-pool map.
"""

from pathlib import Path

import pytest
from pydantic import ValidationError

from src.utils.config import REPORT_ENV, WORKERS_ENV, CertifyConfig, ReportConfig
from src.utils.parallel import chunked, ordered_map


def _square(x: int) -> int:
    return x * x


@pytest.fixture
def clean_env(monkeypatch):
    """Unset both variables and restore whatever was there afterwards."""
    for name in (WORKERS_ENV, REPORT_ENV):
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    return monkeypatch


class TestCertifyConfig:
    """Test CertifyConfig."""

    def test_defaults(self):
        """Test default values."""
        config = CertifyConfig()
        assert config.workers == 1
        assert config.report_path is None
        assert config.include_timestamp is True
        assert config.max_validation_dim == 64

    def test_workers_must_be_positive(self):
        """Test zero workers is rejected."""
        with pytest.raises(ValidationError):
            CertifyConfig(workers=0)

    def test_from_environment(self, clean_env, tmp_path):
        """Test DGLA_CERT_WORKERS and DGLA_CERT_REPORT are read."""
        clean_env.setenv(WORKERS_ENV, "3")
        clean_env.setenv(REPORT_ENV, "reports/out.json")
        config = CertifyConfig.from_env(env_file=str(tmp_path / "missing.env"))
        assert config.workers == 3
        assert config.report_path == Path("reports/out.json")

    def test_overrides_win(self, clean_env, tmp_path):
        """Test explicit values beat the environment and None is ignored."""
        clean_env.setenv(WORKERS_ENV, "3")
        config = CertifyConfig.from_env(
            env_file=str(tmp_path / "missing.env"), workers=2, report_path=None
        )
        assert config.workers == 2
        assert config.report_path is None

    def test_dotenv_file(self, clean_env, tmp_path):
        """Test values come from a .env file when the environment is empty."""
        env_file = tmp_path / ".env"
        env_file.write_text(f"{WORKERS_ENV}=4\n")
        config = CertifyConfig.from_env(env_file=str(env_file))
        assert config.workers == 4

    def test_malformed_workers(self, clean_env, tmp_path):
        """Test a non-numeric DGLA_CERT_WORKERS is a validation error."""
        clean_env.setenv(WORKERS_ENV, "two")
        with pytest.raises(ValidationError):
            CertifyConfig.from_env(env_file=str(tmp_path / "missing.env"))


class TestReportConfig:
    """Test ReportConfig."""

    def test_defaults(self):
        """Test the report is indented, sorted and terse by default."""
        config = ReportConfig()
        assert config.indent == 2
        assert config.sort_keys is True
        assert config.show_passed_checks is False


class TestParallel:
    """Test the ordered map."""

    def test_chunked(self):
        """Test chunks cover the input in order."""
        assert chunked([1, 2, 3, 4, 5], 2) == [[1, 2, 3], [4, 5]]
        assert chunked([1], 4) == [[1]]

    def test_serial_and_parallel_agree(self):
        """Test results keep input order whatever the worker count."""
        items = list(range(10))
        assert ordered_map(_square, items, 1) == ordered_map(_square, items, 2)
        assert ordered_map(_square, items, 2) == [x * x for x in items]
