"""
Test the task file parser.
"""

import json
from pathlib import Path

import pytest

from src.dgla.errors import TaskFileError
from src.utils.config_parser import (
    CocycleKindName,
    Constructor,
    TaskKind,
    find_taskfiles,
    parse_taskfile,
    parse_taskfile_data,
)

TASKFILES = Path(__file__).parent.parent / "taskfiles"


def _write(tmp_path: Path, data: dict) -> Path:
    path = tmp_path / "tasks.json"
    path.write_text(json.dumps(data))
    return path


class TestTaskFileParser:
    """Test task file parsing and schema errors."""

    def test_parse_shipped_example(self):
        """Test the so3 example parses with all of its sections."""
        spec = parse_taskfile(TASKFILES / "so3_currents.json")
        assert [lie.name for lie in spec.lie_algebras] == ["so3"]
        assert spec.cocycle_data[0].kind is CocycleKindName.P
        assert [b.constructor for b in spec.builds] == [Constructor.CONE, Constructor.CENTRAL]
        assert spec.tasks[0].kind is TaskKind.VALIDATE
        assert spec.tasks[5].module == "coadjoint"

    def test_defined_names(self):
        """Test every declared name maps to its section."""
        spec = parse_taskfile(TASKFILES / "so3_currents.json")
        names = spec.defined_names()
        assert names["so3"] == "lie_algebras"
        assert names["killing"] == "cocycle_data"
        assert names["Cp_so3"] == "builds"

    def test_minimal(self, tmp_path):
        """Test a file with only a schema version is valid."""
        spec = parse_taskfile(_write(tmp_path, {"schema_version": "1"}))
        assert spec.tasks == []

    def test_wrong_schema_version(self):
        """Test an unknown schema version is located."""
        with pytest.raises(TaskFileError) as excinfo:
            parse_taskfile_data({"schema_version": "2"})
        assert excinfo.value.location == "schema_version"

    def test_invalid_json(self, tmp_path):
        """Test malformed JSON reports its line."""
        path = tmp_path / "bad.json"
        path.write_text("{\n  'schema_version': 1\n}")
        with pytest.raises(TaskFileError) as excinfo:
            parse_taskfile(path)
        assert excinfo.value.location.startswith("line ")

    def test_missing_file(self, tmp_path):
        """Test an unreadable file is an input error."""
        with pytest.raises(TaskFileError, match="cannot read"):
            parse_taskfile(tmp_path / "absent.json")

    def test_task_missing_argument(self):
        """Test a ca task without its dgla is located at the task."""
        data = {"schema_version": "1", "tasks": [{"kind": "ca", "model": "Circ"}]}
        with pytest.raises(TaskFileError, match="dgla") as excinfo:
            parse_taskfile_data(data)
        assert excinfo.value.location == "tasks.0"

    def test_bad_module(self):
        """Test CE coefficients are limited to the three modules."""
        task = {"kind": "cohomology", "target": "sl2", "degree": 1, "module": "spinor"}
        with pytest.raises(TaskFileError, match="module"):
            parse_taskfile_data({"schema_version": "1", "tasks": [task]})

    def test_inexact_scalar(self):
        """Test a malformed scalar in a bracket is located."""
        lie = {"name": "g", "basis": ["x", "y"], "brackets": [["x", "y", "x", "1/0"]]}
        with pytest.raises(TaskFileError) as excinfo:
            parse_taskfile_data({"schema_version": "1", "lie_algebras": [lie]})
        assert excinfo.value.location == "lie_algebras.0.brackets"

    def test_datum_needs_lie(self):
        """Test a p datum without a Lie algebra is refused."""
        datum = {"name": "p", "kind": "p", "entries": []}
        with pytest.raises(TaskFileError) as excinfo:
            parse_taskfile_data({"schema_version": "1", "cocycle_data": [datum]})
        assert excinfo.value.location == "cocycle_data.0"

    def test_error_string_carries_location(self):
        """Test str(TaskFileError) starts with the location."""
        with pytest.raises(TaskFileError) as excinfo:
            parse_taskfile_data({"schema_version": "2"})
        assert str(excinfo.value).startswith("schema_version: ")


class TestFindTaskfiles:
    """Test task file discovery."""

    def test_find(self, tmp_path):
        """Test JSON files are found by stem."""
        (tmp_path / "a.json").write_text("{}")
        (tmp_path / "notes.txt").write_text("")
        assert list(find_taskfiles(tmp_path)) == ["a"]

    def test_missing_directory(self, tmp_path):
        """Test a missing directory yields nothing."""
        assert find_taskfiles(tmp_path / "nope") == {}

    def test_shipped(self):
        """Test the shipped examples are discoverable."""
        assert {"so3_currents", "broken_jacobi", "undefined_name"} <= set(find_taskfiles(TASKFILES))
