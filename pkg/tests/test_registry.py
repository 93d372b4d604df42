"""
Test name resolution over fixtures and task-file definitions.
"""

from pathlib import Path

import pytest

from src.cocycles.cases import ExtensionCase
from src.dgla.cdga import Cdga
from src.dgla.dgla import Dgla
from src.dgla.errors import TaskFileError
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import LieAlgebra
from src.orchestrator.registry import Registry
from src.utils.config_parser import parse_taskfile, parse_taskfile_data

TASKFILES = Path(__file__).parent.parent / "taskfiles"


def _registry(**sections) -> Registry:
    return Registry(parse_taskfile_data({"schema_version": "1", **sections}))


class TestFixtureResolution:
    """Test the registry without a task file."""

    @pytest.mark.parametrize(
        "name,kind",
        [
            ("sl2", LieAlgebra),
            ("Circ", Cdga),
            ("T3", GDiffSpace),
            ("dualcone(heis3)", GDiffSpace),
            ("cone(sl2)", Dgla),
            ("Cp(sl2)", Dgla),
            ("sigma(T3)", Dgla),
        ],
    )
    def test_resolve(self, name, kind):
        """Test catalogue names resolve to the right kind of object."""
        assert isinstance(Registry().resolve(name), kind)

    def test_unknown_name(self):
        """Test unknown names raise TaskFileError."""
        with pytest.raises(TaskFileError, match="unknown object"):
            Registry().resolve("so7")

    def test_unknown_with_location(self):
        """Test typed lookups carry the caller's location."""
        with pytest.raises(TaskFileError) as excinfo:
            Registry().dgla("cone(so7)", "tasks.3.dgla")
        assert excinfo.value.location == "tasks.3.dgla"

    def test_case(self):
        """Test fixture extensions resolve to cases."""
        assert isinstance(Registry().case("Cgamma(ab2)"), ExtensionCase)
        with pytest.raises(TaskFileError):
            Registry().case("cone(ab2)", "extension")

    def test_catalogue(self):
        """Test the catalogue groups names by kind."""
        names = Registry().catalogue()
        assert "sl2" in names["lie_algebras"]
        assert "Sq" in names["cdgas"]
        assert "cone(gl2)" in names["dglas"]
        assert "Ce(sigma)" in names["extensions"]


class TestTaskFileDefinitions:
    """Test objects built from a task file."""

    def test_so3_example(self):
        """Test the so3 example builds its algebra, cone and extension."""
        registry = Registry(parse_taskfile(TASKFILES / "so3_currents.json"))
        assert registry.lie("so3").dim == 3
        assert registry.dgla("Cso3").name == "Cso3"
        assert registry.dgla("Cp_so3").dim == 7
        assert "Cp_so3" in registry.cases
        assert "so3" in registry.catalogue()["lie_algebras"]

    def test_defined_order(self):
        """Test defined objects come back Lie algebras first."""
        registry = Registry(parse_taskfile(TASKFILES / "so3_currents.json"))
        assert [name for name, _ in registry.defined()] == ["so3", "Cso3", "Cp_so3"]
        assert registry.locations["Cp_so3"] == "builds.1"
        assert registry.locations["killing"] == "cocycle_data.0"

    def test_definitions_shadow_fixtures(self):
        """Test a task-file sl2 replaces the shipped one."""
        registry = _registry(lie_algebras=[{"name": "sl2", "basis": ["a", "b"]}])
        assert registry.lie("sl2").is_abelian()

    def test_undefined_lie(self):
        """Test an undefined Lie algebra in a build is located."""
        with pytest.raises(TaskFileError) as excinfo:
            Registry(parse_taskfile(TASKFILES / "undefined_name.json"))
        assert excinfo.value.location == "builds.0.lie"

    def test_unknown_bracket_label(self):
        """Test a bracket naming a label outside the basis is located."""
        lie = {"name": "g", "basis": ["x", "y"], "brackets": [["x", "y", "w", 1]]}
        with pytest.raises(TaskFileError) as excinfo:
            _registry(lie_algebras=[lie])
        assert excinfo.value.location == "lie_algebras.0.brackets.0"

    def test_rejected_construction(self):
        """Test a non-invariant p is refused at its build."""
        datum = {"name": "bad", "kind": "p", "lie": "sl2", "entries": [["h", "h", 1]]}
        build = {"name": "C", "constructor": "central_extension", "lie": "sl2", "cocycle": "bad"}
        with pytest.raises(TaskFileError, match="invariant") as excinfo:
            _registry(cocycle_data=[datum], builds=[build])
        assert excinfo.value.location == "builds.0"

    def test_default_gamma(self):
        """Test a default γ datum yields a C_γ case."""
        datum = {"name": "g", "kind": "gamma", "lie": "ab2", "default": True}
        build = {"name": "Cg", "constructor": "central_extension", "lie": "ab2", "cocycle": "g"}
        registry = _registry(cocycle_data=[datum], builds=[build])
        assert registry.case("Cg").ca_formulas

    def test_build_needs_cocycle(self):
        """Test an extension without a cocycle is located."""
        build = {"name": "C", "constructor": "alpha_extension", "lie": "ab2"}
        with pytest.raises(TaskFileError) as excinfo:
            _registry(builds=[build])
        assert excinfo.value.location == "builds.0.cocycle"

    def test_cdga_definition(self):
        """Test a CDGA declared by products and differential."""
        cdga = {
            "name": "Line",
            "basis": [["1", 0], ["t", 0], ["dt", 1]],
            "differential": [["dt", "t", 1]],
        }
        registry = _registry(cdgas=[cdga])
        c = registry.cdga("Line")
        assert c.dim == 3
