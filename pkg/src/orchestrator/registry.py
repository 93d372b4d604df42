"""
Name resolution for the certification harness: shipped fixtures plus
the objects declared in a task file, built in declaration order.
"""

from typing import Any, Callable, Optional

from src.cocycles.cases import (
    ExtensionCase,
    alpha_case,
    e_case,
    fixture_case,
    fms_case,
    fms_central_case,
    gamma_case,
    module_case,
    p_case,
    sigma_case,
)
from src.constructions import fixtures
from src.constructions.cone import cone
from src.constructions.extensions import CocycleKind, CocycleSpec, central_extension_cone
from src.constructions.semidirect import ExtensionDatum
from src.dgla.cdga import Cdga
from src.dgla.dgla import Dgla
from src.dgla.errors import CertificationError, TaskFileError
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import Form, LieAlgebra, matrix_lie_algebra
from src.linalg.graded import GradedSpace
from src.linalg.vector import Vec, to_scalar
from src.utils.config_parser import (
    BuildSpec,
    CdgaSpec,
    CocycleDataSpec,
    CocycleKindName,
    Constructor,
    GDiffSpec,
    LieAlgebraSpec,
    TaskFile,
)

CocycleData = Any  # Form, Vec or ExtensionDatum


def _unknown_label(label: str, location: str) -> TaskFileError:
    return TaskFileError(f"unknown basis label {label!r}", location)


class Registry:
    """Objects by name; task-file definitions shadow fixtures of the same name."""

    def __init__(self, taskfile: Optional[TaskFile] = None):
        self.lie_algebras: dict[str, LieAlgebra] = {}
        self.cdgas: dict[str, Cdga] = {}
        self.gdiff_spaces: dict[str, GDiffSpace] = {}
        self.cocycle_data: dict[str, CocycleData] = {}
        self.dglas: dict[str, Dgla] = {}
        self.cases: dict[str, ExtensionCase] = {}
        self._kinds: dict[str, CocycleKindName] = {}
        self.locations: dict[str, str] = {}
        if taskfile is not None:
            self.load(taskfile)

    # Lookup

    def _lookup(
        self,
        kind: str,
        table: dict,
        fallback: Optional[Callable[[str], Any]],
        name: str,
        location: str,
    ) -> Any:
        if name in table:
            return table[name]
        if fallback is not None:
            try:
                return fallback(name)
            except KeyError:
                pass
        raise TaskFileError(f"unknown {kind} {name!r}", location)

    def lie(self, name: str, location: str = "") -> LieAlgebra:
        return self._lookup("Lie algebra", self.lie_algebras, fixtures.lie, name, location)

    def cdga(self, name: str, location: str = "") -> Cdga:
        return self._lookup("CDGA", self.cdgas, fixtures.cdga, name, location)

    def gdiff(self, name: str, location: str = "") -> GDiffSpace:
        return self._lookup(
            "g-differential space", self.gdiff_spaces, fixtures.gdiff, name, location
        )

    def dgla(self, name: str, location: str = "") -> Dgla:
        return self._lookup("dgla", self.dglas, fixtures.dgla, name, location)

    def case(self, name: str, location: str = "") -> ExtensionCase:
        if name not in self.cases:
            try:
                self.cases[name] = fixture_case(name)
            except KeyError:
                raise TaskFileError(f"unknown extension {name!r}", location) from None
        return self.cases[name]

    def datum(self, name: str, location: str = "") -> CocycleData:
        return self._lookup("cocycle datum", self.cocycle_data, None, name, location)

    def resolve(self, name: str) -> Any:
        """Any object by name: Lie algebra, CDGA, 𝔤-differential space or dgla."""
        for lookup in (self.lie, self.cdga, self.gdiff, self.dgla):
            try:
                return lookup(name)
            except TaskFileError:
                continue
        raise TaskFileError(f"unknown object {name!r}", "name")

    def defined(self) -> list[tuple[str, Any]]:
        """Task-file objects in validation order."""
        items: list[tuple[str, Any]] = []
        for table in (self.lie_algebras, self.cdgas, self.gdiff_spaces, self.dglas):
            items.extend(table.items())
        return items

    def catalogue(self) -> dict[str, list[str]]:
        names = fixtures.catalogue()
        kinds = ("Cgamma", "Cp", "Calpha", "B", "Bfms")
        names["extensions"] = [
            f"{kind}({g})" for kind in kinds for g in fixtures.LIE_FIXTURES
        ] + ["Ce(sigma)", "sigma(T3)"]
        for key, table in (
            ("lie_algebras", self.lie_algebras),
            ("cdgas", self.cdgas),
            ("gdiff_spaces", self.gdiff_spaces),
            ("dglas", self.dglas),
            ("extensions", self.cases),
        ):
            names[key] = names.get(key, []) + [n for n in table if n not in names.get(key, [])]
        return names

    # Building from a task file

    def load(self, taskfile: TaskFile) -> None:
        sections: list[tuple[str, list, Callable[[Any, str], None]]] = [
            ("lie_algebras", taskfile.lie_algebras, self._add_lie),
            ("cdgas", taskfile.cdgas, self._add_cdga),
            ("gdiff_actions", taskfile.gdiff_actions, self._add_gdiff),
            ("cocycle_data", taskfile.cocycle_data, self._add_datum),
            ("builds", taskfile.builds, self._add_build),
        ]
        for section, specs, add in sections:
            for i, spec in enumerate(specs):
                location = f"{section}.{i}"
                try:
                    add(spec, location)
                    self.locations[spec.name] = location
                except TaskFileError:
                    raise
                except (CertificationError, ValueError, KeyError) as e:
                    raise TaskFileError(str(e), location) from e

    def _add_lie(self, spec: LieAlgebraSpec, location: str) -> None:
        if spec.matrices:
            if list(spec.matrices) != list(spec.basis):
                raise TaskFileError("matrix labels must list the basis in order", location)
            self.lie_algebras[spec.name] = matrix_lie_algebra(spec.name, spec.matrices)
            return
        known = set(spec.basis)
        brackets: dict[tuple[str, str], dict] = {}
        for j, (x, y, z, value) in enumerate(spec.brackets):
            for label in (x, y, z):
                if label not in known:
                    raise _unknown_label(label, f"{location}.brackets.{j}")
            brackets.setdefault((x, y), {})[z] = to_scalar(value)
        self.lie_algebras[spec.name] = LieAlgebra.from_brackets(spec.name, spec.basis, brackets)

    def _add_cdga(self, spec: CdgaSpec, location: str) -> None:
        space = GradedSpace(tuple((label, degree) for label, degree in spec.basis))
        products: dict[tuple[str, str], dict] = {}
        for j, (a, b, c, value) in enumerate(spec.products):
            for label in (a, b, c):
                if label not in space:
                    raise _unknown_label(label, f"{location}.products.{j}")
            products.setdefault((a, b), {})[c] = to_scalar(value)
        differential: dict[str, dict] = {}
        for j, (target, source, value) in enumerate(spec.differential):
            for label in (target, source):
                if label not in space:
                    raise _unknown_label(label, f"{location}.differential.{j}")
            differential.setdefault(source, {})[target] = to_scalar(value)
        self.cdgas[spec.name] = Cdga.build(spec.name, space, products, differential, spec.unit)

    def _add_gdiff(self, spec: GDiffSpec, location: str) -> None:
        c = self.cdga(spec.cdga, f"{location}.cdga")
        g = self.lie(spec.lie, f"{location}.lie")
        for x in spec.contractions:
            if x not in g.basis:
                raise _unknown_label(x, f"{location}.contractions")
        pairing = {
            x: {a: to_scalar(v) for a, v in row.items()} for x, row in spec.contractions.items()
        }
        module = fixtures.contraction_module(c, g, pairing, spec.name)
        if spec.shift:
            module = module.shift(spec.shift, spec.name)
        self.gdiff_spaces[spec.name] = module

    def _add_datum(self, spec: CocycleDataSpec, location: str) -> None:
        kind = spec.kind
        self._kinds[spec.name] = kind
        if kind is CocycleKindName.ELEMENT:
            self.cocycle_data[spec.name] = Vec(spec.element)
            return
        if kind is CocycleKindName.OMEGA_DELTA:
            omega: dict[tuple[str, str], dict] = {}
            for a, b, target, value in spec.omega:
                omega.setdefault((a, b), {})[target] = to_scalar(value)
            delta: dict[str, dict] = {}
            for source, target, value in spec.delta:
                delta.setdefault(source, {})[target] = to_scalar(value)
            self.cocycle_data[spec.name] = ExtensionDatum(omega, delta)
            return
        g = self.lie(spec.lie or "", f"{location}.lie")
        if spec.default:
            self.cocycle_data[spec.name] = {
                CocycleKindName.RHO: lambda: Form.zero(2),
                CocycleKindName.GAMMA: lambda: fixtures.default_gamma(g),
                CocycleKindName.P: lambda: fixtures.default_p(g),
                CocycleKindName.ALPHA: lambda: fixtures.default_alpha(g),
                CocycleKindName.P3: lambda: fixtures.default_p3(g),
            }[kind]()
            return
        arity = 3 if kind is CocycleKindName.P3 else 2
        entries: dict[tuple, object] = {}
        for j, entry in enumerate(spec.entries):
            if len(entry) != arity + 1:
                raise TaskFileError(
                    f"expected {arity} labels and a value", f"{location}.entries.{j}"
                )
            for label in entry[:-1]:
                if label not in g.basis:
                    raise _unknown_label(label, f"{location}.entries.{j}")
            entries[tuple(entry[:-1])] = to_scalar(entry[-1])
        if kind in (CocycleKindName.P, CocycleKindName.P3):
            form = Form.symmetric(arity, entries)
        elif kind is CocycleKindName.RHO:
            form = Form.skew(entries)
        else:
            form = Form.from_entries(2, entries)
        self.cocycle_data[spec.name] = form

    def _form(self, spec: BuildSpec, location: str, *kinds: type) -> Form:
        if spec.cocycle is None:
            raise TaskFileError(f"{spec.constructor.value} needs a cocycle", f"{location}.cocycle")
        value = self.datum(spec.cocycle, f"{location}.cocycle")
        if not isinstance(value, kinds or (Form,)):
            raise TaskFileError(f"{spec.cocycle!r} has the wrong kind", f"{location}.cocycle")
        return value

    def _require(self, spec: BuildSpec, field_name: str, location: str) -> str:
        value = getattr(spec, field_name)
        if value is None:
            message = f"{spec.constructor.value} needs {field_name}"
            raise TaskFileError(message, f"{location}.{field_name}")
        return value

    def _module(self, spec: BuildSpec, location: str) -> GDiffSpace:
        return self.gdiff(self._require(spec, "module", location), f"{location}.module")

    def _element(self, spec: BuildSpec, location: str) -> CocycleData:
        return self.datum(self._require(spec, "element", location), f"{location}.element")

    def _add_build(self, spec: BuildSpec, location: str) -> None:
        name, constructor = spec.name, spec.constructor
        if constructor is Constructor.SIGMA:
            v = self._module(spec, location)
            h = self._element(spec, location)
            self._add_case(sigma_case(v, h, spec.k, name))
            return
        g = self.lie(self._require(spec, "lie", location), f"{location}.lie")
        if constructor is Constructor.CONE:
            self.dglas[name] = cone(g).renamed(name)
        elif constructor is Constructor.CENTRAL:
            form = self._form(spec, location)
            kind = self._cocycle_kind(spec.cocycle or "", location)
            if kind is CocycleKind.RHO:
                self.dglas[name] = central_extension_cone(g, CocycleSpec(kind, form)).renamed(name)
            elif kind is CocycleKind.LAMBDA:
                self._add_case(gamma_case(g, form, name))
            else:
                self._add_case(p_case(g, form, name))
        elif constructor is Constructor.ALPHA:
            self._add_case(alpha_case(g, self._form(spec, location), name))
        elif constructor is Constructor.FMS:
            self._add_case(fms_case(g, self._form(spec, location), name))
        elif constructor is Constructor.FMS_CENTRAL:
            self._add_case(fms_central_case(g, self._form(spec, location), name))
        elif constructor is Constructor.SEMIDIRECT:
            v = self._module(spec, location)
            datum = self._form(spec, location, ExtensionDatum)
            self._add_case(module_case(g, v, datum, name))
        elif constructor is Constructor.E_DEFORMATION:
            v = self._module(spec, location)
            e = self._element(spec, location)
            self._add_case(e_case(g, v, e, name))

    def _cocycle_kind(self, datum_name: str, location: str) -> CocycleKind:
        kinds = self._kinds.get(datum_name)
        mapping = {
            CocycleKindName.RHO: CocycleKind.RHO,
            CocycleKindName.GAMMA: CocycleKind.LAMBDA,
            CocycleKindName.P: CocycleKind.P,
        }
        if kinds not in mapping:
            raise TaskFileError(
                "central extensions take a rho, gamma or p datum", f"{location}.cocycle"
            )
        return mapping[kinds]

    def _add_case(self, case: ExtensionCase) -> None:
        dgla = case.dgla.renamed(case.name)
        self.cases[case.name] = ExtensionCase(
            case.name,
            case.g,
            dgla,
            case.ca_formulas,
            case.sa_formulas,
            case.central_over,
            case.extension,
        )
        self.dglas[case.name] = dgla
