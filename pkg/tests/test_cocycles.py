"""
Test cocycle extraction, validation, comparison and the extension cases.
"""

import pytest

from src.cocycles.cases import fixture_case, run_case
from src.cocycles.chevalley import Representation
from src.cocycles.compare import CompareMode, compare_cocycles
from src.cocycles.evaluators import verify_prin_brackets
from src.cocycles.extract import Cocycle2, ExtensionSplitting, validate_cocycle
from src.constructions import fixtures
from src.dgla.errors import ConstructionRejected
from src.functors.current import Functor, ca
from src.linalg.vector import Vec


def _trivial_cocycle(lie: str, values: dict) -> Cocycle2:
    g = fixtures.lie(lie)
    full = {}
    for (u, v), c in values.items():
        full[(u, v)] = Vec({"1": c})
        full[(v, u)] = Vec({"1": -c})
    return Cocycle2(g, Representation.trivial(g), full)


class TestCocycle2:
    """Test 2-cocycles on a Lie algebra."""

    def test_valid_cocycle(self):
        """Test a skew form on ab2 is a trivial-coefficient cocycle."""
        sigma = _trivial_cocycle("ab2", {("x", "y"): 1})
        assert validate_cocycle(sigma).passed
        assert sigma.nonzero_pairs() == [("x", "y")]
        assert sigma.to_json() == [["x", "y", {"1": "1"}]]

    def test_antisymmetry_failure(self):
        """Test a one-sided value is caught."""
        ab2 = fixtures.lie("ab2")
        sigma = Cocycle2(ab2, Representation.trivial(ab2), {("x", "y"): Vec({"1": 1})})
        cert = validate_cocycle(sigma)
        assert not cert.check("antisymmetry").passed

    def test_cocycle_identity_failure(self):
        """Test σ(e11, e22) = 1 on gl2 is not closed."""
        sigma = _trivial_cocycle("gl2", {("e11", "e22"): 1})
        cert = validate_cocycle(sigma)
        assert cert.check("antisymmetry").passed
        assert not cert.check("cocycle_identity").passed
        assert cert.check("cocycle_identity").witness.startswith("dσ")

    def test_from_function(self):
        """Test building from a callable keeps only nonzero values."""
        ab2 = fixtures.lie("ab2")
        sigma = Cocycle2.from_function(
            ab2, Representation.trivial(ab2), lambda u, v: Vec({"1": 1}) if u < v else Vec()
        )
        assert sigma("x", "y") == Vec({"1": 1})
        assert sigma("y", "x") == Vec()


class TestSplitting:
    """Test linear splittings of extensions."""

    def test_decompose(self):
        """Test coordinates split into base and fiber parts."""
        split = ExtensionSplitting.from_labels(["a", "b", "m"], ["a", "b"], ["m"])
        assert split.check() is None
        base, fiber = split.decompose(Vec({"a": 2, "m": 3}))
        assert base == Vec({"a": 2})
        assert fiber == Vec({"m": 3})

    def test_incomplete_splitting(self):
        """Test a splitting missing a direction is reported."""
        split = ExtensionSplitting.from_labels(["a", "b", "m"], ["a"], ["m"])
        assert split.check() is not None


class TestCompare:
    """Test exact and cohomologous comparison."""

    def test_exact(self):
        """Test identical cocycles compare equal and different ones carry a witness."""
        a = _trivial_cocycle("heis3", {("x", "y"): 1})
        b = _trivial_cocycle("heis3", {("x", "y"): 2})
        assert compare_cocycles(a, a).equal
        verdict = compare_cocycles(a, b)
        assert not verdict.equal
        assert verdict.witness.startswith("(x, y)")

    def test_cohomologous(self):
        """Test σ(x,y) = −1 on heis3 is the coboundary of τ(z) = 1."""
        a = _trivial_cocycle("heis3", {("x", "y"): -1})
        zero = _trivial_cocycle("heis3", {})
        assert not compare_cocycles(a, zero, CompareMode.EXACT).equal
        verdict = compare_cocycles(a, zero, CompareMode.COHOMOLOGOUS)
        assert verdict.equal
        assert verdict.witness is None
        assert "z" in verdict.cobounding

    def test_not_cohomologous(self):
        """Test σ(x,z) = 1 on heis3 is a nontrivial class."""
        a = _trivial_cocycle("heis3", {("x", "z"): 1})
        zero = _trivial_cocycle("heis3", {})
        verdict = compare_cocycles(a, zero, CompareMode.COHOMOLOGOUS)
        assert not verdict.equal
        assert verdict.witness

    def test_shapes_must_match(self):
        """Test cocycles on different algebras are refused."""
        with pytest.raises(ConstructionRejected):
            compare_cocycles(_trivial_cocycle("ab2", {}), _trivial_cocycle("heis3", {}))


class TestExtensionCases:
    """Test extracted current cocycles against their closed forms."""

    @pytest.mark.parametrize(
        "functor,model,extension",
        [
            (Functor.CA, "Intv", "Cgamma(ab2)"),
            (Functor.SA, "Intv", "Cgamma(ab2)"),
            (Functor.CA, "Sq", "Cp(sl2)"),
            (Functor.SA, "Sq", "Cp(sl2)"),
            (Functor.SA, "Intv", "Calpha(ab2)"),
            (Functor.SA, "Intv", "Calpha(sl2)"),
            (Functor.CA, "Circ", "Ce(sigma)"),
            (Functor.SA, "Circ", "Ce(sigma)"),
            (Functor.CA, "Circ", "sigma(T3)"),
        ],
    )
    def test_matches_closed_form(self, functor, model, extension):
        """Test the extracted cocycle is valid and equals every formula."""
        outcome = run_case(fixture_case(extension), functor, fixtures.cdga(model))
        assert outcome.passed, outcome.certificate.summary()
        assert outcome.comparisons
        assert all(c.equal for c in outcome.comparisons.values())

    def test_fms_central_cocycle(self):
        """Test B_FMS carries the pairing cocycle over CA(S, B)."""
        outcome = run_case(fixture_case("Bfms(gl2)"), Functor.CA, fixtures.cdga("FmsS"))
        assert outcome.passed, outcome.certificate.summary()
        assert "pairing" in outcome.comparisons

    def test_fms_central_has_no_sa_cocycle(self):
        """Test SA is refused for the central tower."""
        with pytest.raises(ConstructionRejected):
            run_case(fixture_case("Bfms(gl2)"), Functor.SA, fixtures.cdga("FmsS"))

    def test_alpha_ca_has_no_closed_form(self):
        """Test CA of C_α only extracts and validates."""
        case = fixture_case("Calpha(ab2)")
        with pytest.raises(ConstructionRejected):
            run_case(case, Functor.CA, fixtures.cdga("Intv"))
        outcome = run_case(case, Functor.CA, fixtures.cdga("Intv"), compare=False)
        assert outcome.passed

    def test_nontrivial_class_on_square(self):
        """Test CA(Sq, C_p sl2) carries a class no coboundary removes."""
        outcome = run_case(fixture_case("Cp(sl2)"), Functor.CA, fixtures.cdga("Sq"), compare=False)
        sigma = outcome.extracted
        zero = Cocycle2(sigma.base, sigma.module, {})
        assert not compare_cocycles(sigma, zero, CompareMode.COHOMOLOGOUS).equal

    def test_gamma_over_a_point(self):
        """Test CA(Pt, C_γ ab2) has exactly the pair (1⊗x, 1⊗y)."""
        outcome = run_case(fixture_case("Cgamma(ab2)"), Functor.CA, fixtures.cdga("Pt"))
        assert len(outcome.extracted.nonzero_pairs()) == 1

    def test_result_json(self):
        """Test the JSON form lists the cocycle and the comparisons."""
        outcome = run_case(fixture_case("Cgamma(ab2)"), Functor.CA, fixtures.cdga("Intv"))
        data = outcome.to_json()
        assert data["functor"] == "CA"
        assert data["model"] == "Intv"
        assert data["cocycle"]
        assert data["comparisons"]["sigma_gamma"]["equal"] is True

    def test_unknown_extension(self):
        """Test names that are not extensions raise KeyError."""
        with pytest.raises(KeyError):
            fixture_case("cone(sl2)")


class TestSigmaModelBrackets:
    """Test the generator bracket table of the sigma-model current algebra."""

    def test_bracket_table(self):
        """Test currents, module action, abelian fiber and the Leibniz-expanded exact relation."""
        case = fixture_case("sigma(T3)")
        algebra = ca(fixtures.cdga("Circ"), case.dgla)
        cert = verify_prin_brackets(algebra, case.extension, fixtures.SIGMA_H)
        assert cert.passed, cert.summary()
        assert [check.name for check in cert.checks] == [
            "current_bracket",
            "module_action",
            "module_abelian",
            "exact_relation",
        ]
