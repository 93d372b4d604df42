"""
Test Lie algebras, dglas, CDGAs, 𝔤-differential spaces and their validators.
"""

from fractions import Fraction

import pytest

from src.constructions import fixtures
from src.constructions.cone import I, L, cone
from src.dgla.cdga import Cdga, cdga_tensor, exterior_algebra, exterior_contraction, validate_cdga
from src.dgla.cohomology import cohomology, is_acyclic
from src.dgla.dgla import Dgla, abelian_dgla, central_extension, koszul_sign, validate_dgla
from src.dgla.errors import DegreeError, InternalConsistencyError
from src.dgla.gdiff import validate_gdiff
from src.dgla.lie import Form, LieAlgebra, invariance_defect, trace_form, validate_lie
from src.dgla.morphisms import (
    CdgaMorphism,
    DglaMorphism,
    validate_cdga_morphism,
    validate_dgla_morphism,
)
from src.dgla.tensor import tensor_dgla
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import Vec


class TestLieAlgebra:
    """Test Lie algebras and multilinear forms."""

    def test_sl2_structure_constants(self):
        """Test the commutators of the matrix basis of sl2."""
        sl2 = fixtures.lie("sl2")
        assert sl2.bracket_basis("e", "f") == Vec.basis("h")
        assert sl2.bracket_basis("h", "e") == Vec.basis("e", 2)
        assert sl2.bracket_basis("h", "f") == Vec.basis("f", -2)

    @pytest.mark.parametrize("name", ["ab1", "ab2", "ab3", "heis3", "sl2", "gl2", "sl3"])
    def test_fixtures_are_lie_algebras(self, name):
        """Test every shipped Lie algebra passes validation."""
        assert validate_lie(fixtures.lie(name)).passed

    def test_broken_jacobi_names_triple(self):
        """Test a broken Jacobi identity is reported with its triple."""
        broken = LieAlgebra.from_brackets(
            "broken", ["x", "y", "z"], {("x", "y"): {"z": 1}, ("y", "z"): {"y": 1}}
        )
        cert = validate_lie(broken)
        assert not cert.passed
        assert cert.check("antisymmetry").passed
        assert cert.check("jacobi").witness.startswith("Jacobi fails on (")

    def test_unknown_labels_rejected(self):
        """Test brackets mentioning labels outside the basis."""
        with pytest.raises(ValueError):
            LieAlgebra.from_brackets("bad", ["x"], {("x", "y"): {"x": 1}})

    def test_json_round_trip(self):
        """Test from_json inverts to_json."""
        heis = fixtures.lie("heis3")
        assert LieAlgebra.from_json(heis.to_json()).structure == heis.structure

    def test_coadjoint_action(self):
        """Test ad*_x ξ = −ξ∘ad_x on heis3."""
        heis = fixtures.lie("heis3")
        assert heis.coadjoint("x", Vec.basis("z*")) == Vec.basis("y*", -1)

    def test_trace_form_invariant(self):
        """Test the trace form of sl2 and its invariance."""
        sl2 = fixtures.lie("sl2")
        form = trace_form(sl2)
        assert form("e", "f") == 1
        assert form("h", "h") == 2
        assert form("e", "e") == 0
        assert invariance_defect(sl2, form) is None

    def test_non_invariant_form(self):
        """Test a non-invariant form produces a witness."""
        sl2 = fixtures.lie("sl2")
        assert invariance_defect(sl2, fixtures.non_invariant_p(sl2)) is not None

    def test_form_symmetry(self):
        """Test symmetric and skew constructors."""
        sym = Form.symmetric(2, {("x", "y"): 3})
        skew = Form.skew({("x", "y"): 3})
        assert sym("y", "x") == 3 and sym.is_symmetric()
        assert skew("y", "x") == -3 and skew.is_skew()
        assert (sym + skew).symmetric_part().values == sym.values


class TestDgla:
    """Test dglas and the exhaustive validator."""

    def test_cone_dimension_and_differential(self):
        """Test the cone of sl2."""
        c = cone(fixtures.lie("sl2"))
        assert c.dim == 6
        assert c.degree(I("e")) == -1
        assert c.d(Vec.basis(I("e"))) == Vec.basis(L("e"))
        assert c.bracket_basis(L("e"), I("f")) == Vec.basis(I("h"))

    def test_graded_antisymmetry_completed(self):
        """Test the missing order is filled in with the Koszul sign."""
        space = GradedSpace((("a", -1), ("b", -1), ("c", -2)))
        dgla = Dgla.build("odd", space, {("a", "b"): {"c": 1}})
        assert dgla.bracket_basis("b", "a") == Vec.basis("c")
        assert koszul_sign(-1, -1) == -1

    def test_inhomogeneous_bracket_rejected(self):
        """Test a bracket landing in the wrong degree."""
        space = GradedSpace((("a", 0), ("b", -1)))
        with pytest.raises(DegreeError):
            Dgla.build("bad", space, {("a", "a"): {"b": 1}})

    @pytest.mark.parametrize("g", ["ab2", "heis3", "sl2", "gl2"])
    def test_cones_validate(self, g):
        """Test cones of the fixtures pass every axiom."""
        assert validate_dgla(cone(fixtures.lie(g))).passed

    def test_perturbed_cone_fails_jacobi(self):
        """Test the perturbed cone reports a Jacobi triple."""
        cert = validate_dgla(fixtures.perturbed_cone())
        assert not cert.check("jacobi").passed
        assert cert.check("jacobi").witness.startswith("(")

    def test_workers_do_not_change_result(self):
        """Test the verdict is independent of the worker count."""
        dgla = fixtures.perturbed_cone()
        single = validate_dgla(dgla, workers=1)
        parallel = validate_dgla(dgla, workers=2)
        assert single.check("jacobi").witness == parallel.check("jacobi").witness

    def test_central_extension(self):
        """Test a central line picks up the cocycle in both orders."""
        base = cone(fixtures.lie("ab2"))
        ext = central_extension(base, "ext", [("c", -2)], {(I("x"), I("y")): {"c": 1}})
        assert ext.bracket_basis(I("x"), I("y")) == Vec.basis("c")
        assert ext.bracket_basis(I("y"), I("x")) == Vec.basis("c")
        assert validate_dgla(ext).passed

    def test_json_round_trip(self):
        """Test from_json inverts to_json."""
        c = cone(fixtures.lie("heis3"))
        again = Dgla.from_json(c.to_json())
        assert again.structure == c.structure
        assert again.differential.columns == c.differential.columns

    def test_line_is_abelian(self):
        """Test the line dgla ℝ[1]."""
        line = abelian_dgla("R[1]", [("u", -1)])
        assert line.dim == 1
        assert validate_dgla(line).passed


class TestCdga:
    """Test CDGA models."""

    @pytest.mark.parametrize("name", ["Pt", "Circ", "Intv", "T2", "T3", "CircIntv", "FmsS", "Sq"])
    def test_fixtures_validate(self, name):
        """Test every shipped CDGA passes validation."""
        assert validate_cdga(fixtures.cdga(name)).passed

    def test_exterior_signs(self):
        """Test ba = −ab in an exterior algebra."""
        t2 = exterior_algebra("T2", ["a", "b"])
        assert t2.product_basis("a", "b") == Vec.basis("ab")
        assert t2.product_basis("b", "a") == Vec.basis("ab", -1)
        assert t2.product_basis("a", "a") == Vec()

    def test_contraction_is_odd_derivation(self):
        """Test I(ab) = I(a)b − aI(b)."""
        t2 = exterior_algebra("T2", ["a", "b"])
        i_b = exterior_contraction(t2, {"b": 1})
        assert i_b(Vec.basis("ab")) == Vec.basis("a", -1)

    def test_leibniz_failure_detected(self):
        """Test ε² = ε on the interval breaks Leibniz."""
        intv = fixtures.cdga("Intv")
        broken = Cdga.build("Intv~", intv.space, {("ε", "ε"): {"ε": 1}}, {"ε": {"η": 1}})
        cert = validate_cdga(broken)
        assert not cert.check("leibniz").passed

    def test_tensor_product_dimension(self):
        """Test Circ⊗Intv has dimension 2·3."""
        circ_intv = cdga_tensor(fixtures.cdga("Circ"), fixtures.cdga("Intv"), "CircIntv")
        assert circ_intv.dim == 6
        assert validate_cdga(circ_intv).passed

    def test_unit_must_have_degree_zero(self):
        """Test the unit check of the builder."""
        space = GradedSpace((("1", 1),))
        with pytest.raises(DegreeError):
            Cdga.build("bad", space, {})


class TestGDiffSpace:
    """Test 𝔤-differential spaces."""

    def test_sigma_module_validates(self):
        """Test Λ(a,b,c) with contractions satisfies the Cartan relations."""
        assert validate_gdiff(fixtures.sigma_module()).passed

    @pytest.mark.parametrize("g", ["ab2", "heis3", "sl2"])
    def test_dual_cone_validates(self, g):
        """Test the dual cone of each fixture."""
        assert validate_gdiff(fixtures.gdiff(f"dualcone({g})")).passed

    def test_perturbed_module_fails_cartan(self):
        """Test a perturbed L(x) breaks the Cartan formula."""
        cert = validate_gdiff(fixtures.perturbed_sigma_module())
        assert not cert.check("cartan").passed

    def test_shift_moves_degrees(self):
        """Test V[k] lowers degrees and keeps the operators."""
        v = fixtures.sigma_module()
        shifted = v.shift(2)
        assert shifted.space.degree("abc") == 1
        assert validate_gdiff(shifted).passed

    def test_basic_elements(self):
        """Test the top form is not basic but the unit is."""
        v = fixtures.sigma_module()
        assert v.is_basic(Vec.basis("1")) is None
        assert v.is_basic(Vec.basis("abc")) == "I(e1)"


class TestTensorAndMorphisms:
    """Test Ω(S)⊗A and morphism validators."""

    def test_tensor_dgla_is_dgla(self):
        """Test Circ⊗cone(sl2) satisfies every axiom."""
        total = tensor_dgla(fixtures.cdga("Circ"), cone(fixtures.lie("sl2")))
        assert total.dim == 12
        assert validate_dgla(total).passed

    def test_koszul_sign_on_odd_forms(self):
        """Test moving θ past I(e) costs a sign, moving it past L(f) does not."""
        total = tensor_dgla(fixtures.cdga("Circ"), cone(fixtures.lie("sl2")))
        assert total.bracket_basis("θ⊗I(e)", "1⊗L(f)") == Vec.basis("θ⊗I(h)")
        assert total.bracket_basis("1⊗I(e)", "θ⊗L(f)") == Vec.basis("θ⊗I(h)", -1)
        assert total.bracket_basis("θ⊗L(h)", "1⊗I(e)") == Vec.basis("θ⊗I(e)", 2)

    def test_identity_morphisms(self):
        """Test identities are morphisms."""
        c = cone(fixtures.lie("sl2"))
        assert validate_dgla_morphism(DglaMorphism.identity(c)).passed
        circ = fixtures.cdga("Circ")
        assert validate_cdga_morphism(CdgaMorphism.identity(circ)).passed

    def test_non_morphism_detected(self):
        """Test scaling a non-abelian dgla by 2 fails the bracket check."""
        c = cone(fixtures.lie("sl2"))
        doubled = DglaMorphism.from_images(c, c, {l: {l: 2} for l in c.labels})
        cert = validate_dgla_morphism(doubled)
        assert cert.check("differential").passed
        assert not cert.check("bracket").passed


class TestCohomology:
    """Test cohomology of complexes."""

    def test_circle(self):
        """Test H⁰ = H¹ = ℝ for the circle model."""
        circ = fixtures.cdga("Circ")
        assert cohomology(circ.space, circ.differential, 0).dimension == 1
        assert cohomology(circ.space, circ.differential, 1).dimension == 1

    def test_interval(self):
        """Test the interval model is contractible."""
        intv = fixtures.cdga("Intv")
        assert cohomology(intv.space, intv.differential, 0).dimension == 1
        assert cohomology(intv.space, intv.differential, 1).dimension == 0

    def test_cone_acyclic(self):
        """Test the cone has no cohomology."""
        c = cone(fixtures.lie("sl2"))
        assert is_acyclic(c.space, c.differential) is None

    def test_line_not_acyclic(self):
        """Test ℝ[1] reports its class."""
        line = fixtures.line("u", -1)
        report = is_acyclic(line.space, line.differential)
        assert report is not None
        assert report.degree == -1
        assert report.representatives[0] == Vec.basis("u")

    def test_d_squared_nonzero_raises(self):
        """Test a non-differential is refused with InternalConsistencyError."""
        space = GradedSpace((("a", 0), ("b", 1), ("c", 2)))
        d = GradedMap.from_entries(space, space, 1, [("b", "a", 1), ("c", "b", 1)])
        with pytest.raises(InternalConsistencyError):
            cohomology(space, d, 1)

    def test_fraction_representatives(self):
        """Test representatives are exact Fractions."""
        circ = fixtures.cdga("Circ")
        rep = cohomology(circ.space, circ.differential, 1).representatives[0]
        assert rep == {"θ": Fraction(1)}
