"""
Test the current-algebra functors, their identification with A⁰(S)⊗𝔤 and
the exact sequences they fit into.
"""

import pytest

from src.constructions import fixtures
from src.constructions.cone import I, L, cone
from src.dgla.dgla import central_extension
from src.dgla.errors import NonAcyclicQuotient
from src.dgla.morphisms import CdgaMorphism, DglaMorphism
from src.functors.current import Functor, ca, current_lie, sa, validate_current
from src.functors.maps import ca_map, current_iso, induced_map, sa_map, verify_functoriality
from src.functors.sequence import central_extension_ses, four_term_sequence, ses_image
from src.linalg.graded import tensor_label
from src.linalg.vector import Vec
from src.orchestrator.suite import functoriality_chains


@pytest.fixture
def sl2():
    return fixtures.lie("sl2")


@pytest.fixture
def circ():
    return fixtures.cdga("Circ")


class TestCurrentAlgebras:
    """Test CA and SA on small models."""

    def test_dimensions_over_circle(self, circ, sl2):
        """Test both functors give a copy of sl2 over the circle model."""
        a = cone(sl2)
        assert ca(circ, a).dim == 3
        assert sa(circ, a).dim == 3

    def test_functor_tags(self, circ, sl2):
        """Test the algebra remembers which functor built it."""
        a = cone(sl2)
        assert ca(circ, a).functor is Functor.CA
        assert sa(circ, a).functor is Functor.SA
        assert ca(circ, a).to_json()["functor"] == "CA"

    def test_derived_bracket(self, circ, sl2):
        """Test [1⊗I(e), 1⊗I(f)] computed as [x, dy] is the class of 1⊗I(h)."""
        algebra = ca(circ, cone(sl2))
        e = algebra.project(Vec.basis(tensor_label("1", I("e"))))
        f = algebra.project(Vec.basis(tensor_label("1", I("f"))))
        h = algebra.project(Vec.basis(tensor_label("1", I("h"))))
        assert algebra.bracket(e, f) == h

    def test_sa_plain_bracket(self, circ, sl2):
        """Test SA brackets closed elements with the plain bracket."""
        algebra = sa(circ, cone(sl2))
        e = algebra.project(Vec.basis(tensor_label("1", L("e"))))
        f = algebra.project(Vec.basis(tensor_label("1", L("f"))))
        h = algebra.project(Vec.basis(tensor_label("1", L("h"))))
        assert algebra.bracket(e, f) == h

    @pytest.mark.parametrize("model", ["Pt", "Circ", "Intv", "T2"])
    def test_current_algebras_validate(self, model, sl2):
        """Test antisymmetry, Jacobi and the section round trip."""
        s = fixtures.cdga(model)
        for algebra in (ca(s, cone(sl2)), sa(s, cone(sl2))):
            assert validate_current(algebra).passed

    def test_current_lie_dimension(self, sl2):
        """Test A⁰(Intv)⊗sl2 has dimension 2·3."""
        assert current_lie(fixtures.cdga("Intv"), sl2).dim == 6


class TestCurrentIdentification:
    """Test A⁰(S)⊗𝔤 ≅ CA(S, C𝔤) ≅ SA(S, C𝔤)."""

    @pytest.mark.parametrize("model", ["Pt", "Circ", "Intv", "T2", "CircIntv"])
    @pytest.mark.parametrize("lie", ["ab2", "heis3", "sl2"])
    def test_identification_certified(self, model, lie):
        """Test every check of the identification passes."""
        iso = current_iso(fixtures.cdga(model), fixtures.lie(lie))
        assert iso.certificate.passed, iso.certificate.summary()

    def test_inverse_maps(self, sl2):
        """Test from_ca inverts to_ca on every basis vector."""
        iso = current_iso(fixtures.cdga("Intv"), sl2)
        for label in iso.current.basis:
            image = iso.to_ca[label]
            back = Vec()
            for ca_label, coeff in image.items():
                back = back.add_scaled(iso.from_ca[ca_label], coeff)
            assert back == Vec.basis(label)

    def test_named_checks(self, circ, sl2):
        """Test the certificate names the bijectivity and d checks."""
        cert = current_iso(circ, sl2).certificate
        for name in ("ca_bijective", "sa_bijective", "structure_constants", "d_bijective"):
            assert cert.check(name).passed


class TestInducedMaps:
    """Test CA and SA on morphisms."""

    def test_identity(self, circ, sl2):
        """Test the identity pair induces the identity."""
        a = cone(sl2)
        f = ca_map(CdgaMorphism.identity(circ), DglaMorphism.identity(a))
        assert f.certificate.passed
        for label in f.source.labels:
            assert f(Vec.basis(label)) == Vec.basis(label)

    def test_restriction_to_a_point(self, circ, sl2):
        """Test evaluation at a point, 1 ↦ 1 and θ ↦ 0, induces Lie maps."""
        pt = fixtures.cdga("Pt")
        evaluation = CdgaMorphism.from_images(circ, pt, {"1": {"1": 1}})
        a = cone(sl2)
        for induced in (ca_map, sa_map):
            f = induced(evaluation, DglaMorphism.identity(a))
            assert f.certificate.passed, f.certificate.summary()


class TestFunctoriality:
    """Test F(g∘f) = F(g)∘F(f) for non-identity composable pairs."""

    @pytest.mark.parametrize("functor", list(Functor))
    @pytest.mark.parametrize("index", [0, 1])
    def test_chains(self, functor, index):
        """Test both catalogue chains compose for CA and SA."""
        _, inner, outer = functoriality_chains()[index]
        cert = verify_functoriality(functor, inner, outer)
        assert cert.passed, cert.summary()
        assert cert.check("composition").passed

    def test_inclusion_then_projection(self, circ):
        """Test the center injects into CA(Circ, Cp(sl2)) and dies in CA(Circ, cone(sl2))."""
        ses = central_extension_ses(fixtures.dgla("Cp(sl2)"), fixtures.dgla("cone(sl2)"))
        on_circ = CdgaMorphism.identity(circ)
        first = induced_map(Functor.CA, on_circ, ses.i)
        second = induced_map(Functor.CA, on_circ, ses.p, source=first.target)
        assert first.source.dim == 1
        assert all(first.images.values())
        assert not any(second.compose(first).values())

    def test_first_difference(self, circ):
        """Test a map agrees with its own images and differs from the zero map."""
        ses = central_extension_ses(fixtures.dgla("Cp(sl2)"), fixtures.dgla("cone(sl2)"))
        f = ca_map(CdgaMorphism.identity(circ), ses.p)
        assert f.equals(f.images)
        assert f.first_difference({}) in f.source.labels


class TestFourTermSequence:
    """Test 0 → H⁻¹ → CA → SA → H⁰ → 0."""

    def test_acyclic_cone(self, circ, sl2):
        """Test d: CA → SA is an isomorphism when Ω(S)⊗A is acyclic."""
        exactness = four_term_sequence(circ, cone(sl2))
        assert exactness.passed
        assert exactness.dims == {"H-1": 0, "CA": 3, "SA": 3, "H0": 0}

    def test_line_over_circle(self, circ):
        """Test ℝ[1] over the circle: d vanishes and both ends are one-dimensional."""
        exactness = four_term_sequence(circ, fixtures.line("u", -1))
        assert exactness.passed
        assert exactness.dims == {"H-1": 1, "CA": 1, "SA": 1, "H0": 1}
        assert exactness.ranks["d"] == 0

    @pytest.mark.parametrize(
        "model,name",
        [("Intv", "Cp(sl2)"), ("Sq", "Cp(sl2)"), ("CircIntv", "Calpha(ab2)")],
    )
    def test_extensions(self, model, name):
        """Test exactness and the dimension bookkeeping on extensions."""
        exactness = four_term_sequence(fixtures.cdga(model), fixtures.dgla(name))
        assert exactness.certificate.check("dimension_bookkeeping").passed
        assert exactness.passed


class TestShortExactSequences:
    """Test CA and SA preserve short exact sequences with acyclic quotient."""

    def test_central_extension_of_cone(self, sl2):
        """Test 0 → ℝ[2] → C_p sl2 → C sl2 → 0 stays exact."""
        ses = central_extension_ses(fixtures.dgla("Cp(sl2)"), cone(sl2))
        for model in ("Circ", "Intv"):
            certs = ses_image(ses, fixtures.cdga(model))
            assert set(certs) == {"CA", "SA"}
            for cert in certs.values():
                assert cert.passed, cert.summary()

    def test_non_acyclic_quotient(self, circ):
        """Test a quotient with cohomology is refused with its class."""
        base = fixtures.line("u", -1)
        ses = central_extension_ses(central_extension(base, "R[1]+R[2]", [("c", -2)], {}), base)
        with pytest.raises(NonAcyclicQuotient) as excinfo:
            ses_image(ses, circ)
        assert excinfo.value.degree == -1
        assert "u" in excinfo.value.witness
