"""
Test Chevalley–Eilenberg cohomology and invariant symmetric forms.
"""

import pytest

from src.cocycles.chevalley import (
    CeComplex,
    Representation,
    ce_cohomology,
    evaluate,
    form_in_span,
    invariant_forms,
    validate_representation,
)
from src.constructions import fixtures
from src.dgla.lie import Form, trace_form
from src.linalg.vector import Vec


class TestRepresentations:
    """Test the three coefficient modules."""

    @pytest.mark.parametrize("lie", ["ab2", "heis3", "sl2", "gl2"])
    def test_homomorphism(self, lie):
        """Test [ρ(x), ρ(y)] = ρ([x,y]) for every module."""
        g = fixtures.lie(lie)
        modules = (Representation.trivial, Representation.adjoint, Representation.coadjoint)
        for rep in (module(g) for module in modules):
            assert validate_representation(rep).passed

    def test_coadjoint_labels(self):
        """Test the coadjoint module lives on the dual basis."""
        g = fixtures.lie("heis3")
        assert len(Representation.coadjoint(g).labels) == 3


class TestCochains:
    """Test alternating cochains."""

    def test_evaluate_is_alternating(self):
        """Test a cochain stored on (e, f) changes sign on (f, e)."""
        sl2 = fixtures.lie("sl2")
        cochain = {("e", "f"): Vec({"1": 1})}
        assert evaluate(sl2, cochain, [Vec.basis("f"), Vec.basis("e")]) == Vec({"1": -1})
        assert evaluate(sl2, cochain, [Vec.basis("e"), Vec.basis("e")]) == Vec()

    def test_labels_round_trip(self):
        """Test cochain labels parse back into arguments and module label."""
        label = CeComplex.label(("x", "y"), "1")
        assert CeComplex.parse(label) == (("x", "y"), "1")
        assert CeComplex.parse(CeComplex.label((), "m")) == ((), "m")


class TestCohomology:
    """Test dimensions of H^n(g; M)."""

    @pytest.mark.parametrize("lie,expected", [("ab2", 1), ("sl2", 0), ("heis3", 2)])
    def test_h2_trivial(self, lie, expected):
        """Test H² with trivial coefficients."""
        g = fixtures.lie(lie)
        assert ce_cohomology(g, Representation.trivial(g), 2).dimension == expected

    @pytest.mark.parametrize("lie,expected", [("sl2", 0), ("heis3", 2), ("ab2", 2)])
    def test_h1_trivial(self, lie, expected):
        """Test H¹(g; ℝ) is the dual of g/[g,g]."""
        g = fixtures.lie(lie)
        assert ce_cohomology(g, Representation.trivial(g), 1).dimension == expected

    @pytest.mark.parametrize("lie,expected", [("sl2", 0), ("ab2", 4)])
    def test_h1_coadjoint(self, lie, expected):
        """Test H¹(g; g*) counts coadjoint 1-cocycles modulo coboundaries."""
        g = fixtures.lie(lie)
        assert ce_cohomology(g, Representation.coadjoint(g), 1).dimension == expected

    @pytest.mark.parametrize("lie,expected", [("sl2", 0), ("heis3", 1)])
    def test_h0_adjoint_is_center(self, lie, expected):
        """Test H⁰(g; g) is the center."""
        g = fixtures.lie(lie)
        assert ce_cohomology(g, Representation.adjoint(g), 0).dimension == expected

    def test_foreign_module_rejected(self):
        """Test the module must belong to the algebra."""
        with pytest.raises(ValueError):
            ce_cohomology(fixtures.lie("sl2"), Representation.trivial(fixtures.lie("ab2")), 1)


class TestInvariantForms:
    """Test (S^k g*)^g."""

    @pytest.mark.parametrize(
        "lie,degree,expected", [("sl2", 2, 1), ("sl2", 3, 0), ("sl3", 3, 1), ("ab2", 2, 3)]
    )
    def test_counts(self, lie, degree, expected):
        """Test the number of independent invariant forms."""
        assert len(invariant_forms(fixtures.lie(lie), degree)) == expected

    def test_trace_forms_are_invariant(self):
        """Test tr(xy) on sl2 and tr(xyz) on gl2 lie in the invariant span."""
        sl2, gl2 = fixtures.lie("sl2"), fixtures.lie("gl2")
        assert form_in_span(invariant_forms(sl2, 2), trace_form(sl2))
        assert form_in_span(invariant_forms(gl2, 3), trace_form(gl2, 3))

    def test_non_invariant_form_outside_span(self):
        """Test p(h,h) = 1 alone is not invariant."""
        sl2 = fixtures.lie("sl2")
        assert not form_in_span(invariant_forms(sl2, 2), Form.symmetric(2, {("h", "h"): 1}))
