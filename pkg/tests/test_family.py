import pytest

from tangentcone.algebra import normalize, parse_polynomial
from tangentcone.family import (closed_form_basis, closed_form_numerator, closed_form_second_series,
                                correction_series, g_poly, h_poly, monotonicity_verdict,
                                predicted_leading_monomials, span)
from tangentcone.hilbert import numerator
from tangentcone.mora import leading_form_ideal, standard_basis
from tangentcone.reference import ALPHA4_TWO, FAMILY_L0, FAMILY_L12
from tangentcone.semigroup import (FamilyInvariants, InvalidParameters,
                                   family_invariants, generators, toric_ideal)
from tangentcone.series import ONE_MINUS_T, SeriesPolynomial as S

from conftest import sweep_params

P = parse_polynomial


def content(polys):
    return {normalize(f) for f in polys}


class TestBasis:
    def test_family_l0(self):
        cf = closed_form_basis(FAMILY_L0.params)
        assert content(cf.elements()) == content(FAMILY_L0.basis_polynomials())
        assert [lab for lab, _ in cf.labelled()] == [f"f{i}" for i in range(1, 8)] + ["g0", "h0"]

    def test_family_l12_elements(self):
        p = FAMILY_L12.params
        assert normalize(g_poly(p, 3)) == normalize(P("X2^281*X4 - X1^275*X3^10"))
        assert normalize(h_poly(p, 3)) == normalize(P("X2^321 - X1^286*X3^10"))

    def test_family_l12_printed_content(self):
        cf = closed_form_basis(FAMILY_L12.params)
        assert len(cf.g) == 4 and sorted(cf.h) == list(range(3, 13))
        assert content(cf.elements()) == content(FAMILY_L12.basis_polynomials())

    def test_refuses_alpha4_two(self):
        with pytest.raises(InvalidParameters):
            closed_form_basis(ALPHA4_TWO.params)


class TestLeadingMonomials:
    def test_family_l0(self):
        I = predicted_leading_monomials(FAMILY_L0.params)
        assert (0, 41, 0, 0) in I.generators and (0, 21, 0, 1) in I.generators
        assert (12, 0, 0, 1) in I.generators

    def test_matches_engine(self):
        for p in sweep_params(15, seed=31):
            G = standard_basis(toric_ideal(p)).elements
            assert leading_form_ideal(G) == predicted_leading_monomials(p)


class TestSeries:
    def test_numerator_l0(self):
        assert closed_form_numerator(FAMILY_L0.params) == FAMILY_L0.printed_P()

    def test_second_series_l0(self):
        Q = closed_form_second_series(FAMILY_L0.params)
        assert Q == FAMILY_L0.printed_Q()
        assert Q(1) == 321

    def test_second_series_l12(self):
        Q = closed_form_second_series(FAMILY_L12.params)
        assert Q == FAMILY_L12.printed_Q()
        assert Q(1) == generators(FAMILY_L12.params).n1

    def test_correction_series_empty(self):
        inv = FamilyInvariants(1, 0, 0)
        assert correction_series(FAMILY_L0.params, inv) == S()

    def test_correction_series_l12(self):
        R = correction_series(FAMILY_L12.params, family_invariants(FAMILY_L12.params))
        assert R(1) == 3 + 9
        assert R[2 * 11 + 14] == 1

    def test_span(self):
        assert span(4, 6) == S([0, 0, 0, 0, 1, 1, 1])
        assert span(4, 3) == S()
        assert span(4, 2) == -S.monomial(3)
        for a in range(1, 6):
            for b in range(-1, 8):
                assert span(a, b) * ONE_MINUS_T == S.monomial(a) - S.monomial(b + 1)

    def test_sweep_agrees_with_recursion(self):
        for p in sweep_params(40, seed=37):
            inv = family_invariants(p)
            G = standard_basis(toric_ideal(p)).elements
            Pr = numerator(leading_form_ideal(G))
            assert closed_form_numerator(p, inv) == Pr
            assert closed_form_second_series(p, inv) * ONE_MINUS_T ** 3 == Pr

    def test_alpha3_two(self):
        p = next(q for q in sweep_params(400, seed=41) if q.alpha3 == 2)
        Q = closed_form_second_series(p)
        assert Q(1) == generators(p).n1


class TestMonotonicity:
    def test_one_minus_t(self):
        v = monotonicity_verdict(ONE_MINUS_T)
        assert not v.q_nonnegative and not v.nondecreasing
        assert v.negative_terms == {1: -1} and v.first_decrease == 1

    def test_family_l0(self):
        inv = family_invariants(FAMILY_L0.params)
        v = monotonicity_verdict(FAMILY_L0.printed_Q(), inv)
        assert v.l_zero and v.q_nonnegative and v.nondecreasing
        assert v.as_dict()["negative_terms"] == {}
