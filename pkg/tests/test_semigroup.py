import pytest

from tangentcone.algebra import Polynomial, parse_polynomial
from tangentcone.reference import ALPHA4_TWO, FAMILY_L0, FAMILY_L12, LARGE_EXPONENTS
from tangentcone.semigroup import (ConsistencyError, InvalidParameters, PseudoSymmetricParams,
                                   family_invariants, generators, toric_ideal, validate)

from conftest import sweep_params


def params(a21, a1, a2, a3, a4):
    return PseudoSymmetricParams(alpha1=a1, alpha2=a2, alpha3=a3, alpha4=a4, alpha21=a21)


class TestValidate:
    def test_family_l0_passes(self):
        report = validate(FAMILY_L0.params)
        assert report.ok
        assert not report.derived_failures
        # the printed parameters share a factor 3 across n1..n4
        assert [c.name for c in report.warnings] == ["gcd(n1, n2, n3, n4) = 1"]

    def test_family_l12_passes_everything(self):
        report = validate(FAMILY_L12.params)
        assert report.ok and not report.warnings
        assert len(report.checks) == 5 + 1 + 3 + 6

    def test_alpha21_boundary(self):
        report = validate(params(1, 2, 20, 8, 3))
        failed = [c.name for c in report.hypothesis_failures]
        assert "0 < alpha21 < alpha1 - 1" in failed
        with pytest.raises(InvalidParameters):
            report.raise_for_status()

    def test_order_hypothesis(self):
        # alpha2 large relative to the others breaks n1 < n2
        report = validate(params(2, 10, 50, 9, 3))
        assert "n1 < n2 < n3 < n4" in [c.name for c in report.hypothesis_failures]

    def test_non_integer(self):
        with pytest.raises(TypeError):
            validate(PseudoSymmetricParams(38.0, 20, 8, 3, 12))

    def test_derived_failure_is_consistency_error(self):
        from tangentcone.semigroup import Check, ValidationReport
        report = ValidationReport([Check("(1) alpha1 > alpha4", False, "derived")])
        with pytest.raises(ConsistencyError):
            report.raise_for_status()

    def test_sweep_never_trips_derived(self):
        for p in sweep_params(100, seed=11):
            assert not validate(p).derived_failures


class TestGenerators:
    def test_family_l0(self):
        # 20*8*2+1, 12*8*3+25*7+8, 38*3+25*19*2-2, 38*20*7+12*19+20
        assert tuple(generators(FAMILY_L0.params)) == (321, 471, 1062, 5568)

    def test_alpha4_two(self):
        assert generators(ALPHA4_TWO.params).n1 == 13 * 5 * 1 + 1

    def test_family_l12(self):
        assert generators(FAMILY_L12.params).n1 == 1121

    def test_multiplicity_congruence(self):
        for p in sweep_params(50, seed=5):
            n1 = generators(p).n1
            assert n1 % (p.alpha2 * p.alpha3) == 1

    def test_big_values_exact(self):
        n = generators(LARGE_EXPONENTS.params)
        assert n.n1 == 340 * 18 * 2 + 1


class TestToricIdeal:
    def test_alpha4_two_f1(self):
        f1 = toric_ideal(ALPHA4_TWO.params)[0]
        assert f1 == parse_polynomial("X1^22 - X3*X4")

    def test_family_l0_f4(self):
        f4 = toric_ideal(FAMILY_L0.params)[3]
        assert f4 == parse_polynomial("X4^3 - X1*X2^19*X3^7")

    def test_weighted_homogeneous(self):
        for p in sweep_params(60, seed=9) + [ALPHA4_TWO.params, LARGE_EXPONENTS.params]:
            n = tuple(generators(p))
            for f in toric_ideal(p):
                assert len(f) == 2
                assert f.is_weighted_homogeneous(n)
            f2 = toric_ideal(p)[1]
            assert p.alpha2 * n[1] == p.alpha21 * n[0] + n[3]
            assert isinstance(f2, Polynomial)


class TestInvariants:
    def test_family_l0(self):
        inv = family_invariants(FAMILY_L0.params)
        assert (inv.k, inv.s, inv.l) == (1, 0, 0)

    def test_family_l12(self):
        inv = family_invariants(FAMILY_L12.params)
        assert (inv.k, inv.s, inv.l) == (2, 3, 12)

    def test_large_exponents_k(self):
        assert family_invariants(LARGE_EXPONENTS.params).k == 2

    def test_refuses_outside_hypotheses(self):
        with pytest.raises(InvalidParameters):
            family_invariants(ALPHA4_TWO.params)

    def test_relations(self):
        for p in sweep_params(200, seed=13):
            inv = family_invariants(p)
            assert inv.k in (1, 2)
            assert inv.s <= inv.l
            if inv.k == 1:
                assert inv.s == 0

    def test_minimality(self):
        for p in sweep_params(50, seed=17):
            a1, a2, a3, a21 = p.alpha1, p.alpha2, p.alpha3, p.alpha21
            inv = family_invariants(p)
            for s in range(inv.s):
                assert not s * a1 + (2 * s + 2) * a21 + a3 > (2 * s + 1) * a2 + (s + 2)
            for l in range(inv.l):
                assert not l * a1 + (2 * l + 3) * a21 + a3 > (2 * l + 2) * a2 + (l + 1)
