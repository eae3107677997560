from fractions import Fraction

import numpy as np
import pytest

from composites.composite import (
    CompositeElement,
    IrreducibilityTag,
    accp_failure_chain,
    almost_bezout_witness,
    canonical_associate,
    contains,
    divisor_chain_height,
    factor_atoms,
    hfd_failure_witness,
    integrality_witness,
    irreducible_divisors,
    is_irreducible_in_composite,
    is_unit,
    length_set,
    members_of_degree,
    nonassociate_divisors,
    property_report,
    quotient_class,
    z_localized,
)
from composites.errors import (
    InvalidArgument,
    InvalidField,
    IsZeroOrUnit,
    NonunitRequired,
    NotAMember,
    NotInXB,
    NotPurelyInseparablePair,
    SearchSpaceTooLarge,
    SmallRingIsAField,
    SmallRingNotAField,
)
from composites.polyring import Polynomial
from composites.verdicts import PROPERTIES


def poly(field, *coeffs):
    return Polynomial(field, coeffs)


class TestMembership:
    def test_constant_must_lie_in_small_field(self, proper_ring, gf4):
        w = gf4.generator()
        assert contains(proper_ring, poly(gf4, 1, w))
        assert not contains(proper_ring, poly(gf4, w, 1))
        with pytest.raises(NotAMember):
            proper_ring.element((w,))

    def test_integer_constant(self, z_ring, rationals):
        assert contains(z_ring, poly(rationals, 3, Fraction(1, 2)))
        assert not contains(z_ring, poly(rationals, Fraction(1, 2)))

    def test_localized_coefficients(self, z3_ring, rationals):
        assert contains(z3_ring, poly(rationals, 1, Fraction(1, 9)))
        assert not contains(z3_ring, poly(rationals, 1, Fraction(1, 2)))

    def test_localization_needs_primes(self):
        with pytest.raises(InvalidField):
            z_localized([])
        with pytest.raises(InvalidField):
            z_localized([4])

    def test_units(self, proper_ring, z_ring):
        assert is_unit(proper_ring, proper_ring.one())
        assert not is_unit(proper_ring, proper_ring.x())
        assert is_unit(z_ring, z_ring.element((-1,)))
        assert not is_unit(z_ring, z_ring.element((2,)))

    def test_ring_is_closed_under_products(self, proper_ring, gf4):
        w = gf4.generator()
        a = proper_ring.element((1, w))
        b = proper_ring.element((0, w + 1, 1))
        assert contains(proper_ring, (a * b).poly)


class TestIrreducibility:
    @pytest.mark.parametrize("degree", [1, 2, 3])
    def test_classifier_agrees_with_divisor_search(self, proper_ring, degree):
        for e in members_of_degree(proper_ring, degree):
            is_irreducible_in_composite(proper_ring, e, verify=True)

    @pytest.mark.parametrize("degree", [1, 2, 3])
    def test_classifier_on_identity_ring(self, identity_ring, degree):
        for e in members_of_degree(identity_ring, degree):
            is_irreducible_in_composite(identity_ring, e, verify=True)

    def test_tags(self, proper_ring, gf4):
        w = gf4.generator()
        assert is_irreducible_in_composite(proper_ring, proper_ring.element((0, w))).tag is IrreducibilityTag.SCALED_X
        verdict = is_irreducible_in_composite(proper_ring, proper_ring.element((0, 0, 1)))
        assert not verdict and verdict.tag is IrreducibilityTag.REDUCIBLE
        verdict = is_irreducible_in_composite(proper_ring, proper_ring.element((1, 1, 1)))
        assert not verdict

    def test_nothing_in_xq_is_an_atom(self, z_ring):
        verdict = is_irreducible_in_composite(z_ring, z_ring.x())
        assert not verdict
        assert verdict.tag is IrreducibilityTag.NON_ATOM_DIVISIBLE

    def test_integer_constants(self, z_ring):
        assert is_irreducible_in_composite(z_ring, z_ring.element((5,)))
        assert not is_irreducible_in_composite(z_ring, z_ring.element((6,)))

    def test_unit_constant_forms_over_z(self, z_ring, z3_ring):
        assert is_irreducible_in_composite(z_ring, z_ring.element((1, 0, 1)))
        assert not is_irreducible_in_composite(z_ring, z_ring.element((2, 1)))
        assert not is_irreducible_in_composite(z3_ring, z3_ring.element((3, 1)))

    def test_units_are_rejected(self, proper_ring):
        with pytest.raises(IsZeroOrUnit):
            is_irreducible_in_composite(proper_ring, proper_ring.one())


class TestFactorization:
    @pytest.mark.parametrize("degree", [1, 2, 3, 4])
    def test_half_factorial(self, proper_ring, degree):
        for e in members_of_degree(proper_ring, degree):
            assert length_set(proper_ring, e) == {factor_atoms(proper_ring, e).length}

    def test_atoms_expand_back(self, proper_ring, gf4):
        w = gf4.generator()
        e = proper_ring.element((0, 0, w, 1, w))
        result = factor_atoms(proper_ring, e, seed=3)
        assert result.expand(proper_ring) == e
        assert all(is_irreducible_in_composite(proper_ring, atom) for atom in result.atoms)

    def test_constant_goes_into_unit(self, proper_ring):
        e = proper_ring.element((1, 0, 1))
        result = factor_atoms(proper_ring, e)
        assert result.unit.is_one()
        assert result.length == 2

    def test_needs_a_field_of_constants(self, z_ring):
        with pytest.raises(SmallRingNotAField):
            factor_atoms(z_ring, z_ring.element((1, 1)))

    def test_irreducible_divisors_of_x_squared(self, proper_ring, identity_ring):
        assert len(irreducible_divisors(proper_ring, proper_ring.x() ** 2)) == 3
        assert len(irreducible_divisors(identity_ring, identity_ring.x() ** 2)) == 1

    def test_nonassociate_divisors_of_x_squared(self, proper_ring):
        # 1, X^2 and the three classes aX
        assert len(nonassociate_divisors(proper_ring, proper_ring.x() ** 2)) == 5

    def test_chain_height_matches_degree(self, proper_ring):
        assert divisor_chain_height(proper_ring, proper_ring.x() ** 3) == 3
        assert divisor_chain_height(proper_ring, proper_ring.one()) == 0

    def test_canonical_associate_normalizes_constant(self, proper_ring, gf4):
        w = gf4.generator()
        assert canonical_associate(proper_ring, poly(gf4, 1, w)) == poly(gf4, 1, w)

    def test_oracle_refuses_infinite_rings(self, z_ring):
        with pytest.raises(SearchSpaceTooLarge):
            length_set(z_ring, z_ring.element((1, 1)))

    def test_oracle_degree_cap(self, proper_ring):
        with pytest.raises(SearchSpaceTooLarge):
            length_set(proper_ring, proper_ring.x() ** 6)


class TestWitnesses:
    def test_accp_chain(self, z_ring):
        chain = accp_failure_chain(z_ring, z_ring.x(), 2, 20)
        assert len(chain) == 21
        assert chain.certified
        assert chain.generators[-1].poly == z_ring.x().poly * Fraction(1, 2 ** 20)

    def test_accp_chain_localized(self, z3_ring):
        assert accp_failure_chain(z3_ring, z3_ring.x(), 3, 5).certified
        with pytest.raises(NotAMember):
            accp_failure_chain(z3_ring, z3_ring.x(), 2, 5)

    def test_accp_chain_rejects(self, z_ring, proper_ring):
        with pytest.raises(NotInXB):
            accp_failure_chain(z_ring, z_ring.element((1, 1)), 2, 3)
        with pytest.raises(NonunitRequired):
            accp_failure_chain(z_ring, z_ring.x(), 1, 3)
        with pytest.raises(SmallRingIsAField):
            accp_failure_chain(proper_ring, proper_ring.x(), 2, 3)
        with pytest.raises(InvalidArgument):
            accp_failure_chain(z_ring, z_ring.x(), 2, -1)
        with pytest.raises(InvalidArgument):
            hfd_failure_witness(z_ring, 2, -1)

    def test_accp_chain_with_no_steps(self, z_ring):
        chain = accp_failure_chain(z_ring, z_ring.x(), 2, 0)
        assert len(chain) == 1

    def test_hfd_failure_witness(self, z_ring):
        witnesses = hfd_failure_witness(z_ring, 2, 4)
        assert [k for k, _, _ in witnesses] == [1, 2, 3, 4]
        for k, a, cofactor in witnesses:
            assert (a ** k * cofactor).poly == z_ring.x().poly

    def test_almost_bezout(self, inseparable_ring):
        rng = np.random.default_rng(11)
        big = inseparable_ring.big
        for _ in range(50):
            f, g = (
                Polynomial(big, tuple(big.random_element(rng) for _ in range(3)) + (big.one(),))
                for _ in range(2)
            )
            witness = almost_bezout_witness(inseparable_ring, f, g)
            assert witness.certified
            assert witness.n <= 1

    def test_almost_bezout_needs_inseparable_pair(self, proper_ring):
        with pytest.raises(NotPurelyInseparablePair):
            almost_bezout_witness(proper_ring, proper_ring.x().poly, proper_ring.one().poly)


class TestQuotientAndClosure:
    def test_quotient_class_detects_members(self, z_ring, rationals):
        assert quotient_class(z_ring, poly(rationals, 3, Fraction(1, 2))).is_zero
        cls = quotient_class(z_ring, poly(rationals, Fraction(1, 2), 1))
        assert not cls.is_zero
        assert cls.representative == rationals(Fraction(1, 2))

    def test_quotient_class_matches_membership(self, proper_ring, gf4):
        for c in gf4.elements():
            p = poly(gf4, c, 1)
            assert quotient_class(proper_ring, p).is_zero == contains(proper_ring, p)

    def test_function_field_representative(self, inseparable_ring, f2t):
        c = f2t.from_polynomials((1,), (1, 1))
        rep = quotient_class(inseparable_ring, Polynomial.constant(f2t, c)).representative
        assert rep == f2t.from_polynomials((0, 1), (1, 0, 1))
        t = f2t.generator()
        assert quotient_class(inseparable_ring, poly(f2t, t + t ** 2)).representative == t

    def test_function_field_representative_is_canonical(self, inseparable_ring, f2t, f2t2):
        pair = inseparable_ring.pair
        rng = np.random.default_rng(17)
        for _ in range(30):
            c = f2t.random_element(rng)
            u = pair.embed(f2t2.random_element(rng))
            rep = quotient_class(inseparable_ring, Polynomial.constant(f2t, c)).representative
            shifted = quotient_class(inseparable_ring, Polynomial.constant(f2t, c + u)).representative
            assert rep == shifted
            assert pair.contains(c - rep)

    def test_integrality_witness(self, proper_ring, gf2, gf4):
        witness = integrality_witness(proper_ring)
        assert witness.element == gf4.generator()
        assert witness.minimal_polynomial == poly(gf2, 1, 1, 1)

    def test_no_witness_for_identity_or_z(self, identity_ring, z_ring):
        assert integrality_witness(identity_ring) is None
        assert integrality_witness(z_ring) is None


class TestPropertyReport:
    def test_proper_finite_pair(self, proper_ring):
        report = property_report(proper_ring)
        assert set(report.entries) == set(PROPERTIES)
        assert report["atomic"].asserted.value is True
        assert report["ufd"].asserted.value is False
        assert report["ffd"].asserted.value is True
        assert report["integrally_closed"].asserted.value is False
        assert not report.diagram_violations()

    def test_z_in_q(self, z_ring):
        report = property_report(z_ring)
        assert report["accp"].asserted.value is False
        assert report["idf"].asserted.value is None
        assert report["integrally_closed"].asserted.value is True

    def test_frame(self, identity_ring):
        frame = property_report(identity_ring).to_frame()
        assert list(frame.columns) == ["property", "asserted", "tested", "cite"]
        assert len(frame) == len(PROPERTIES)
