from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from composites.errors import FieldMismatch, IncompatibleFields, InvalidField, NotAlgebraic, NotAMember
from composites.fieldtower import (
    INFINITE,
    automorphism_group,
    extension_predicates,
    fixed_field,
    frobenius,
    funcfield,
    gf,
    make_extension,
    minimal_polynomial,
    numberfield,
    q,
    unit_coset_index,
)
from composites.polyring import Polynomial

GF9 = gf(3, 2)
GF9_ELEMENTS = list(GF9.elements())
F2T = funcfield(2)
F3T = funcfield(3)
QQ = q()
QW = numberfield([-2, 0, 0, 1])

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=7)


def rff_elements(field=F2T):
    polys = st.lists(st.integers(0, field.p - 1), min_size=1, max_size=4)
    return st.tuples(polys, polys.filter(any)).map(lambda nd: field.from_polynomials(nd[0], nd[1]))


def q_elements():
    return small_fractions.map(QQ.from_fraction)


def nf_elements():
    return st.tuples(small_fractions, small_fractions, small_fractions).map(QW.element)


class TestFiniteField:
    def test_canonical_order_puts_high_coefficient_first(self, gf4):
        assert [str(x) for x in gf4.elements()] == ["0", "1", "w", "w + 1"]

    def test_least_irreducible_modulus(self):
        assert gf(2, 2).modulus == (1, 1, 1)
        assert gf(3, 2).modulus == (1, 0, 1)
        assert gf(2, 3).modulus == (1, 1, 0, 1)

    def test_prime_field_generator_is_one(self):
        assert gf(5).generator().is_one()

    def test_rejects_reducible_modulus(self):
        with pytest.raises(InvalidField):
            gf(2, 2, modulus=(1, 0, 1))

    def test_rejects_composite_characteristic(self):
        with pytest.raises(InvalidField):
            gf(4)

    def test_generator_satisfies_modulus(self, gf4):
        w = gf4.generator()
        assert (w * w + w + 1).is_zero()

    @given(st.sampled_from(GF9_ELEMENTS), st.sampled_from(GF9_ELEMENTS), st.sampled_from(GF9_ELEMENTS))
    def test_ring_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == GF9.zero()

    @given(st.sampled_from(GF9_ELEMENTS[1:]))
    def test_inverse(self, a):
        assert (a * a.inverse()).is_one()
        assert a ** (GF9.order - 1) == GF9.one()

    def test_frobenius_fixes_prime_field(self, gf9):
        assert [x for x in gf9.elements() if frobenius(x) == x] == [gf9(0), gf9(1), gf9(2)]

    def test_coercion_rejects_foreign_element(self, gf4, gf9):
        with pytest.raises(FieldMismatch):
            gf4(gf9.one())


class TestInfiniteFields:
    def test_fractions_reduce(self, rationals):
        assert rationals(Fraction(2, 4)) == rationals.from_fraction(Fraction(1, 2))

    @given(q_elements(), q_elements(), q_elements())
    def test_rational_axioms(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == QQ.zero()

    @given(q_elements().filter(lambda x: not x.is_zero()))
    def test_rational_inverse(self, a):
        assert (a * a.inverse()).is_one()
        assert a / a == QQ.one()

    @given(nf_elements(), nf_elements(), nf_elements())
    def test_number_field_axioms(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(nf_elements().filter(lambda x: not x.is_zero()))
    def test_number_field_inverse(self, a):
        assert (a * a.inverse()).is_one()

    def test_cube_root(self, cube_root_two):
        w = cube_root_two.generator()
        assert w ** 3 == cube_root_two(2)

    def test_reducible_minpoly_rejected(self):
        with pytest.raises(InvalidField):
            numberfield([-1, 0, 1])

    @given(rff_elements(), rff_elements())
    def test_function_field_arithmetic(self, a, b):
        assert (a + b) - b == a
        if not b.is_zero():
            assert (a / b) * b == a

    @pytest.mark.parametrize("field", [F2T, F3T], ids=["F_2(t)", "F_3(t)"])
    @given(data=st.data())
    def test_function_field_axioms(self, field, data):
        a, b, c = (data.draw(rff_elements(field)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        assert a - a == field.zero()

    @pytest.mark.parametrize("field", [F2T, F3T], ids=["F_2(t)", "F_3(t)"])
    @given(data=st.data())
    def test_function_field_inverse(self, field, data):
        a = data.draw(rff_elements(field).filter(lambda x: not x.is_zero()))
        assert (a * a.inverse()).is_one()
        assert (a ** -1) ** -1 == a

    def test_function_field_quotient(self, f2t):
        t = f2t.generator()
        assert ((t + 1) / t) * t == t + 1
        assert str((t + 1) / t) == "(t + 1)/(t)"

    def test_pth_powers(self, f2t):
        t = f2t.generator()
        assert f2t.is_pth_power((t * t).value)
        assert not f2t.is_pth_power(t.value)


class TestExtensionPair:
    def test_embedding_of_gf4_in_gf16(self, gf4):
        gf16 = gf(2, 4)
        pair = make_extension(gf4, gf16)
        image = pair.generator_image
        assert (image * image + image + 1).is_zero()
        assert pair.degree == 2
        assert sum(1 for x in gf16.elements() if pair.contains(x)) == 4

    def test_gf4_is_not_inside_gf8(self, gf4):
        with pytest.raises(IncompatibleFields):
            make_extension(gf4, gf(2, 3))

    def test_characteristics_must_agree(self, gf2, rationals):
        with pytest.raises(IncompatibleFields):
            make_extension(gf2, rationals)

    def test_pullback(self, proper_pair, gf4):
        assert proper_pair.pullback(gf4.one()).is_one()
        with pytest.raises(NotAMember):
            proper_pair.pullback(gf4.generator())

    def test_subfield_of_rational_functions(self, inseparable_pair, f2t2, f2t):
        t = f2t.generator()
        assert inseparable_pair.embed(f2t2.generator()) == t * t
        assert inseparable_pair.contains(t * t + 1)
        assert not inseparable_pair.contains(t)
        assert inseparable_pair.degree == 2

    def test_transcendental_degree(self, gf2, f2t):
        pair = make_extension(gf2, f2t)
        assert pair.degree is INFINITE
        assert unit_coset_index(pair).index is INFINITE
        assert extension_predicates(pair).algebraic is False


class TestPredicates:
    def test_gf4_over_gf2(self, proper_pair):
        preds = extension_predicates(proper_pair)
        assert (preds.algebraic, preds.separable, preds.normal, preds.galois) == (True, True, True, True)
        assert len(automorphism_group(proper_pair)) == 2 == proper_pair.degree

    def test_purely_inseparable(self, inseparable_pair):
        preds = extension_predicates(inseparable_pair)
        assert preds.purely_inseparable is True
        assert preds.separable is False

    def test_cube_root_not_normal(self, cube_root_two):
        preds = extension_predicates(make_extension(q(), cube_root_two))
        assert preds.normal is False
        assert preds.separable is True

    def test_fixed_field_is_small_field(self, proper_pair, gf4):
        assert fixed_field(proper_pair, automorphism_group(proper_pair)) == [gf4(0), gf4(1)]

    def test_unit_coset_index(self, proper_pair, gf3, gf9):
        assert unit_coset_index(proper_pair).index == 3
        assert unit_coset_index(make_extension(gf3, gf9)).index == 4


class TestMinimalPolynomial:
    def test_generator_of_gf4(self, proper_pair, gf2, gf4):
        assert minimal_polynomial(proper_pair, gf4.generator()) == Polynomial(gf2, (1, 1, 1))

    def test_element_of_small_field(self, proper_pair, gf2, gf4):
        assert minimal_polynomial(proper_pair, gf4.one()) == Polynomial(gf2, (1, 1))

    def test_cube_root(self, cube_root_two):
        pair = make_extension(q(), cube_root_two)
        mp = minimal_polynomial(pair, cube_root_two.generator())
        assert mp == Polynomial(q(), (-2, 0, 0, 1))

    def test_inseparable(self, inseparable_pair, f2t2, f2t):
        mp = minimal_polynomial(inseparable_pair, f2t.generator())
        u = f2t2.generator()
        assert mp == Polynomial(f2t2, (-u, 0, 1))

    def test_transcendental(self, gf2, f2t):
        with pytest.raises(NotAlgebraic):
            minimal_polynomial(make_extension(gf2, f2t), f2t.generator())
