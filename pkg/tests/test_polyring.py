import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from composites.errors import DivisionByZeroPoly, FieldMismatch, UnsupportedFactorization
from composites.fieldtower import gf, make_extension, q
from composites.polyring import (
    Polynomial,
    compose_linear,
    divmod_poly,
    evaluate,
    factor,
    gcd,
    gcd_extended,
    is_irreducible,
    squarefree_decomposition,
)

GF3 = gf(3)
GF4 = gf(2, 2)


def gf3_polys(max_size=6):
    return st.lists(st.integers(0, 2), max_size=max_size).map(lambda cs: Polynomial(GF3, tuple(cs)))


def gf4_polys(max_size=5):
    elements = list(GF4.elements())
    return st.lists(st.sampled_from(elements), max_size=max_size).map(lambda cs: Polynomial(GF4, tuple(cs)))


class TestArithmetic:
    def test_zero_has_degree_minus_one(self, gf2):
        assert Polynomial.zero(gf2).degree == -1

    def test_trailing_zeros_trimmed(self, gf2):
        assert Polynomial(gf2, (1, 0, 2)).degree == 0

    def test_str(self, gf4):
        w = gf4.generator()
        assert str(Polynomial(gf4, (0, w, w))) == "w*X^2 + w*X"
        assert str(Polynomial(gf4, (1, w + 1))) == "(w + 1)*X + 1"

    @given(gf3_polys(), gf3_polys().filter(lambda p: not p.is_zero()))
    def test_divmod_identity(self, a, b):
        quotient, remainder = divmod_poly(a, b)
        assert quotient * b + remainder == a
        assert remainder.degree < b.degree

    @given(gf4_polys(), gf4_polys())
    def test_bezout_cofactors(self, a, b):
        g, s, t = gcd_extended(a, b)
        assert s * a + t * b == g
        if not g.is_zero():
            assert g.leading.is_one()
            assert (a % g).is_zero() and (b % g).is_zero()

    def test_division_by_zero(self, gf2):
        with pytest.raises(DivisionByZeroPoly):
            divmod_poly(Polynomial.x(gf2), Polynomial.zero(gf2))

    def test_mixed_fields(self, gf2, gf3):
        with pytest.raises(FieldMismatch):
            Polynomial.x(gf2) + Polynomial.x(gf3)

    def test_evaluate_through_embedding(self, proper_pair, gf2, gf4):
        f = Polynomial(gf2, (1, 1, 1))
        assert evaluate(f, gf4.generator(), proper_pair).is_zero()

    def test_compose_linear(self, rationals):
        f = Polynomial(rationals, (0, 0, 1))
        assert compose_linear(f, 1, 1) == Polynomial(rationals, (1, 2, 1))


class TestSquarefree:
    def test_square_over_gf2(self, gf2):
        f = Polynomial(gf2, (1, 0, 1))
        assert squarefree_decomposition(f) == [(Polynomial(gf2, (1, 1)), 2)]

    def test_inseparable_part_kept_whole(self, f2t):
        t = f2t.generator()
        f = Polynomial(f2t, (-t, 0, 1))
        assert squarefree_decomposition(f) == [(f, 1)]

    @given(gf3_polys(max_size=5).filter(lambda p: p.degree > 0))
    def test_parts_multiply_back(self, f):
        product = Polynomial.one(GF3)
        for g, m in squarefree_decomposition(f):
            product = product * g ** m
        assert product == f.monic()[1]


class TestFactor:
    def test_x4_plus_x_over_gf2(self, gf2):
        f = Polynomial(gf2, (0, 1, 0, 0, 1))
        result = factor(f)
        assert result.expand() == f
        assert sorted(g.degree for g, _ in result.factors) == [1, 1, 2]

    @given(gf3_polys(max_size=7).filter(lambda p: p.degree > 0))
    def test_finite_field_round_trip(self, f):
        result = factor(f)
        assert result.expand() == f
        assert all(is_irreducible(g) for g, _ in result.factors)

    def test_deterministic_under_seed(self, gf4):
        f = Polynomial(gf4, (1, 0, 0, 0, 0, 1))
        assert factor(f, seed=7) == factor(f, seed=7)

    def test_rationals(self, rationals):
        assert len(factor(Polynomial(rationals, (-2, 0, 1))).factors) == 1
        assert len(factor(Polynomial(rationals, (-1, 0, 1))).factors) == 2

    def test_cube_root_splits_off_linear_factor(self, cube_root_two):
        w = cube_root_two.generator()
        f = Polynomial(cube_root_two, (-2, 0, 0, 1))
        result = factor(f)
        assert Polynomial(cube_root_two, (-w, 1)) in [g for g, _ in result.factors]
        assert sorted(g.degree for g, _ in result.factors) == [1, 2]

    def test_binomial_over_function_field(self, f2t):
        t = f2t.generator()
        assert is_irreducible(Polynomial(f2t, (t, 0, 1)))
        square = factor(Polynomial(f2t, (t * t, 0, 1)))
        assert square.factors == ((Polynomial(f2t, (t, 1)), 2),)

    def test_zero_has_no_factorization(self, gf2):
        with pytest.raises(UnsupportedFactorization):
            factor(Polynomial.zero(gf2))


SMALL_FIELDS = [gf(2), gf(3), gf(2, 2), gf(5), gf(7), gf(2, 3), gf(3, 2)]


@st.composite
def small_field_polys(draw, max_degree=4):
    field = draw(st.sampled_from(SMALL_FIELDS))
    elements = list(field.elements())
    coeffs = draw(st.lists(st.sampled_from(elements), min_size=2, max_size=max_degree + 1))
    if coeffs[-1].is_zero():
        coeffs[-1] = field.one()
    return Polynomial(field, tuple(coeffs))


def monic_polys(field, degree):
    for low in itertools.product(list(field.elements()), repeat=degree):
        yield Polynomial(field, low + (field.one(),))


def divides(g, f):
    return (f % g).is_zero()


def irreducible_by_trial_division(f):
    # a reducible f has a monic factor of degree at most deg f / 2
    return f.degree > 0 and not any(
        divides(g, f) for k in range(1, f.degree // 2 + 1) for g in monic_polys(f.field, k)
    )


class TestFactorAgainstTrialDivision:
    @settings(max_examples=60, deadline=None)
    @given(small_field_polys())
    def test_factors_are_irreducible_with_exact_multiplicity(self, f):
        result = factor(f)
        assert result.expand() == f
        for g, m in result.factors:
            assert g.leading.is_one()
            assert irreducible_by_trial_division(g)
            assert divides(g ** m, f) and not divides(g ** (m + 1), f)

    @settings(max_examples=60, deadline=None)
    @given(small_field_polys())
    def test_irreducibility_matches_trial_division(self, f):
        assert is_irreducible(f) == irreducible_by_trial_division(f)

    def test_every_irreducible_quadratic_over_gf3(self, gf3):
        irreducible = [g for g in monic_polys(gf3, 2) if irreducible_by_trial_division(g)]
        # (3^2 - 3) / 2 monic irreducible quadratics
        assert len(irreducible) == 3
        assert all(is_irreducible(g) and len(factor(g).factors) == 1 for g in irreducible)


class TestIrreducible:
    def test_gf2(self, gf2):
        assert is_irreducible(Polynomial(gf2, (1, 1, 1)))
        assert not is_irreducible(Polynomial(gf2, (1, 0, 1)))

    def test_gf4_splits_x2_x_1(self, gf4):
        assert not is_irreducible(Polynomial(gf4, (1, 1, 1)))

    def test_constants_are_not_irreducible(self, gf2):
        assert not is_irreducible(Polynomial.one(gf2))

    def test_gcd_of_coprime(self, gf2):
        assert gcd(Polynomial(gf2, (1, 1)), Polynomial(gf2, (0, 1))).is_one()
