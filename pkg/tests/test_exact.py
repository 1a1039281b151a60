import random
from fractions import Fraction

import pytest

from seqverify.exact import PoleError, Polynomial, RationalFunction, polygcd, rational_content

import laws

n = Polynomial.variable()


class TestRational:
    def test_small_fraction_arithmetic(self):
        assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)

    def test_additive_inverse(self):
        x = Fraction(7, 13)
        assert x + (-x) == Fraction(0, 1)

    def test_cancellation_to_canonical_form(self):
        product = Fraction(11, 6) * Fraction(6, 1)
        assert product == Fraction(11, 1)
        assert product.denominator == 1

    def test_division_by_zero_is_an_explicit_error(self):
        with pytest.raises(ZeroDivisionError):
            Fraction(1, 2) / Fraction(0)

    def test_field_laws(self):
        laws.rational_field_laws(cases=500)


class TestPolynomial:
    def test_telescoped_coefficient_identity_vanishes(self):
        # (n-3) + (-(2n-7)) + (n-4) = 0
        assert (n - 3) + (-(2 * n - 7)) + (n - 4) == Polynomial()

    def test_cleared_bracket_identity_is_two(self):
        assert (n - 1) * (n - 2) - 2 * n * (n - 2) + n * (n - 1) == Polynomial((2,))

    def test_eval_square_at_six(self):
        assert ((n - 4) ** 2)(6) == 4

    def test_eval_is_exact_horner(self):
        p = 3 * n ** 2 - Fraction(1, 2) * n + 5
        assert p(Fraction(1, 3)) == Fraction(3, 9) - Fraction(1, 6) + 5

    def test_zero_polynomial_has_empty_coefficients(self):
        assert Polynomial((0, 0)).coefficients == ()
        assert Polynomial().degree == -1

    def test_shifted_composition(self):
        p = (n - 4) ** 2
        assert p.shifted(4) == n ** 2
        assert p.shifted(0) == p

    def test_ring_laws(self):
        laws.polynomial_ring_laws(cases=500)


class TestPolygcd:
    def test_common_linear_factor(self):
        assert polygcd(n ** 2 - 4, n - 2) == n - 2

    def test_gcd_with_zero_is_monic_multiple(self):
        p = 3 * n + 6
        assert polygcd(p, Polynomial()) == n + 2
        assert polygcd(Polynomial(), p) == n + 2

    def test_coprime_linear_factors(self):
        assert polygcd(n - 3, n - 4) == Polynomial((1,))

    def test_both_zero_is_an_error(self):
        with pytest.raises(ValueError):
            polygcd(Polynomial(), Polynomial())

    def test_gcd_divides_both_inputs_exactly(self):
        rng = random.Random(71)
        for _ in range(200):
            g = laws.random_polynomial(rng, max_degree=2)
            a = laws.random_polynomial(rng, max_degree=2) * g
            b = laws.random_polynomial(rng, max_degree=2) * g
            if a.is_zero and b.is_zero:
                continue
            common = polygcd(a, b)
            assert a % common == Polynomial()
            assert b % common == Polynomial()
            if not g.is_zero:
                assert common % g.monic() == Polynomial()


class TestRationalFunction:
    def test_partial_fraction_sum(self):
        combined = RationalFunction(1, n) + RationalFunction(1, n - 1)
        assert combined.numerator == 2 * n - 1
        assert combined.denominator == n * (n - 1)

    def test_denominator_is_monic(self):
        f = RationalFunction(1, 2 * n - 4)
        assert f.denominator == n - 2
        assert f.numerator == Polynomial((Fraction(1, 2),))

    def test_evaluation_at_pole_is_an_error(self):
        f = RationalFunction(1, n - 2)
        with pytest.raises(PoleError) as err:
            f(2)
        assert err.value.point == 2
        assert "n = 2" in str(err.value)

    def test_reduction_cancels_common_factor(self):
        f = RationalFunction((n - 4) ** 2, n - 4)
        assert f.numerator == n - 4
        assert f.denominator == Polynomial((1,))

    def test_zero_has_canonical_shape(self):
        f = RationalFunction(0, 5 * n + 1)
        assert f.is_zero
        assert f.denominator == Polynomial((1,))

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFunction(1, Polynomial())
        with pytest.raises(ZeroDivisionError):
            RationalFunction(1, n) / RationalFunction(0)

    def test_evaluation_is_a_homomorphism(self):
        rng = random.Random(72)
        checked = 0
        while checked < 200:
            f = laws.random_rational_function(rng)
            g = laws.random_rational_function(rng)
            x = rng.randint(-30, 30)
            if f.denominator(x) == 0 or g.denominator(x) == 0:
                continue
            assert (f + g)(x) == f(x) + g(x)
            assert (f * g)(x) == f(x) * g(x)
            checked += 1

    def test_equality_is_structural_on_canonical_forms(self):
        assert RationalFunction(2 * n, 2 * n ** 2) == RationalFunction(1, n)
        assert RationalFunction(4, 2) == 2


def test_rational_content_examples():
    assert rational_content([Fraction(4), Fraction(6)]) == 2
    assert rational_content([Fraction(1, 2), Fraction(3, 4)]) == Fraction(1, 4)
    assert rational_content([Fraction(0)]) == 0
