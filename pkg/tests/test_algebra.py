"""Scalars, graded-commutative polynomials and polynomial parsing."""

from fractions import Fraction

import pytest

from algebra import (
    GF,
    QQ,
    AmbientMismatchError,
    DegreeMismatchError,
    Field,
    FieldMismatchError,
    GradedAlgebra,
    GradedPoly,
    PolynomialSyntaxError,
    parse_poly,
    substitute,
)


def random_homogeneous(algebra, degree, rng):
    terms = {
        mono: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        for mono in algebra.monomials_of_degree(degree)
    }
    return GradedPoly(algebra, terms)


@pytest.fixture
def mixed():
    """Two odd and two even generators over Q."""
    return GradedAlgebra.free([("x", 1), ("a", 2), ("y", 3), ("b", 4)])


class TestScalars:
    def test_rationals_stay_exact(self):
        third = QQ(1) / QQ(3)
        assert third.value == Fraction(1, 3)
        assert str(third) == "1/3"
        assert str(third * 3) == "1"

    def test_prime_field_prints_in_range(self):
        assert str(GF(5)(-1)) == "4"
        assert GF(7)(3).inverse().value == 5

    def test_characteristic_must_be_prime(self):
        with pytest.raises(ValueError):
            Field(4)
        with pytest.raises(ValueError):
            GF(-3)

    def test_denominator_divisible_by_p_has_no_reduction(self):
        with pytest.raises(ZeroDivisionError):
            GF(3).normalize(Fraction(1, 3))
        assert GF(3).normalize(Fraction(1, 2)) == 2

    def test_zero_has_no_inverse(self):
        with pytest.raises(ZeroDivisionError):
            GF(5)(0).inverse()

    def test_fields_do_not_mix(self):
        with pytest.raises(FieldMismatchError):
            GF(3)(1) + GF(5)(1)


class TestKoszulSigns:
    def test_odd_generators_anticommute(self, mixed):
        x, y = mixed.gen("x"), mixed.gen("y")
        assert y * x == -(x * y)
        assert x * x == 0

    def test_even_generators_commute(self, mixed):
        a, b = mixed.gen("a"), mixed.gen("b")
        assert a * b == b * a
        assert a * a != 0

    def test_mod_two_ignores_signs(self):
        algebra = GradedAlgebra.free([("x", 1), ("y", 3)], GF(2))
        x, y = algebra.gen("x"), algebra.gen("y")
        assert x * y == y * x
        assert not (x * x).is_zero()

    def test_graded_commutativity(self, mixed, rng):
        for _ in range(50):
            da, db = rng.randint(1, 5), rng.randint(1, 5)
            p = random_homogeneous(mixed, da, rng)
            q = random_homogeneous(mixed, db, rng)
            sign = -1 if (da * db) % 2 else 1
            assert p * q == (q * p).scale(sign)

    def test_monomial_sign_rule(self, mixed, rng):
        def monomial():
            exponents = {}
            for g in mixed.generators:
                top = 1 if g.degree % 2 else 3
                exponents[g.name] = rng.randint(0, top)
            return mixed.term(Fraction(rng.randint(1, 9)), exponents)

        for _ in range(10_000):
            p, q = monomial(), monomial()
            sign = -1 if (p.degree * q.degree) % 2 else 1
            assert p * q == (q * p).scale(sign)

    def test_associative_and_distributive(self, mixed, rng):
        for _ in range(200):
            p, q, r = (random_homogeneous(mixed, rng.randint(1, 4), rng) for _ in range(3))
            assert (p * q) * r == p * (q * r)
            assert p * (q + r) == p * q + p * r


class TestGradedPoly:
    def test_canonical_print_order(self):
        algebra = GradedAlgebra.free([("c_1", 2), ("c_3", 6)])
        c1, c3 = algebra.gen("c_1"), algebra.gen("c_3")
        poly = algebra.term(Fraction(1, 8), {"c_1": 6}) - c1 ** 3 * c3 + c3 ** 2
        assert str(poly) == "c_3^2 - c_1^3 c_3 + 1/8 c_1^6"

    def test_prime_field_coefficients_print_nonnegative(self):
        algebra = GradedAlgebra.free([("c_1", 2)], GF(3))
        assert str(-algebra.gen("c_1")) == "2 c_1"

    def test_degree_of_inhomogeneous_poly(self, mixed):
        poly = mixed.gen("a") + mixed.gen("b")
        assert not poly.is_homogeneous()
        with pytest.raises(DegreeMismatchError):
            poly.degree
        assert sorted(poly.homogeneous_components()) == [2, 4]
        assert mixed.zero().degree is None

    def test_word_length_components(self, mixed):
        a, b = mixed.gen("a"), mixed.gen("b")
        poly = b + a * a + 3 * a * a * a * a
        assert poly.linear_part() == b
        assert poly.word_length_component(2) == a * a
        assert poly.max_word_length() == 4

    def test_coefficient_lookup(self, mixed):
        a, b = mixed.gen("a"), mixed.gen("b")
        poly = 5 * a * a - b
        assert poly.coefficient(a * a).value == 5
        assert poly.coefficient(b).value == -1
        assert not poly.coefficient(a * b)

    def test_different_algebras_do_not_mix(self, mixed):
        other = GradedAlgebra.free([("z", 2)])
        with pytest.raises(AmbientMismatchError):
            mixed.gen("a") + other.gen("z")
        with pytest.raises(FieldMismatchError):
            mixed.gen("a") + mixed.with_field(GF(2)).gen("a")

    def test_generators_need_positive_degree(self):
        with pytest.raises(ValueError):
            GradedAlgebra.free([("z", 0)])
        with pytest.raises(ValueError):
            GradedAlgebra.free([("z", 2), ("z", 4)])

    def test_substitution_is_an_algebra_map(self, mixed):
        a, b = mixed.gen("a"), mixed.gen("b")
        image = substitute(b + a * a, {"b": 2 * a * a})
        assert image == 3 * a * a

    def test_substitution_checks_degrees(self, mixed):
        with pytest.raises(DegreeMismatchError):
            substitute(mixed.gen("b"), {"b": mixed.gen("a")})

    def test_substitution_reduces_mod_p(self, mixed):
        target = mixed.with_field(GF(2))
        reduced = substitute(2 * mixed.gen("a") * mixed.gen("a") + mixed.gen("b"), {}, target)
        assert reduced == target.gen("b")


class TestParsing:
    def test_reads_primed_names(self):
        algebra = GradedAlgebra.free([("t", 2), ("w'", 8)], GF(2))
        poly = parse_poly("t^12 + w'^3", algebra)
        assert poly.degree == 24
        assert len(poly) == 2

    def test_rational_coefficients(self):
        algebra = GradedAlgebra.free([("c_1", 2), ("c_3", 6)])
        poly = parse_poly("c_3^2 - c_1^3*c_3 + 1/8*c_1^6", algebra)
        assert str(poly) == "c_3^2 - c_1^3 c_3 + 1/8 c_1^6"

    def test_inhomogeneous_text(self):
        algebra = GradedAlgebra.free([("u", 2), ("v", 10)])
        with pytest.raises(DegreeMismatchError):
            parse_poly("v^2 - 2*u*v", algebra)
        poly = parse_poly("v^2 - 2*u*v", algebra, allow_inhomogeneous=True)
        assert sorted(poly.homogeneous_components()) == [12, 20]

    def test_unknown_symbol(self):
        algebra = GradedAlgebra.free([("u", 2)])
        with pytest.raises(PolynomialSyntaxError):
            parse_poly("u + q", algebra)

    def test_constant(self):
        algebra = GradedAlgebra.free([("u", 2)])
        assert parse_poly("3/4", algebra) == algebra.constant(Fraction(3, 4))
