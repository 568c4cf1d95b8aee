"""Steenrod operations on Chern classes and tabled operations."""

import re

import pytest
from sympy import symbols
from sympy.polys.polyfuncs import symmetrize

from algebra import GF, QQ, DegreeMismatchError, parse_poly, substitute
from primes import primes_in_interval
from steenrod import (
    InsufficientDataError,
    NotSymmetricError,
    SteenrodOperation,
    SteenrodTable,
    SymmetricExpansion,
    TableEntry,
    chern_algebra,
    elementary_symmetric,
    power_op_on_chern,
    splitting_algebra,
    symmetric_to_elementary,
    table_apply,
    total_operation,
    total_operation_component,
)


def admissible_cases(limit=12):
    for m in range(3, limit + 1):
        for p in primes_in_interval(m):
            if p % 2 and (m + 1) % p:
                yield m, p


def chern_operation(poly, p, k):
    """Sq^{2k} or P^k on any polynomial in Chern classes, through the splitting principle."""
    m = len(poly.algebra.generators)
    split = splitting_algebra(m, poly.field)
    image = substitute(poly, {f"c_{j}": elementary_symmetric(j, split) for j in range(1, m + 1)}, split)
    return symmetric_to_elementary(SymmetricExpansion.from_poly(total_operation_component(image, p, k)))


def random_chern_monomial(algebra, rng):
    exponents = {g.name: rng.randint(0, 1) for g in algebra.generators}
    if not any(exponents.values()):
        exponents["c_1"] = 1
    return algebra.term(1, exponents)


class TestSteenrodOperation:
    def test_degrees(self):
        assert SteenrodOperation(2, 3).degree == 3
        assert SteenrodOperation(5, 1).degree == 8
        assert SteenrodOperation(3, 2).label == "P^2"

    def test_parse(self):
        assert SteenrodOperation.parse("Sq^2") == SteenrodOperation(2, 2)
        assert SteenrodOperation.parse("P^1", 5) == SteenrodOperation(5, 1)
        with pytest.raises(ValueError):
            SteenrodOperation.parse("P^1")
        with pytest.raises(ValueError):
            SteenrodOperation.parse("Sq^x")

    def test_needs_a_prime(self):
        with pytest.raises(ValueError):
            SteenrodOperation(4, 1)


class TestSplittingPrinciple:
    def test_total_operation_on_a_variable(self):
        algebra = splitting_algebra(2, GF(3))
        t1 = algebra.gen("t_1")
        assert total_operation(t1, 3) == t1 + t1 ** 3

    def test_power_sum_in_chern_classes(self):
        split = splitting_algebra(2, QQ)
        t1, t2 = split.gen("t_1"), split.gen("t_2")
        result = symmetric_to_elementary(SymmetricExpansion.from_poly(t1 * t1 + t2 * t2))
        c = chern_algebra(2, QQ)
        assert result == c.gen("c_1") ** 2 - 2 * c.gen("c_2")

    def test_elementary_symmetric_round_trip(self):
        split = splitting_algebra(4, QQ)
        e2 = elementary_symmetric(2, split)
        assert SymmetricExpansion.from_poly(e2).to_poly() == e2
        assert symmetric_to_elementary(SymmetricExpansion.from_poly(e2)) == chern_algebra(4, QQ).gen("c_2")

    @pytest.mark.parametrize("k", range(1, 7))
    def test_power_sums_agree_with_sympy(self, k):
        split = splitting_algebra(3, QQ)
        power_sum = sum((split.gen(f"t_{i}") ** k for i in (1, 2, 3)), split.zero())
        ours = symmetric_to_elementary(SymmetricExpansion.from_poly(power_sum))

        x = symbols("x1:4")
        expr, remainder, _ = symmetrize(sum(v ** k for v in x), *x, formal=True)
        assert remainder == 0
        text = re.sub(r"s(\d+)", r"c_\1", str(expr.expand()))
        assert ours == parse_poly(text, chern_algebra(3, QQ))

    def test_rejects_non_symmetric_input(self):
        split = splitting_algebra(2, QQ)
        with pytest.raises(NotSymmetricError):
            SymmetricExpansion.from_poly(split.gen("t_1"))
        t1, t2 = split.gen("t_1"), split.gen("t_2")
        with pytest.raises(NotSymmetricError):
            SymmetricExpansion.from_poly(t1 + 2 * t2)


class TestChernClasses:
    def test_sq2_c2_in_bu2(self):
        expansion = power_op_on_chern(2, 2, 1, 2)
        assert expansion.describe() == "Sq^2 c_2 = c_1 c_2"
        assert expansion.is_decomposable

    def test_p1_c2_in_bu3_mod3(self):
        c = chern_algebra(3, GF(3))
        c1, c2, c3 = c.gen("c_1"), c.gen("c_2"), c.gen("c_3")
        expansion = power_op_on_chern(3, 3, 1, 2)
        assert expansion.result == c1 * c1 * c2 - c1 * c3 - 2 * c2 * c2
        assert expansion.coefficient(c2 * c2).value == 1

    def test_top_operation_is_the_square(self):
        c = chern_algebra(3, GF(2))
        assert power_op_on_chern(3, 2, 2, 2).result == c.gen("c_2") ** 2

    def test_operations_above_the_degree_vanish(self):
        assert power_op_on_chern(3, 3, 3, 2).result.is_zero()

    def test_sq0_is_the_identity(self):
        assert power_op_on_chern(3, 2, 0, 3).result == chern_algebra(3, GF(2)).gen("c_3")

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            power_op_on_chern(3, 3, 1, 4)
        with pytest.raises(ValueError):
            power_op_on_chern(3, 4, 1, 2)

    @pytest.mark.parametrize("m,p", list(admissible_cases()))
    def test_coefficient_of_the_witness_term(self, m, p):
        k = (m + 1) // 2
        c = chern_algebra(m, GF(p))
        term = c.gen(f"c_{k}") * c.gen(f"c_{m - k + 1}")
        coefficient = power_op_on_chern(m, p, 1, m - p + 2).coefficient(term)
        expected = -(m + 1) if m % 2 == 0 else -((m + 1) // 2)
        assert coefficient.value == expected % p
        assert coefficient

    @pytest.mark.parametrize("p", [2, 3])
    def test_cartan_formula(self, rng, p):
        c = chern_algebra(3, GF(p))
        for _ in range(10):
            x, y = random_chern_monomial(c, rng), random_chern_monomial(c, rng)
            for k in range(4):
                expected = sum(
                    (chern_operation(x, p, i) * chern_operation(y, p, k - i) for i in range(k + 1)),
                    c.zero(),
                )
                assert chern_operation(x * y, p, k) == expected

    def test_single_class_agrees_with_general_operation(self):
        c = chern_algebra(4, GF(3))
        assert chern_operation(c.gen("c_3"), 3, 1) == power_op_on_chern(4, 3, 1, 3).result

    @pytest.mark.parametrize("m,p,k", [(3, 2, 1), (3, 2, 2), (4, 2, 3), (4, 3, 1), (4, 3, 2), (6, 5, 1)])
    def test_restriction_to_fewer_variables(self, m, p, k):
        smaller = chern_algebra(m - 1, GF(p))
        for j in range(1, m):
            full = power_op_on_chern(m, p, k, j).result
            restricted = substitute(full, {f"c_{m}": smaller.zero()}, smaller)
            assert restricted == power_op_on_chern(m - 1, p, k, j).result


class TestTables:
    @pytest.fixture
    def eiii(self, catalog):
        return catalog.space("EIII").steenrod

    def test_tabled_value(self, eiii):
        ring = eiii.ring
        expansion = table_apply(eiii.table, SteenrodOperation(2, 2), ring.gen("w'"))
        assert str(expansion.result) == "t w'"

    def test_instability(self, eiii):
        ring = eiii.ring
        w = ring.gen("w'")
        assert table_apply(eiii.table, SteenrodOperation(2, 8), w).result == w * w
        assert table_apply(eiii.table, SteenrodOperation(2, 10), w).result.is_zero()
        assert table_apply(eiii.table, SteenrodOperation(2, 0), w).result == w

    def test_missing_entry_is_named(self, eiii):
        ring = eiii.ring
        with pytest.raises(InsufficientDataError, match="Sq\\^1 t"):
            table_apply(eiii.table, SteenrodOperation(2, 2), ring.gen("t") * ring.gen("w'"))

    def test_entries_are_degree_checked(self, eiii):
        ring = eiii.ring
        bad = TableEntry(SteenrodOperation(2, 2), "w'", ring.gen("w'"), "")
        with pytest.raises(DegreeMismatchError):
            SteenrodTable(ring, (bad,))
