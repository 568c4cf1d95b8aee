"""Fiber models, minimization and quadratic-differential witnesses."""

import dataclasses

import pytest

from algebra import GradedAlgebra
from criteria import Verdict, build_fiber_model, minimal_model, rational_route
from sullivan import (
    NonMinimalModelError,
    NotPureModelError,
    SullivanModel,
    check_d_squared,
    d2_witness,
    d2_witnesses,
    fiber_model,
    minimize,
)


class TestSullivanModel:
    def test_differential_must_raise_degree_by_one(self):
        algebra = GradedAlgebra.free([("a", 2), ("y", 3)])
        with pytest.raises(ValueError):
            SullivanModel.build(algebra, {"y": algebra.gen("a")})

    def test_d_squared_detects_a_broken_model(self):
        algebra = GradedAlgebra.free([("a", 2), ("y", 3), ("z", 4)])
        a, y = algebra.gen("a"), algebra.gen("y")
        model = SullivanModel.build(algebra, {"y": a * a, "z": a * y})
        assert not check_d_squared(model)

    def test_derivation_rule(self, catalog):
        model = build_fiber_model(catalog.space("CI", n=4))
        r1, r2 = model.algebra.gen("r_1"), model.algebra.gen("r_2")
        expected = model.d("r_1") * r2 - r1 * model.d("r_2")
        assert model.apply(r1 * r2) == expected

    def test_minimize_needs_a_pure_model(self):
        algebra = GradedAlgebra.free([("a", 2), ("x", 3)])
        model = SullivanModel.build(algebra, {"a": algebra.gen("x")})
        with pytest.raises(NotPureModelError):
            minimize(model)

    def test_witness_needs_a_minimal_model(self, catalog):
        model = build_fiber_model(catalog.space("CI", n=4))
        assert not model.is_minimal()
        with pytest.raises(NonMinimalModelError):
            d2_witnesses(model)


class TestLagrangianGrassmannians:
    def test_ci4_minimal_model(self, catalog):
        minimal = minimal_model(catalog.space("CI", n=4))
        assert minimal.algebra.names == ["c_1", "c_3", "r_3", "r_4"]
        assert minimal.eliminated == (("c_2", "r_1"), ("c_4", "r_2"))
        assert str(minimal.d("r_3")) == "c_3^2 - c_1^3 c_3 + 1/8 c_1^6"
        assert d2_witness(minimal).generator.name == "r_3"

    @pytest.mark.parametrize("n", range(4, 9))
    def test_quadratic_parts_are_odd_chern_products(self, catalog, n):
        minimal = minimal_model(catalog.space("CI", n=n))
        algebra = minimal.algebra
        survivors = [i for i in range(1, n + 1) if 2 * i > n]
        assert algebra.names == [f"c_{j}" for j in range(1, n + 1, 2)] + [f"r_{i}" for i in survivors]

        def c(j):
            return algebra.gen(f"c_{j}") if j <= n else algebra.zero()

        for i in survivors:
            expected = algebra.zero()
            for k in range(i):
                expected = expected + c(2 * k + 1) * c(2 * (i - 1 - k) + 1)
            assert minimal.quadratic_part(f"r_{i}") == expected.scale((-1) ** (i + 1))
        assert d2_witnesses(minimal)

    def test_fiber_model_generators(self, catalog):
        spec = catalog.space("CI", n=4)
        fiber = spec.fiber
        model = fiber_model(fiber.base, fiber.target, fiber.pullback_map, fiber.fiber_name_map, spec.label)
        assert [(g.name, g.degree) for g in model.generators[4:]] == [
            ("r_1", 3), ("r_2", 7), ("r_3", 11), ("r_4", 15),
        ]
        assert str(model.d("r_1")) == "-2 c_2 + c_1^2"

    def test_scaling_the_pullback(self, catalog):
        spec = catalog.space("CI", n=5)
        scaled = dataclasses.replace(spec, fiber=spec.fiber.scaled(3))
        assert minimal_model(scaled).matches(minimal_model(spec))


class TestOrthogonalComplexStructures:
    @pytest.mark.parametrize("n", range(4, 9))
    def test_matches_lagrangian_grassmannian_of_lower_rank(self, catalog, n):
        diii = minimal_model(catalog.space("DIII", n=n))
        ci = minimal_model(catalog.family("CI").build({"n": n - 1}))
        assert (f"c_{n}", "r_e") in diii.eliminated
        assert diii.matches(ci)

    def test_euler_pair_goes_first_at_equal_degree(self, catalog):
        diii = minimal_model(catalog.space("DIII", n=4))
        assert diii.eliminated == (("c_2", "r_1"), ("c_4", "r_e"))
        assert "r_2" in diii.algebra


class TestEVII:
    def test_repairs_and_witnesses(self, catalog):
        spec = catalog.space("EVII")
        assert [(r.polynomial, r.term, r.degree) for r in spec.repairs] == [
            ("x_20", "-2*u*v", 12),
            ("x_28", "-6*u^6*v", 22),
        ]
        minimal = minimal_model(spec)
        assert sorted(g.degree for g in minimal.generators) == [2, 10, 18, 19, 27, 35]
        witnesses = d2_witnesses(minimal)
        assert [(w.generator.name, str(w.quadratic_part)) for w in witnesses] == [
            ("y_19", "v^2"),
            ("y_27", "-2 v w"),
            ("y_35", "w^2"),
        ]


class TestTieBreaking:
    @pytest.mark.parametrize("family,params", [
        ("FLAG", {"type": "A", "rank": 3}),
        ("FLAG", {"type": "D", "rank": 3}),
        ("CI", {"n": 5}),
        ("EVII", {}),
    ])
    def test_generator_degrees_do_not_depend_on_tie_order(self, catalog, family, params):
        spec = catalog.space(family, **params)
        forward = minimal_model(spec)
        backward = minimal_model(spec, reverse_ties=True)
        assert sorted(g.degree for g in forward.generators) == sorted(g.degree for g in backward.generators)
        assert bool(d2_witnesses(forward)) == bool(d2_witnesses(backward))

    def test_flag_type_a_eliminates_a_torus_variable(self, catalog):
        spec = catalog.space("FLAG", type="A", rank=2)
        assert minimal_model(spec).eliminated[0] == ("t_1", "y_1")
        assert minimal_model(spec, reverse_ties=True).eliminated[0] == ("t_3", "y_1")


class TestDSquared:
    def test_catalog_fiber_and_minimal_models(self, catalog, rng):
        specs = [s for s in catalog.spaces(4) if s.fiber is not None]
        assert {s.family.value for s in specs} >= {"CI", "DIII", "EVII", "FLAG", "CPn"}
        for spec in specs:
            fiber = spec.fiber.scaled(rng.randint(1, 5))
            model = fiber_model(fiber.base, fiber.target, fiber.pullback_map, fiber.fiber_name_map, spec.label)
            assert check_d_squared(model), spec.label
            assert check_d_squared(minimize(model, reverse_ties=rng.random() < 0.5)), spec.label


class TestNegativeCases:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_projective_space_has_a_quadratic_part_only_for_the_sphere(self, catalog, n):
        spec = catalog.space("CPn", n=n)
        assert (d2_witness(minimal_model(spec)) is not None) == (n == 1)
        cert = rational_route(spec)
        if n == 1:
            assert cert.verdict is Verdict.NOT_HOMOTOPY_COMMUTATIVE
            assert cert.witness is not None
        else:
            assert cert.verdict is Verdict.INCONCLUSIVE
            assert cert.failed_condition == "quadratic-part"
            assert cert.witness is None

    def test_lagrangian_grassmannian_of_rank_two(self, catalog):
        spec = catalog.family("CI").build({"n": 2})
        assert d2_witness(minimal_model(spec)) is None
        cert = rational_route(spec)
        assert cert.verdict is Verdict.INCONCLUSIVE
        assert cert.failed_condition == "quadratic-part"

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_lagrangian_grassmannians_from_rank_three(self, catalog, n):
        cert = rational_route(catalog.family("CI").build({"n": n}))
        assert cert.verdict is Verdict.NOT_HOMOTOPY_COMMUTATIVE
