"""The catalog file, family selectors and Weyl invariants."""

import copy
import json

import pytest

from algebra import substitute
from families import (
    CATALOG_ENV,
    CATALOG_PATH,
    FAMILY_REGISTRY,
    Catalog,
    CatalogError,
    Family,
    Route,
    SelectorError,
    default_catalog_path,
    load,
    weyl_group_generators,
    weyl_invariants,
)


@pytest.fixture
def raw():
    with open(CATALOG_PATH, encoding="utf-8") as f:
        return json.load(f)


class TestCatalogFile:
    def test_loads_every_family(self, catalog):
        assert set(catalog.families) == set(FAMILY_REGISTRY)
        assert catalog.version.count(".") == 2

    def test_every_fact_is_cited(self, catalog):
        assert catalog.facts
        for fact in catalog.facts.values():
            assert fact.citation.strip()
            assert fact.role.strip()

    def test_ledger(self, catalog):
        assert [(e.family, e.polynomial, e.term) for e in catalog.ledger] == [
            ("EVII", "x_20", "-2*u*v"),
            ("EVII", "x_28", "-6*u^6*v"),
        ]

    def test_schema_violation(self, raw):
        del raw["facts"]
        with pytest.raises(CatalogError):
            Catalog.from_dict(raw)

    def test_unknown_fact_reference(self, raw):
        raw["families"]["CI"]["facts"].append("no-such-fact")
        with pytest.raises(CatalogError, match="no-such-fact"):
            Catalog.from_dict(raw)

    def test_duplicate_fact(self, raw):
        raw["facts"].append(copy.deepcopy(raw["facts"][0]))
        with pytest.raises(CatalogError, match="Duplicate"):
            Catalog.from_dict(raw)

    def test_blank_citation(self, raw):
        raw["facts"][0]["citation"] = "   "
        with pytest.raises(CatalogError):
            Catalog.from_dict(raw)

    def test_untracked_inhomogeneous_term(self, raw):
        raw["families"]["EVII"]["pullback"]["x_20"] = "v^2 - 3*u*v"
        with pytest.raises(CatalogError, match="untracked"):
            Catalog.from_dict(raw).space("EVII")

    def test_missing_file(self, tmp_path):
        with pytest.raises(CatalogError, match="not found"):
            Catalog.from_file(str(tmp_path / "missing.json"))

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(CatalogError):
            Catalog.from_file(str(path))

    def test_environment_override(self, monkeypatch, tmp_path):
        monkeypatch.setenv(CATALOG_ENV, str(tmp_path / "other.json"))
        assert default_catalog_path() == str(tmp_path / "other.json")
        monkeypatch.delenv(CATALOG_ENV)
        assert default_catalog_path() == CATALOG_PATH


class TestSelectors:
    def test_family_names_are_case_insensitive(self, catalog):
        assert catalog.family("cpn").family is Family.CPN
        assert catalog.family("evii").name == "EVII"

    def test_unknown_family(self, catalog):
        with pytest.raises(CatalogError):
            catalog.family("G2")

    def test_missing_parameter(self, catalog):
        with pytest.raises(SelectorError, match="needs parameter"):
            catalog.space("CI")

    def test_extra_parameter(self, catalog):
        with pytest.raises(SelectorError, match="takes no parameter"):
            catalog.space("EIII", n=3)

    def test_out_of_range(self, catalog):
        with pytest.raises(SelectorError):
            catalog.space("CI", n=3)
        with pytest.raises(SelectorError):
            catalog.space("AIII", m=0, n=2)
        with pytest.raises(SelectorError):
            catalog.space("FLAG", type="D", rank=1)
        with pytest.raises(SelectorError):
            catalog.space("FLAG", type="G", rank=2)

    def test_non_integer(self, catalog):
        with pytest.raises(SelectorError, match="integer"):
            catalog.space("CI", n="four")

    def test_flag_type_is_normalized(self, catalog):
        assert catalog.space("FLAG", type="c", rank=2).label == "FLAG(C,2)"


class TestSpaces:
    def test_grassmannian_symmetry(self, catalog):
        spec = catalog.space("AIII", m=3, n=2)
        assert spec.label == "AIII(2,3)"
        assert "grassmannian-symmetry" in [f.id for f in spec.facts]
        assert spec.notes[0] == "G_(3,2) is identified with G_(2,3)"

    def test_grassmannian_of_lines_is_projective_space(self, catalog):
        spec = catalog.space("AIII", m=1, n=3)
        assert spec.route is Route.KNOWN_RESULT
        assert spec.expected == "HomotopyCommutative"
        assert spec.label == "AIII(1,3)"

    def test_aiii_prime_choice(self, catalog):
        spec = catalog.space("AIII", m=5, n=5)
        assert spec.steenrod.prime == 5
        assert spec.steenrod.label == "p=5: P^1 c_2"
        assert spec.steenrod.alternates == ()
        assert catalog.space("AIII", m=2, n=4).steenrod.label == "p=2: Sq^2 c_2"

    @pytest.mark.parametrize("n,known,recipe", [
        (3, False, True),
        (4, True, False),
        (5, True, True),
        (7, False, True),
        (9, True, True),
    ])
    def test_quadric_routes(self, catalog, n, known, recipe):
        spec = catalog.space("BDI", n=n)
        assert (spec.known is not None) == known
        assert (spec.steenrod is not None) == recipe

    def test_enumeration_order(self, catalog):
        specs = catalog.spaces(4)
        labels = [s.label for s in specs]
        assert len(labels) == 31
        assert labels[:3] == ["AIII(2,2)", "AIII(2,3)", "AIII(2,4)"]
        assert labels[-1] == "CPn(4)"
        assert len(set(labels)) == len(labels)

    def test_family_filter(self, catalog):
        labels = [s.label for s in catalog.spaces(5, families=["ci", "DIII"])]
        assert labels == ["CI(4)", "CI(5)", "DIII(4)", "DIII(5)"]

    def test_load(self):
        assert [s.label for s in load(max_param=3, families=["CPn"])] == ["CPn(1)", "CPn(2)", "CPn(3)"]


class TestWeylInvariants:
    @pytest.mark.parametrize("lie_type,rank", [
        ("A", 1), ("A", 3), ("B", 2), ("B", 3), ("C", 3), ("D", 2), ("D", 4),
    ])
    def test_invariants_are_fixed_by_the_weyl_group(self, lie_type, rank):
        fiber = weyl_invariants(lie_type, rank)
        for move in weyl_group_generators(lie_type, rank):
            for _, image in fiber.pullback:
                assert substitute(image, move, image.algebra) == image

    def test_degrees(self):
        fiber = weyl_invariants("D", 3)
        assert [g.degree for g in fiber.target.generators] == [4, 8, 6]
        assert [g.degree for g in weyl_invariants("A", 2).target.generators] == [2, 4, 6]

    def test_unsupported_types(self):
        with pytest.raises(NotImplementedError):
            weyl_invariants("E", 6)
        with pytest.raises(ValueError):
            weyl_invariants("D", 1)
