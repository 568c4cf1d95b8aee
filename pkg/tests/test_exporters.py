"""Text and JSON reports, the summary table and the ZIP bundle."""

import io
import json
import os
import zipfile

import jsonschema
import pandas as pd
import pytest

from criteria import classify
from exporters import EXPORTER_REGISTRY, JsonExporter, TextExporter, file_stem, witness_summary
from exporters.base import SUMMARY_COLUMNS

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "..", "data", "certificate.schema.json")

SPACES = [
    ("AIII", {"m": 2, "n": 3}),
    ("CI", {"n": 4}),
    ("FLAG", {"type": "A", "rank": 2}),
    ("CPn", {"n": 3}),
    ("EVII", {}),
]


@pytest.fixture(scope="module")
def certificates(catalog):
    return [classify(catalog.space(family, **params)) for family, params in SPACES]


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA_PATH, encoding="utf-8") as f:
        return json.load(f)


class TestHelpers:
    def test_file_stem(self, certificates):
        assert [file_stem(c) for c in certificates] == ["AIII_2_3", "CI_4", "FLAG_A_2", "CPn_3", "EVII"]

    def test_witness_summary(self, certificates):
        aiii, ci, _, cpn, evii = certificates
        assert witness_summary(aiii) == "Sq^2 c_2 = c_1 c_2"
        assert witness_summary(ci).startswith("d r_3 ~ ")
        assert witness_summary(cpn) == "facts: ganea-cpn"
        assert witness_summary(evii) == "d y_19 ~ v^2"

    def test_registry(self):
        assert EXPORTER_REGISTRY == {"text": TextExporter, "json": JsonExporter}


class TestSummaryFrame:
    def test_columns_and_rows(self, certificates):
        frame = TextExporter(certificates).summary_frame()
        assert list(frame.columns) == SUMMARY_COLUMNS
        assert frame["space"].tolist() == ["AIII(2,3)", "CI(4)", "FLAG(A,2)", "CPn(3)", "EVII"]
        assert frame["verdict"].tolist()[3] == "HomotopyCommutative"

    def test_nilpotency_columns_are_nullable_integers(self, certificates):
        frame = TextExporter(certificates).summary_frame()
        assert str(frame["honil_lower"].dtype) == "Int64"
        assert frame.loc[2, "honil_lower"] == 2
        assert frame.loc[2, "honil_upper"] == 2
        assert pd.isna(frame.loc[0, "honil_lower"])

    def test_repairs_are_counted(self, certificates):
        frame = TextExporter(certificates).summary_frame()
        assert frame["repairs"].tolist() == [0, 0, 0, 0, 2]

    def test_empty_run(self):
        frame = TextExporter([]).summary_frame()
        assert frame.empty
        assert list(frame.columns) == SUMMARY_COLUMNS


class TestTextExporter:
    def test_certificate_sections(self, certificates):
        text = TextExporter(certificates).render_certificate(certificates[0])
        assert text.startswith("space: AIII(2,3)  U(5)/U(2)xU(3)\n")
        assert "verdict: NotHomotopyCommutative (route: steenrod)" in text
        assert "  term c_1 c_2 with coefficient 1 mod 2, |a| = 2, |b| = 4" in text
        assert "conditions:\n  spherical-a: checked" in text

    def test_nilpotency_and_repairs(self, certificates):
        exporter = TextExporter(certificates)
        assert "homotopy nilpotency: 2 <= honil <= 2" in exporter.render_certificate(certificates[2])
        evii = exporter.render_certificate(certificates[4])
        assert "  EVII x_20: dropped -2*u*v (degree 12, expected 20)" in evii
        assert "  d y_27 ~ -2 v w" in evii

    def test_report_footer(self, certificates):
        report = TextExporter(certificates).render_report()
        assert report.endswith("5 space(s); HomotopyCommutative: 1, NotHomotopyCommutative: 4\n")
        assert TextExporter([]).render_report() == "0 space(s)\n"

    def test_output_is_deterministic(self, certificates):
        assert TextExporter(certificates).render_report() == TextExporter(certificates).render_report()


class TestJsonExporter:
    def test_certificates_match_the_schema(self, certificates, schema):
        exporter = JsonExporter(certificates)
        for cert in certificates:
            jsonschema.validate(json.loads(exporter.render_certificate(cert)), schema)

    def test_report_summary(self, certificates):
        report = json.loads(JsonExporter(certificates).render_report())
        assert report["summary"] == {
            "spaces": 5,
            "verdicts": {"HomotopyCommutative": 1, "NotHomotopyCommutative": 4},
            "unexpected": [],
        }
        assert [c["space"] for c in report["certificates"]] == [c.space for c in certificates]


class TestBundle:
    def test_export_keys(self, certificates):
        files = JsonExporter(certificates).export()
        assert set(files) == {
            "report.json",
            "summary.csv",
            "spaces/AIII_2_3.json",
            "spaces/CI_4.json",
            "spaces/FLAG_A_2.json",
            "spaces/CPn_3.json",
            "spaces/EVII.json",
        }
        assert isinstance(files["summary.csv"], pd.DataFrame)

    def test_zip_contents(self, certificates):
        payload = TextExporter(certificates).export_zip()
        with zipfile.ZipFile(io.BytesIO(payload)) as zf:
            names = set(zf.namelist())
            assert "report.txt" in names and "spaces/CI_4.txt" in names
            summary = pd.read_csv(io.BytesIO(zf.read("summary.csv")))
        assert summary["space"].tolist()[1] == "CI(4)"
