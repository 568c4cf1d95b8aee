"""Command-line interface: output, exit codes and golden files."""

import json

import pytest

from main import EXIT_ERROR, EXIT_OK, EXIT_USAGE, main


class TestModelCommand:
    def test_minimal_model_golden(self, capsys, golden):
        assert main(["model", "--space", "CI", "--n", "4"]) == EXIT_OK
        assert capsys.readouterr().out == golden("model_ci4_minimal.txt")

    def test_fiber_stage(self, capsys):
        assert main(["model", "--space", "ci", "--n", "4", "--stage", "fiber"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("model: CI(4) [fiber]\n")
        assert "  d r_1 = -2 c_2 + c_1^2\n" in out

    def test_json_output_to_file(self, tmp_path):
        target = tmp_path / "out" / "evii.json"
        assert main(["model", "--space", "EVII", "--format", "json", "--output", str(target)]) == EXIT_OK
        data = json.loads(target.read_text(encoding="utf-8"))
        assert data["name"] == "EVII"
        assert sorted(g["degree"] for g in data["generators"]) == [2, 10, 18, 19, 27, 35]


class TestSteenrodCommand:
    def test_golden(self, capsys, golden):
        assert main(["steenrod", "--m", "2", "--p", "2", "--op", "sq", "--k", "1", "--class", "2"]) == EXIT_OK
        assert capsys.readouterr().out == golden("steenrod_bu2.txt")

    def test_odd_prime(self, capsys):
        assert main(["steenrod", "--m", "3", "--p", "3", "--op", "p", "--class", "2"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("P^1 c_2 = ")

    def test_operation_and_prime_must_agree(self):
        assert main(["steenrod", "--m", "3", "--p", "3", "--op", "sq", "--class", "2"]) == EXIT_USAGE
        assert main(["steenrod", "--m", "3", "--p", "2", "--op", "p", "--class", "2"]) == EXIT_USAGE

    def test_composite_prime_is_an_error(self):
        assert main(["steenrod", "--m", "3", "--p", "4", "--op", "p", "--class", "2"]) == EXIT_ERROR


class TestPrimesCommand:
    def test_interval_and_choice(self, capsys):
        assert main(["primes", "--m", "9"]) == EXIT_OK
        first, second = capsys.readouterr().out.splitlines()
        assert first == "primes in (9/2, 9]: 5, 7"
        assert second.startswith("p = 7 (")
        assert second.endswith("k = 5, alternates: none")

    def test_ramanujan_check(self, capsys):
        assert main(["primes", "--check-r2", "--limit", "2000"]) == EXIT_OK
        assert capsys.readouterr().out == "OK\n"

    def test_needs_an_argument(self):
        assert main(["primes"]) == EXIT_USAGE


class TestClassifyCommand:
    def test_single_space(self, capsys):
        assert main(["classify", "--space", "AIII", "--m", "2", "--n", "3"]) == EXIT_OK
        assert capsys.readouterr().out.startswith("space: AIII(2,3)")

    def test_projective_three_space_is_commutative(self, capsys):
        assert main(["classify", "--space", "CPn", "--n", "3"]) == EXIT_OK
        assert "verdict: HomotopyCommutative (route: known_result)" in capsys.readouterr().out

    def test_flag_json(self, capsys):
        assert main(["classify", "--space", "FLAG", "--type", "A", "--rank", "3", "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["nilpotency"]["lower"] == data["nilpotency"]["upper"] == 2
        assert data["parameters"] == {"type": "A", "rank": 3}

    def test_output_is_byte_identical(self, capsys):
        argv = ["classify", "--space", "EVII", "--format", "json"]
        main(argv)
        first = capsys.readouterr().out
        main(argv)
        assert capsys.readouterr().out == first

    def test_all_spaces_with_export(self, tmp_path, capsys):
        code = main(["classify", "--all", "--max-param", "3", "--jobs", "2", "--export-dir", str(tmp_path)])
        assert code == EXIT_OK
        assert "space(s); " in capsys.readouterr().out
        assert (tmp_path / "summary.csv").exists()
        assert (tmp_path / "spaces" / "EVII.txt").exists()

    def test_all_excludes_selectors(self):
        assert main(["classify", "--all", "--space", "CI"]) == EXIT_USAGE

    @pytest.mark.parametrize("argv", [
        ["classify", "--space", "G2"],
        ["classify", "--space", "CI", "--n", "2"],
        ["classify", "--space", "FLAG", "--type", "D", "--rank", "1"],
        ["classify"],
    ])
    def test_selector_errors(self, argv):
        assert main(argv) == EXIT_USAGE

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as exc:
            main(["classify", "--bogus"])
        assert exc.value.code == EXIT_USAGE

    def test_prime_cap_applies_to_one_call_only(self):
        argv = ["classify", "--space", "AIII", "--m", "7", "--n", "7"]
        assert main(["--prime-cap", "5"] + argv) == EXIT_ERROR
        assert main(argv) == EXIT_OK

    def test_missing_catalog(self, tmp_path):
        argv = ["--catalog", str(tmp_path / "missing.json"), "classify", "--space", "EIII"]
        assert main(argv) == EXIT_ERROR


class TestCatalogCommand:
    def test_list(self, capsys):
        assert main(["catalog", "list"]) == EXIT_OK
        out = capsys.readouterr().out
        assert out.startswith("catalog 1.0.0 ")
        assert "  CI: " in out
        assert "  FLAG: " in out and "type in {A,B,C,D}" in out
        assert "typo ledger:\n  EVII x_20: -2*u*v (degree 12, expected 20)\n" in out
