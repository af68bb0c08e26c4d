"""Command-line surface: subcommands, exit codes, and stable JSON output."""
import json

import pytest

from g2zeta.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestSubcommands:
    def test_unfold_cosets(self, capsys):
        code, out = run(capsys, "unfold-cosets")
        assert code == 0
        assert "double cosets" in out and "baba" in out and "a+b" in out

    def test_verify_group(self, capsys, basis):
        code, out = run(capsys, "verify-group", "--samples", "2", "--seed", "5")
        assert code == 0
        assert "all identities hold" in out

    def test_verify_lemmas(self, capsys):
        code, out = run(capsys, "verify-lemmas", "--nmax", "2")
        assert code == 0
        assert "all equal" in out

    def test_closed_form_text(self, capsys):
        code, out = run(capsys, "closed-form", "--eps", "-1")
        assert code == 0
        assert "EQUAL (zero cross-multiplication residue)" in out
        assert "local factor" in out

    def test_oracle(self, capsys):
        code, out = run(capsys, "oracle", "--points", "2", "--nmax", "80")
        assert code == 0
        assert "all comparisons pass" in out


class TestJsonOutput:
    def test_verify_group_json_schema(self, capsys, basis):
        code, out = run(capsys, "verify-group", "--samples", "2", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert all(item["passed"] for item in payload["identities"])

    def test_oracle_json_deterministic(self, capsys):
        code1, out1 = run(capsys, "oracle", "--points", "2", "--nmax", "60",
                          "--seed", "9", "--json")
        code2, out2 = run(capsys, "oracle", "--points", "2", "--nmax", "60",
                          "--seed", "9", "--json")
        assert code1 == code2 == 0
        assert out1 == out2
        assert json.loads(out1)["passed"] is True

    def test_closed_form_json(self, capsys):
        code, out = run(capsys, "closed-form", "--eps", "sym", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["residue"] == ""


class TestAllCommand:
    def test_all_json_green(self, capsys, basis):
        code, out = run(capsys, "all", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert all(section["passed"] for section in payload["sections"].values())


class TestExitCodes:
    def test_unknown_flag_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["oracle", "--bogus"])
        assert exc.value.code == 2

    def test_missing_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2
