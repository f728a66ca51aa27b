"""Tests for the command-line surface: output formats and exit codes."""

import json

import pytest

from braidforms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestH:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "h", "3")
        assert code == 0 and out == "1\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "h", "0", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload == {"schema": "bqf-braid/1", "command": "h", "t": 0, "h": 2}

    def test_excluded_trace(self, capsys):
        code, _, err = run(capsys, "h", "2")
        assert code == 2
        assert "excluded" in err

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "h", "5", "--format", "csv")
        assert code == 0 and out == "t,h\n5,2\n"


class TestForms:
    def test_indefinite_listing(self, capsys):
        code, out, _ = run(capsys, "forms", "3")
        assert code == 0
        assert out.splitlines() == ["-1 1 1", "1 1 -1"]

    def test_definite_both_signs(self, capsys):
        code, out, _ = run(capsys, "forms", "0", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload["discriminant"] == -4
        assert payload["forms"] == [[-1, 0, -1], [1, 0, 1]]


class TestClasses:
    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "classes", "3", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload["h"] == 1
        (cls,) = payload["classes"]
        assert cls["repr"] == [-1, 1, 1]
        assert cls["discriminant"] == 5
        assert cls["cycle"] == [[-1, 1, 1], [1, 1, -1]]
        assert cls["exponent_mod12"] == 0

    def test_definite_has_no_cycle(self, capsys):
        _, out, _ = run(capsys, "classes", "0", "--format", "json")
        for cls in json.loads(out)["classes"]:
            assert "cycle" not in cls


class TestInvariants:
    def test_unknot_word(self, capsys):
        code, out, _ = run(capsys, "invariants", "1 2")
        assert code == 0
        assert "eps = 2" in out
        assert "trace = 1" in out
        assert "alexander = 1" in out
        assert "jones = 1" in out
        assert "special_value = 1" in out

    def test_empty_word(self, capsys):
        code, out, _ = run(capsys, "invariants", "")
        assert code == 0
        assert "eps = 0" in out
        assert "trace = 2" in out
        assert "special_value = 0" in out

    def test_mixed_sign_unknot_word(self, capsys):
        code, out, _ = run(capsys, "invariants", "1 -2")
        assert code == 0
        assert "eps = 0" in out
        assert "trace = 3" in out
        assert "special_value = 1" in out

    def test_trefoil_json(self, capsys):
        code, out, _ = run(capsys, "invariants", "1^3 2", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload["eps"] == 4
        assert payload["alexander"] == "1*q^-1 + -1 + 1*q^1"
        assert payload["jones"] == "1*q^1 + 1*q^3 + -1*q^4"
        assert payload["special_value"] == {"re": -3, "im": 0}

    def test_delta_power_flag(self, capsys):
        _, out, _ = run(capsys, "invariants", "1 2", "--delta-power", "2")
        assert "eps = 8" in out
        code, out, _ = run(capsys, "invariants", "1 2 1", "--delta-power", "-1")
        assert code == 0
        assert "eps = 0" in out and "trace = 2" in out

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "invariants", "1 3")
        assert code == 2
        assert "out of range" in err and "position 2" in err


class TestCounts:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "counts", "3", "0")
        assert code == 0
        assert out.strip() == "t=3 n=0 x_count=1 m=1 p=0"

    def test_residue_mismatch_cell(self, capsys):
        code, out, _ = run(capsys, "counts", "3", "5")
        assert code == 0
        assert out.strip() == "t=3 n=5 x_count=0 m=0 p=0"

    def test_excluded_trace(self, capsys):
        code, _, err = run(capsys, "counts", "2", "0")
        assert code == 2 and "excluded" in err

    def test_csv(self, capsys):
        code, out, _ = run(capsys, "counts", "3", "0", "--format", "csv")
        assert out == "t,n,x_count,m,p\n3,0,1,1,0\n"


class TestM:
    def test_json_wire_names(self, capsys):
        code, out, _ = run(capsys, "m", "20", "1", "--format", "json")
        payload = json.loads(out)
        assert code == 0
        assert payload["m_prime"] == 1 and payload["m"] == 1
        (witness,) = payload["witnesses"]
        assert witness["family"] == "family-iii"
        assert len(witness["words"]) == 2

    def test_unknot_cell(self, capsys):
        _, out, _ = run(capsys, "m", "3", "0", "--format", "json")
        payload = json.loads(out)
        assert payload["m_prime"] == 0 and payload["m"] == 1
        assert payload["witnesses"][0]["words"] == ["1 -2"]


class TestCensus:
    def test_small_cell(self, capsys):
        code, out, _ = run(capsys, "census", "3", "0", "--max-len", "4")
        assert code == 0
        assert "census=1" in out and "x_count=1" in out and "gap=0" in out


class TestVerify:
    def test_small_range_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--tmin", "3", "--tmax", "8")
        assert code == 0
        assert "all pass" in out

    def test_skips_excluded(self, capsys):
        code, out, _ = run(capsys, "verify", "--tmin", "2", "--tmax", "2")
        assert code == 0
        assert "skipped" in out

    def test_negative_range(self, capsys):
        code, out, _ = run(capsys, "verify", "--tmin", "-5", "--tmax", "-3")
        assert code == 0 and "all pass" in out

    def test_empty_range(self, capsys):
        code, _, err = run(capsys, "verify", "--tmin", "5", "--tmax", "3")
        assert code == 2 and "empty" in err

    def test_csv_columns(self, capsys):
        code, out, _ = run(capsys, "verify", "--tmin", "3", "--tmax", "3",
                           "--format", "csv")
        lines = out.splitlines()
        assert lines[0] == "t,n,x_count,m,p,h_lhs,window_rhs,pass"
        assert len(lines) == 13
        assert all(line.endswith(",1,1,true") for line in lines[1:])

    def test_explicit_window_start(self, capsys):
        code, out, _ = run(capsys, "verify", "--tmin", "3", "--tmax", "4",
                           "--n", "0", "--format", "json")
        payload = json.loads(out)
        assert code == 0 and payload["pass"] is True
        assert [r["n"] for r in payload["results"]] == [0, 0]


class TestJsonRoundTrip:
    @pytest.mark.parametrize("argv", [
        ("h", "3"),
        ("forms", "5"),
        ("classes", "4"),
        ("invariants", "1^2 -2"),
        ("counts", "3", "0"),
        ("m", "20", "1"),
        ("census", "3", "0", "--max-len", "3"),
        ("verify", "--tmin", "3", "--tmax", "4"),
    ])
    def test_byte_identical_reserialization(self, capsys, argv):
        code, out, _ = run(capsys, *argv, "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert json.dumps(payload, indent=2) + "\n" == out
        assert payload["schema"] == "bqf-braid/1"
