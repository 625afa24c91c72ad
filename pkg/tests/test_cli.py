import io
import json

import pytest

from ggrad.cli import OutputRecord, run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestDecompose:
    def test_text(self):
        code, out, _ = call("decompose", "--group", "so", "--n", "7", "--weight", "1,1,0")
        assert code == 0
        assert "SO(7)" in out and "105" in out

    def test_json_weights(self):
        code, out, _ = call("decompose", "--group", "so", "--n", "7", "--weight", "1,1,0", "--json")
        assert code == 0
        data = json.loads(out)
        assert [t["conformal_weight"] for t in data["targets"]] == ["-5", "-2", "1"]
        assert list(data) == ["group", "param", "lambda", "targets", "notes"]

    @pytest.mark.parametrize("argv", [
        ("--group", "spin", "--n", "7", "--weight", "3/2,1/2,1/2"),
        ("--group", "su", "--m", "3", "--weight", "2,1,1"),
        ("--group", "g2", "--weight", "2,1"),
        ("--group", "sp1sp", "--m", "2", "--weight", "1,1,0"),
    ])
    def test_json_round_trip(self, argv):
        code, out, _ = call("decompose", *argv, "--json")
        assert code == 0
        rec = OutputRecord.from_json(out)
        assert rec.to_json() == out.rstrip("\n")
        assert all(isinstance(c, str) for t in rec.targets for c in t.epsilon + t.mu + [t.conformal_weight])

    def test_su_note(self):
        code, out, _ = call("decompose", "--group", "su", "--m", "3", "--weight", "2,1,1")
        assert code == 0 and "normal form" in out


class TestErrors:
    def test_bad_coordinate(self):
        code, _, err = call("decompose", "--group", "so", "--n", "7", "--weight", "1,x,0")
        assert code == 1 and "coordinate 2" in err

    def test_not_dominant(self):
        code, _, err = call("decompose", "--group", "so", "--n", "7", "--weight", "1,2,0")
        assert code == 1 and "λ1 ≥ λ2" in err

    def test_missing_size(self):
        code, _, err = call("decompose", "--group", "so", "--weight", "1,0,0")
        assert code == 1 and "--n" in err

    def test_unknown_command(self, capsys):
        assert call("frobnicate")[0] == 1

    def test_wrong_length(self):
        assert call("decompose", "--group", "so", "--n", "7", "--weight", "1,0")[0] == 1

    def test_not_relevant(self):
        code, _, err = call("weight", "--group", "so", "--n", "7", "--weight", "1,0,0", "--epsilon", "0,0,0")
        assert code == 1 and "not relevant" in err


class TestWeight:
    def test_both_paths(self):
        code, out, _ = call("weight", "--group", "spin7", "--weight", "1,1,1", "--epsilon", "1/2,1/2,1/2", "--json")
        data = json.loads(out)
        assert code == 0
        assert data["casimir"] == data["closed_form"] == "3/2"
        assert data["agree"] is True
        assert data["label"] == "w_{1,+}"


class TestTable:
    def test_spin7_verified(self):
        code, out, _ = call("table", "--group", "spin7", "--sweep", "2")
        assert code == 0
        assert "FAILED" not in out
        assert out.strip().endswith("cells VERIFIED")

    def test_env_sweep(self, monkeypatch):
        monkeypatch.setenv("GGRAD_MAX_COORD", "1")
        code, out, _ = call("table", "--group", "g2", "--json")
        data = json.loads(out)
        assert code == 0 and data["sweep"] == 1 and data["failed"] == 0

    def test_bad_env(self, monkeypatch):
        monkeypatch.setenv("GGRAD_MAX_COORD", "lots")
        assert call("table", "--group", "g2")[0] == 1


class TestCatalog:
    def test_dirac(self):
        code, out, _ = call("catalog", "dirac", "--n", "7", "--json")
        assert code == 0 and json.loads(out)["conformal_weight"] == "-3"

    def test_text_with_yamabe_note(self):
        code, out, _ = call("catalog", "exterior-derivative", "--n", "6", "--p", "2")
        assert code == 0 and "weight  : -2" in out and "scalar curvature" in out

    def test_out_of_range(self):
        code, _, err = call("catalog", "exterior-derivative", "--n", "6", "--p", "9")
        assert code == 1 and "p <=" in err


class TestCheck:
    def test_small(self):
        code, out, _ = call("check", "--max-coord", "1", "--max-rank", "2", "--json")
        data = json.loads(out)
        assert code == 0
        assert all(v["failed"] == 0 for v in data["checks"].values())
        assert data["checks"]["matrix"]["passed"] == 14
