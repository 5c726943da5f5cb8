import json
import subprocess
import sys

import pytest

from gammaq.arquiver import from_json, to_json
from gammaq.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


class TestGamma:
    def test_ascii(self, capsys):
        code, out, _ = run(["gamma", "--n", "5", "--orient", "><>>", "--format", "ascii"], capsys)
        assert code == 0
        assert out.splitlines()[4].split()[1:] == ["[2]", "[1,5]", "[3,4]"]

    def test_json_round_trip(self, capsys):
        code, out, _ = run(["gamma", "--n", "5", "--orient", "><>>"], capsys)
        assert code == 0
        text = out.strip()
        assert to_json(from_json(text)) == text

    def test_aliases(self, capsys):
        _, a, _ = run(["gamma", "--n", "5", "--orient", "RLRR"], capsys)
        _, b, _ = run(["gamma", "--n", "5", "--orient", "><>>"], capsys)
        assert a == b

    def test_dot(self, capsys):
        code, out, _ = run(["gamma", "--n", "3", "--orient", "<<", "--format", "dot"], capsys)
        assert code == 0 and out.startswith("digraph")

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "g.json"
        code, out, _ = run(["gamma", "--n", "2", "--orient", ">", "--output", str(path)], capsys)
        assert code == 0 and out == ""
        assert json.loads(path.read_text())["n"] == 2

    @pytest.mark.parametrize(
        "argv",
        [
            ["gamma", "--n", "0"],
            ["gamma", "--n", "3", "--orient", ">"],
            ["gamma", "--n", "3", "--orient", ">x"],
            ["gamma", "--n", "3", "--bogus"],
            ["gamma", "--n", "3", "--format", "png"],
            ["nonsense"],
        ],
    )
    def test_usage_errors(self, argv, capsys):
        code, _, err = run(argv, capsys)
        assert code == 2 and err

    def test_deterministic(self, capsys):
        outs = {run(["gamma", "--n", "6", "--orient", "<><>>"], capsys)[1] for _ in range(3)}
        assert len(outs) == 1


class TestWord:
    def test_l(self, capsys):
        assert run(["word", "--n", "5", "--orient", "><>>", "--reading", "L"], capsys)[1].strip() == (
            "1,3,2,1,4,3,2,1,5,4,3,2,1,5,4"
        )

    def test_u(self, capsys):
        assert run(["word", "--n", "5", "--orient", "><>>", "--reading", "U"], capsys)[1].strip() == (
            "3,4,5,1,2,3,4,5,1,2,3,4,1,2,1"
        )

    def test_trivial(self, capsys):
        assert run(["word", "--n", "1"], capsys)[1].strip() == "1"

    def test_json(self, capsys):
        obj = json.loads(run(["word", "--n", "2", "--orient", ">", "--format", "json"], capsys)[1])
        assert obj["word"] == [1, 2, 1] and len(obj["order"]) == 3


class TestPairs:
    def test_listing(self, capsys):
        code, out, _ = run(["pairs", "--n", "5", "--orient", "><>>", "--gamma", "1,5"], capsys)
        lines = out.strip().splitlines()
        assert code == 0 and len(lines) == 4
        assert sum("ray=upper" in l for l in lines) == 3 and sum("ray=lower" in l for l in lines) == 1

    def test_json_order(self, capsys):
        _, out, _ = run(
            ["pairs", "--n", "5", "--orient", "><>>", "--gamma", "1,5", "--order", "U", "--format", "json"], capsys
        )
        rows = json.loads(out)
        assert all(set(r["minimal"]) == {"U"} for r in rows)
        assert all(r["minimal"]["U"] for r in rows if r["ray"] == "upper")

    def test_simple_root(self, capsys):
        code, out, _ = run(["pairs", "--n", "5", "--orient", "><>>", "--gamma", "3"], capsys)
        assert code == 0 and out.strip() == ""

    @pytest.mark.parametrize("g", ["x,y", "2,7", "3,1"])
    def test_bad_root(self, g, capsys):
        assert run(["pairs", "--n", "5", "--orient", "><>>", "--gamma", g], capsys)[0] == 2


class TestDuality:
    def test_denom(self, capsys):
        assert run(["denom", "--kind", "a1", "--n", "5", "--k", "2", "--l", "3"], capsys)[1].strip() == "+q^3, +q^5"

    def test_denom_twisted(self, capsys):
        assert run(["denom", "--kind", "a2", "--n", "5", "--k", "2", "--l", "1"], capsys)[1].strip() == "+q^3, -q^5"

    def test_denom_missing(self, capsys):
        assert run(["denom", "--n", "5", "--k", "2"], capsys)[0] == 2

    def test_denom_range(self, capsys):
        assert run(["denom", "--n", "5", "--k", "9", "--l", "1"], capsys)[0] == 2

    def test_qj(self, capsys):
        code, out, _ = run(["qj", "--n", "5", "--orient", "><>>", "--format", "json"], capsys)
        obj = json.loads(out)
        assert code == 0 and obj["type_A"] and obj["J"][1] == [4, -5]
        assert all(obj["cartan"][k][k] == 2 for k in range(5))

    def test_dorey_gamma(self, capsys):
        code, out, _ = run(["dorey", "--n", "5", "--orient", "><>>", "--gamma", "1,5"], capsys)
        assert code == 0 and out.count("ok") == 4

    def test_dorey_printed_fails(self, capsys):
        code, out, _ = run(["dorey", "--n", "5", "--orient", "><>>", "--gamma", "1,4", "--printed"], capsys)
        assert code == 1 and "FAIL" in out

    def test_dorey_triple(self, capsys):
        code, out, _ = run(["dorey", "--n", "5", "--triple", "2,-3", "--triple", "3,2", "--triple", "5,0"], capsys)
        assert code == 0 and out.strip() == "true"
        code, out, _ = run(["dorey", "--n", "5", "--triple", "2,0", "--triple", "3,0", "--triple", "5,0"], capsys)
        assert code == 1 and out.strip() == "false"

    def test_dorey_needs_input(self, capsys):
        assert run(["dorey", "--n", "5"], capsys)[0] == 2


class TestVerify:
    def test_verify(self, capsys):
        code, out, _ = run(["verify", "--max-n", "4"], capsys)
        assert code == 0 and "PASS" in out

    def test_verify_json(self, capsys):
        code, out, _ = run(["verify", "--max-n", "3", "--format", "json"], capsys)
        assert code == 0 and json.loads(out)["passed"]

    def test_verify_bound(self, capsys):
        assert run(["verify", "--max-n", "12"], capsys)[0] == 2


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "gammaq", "word", "--n", "3", "--orient", "<<"], capture_output=True, text=True
    )
    assert res.returncode == 0 and res.stdout.strip() == "3,2,1,3,2,3"
