import json

import pytest

from denumerant.cli import main, render_json


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count3_json(capsys):
    code, out, _ = run(capsys, "count3", "742", "803", "663", "128598",
                       "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["count"] == "22"
    assert obj["a"] == "742"
    assert obj["floor_sums"] == ["3111", "112277", "50934"]


def test_count3_trivial_zero(capsys):
    code, out, _ = run(capsys, "count3", "2", "4", "6", "7")
    assert code == 0
    assert "count = 0" in out


def test_count3_oracle_agrees(capsys):
    code, _, err = run(capsys, "count3", "3", "5", "7", "500", "--oracle")
    assert code == 0 and err == ""


def test_json_is_deterministic_and_roundtrips(capsys):
    _, out1, _ = run(capsys, "count3", "2", "3", "5", "10", "--json")
    _, out2, _ = run(capsys, "count3", "2", "3", "5", "10", "--json")
    assert out1 == out2
    obj = json.loads(out1)
    assert render_json(obj) + "\n" == out1
    assert obj["count"] == "4"


def test_invalid_input_exits_1(capsys):
    assert run(capsys, "count3", "0", "3", "5", "10")[0] == 1
    assert run(capsys, "count3", "1", "2")[0] == 1
    assert run(capsys, "legendre", "4", "9")[0] == 1
    assert run(capsys, "frobenius", "4", "6")[0] == 1


def test_floorsum_and_trace(capsys):
    code, out, _ = run(capsys, "floorsum", "129", "281", "742", "--oracle")
    assert code == 0 and "3111" in out
    code, out, _ = run(capsys, "trace", "floorsum", "129", "281", "742")
    assert code == 0
    assert out.splitlines()[0] == "RECIP K=48 const=6192"
    assert out.splitlines()[-1] == "BASE value=3111"


def test_trace_json_base(capsys):
    code, out, _ = run(capsys, "trace", "floorsum", "3", "13", "22", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["steps"][-1] == {"base": "2"}


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "4452", "8030", "9945", "3857942",
                       "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["reduced"] == {"a": "742", "b": "803", "c": "663",
                              "n": "128182"}
    assert (obj["g1"], obj["g2"], obj["g3"]) == ("5", "3", "2")


def test_verify_gauss(capsys):
    code, out, _ = run(capsys, "verify", "gauss", "--limit", "50")
    assert code == 0
    assert "failures = 0" in out


def test_verify_empty_sweep_json(capsys):
    code, out, _ = run(capsys, "verify", "gauss", "--limit", "2", "--json")
    assert code == 0
    assert out.strip() == '{"pairs":[],"failures":"0"}'


def test_verify_json_pairs(capsys):
    code, out, _ = run(capsys, "verify", "legendre", "--limit", "12", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["failures"] == "0"
    assert all(pair["holds"] == "true" for pair in obj["pairs"])


def test_legendre_sylvester_frobenius(capsys):
    code, out, _ = run(capsys, "legendre", "3", "7", "--oracle")
    assert code == 0 and "-1" in out
    code, out, _ = run(capsys, "sylvester", "3", "5", "--oracle", "--json")
    assert code == 0 and json.loads(out)["count"] == "4"
    code, out, _ = run(capsys, "frobenius", "3", "5")
    assert code == 0 and "7" in out


def test_count2(capsys):
    code, out, _ = run(capsys, "count2", "3", "5", "15", "--oracle", "--json")
    assert code == 0
    assert json.loads(out)["count"] == "2"


def test_bench_runs(capsys):
    code, out, _ = run(capsys, "bench", "--limit", "3", "--seed", "1",
                       "--json")
    assert code == 0
    obj = json.loads(out)
    assert int(obj["rounds"]) == 3
