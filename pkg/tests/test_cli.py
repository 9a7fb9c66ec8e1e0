import json

import pytest

from thompson_tsp.cli import main
from thompson_tsp.generators import RECTANGLE_X0, RECTANGLE_X1


def run(capsys, *argv, **kw):
    code = main(list(argv), **kw)
    out, err = capsys.readouterr()
    return code, out, err


def test_witness_generic(capsys):
    code, out, _ = run(capsys, "witness", "--xi", "a", "--lambda", "26/10")
    doc = json.loads(out)
    assert code == 0
    assert (doc["branch"], doc["n"], doc["path_length"], doc["card"]) == ("generic", 20, 2282, 882)


def test_witness_abelian(capsys):
    code, out, _ = run(capsys, "witness", "--xi", "b", "--lambda", "12/10")
    assert code == 0 and json.loads(out)["branch"] == "abelian"


@pytest.mark.parametrize("argv", [
    ["witness", "--xi", "a", "--lambda", "2/1"],
    ["witness", "--xi", "a"],
    ["witness", "--xi", "q", "--lambda", "3/1"],
    ["witness", "--xi", "a", "--lambda", "three"],
    ["witness", "--xi", "a", "--lambda", "3/1", "--alphabet", "nope"],
    ["frobnicate"],
])
def test_invalid_input_exits_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_check_defaults(capsys):
    code, out, _ = run(capsys, "check")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert doc["lemma1"] == doc["mixed"] == "200/200"
    assert doc["relations"] == "2/2" and doc["support"] == "2/2"


def test_check_zero_samples(capsys):
    code, out, _ = run(capsys, "check", "--samples", "0")
    doc = json.loads(out)
    assert code == 0
    assert doc["lemma1"] == doc["mixed"] == "0/0"
    assert doc["relations"] == "2/2"


def test_check_corrupted_table(capsys):
    code, out, err = run(capsys, "check", "--samples", "5", generators=(RECTANGLE_X0, RECTANGLE_X1))
    assert code == 1
    doc = json.loads(out)
    assert doc["first_failure"]["section"] == "relations"
    assert "x1^(x0^2) = x1^(x0 x1)" in err
    assert doc["first_failure"]["check"] == "x1^(x0^2) = x1^(x0 x1)"


def test_check_is_deterministic(capsys, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"c{k}.json"
        assert main(["check", "--samples", "30", "--seed", "7", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_witness_is_deterministic(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"w{k}.json"
        assert main(["witness", "--xi", "aaB", "--lambda", "3/1", "--out", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_oracle_n2(capsys):
    code, out, _ = run(capsys, "oracle", "--xi", "a", "--n", "2")
    doc = json.loads(out)
    assert code == 0
    assert doc["card"] == 18 and doc["path_length"] == 50
    assert doc["oracle"]["tour_length"] <= 50
    assert all(doc["oracle"]["metric_axioms"].values())


def test_oracle_cap(capsys):
    code, _, err = run(capsys, "oracle", "--xi", "a", "--n", "6")
    assert code == 2 and "tour size" in err and "98" in err


def test_oracle_instance_singleton(capsys, tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps({"points": [""]}))
    code, out, _ = run(capsys, "oracle", "--instance", str(path))
    doc = json.loads(out)
    assert code == 0 and doc["tour_length"] == 0 and doc["tau_exact"] == "0/1"


def test_oracle_instance_pair(capsys, tmp_path):
    path = tmp_path / "inst.json"
    path.write_text(json.dumps({"points": ["", "abAA"]}))
    code, out, _ = run(capsys, "oracle", "--instance", str(path))
    assert code == 0 and json.loads(out)["tour_length"] == 8


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "--n", "4")
    assert code == 0 and out.startswith("digraph")
    assert out.count("[label=\"(") == 50


def test_export_json(capsys):
    code, out, _ = run(capsys, "export", "--xi", "a", "--n", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 18
    assert doc["vertices"]["b_0_0"] == "" and doc["epsilon"] == -1


@pytest.mark.parametrize("n", ["3", "0"])
def test_export_bad_n(capsys, n):
    assert run(capsys, "export", "--n", n)[0] == 2


def test_alphabet_presets(capsys):
    code, out, _ = run(capsys, "witness", "--xi", "a", "--lambda", "16/10", "--alphabet", "x012")
    doc = json.loads(out)
    assert code == 0 and doc["alphabet"] == "x012" and doc["n"] == 20


def test_alphabet_file(capsys, tmp_path):
    alpha_doc = {
        "name": "custom",
        "generators": [
            {"symbol": "a", "name": "x0", "word": "a"},
            {"symbol": "b", "name": "x1", "word": "b"},
            {"symbol": "c", "name": "x2", "word": "Aba"},
        ],
        "u": "bA",
        "v": "c",
    }
    path = tmp_path / "alpha.json"
    path.write_text(json.dumps(alpha_doc))
    code, out, _ = run(capsys, "witness", "--xi", "a", "--lambda", "3/1", "--alphabet", f"@{path}")
    assert code == 0 and json.loads(out)["alphabet"] == "custom"


def test_alphabet_file_overlapping_pair(capsys, tmp_path):
    alpha_doc = {"name": "bad", "generators": [{"symbol": "a", "name": "x0", "word": "a"},
                                          {"symbol": "b", "name": "x1", "word": "b"}],
            "u": "a", "v": "b"}
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(alpha_doc))
    code, _, err = run(capsys, "witness", "--xi", "a", "--lambda", "3/1", "--alphabet", f"@{path}")
    assert code == 2 and "supp" in err


def test_alphabet_file_missing(capsys, tmp_path):
    code, _, err = run(capsys, "witness", "--xi", "a", "--lambda", "3/1",
                       "--alphabet", f"@{tmp_path / 'nope.json'}")
    assert code == 2 and err
