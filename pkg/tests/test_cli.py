import io
import json
import shlex

import pytest

from dendro.cli import run


def call(cmd):
    out = io.StringIO()
    code = run(shlex.split(cmd), out)
    text = out.getvalue()
    return code, (json.loads(text) if text.strip() else None), text


@pytest.mark.parametrize("cmd, code", [
    ("tree canon T3", 0),
    ("tree faces C2", 0),
    ("omega enum C1 C1", 0),
    ("operad validate asA_pq", 0),
    ("operad tensor-oracle pq --max-arity 2 --depth 2", 0),
    ("operad nerve asA_p --D 2 --E 4", 0),
    ("groth check chain2", 0),
    ("wcat1 validate wcat1_fixture0", 0),
    ("wcat1 reconstruct wcat1_fixture0", 0),
    ("bicat validate z2", 0),
    ("bicat validate pentagon_mutant", 1),
    ("bicat unbias pentagon_mutant", 1),
    ("bicat ho chain chain_2obj --N 2", 0),
    ("bicat ho z2 z2 --N 2", 1),
    ("bicat homotopic y.json y.json", 0),
    ("corpus list", 0),
])
def test_exit_codes(cmd, code):
    got, report, _ = call(cmd)
    assert got == code, report


def test_reports():
    assert call("omega enum C1 C1")[1]["count"] == 3
    assert call("tree faces C2")[1]["face_count"] == 3
    assert call("tree graft C2 --at l1 --other C1")[1]["code"] == "((*)*)"
    rep = call("bicat validate pentagon_mutant")[1]
    assert any(v.startswith("pentagon fails") for v in rep["violations"])
    assert call("bicat homotopic y.json y.json")[1]["witness_degenerate"] is True


def test_output_is_deterministic():
    a = call("bicat phi chain --N 2")[2]
    b = call("bicat phi chain --N 2")[2]
    assert a == b


@pytest.mark.parametrize("cmd", ["tree canon nope.json", "omega enum C1", "frob", "bicat phi nope"])
def test_bad_input(cmd):
    code, report, _ = call(cmd)
    assert code == 2
    if report is not None:
        assert "error" in report


def test_malformed_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"root": ')
    code, report, _ = call(f"tree canon {p}")
    assert code == 2 and "bad.json:1" in report["error"]


def test_malformed_tree(tmp_path):
    p = tmp_path / "cycle.json"
    p.write_text(json.dumps({"root": "a", "vertices": [{"out": "a", "in": ["a"]}]}))
    assert call(f"tree canon {p}")[0] == 2


def test_corpus_write_and_env(tmp_path, monkeypatch):
    code, rep, _ = call(f"corpus write {tmp_path}")
    assert code == 0
    assert (tmp_path / "chain.json").is_file()
    monkeypatch.setenv("DENDRO_CORPUS", str(tmp_path))
    assert call("bicat validate chain")[0] == 0
    assert call("corpus list")[1]["directory"] == str(tmp_path)


def test_tree_file_roundtrip(tmp_path):
    code, rep, _ = call("tree canon T3")
    p = tmp_path / "t.json"
    p.write_text(json.dumps(rep["canonical"]))
    code2, rep2, _ = call(f"tree canon {p}")
    assert code2 == 0 and rep2["canonical"] == rep["canonical"]
