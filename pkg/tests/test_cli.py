import json

import pytest

from relmatroid.cli import main

RELATION = '{"universe": ["1", "2", "3"],\n "pairs": [["1","1"],["1","2"],["2","1"],["2","3"],["3","1"],["3","3"]]}\n'
MATROID = '{"universe": ["1", "2", "3"], "independents": [["1"], ["3"]]}\n'


@pytest.fixture
def rfile(tmp_path):
    p = tmp_path / "r.json"
    p.write_text(RELATION)
    return str(p)


@pytest.fixture
def mfile(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(MATROID)
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_neighborhoods(capsys, rfile):
    code, out, _ = run(capsys, "neighborhoods", rfile)
    assert code == 0
    assert out.splitlines() == [
        "RS(1) = {1, 2}",
        "RS(2) = {1, 3}",
        "RS(3) = {1, 3}",
        "RP(1) = {1, 2, 3}",
        "RP(2) = {1}",
        "RP(3) = {2, 3}",
    ]


def test_neighborhoods_json(capsys, rfile):
    code, out, _ = run(capsys, "neighborhoods", rfile, "--json")
    assert code == 0
    assert json.loads(out) == {
        "successor": {"1": ["1", "2"], "2": ["1", "3"], "3": ["1", "3"]},
        "predecessor": {"1": ["1", "2", "3"], "2": ["1"], "3": ["2", "3"]},
    }


def test_approx(capsys, rfile):
    code, out, _ = run(capsys, "approx", rfile, "--set", "2")
    assert code == 0
    assert out == "lower({2}) = ∅\nupper({2}) = {1}\n"


def test_approx_json_empty_set(capsys, rfile):
    code, out, _ = run(capsys, "approx", rfile, "--set", "", "--json")
    assert json.loads(out) == {"set": [], "lower": [], "upper": []}


def test_approx_unknown_label(capsys, rfile):
    code, _, err = run(capsys, "approx", rfile, "--set", "7")
    assert code == 2
    assert "'7'" in err


def test_matroid_default(capsys, rfile):
    code, out, _ = run(capsys, "matroid", rfile)
    assert code == 0
    assert out == "blocks = {{1}, {2, 3}}\ncircuits = {{2, 3}}\n"


def test_matroid_full_check(capsys, rfile):
    code, out, _ = run(capsys, "matroid", rfile, "--independents", "--dependents", "--circuits",
                       "--rank", "1,2,3", "--closure", "2", "--closed", "1", "--check")
    assert code == 0
    assert out.splitlines() == [
        "independents = {∅, {1}, {2}, {3}, {1, 2}, {1, 3}}",
        "dependents = {{2, 3}, {1, 2, 3}}",
        "circuits = {{2, 3}}",
        "rank({1, 2, 3}) = 2",
        "closure({2}) = {2, 3}",
        "closed({1}) = true",
        "check: agree",
    ]


def test_matroid_predecessor_json(capsys, rfile):
    code, out, _ = run(capsys, "matroid", rfile, "--kind", "predecessor", "--independents", "--json")
    doc = json.loads(out)
    assert doc["kind"] == "predecessor"
    assert len(doc["independents"]) == 8


def test_matroid_check_disagreement(capsys, rfile, monkeypatch):
    from relmatroid import relation_matroid as rmod

    monkeypatch.setattr(rmod, "rm_closure", lambda rm, x: x)
    code, out, _ = run(capsys, "matroid", rfile, "--closure", "2", "--check")
    assert code == 1
    assert "check: DISAGREE on closure({2})" in out


def test_induce_matroid(capsys, mfile):
    code, out, _ = run(capsys, "induce", mfile)
    assert code == 0
    assert json.loads(out) == {
        "universe": ["1", "2", "3"],
        "pairs": [["1", "1"], ["1", "3"], ["2", "2"], ["3", "1"], ["3", "3"]],
    }


def test_induce_roundtrip(capsys, rfile):
    code, out, _ = run(capsys, "induce", rfile, "--roundtrip")
    assert code == 0
    doc = json.loads(out)
    assert doc["equals_original"] is False
    assert doc["pairs"] == [["1", "1"], ["2", "2"], ["2", "3"], ["3", "2"], ["3", "3"]]


def test_induce_needs_roundtrip_for_relation(capsys, rfile):
    code, _, err = run(capsys, "induce", rfile)
    assert code == 2 and "--roundtrip" in err


def test_induce_rejects_roundtrip_for_matroid(capsys, mfile):
    code, _, err = run(capsys, "induce", mfile, "--roundtrip")
    assert code == 2 and "matroid file" in err


def test_induce_non_matroid(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"universe": ["1", "2", "3"],\n "independents": [["1"], ["2"], ["1", "2"], ["3"]]}')
    code, _, err = run(capsys, "induce", str(p))
    assert code == 2
    assert f"{p}:2: not a matroid: axiom I3" in err


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "--n", "2", "--law", "P2.H-properties")
    assert code == 0
    assert json.loads(out) == {
        "checked": 18, "failures": 0, "id": "P2.H-properties", "n": 2,
        "scope": "relations", "status": "pass", "witnesses": [],
    }
    assert "0 failed" in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    from relmatroid import relation_matroid as rmod

    monkeypatch.setattr(rmod, "rm_rank", lambda rm, x: 0)
    code, out, _ = run(capsys, "verify", "--n", "1", "--law", "P3.rank-closed-form")
    assert code == 1
    assert json.loads(out)["status"] == "fail"


def test_verify_capacity(capsys):
    code, _, err = run(capsys, "verify", "--n", "9")
    assert code == 2 and "capped" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "neighborhoods", str(tmp_path / "nope.json"))
    assert code == 2 and "cannot read file" in err


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["approx"])
    assert exc.value.code == 2
