import json

import pytest

from vertexlab import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_z_methods_agree(capsys):
    code, out, _ = run(capsys, "z", "--model", "6v", "--n", "3", "--method", "brute,isotropic")
    rec = json.loads(out)
    assert code == 0
    assert rec["values"] == {"brute": "7", "isotropic": "7"}


def test_z_twenty_vertex(capsys):
    code, out, _ = run(capsys, "z", "--model", "20v", "--n", "2", "--method", "brute,difrancesco")
    assert code == 0
    assert json.loads(out)["values"] == {"brute": "4", "difrancesco": "4"}


def test_efp(capsys):
    code, out, _ = run(capsys, "efp", "--n", "2", "--r", "1", "--s", "1")
    assert code == 0
    assert "1/2" in json.loads(out)["values"].values()


def test_restricted_csv(capsys):
    code, out, _ = run(capsys, "restricted", "--n", "3", "--kind", "Top", "--rs", "1", "--out", "csv")
    assert code == 0
    assert out.splitlines()[0] == "key,value"
    assert "values.brute,1" in out


@pytest.mark.parametrize("rel", ["ab-exchange", "omega", "geom-sum", "fundamental"])
def test_check_passes(capsys, rel):
    code, out, _ = run(capsys, "check", rel)
    rec = json.loads(out)
    assert code == 0 and rec["passed"]


def test_unknown_relation(capsys):
    code, _, err = run(capsys, "check", "nope")
    assert code == 2 and "unknown relation" in err


def test_bad_method_is_config_error(capsys):
    code, _, err = run(capsys, "z", "--method", "magic")
    assert code == 2 and "method" in err


def test_config_replay_is_byte_identical(capsys, tmp_path):
    code, first, _ = run(capsys, "z", "--n", "3", "--weights", "a=1,b=1/2,c=3/2", "--method", "brute,isotropic")
    assert code == 0
    cfg = tmp_path / "run.json"
    cfg.write_text(first)
    code, second, _ = run(capsys, "z", "--config", str(cfg))
    assert code == 0 and second == first


def test_unknown_config_key(capsys, tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text(json.dumps({"config": {"n": 2, "colour": "red"}}))
    code, _, err = run(capsys, "z", "--config", str(cfg))
    assert code == 2 and "colour" in err


def test_caps_exit_code(capsys, monkeypatch):
    monkeypatch.setenv("VERTEXLAB_CAPS", "sixv=2")
    code, _, _ = run(capsys, "z", "--n", "3")
    assert code == 2


def test_golden_suite(capsys):
    code, out, _ = run(capsys, "suite", "golden")
    assert code == 0 and json.loads(out)["passed"]
