import json

import pytest

from admperm import cli, svg
from admperm.errors import ConfigurationError
from admperm.rootsys import build_root_datum


def run(capsys, *args):
    code = cli.main(list(args))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate_json(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "GL", "--size", "3", "--mu", "1,0,0",
                       "--format", "json", "--jobs", "1")
    rep = json.loads(out)
    assert code == 0
    assert rep["schema"] == "musets/1"
    assert rep["counts"] == {"adm": 7, "perm": 7, "perm_st": 7}
    assert rep["verdicts"]["adm_eq_perm"] and rep["verdicts"]["perm_eq_perm_st"]
    assert rep["datum_fingerprint"] == build_root_datum("GL", 3).fingerprint


def test_enumerate_table_and_trivial(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "B", "--size", "2", "--mu", "1,0", "--jobs", "1")
    assert code == 0 and "adm     13" in out
    code, out, _ = run(capsys, "enumerate", "--family", "GL", "--size", "2", "--mu", "0,0",
                       "--format", "csv", "--jobs", "1")
    assert out.splitlines()[1] == "GL(2),0 0,1,1,1,true,true,true,true"


def test_output_is_deterministic_across_jobs(capsys):
    args = ["enumerate", "--family", "C", "--size", "2", "--mu", "2,1", "--format", "json"]
    _, a, _ = run(capsys, *args, "--jobs", "1")
    _, b, _ = run(capsys, *args, "--jobs", "2")
    assert a == b


def test_configuration_errors(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "B", "--size", "2", "--mu", "0,1")
    assert code == 2 and "not dominant" in json.loads(err)["message"]
    code, _, err = run(capsys, "enumerate", "--family", "B", "--size", "2", "--mu", "a,b")
    assert code == 2
    code, _, err = run(capsys, "frobnicate")
    assert code == 2 and json.loads(err)["error"] == "configuration"


def test_guard(capsys):
    code, _, err = run(capsys, "enumerate", "--family", "B", "--size", "2", "--mu", "3,3",
                       "--max-points", "5")
    assert code == 3 and json.loads(err)["error"] == "guard_exceeded"
    code, _, _ = run(capsys, "enumerate", "--family", "B", "--size", "2", "--mu", "3,3",
                     "--max-length", "4")
    assert code == 3


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "symplectic-equality", "--family", "GSp", "--size", "4",
                       "--mu", "1,1,0,0")
    v = json.loads(out)
    assert code == 0 and v["passed"] and v["schema"] == "verdict/1"
    code, out, _ = run(capsys, "verify", "odd-orthogonal-counts")
    assert code == 0 and json.loads(out)["details"]["adm_B"] == 13
    code, out, _ = run(capsys, "verify", "gl-equality", "--family", "GL", "--size", "2", "--mu", "0,0")
    assert code == 0
    code, _, err = run(capsys, "verify", "no-such-thing")
    assert code == 2


def test_statements_listed(capsys):
    code, out, _ = run(capsys, "statements")
    assert code == 0 and "bruhat-inheritance" in out


@pytest.mark.parametrize("family,size", [("A", 5), ("C", 3), ("GL", 4)])
def test_counterexample_none(capsys, family, size):
    code, out, _ = run(capsys, "counterexample", "--family", family, "--size", str(size))
    assert code == 0 and json.loads(out)["result"] == "none exists"


def test_counterexample_d4(capsys):
    code, out, _ = run(capsys, "counterexample", "--family", "D", "--size", "4")
    w = json.loads(out)
    assert code == 0 and w["result"] == "witness found" and w["verified"]
    assert w["permissible"] and not w["admissible"] and w["length_equals_length_of_t_mu"]


def test_draw(capsys, tmp_path):
    path = tmp_path / "adm.svg"
    code, _, _ = run(capsys, "draw", "adm", "--family", "GL", "--size", "3", "--mu", "1,0,0", "-o", str(path))
    text = path.read_text()
    assert code == 0 and text.startswith("<?xml") and 'version="1.1"' in text
    assert svg.shaded_count(text) == 7
    code, again, _ = run(capsys, "draw", "adm", "--family", "GL", "--size", "3", "--mu", "1,0,0")
    assert again == text
    code, _, err = run(capsys, "draw", "perm", "--family", "B", "--size", "3", "--mu", "1,0,0")
    assert code == 2 and "rank" in err
    code, out, _ = run(capsys, "draw", "cone", "--family", "B", "--size", "2", "--w", "1")
    assert code == 0 and svg.shaded_count(out) > 0


def test_describe(capsys):
    code, out, _ = run(capsys, "describe", "--family", "G", "--size", "2")
    d = json.loads(out)
    assert code == 0 and d["rank"] == 2 and len(d["positive_roots"]) == 6


def test_run_config_round_trip():
    ns = cli.build_parser().parse_args(["enumerate", "--family", "B", "--size", "2", "--mu", "1,0"])
    cfg = cli.config_from_args(ns)
    assert cli.RunConfig.from_json(json.loads(json.dumps(cfg.to_json()))) == cfg


def test_svg_needs_rank_two():
    with pytest.raises(ConfigurationError):
        svg.render(build_root_datum("B", 3), [])
