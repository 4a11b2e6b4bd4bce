import json

import pytest

from cuspedforms.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines() if line]


def test_selfcheck(capsys):
    code, lines = run(capsys, "selfcheck")
    assert code == 0
    assert lines[0]["ok"] is True
    assert lines[0]["commutator_trace"] == -2


def test_graph_dist(capsys):
    code, lines = run(capsys, "graph", "dist", "e@0:0", "ABabABab@0:0")
    assert code == 0 and lines[0]["d"] == 2
    code, lines = run(capsys, "graph", "dist", "e@0:1", "ABabABab@0:1")
    assert code == 0 and lines[0]["d"] == 1


def test_graph_ball(capsys):
    code, lines = run(capsys, "graph", "ball", "e@0:0", "--r", "1")
    assert code == 0
    assert lines[0]["size"] == 10  # center plus its 9 neighbors


def test_eps_eval(capsys):
    code, lines = run(capsys, "eps", "eval", "e", "ab", "a")
    assert code == 0 and lines[0]["eps"] == 1
    code, lines = run(capsys, "eps", "eval", "e", "ba", "ab")
    assert code == 0 and lines[0]["eps"] == 0


def test_alpha_eval(capsys):
    code, lines = run(capsys, "alpha", "eval", "--f", "linear:1",
                      "e@0:0", "b@0:0", "ba@0:0")
    assert code == 0
    assert lines[0]["fill_method"] == "unit-simplex"


def test_alpha_am(capsys):
    code, lines = run(capsys, "alpha", "am", "--f", "linear:1", "--m", "5")
    assert code == 0
    assert lines[0]["ok"] is True
    assert lines[0]["expected_abs"] == "10"


def test_alpha_defect_deterministic(capsys):
    code, first = run(capsys, "alpha", "defect", "--f", "linear:1",
                      "--seed", "7", "--n", "50")
    code2, second = run(capsys, "alpha", "defect", "--f", "linear:1",
                        "--seed", "7", "--n", "50")
    assert code == code2 == 0
    assert first == second


def test_alpha_rank(capsys):
    code, lines = run(capsys, "alpha", "rank", "--f", "powfloor:1/2",
                      "--f", "linear:1", "--ms", "1,4,16")
    assert code == 0
    assert lines[0]["rank"] == 2


def test_cycles(capsys):
    code, lines = run(capsys, "cycles", "--m", "1")
    assert code == 0
    head = lines[0]
    assert head["K_m"] == 1
    assert head["boundary_A_zero"] is True
    assert head["A_norm"] is True  # the check dict overrides the raw value
    names = [ln["chain"] for ln in lines[1:]]
    assert names == ["c", "d_m", "e_m", "A_m"]


def test_config_override(capsys, tmp_path):
    cfgfile = tmp_path / "run.cfg"
    cfgfile.write_text("kappa = 8\nrng_seed = 3\n# comment\n")
    code, lines = run(capsys, "--config", str(cfgfile), "selfcheck")
    assert code == 0 and lines[0]["ok"] is True


def test_bad_vertex_encoding(capsys):
    with pytest.raises(ValueError):
        main(["graph", "dist", "zz@0:0", "e@0:0"])
