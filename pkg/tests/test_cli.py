import json
import subprocess
import sys

import pytest

from dicritical import __version__
from dicritical.cli import main
from dicritical.errors import ParseError
from dicritical.io import load_json, read_ideal

IDEAL = '{"vars":["x","y"],"gens":[[2,0],[1,1],[0,3]]}'
PENCIL_YX = '{"a":{"vars":["x","y"],"expr":"y"},"b":{"vars":["x","y"],"expr":"x"}}'


def run(capsys, *argv):
    code = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_rees_vals(capsys):
    code, rep = run(capsys, "mono", "rees-vals", IDEAL)
    assert code == 0
    assert rep == {"command": "mono rees-vals", "result": [[[1, 1], 2], [[2, 1], 3]], "seed": 0, "version": __version__}


def test_pencil_dicriticals(capsys):
    code, rep = run(capsys, "pencil", "dicriticals", PENCIL_YX)
    recs = rep["result"]["dicriticals"]
    assert code == 0 and len(recs) == 1 and recs[0]["class"] == "sharp"


def test_example83(capsys):
    code, rep = run(capsys, "example83", "--m", "3", "--forms", "X,Y")
    assert code == 0 and rep["result"]["count"] == 2


def test_missing_vars_is_a_parse_error(capsys):
    code, rep = run(capsys, "mono", "closure", '{"gens":[[2,0]]}')
    assert code == 2 and rep["error"] == "ParseError" and rep["field"] == "vars" and rep["reason"] == "required"


def test_composite_p_is_a_parse_error(capsys):
    req = '{"vars":["x","y"],"field":{"type":"Fp","p":4},"valuation":{"type":"monomial","w":[1,1]},"components":{"0":"x"}}'
    code, rep = run(capsys, "gauss", "eval", req)
    assert code == 2 and (rep["field"], rep["reason"]) == ("p", "not prime")


def test_domain_error_exit_code(capsys):
    code, rep = run(capsys, "mono", "decomp", '{"vars":["x","y"],"gens":[[2,0],[0,3]]}')
    assert code == 1 and rep["error"] == "NotNormal"


@pytest.mark.parametrize("argv", [["mono", "nonsense", IDEAL], ["pencil", "dicriticals", "--frobnicate", PENCIL_YX], ["wat"]])
def test_unknown_names_and_flags(capsys, argv):
    code, rep = run(capsys, *argv)
    assert code == 2 and rep["error"] == "UsageError"


def test_gauss_eval(capsys):
    req = '{"vars":["x","y"],"valuation":{"type":"monomial","w":[3,2]},"components":{"1":"y^3","2":"x^4"},"VI":6}'
    code, rep = run(capsys, "gauss", "eval", req)
    assert code == 0 and rep["result"] == {"value": 6, "rees_value": 0}


def test_mono_subcommands(capsys):
    M2 = '{"vars":["x","y"],"gens":[[2,0],[1,1],[0,2]]'
    assert run(capsys, "mono", "closure", '{"vars":["x","y"],"gens":[[2,0],[0,3]]}')[1]["result"]["closure"]["gens"] == [[2, 0], [1, 2], [0, 3]]
    assert run(capsys, "mono", "normal", IDEAL)[1]["result"]["normal"] is True
    assert run(capsys, "mono", "decomp", M2 + ',"n":2}')[1]["result"] == {"n": 2, "holds": True}
    assert run(capsys, "mono", "fiber", M2 + ',"n":2}')[1]["result"]["dim"] == 5
    assert run(capsys, "mono", "find-element", IDEAL)[1]["result"]["x"] == "x*y"
    assert run(capsys, "mono", "find-element-power", IDEAL)[1]["result"]["s"] == 1
    red = run(capsys, "mono", "reduction", M2 + ',"J":["x^2","y^2"]}')[1]["result"]
    assert red["certificate"] == {"n": 1, "dims": [5, 5]}
    code, rep = run(capsys, "mono", "reduction", M2 + ',"J":["x^2","x*y"]}')
    assert code == 1 and rep["error"] == "CertificationFailed"
    assert run(capsys, "mono", "reduction", M2 + "}")[1]["result"]["certificate"]["n"] == 1
    ext = run(capsys, "mono", "ext-rees", '{"ideal":{"vars":["x","y"],"gens":[[2,0],[0,3]]},"components":{"-2":"1","1":"y^3"}}')[1]["result"]
    assert ext["negative"] == [-2] and ext["w_zinv"][0]["w_zinv"] == 6


def test_pencil_subcommands(capsys):
    assert run(capsys, "pencil", "normalize", '{"a":{"vars":["x","y"],"expr":"x*y"},"b":{"vars":["x","y"],"expr":"x^2"}}')[1]["result"] == {"a": "y", "b": "x"}
    assert run(capsys, "pencil", "construct-b", '{"U":[[2,3]],"n":[1]}')[1]["result"] == {"s": 1, "b": "y^2"}
    sr = run(capsys, "pencil", "special-reduction", '{"U":[{"type":"monomial","w":[2,3]}],"n":[1],"eta":"y","m":2}')[1]["result"]
    assert sr == {"t": 1, "a": "x^3", "b": "y^2"}
    vr = '{"U":[[1,1]],"n":[2],"pencil":{"a":{"vars":["x","y"],"expr":"x^3"},"b":{"vars":["x","y"],"expr":"y^3"}}}'
    assert run(capsys, "pencil", "verify-reduction", vr)[1]["result"] == {"holds": False}
    real = run(capsys, "pencil", "realize", '{"U":[[1,1],[1,2]]}')[1]["result"]
    assert sorted(r["weights"] for r in real["report"]["dicriticals"]) == [[1, 1], [1, 2]]
    code, rep = run(capsys, "pencil", "special-reduction", '{"U":[[2,3]],"n":[1],"eta":"x","m":2}')
    assert code == 1 and rep["error"] == "PreconditionFailed"
    code, rep = run(capsys, "pencil", "construct-b", '{"U":[[2,3]],"n":[1,1]}')
    assert code == 2 and rep["field"] == "n"


def test_jacobian_demo(capsys):
    code, rep = run(capsys, "jacobian-demo", '{"vars":["X","Y"],"expr":"X*Y"}')
    assert code == 0 and len(rep["result"]["points"]) == 2
    code, rep = run(capsys, "jacobian-demo", '{"vars":["X","Y"],"expr":"X^2+Y^2"}', "--extend", "none")
    assert code == 1 and rep["error"] == "NonRationalPoint"


def test_depth_flag(capsys):
    p = '{"a":{"vars":["x","y"],"expr":"y^2-x^5"},"b":{"vars":["x","y"],"expr":"x^5"}}'
    code, rep = run(capsys, "pencil", "dicriticals", p, "--max-depth", "2")
    assert code == 1 and rep["error"] == "DepthExceeded"


def test_input_from_file_and_stdin(tmp_path, capsys, monkeypatch):
    path = tmp_path / "ideal.json"
    path.write_text(IDEAL, encoding="utf-8")
    assert run(capsys, "mono", "rees-vals", str(path))[1]["result"] == [[[1, 1], 2], [[2, 1], 3]]
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(IDEAL))
    assert run(capsys, "mono", "rees-vals", "-")[1]["result"] == [[[1, 1], 2], [[2, 1], 3]]
    code, rep = run(capsys, "mono", "rees-vals", str(tmp_path / "missing.json"))
    assert code == 2 and rep["field"] == "input"


def test_load_json_errors():
    with pytest.raises(ParseError):
        load_json("{not json")
    assert read_ideal(load_json(IDEAL)).gens == ((2, 0), (1, 1), (0, 3))


def test_timing_only_when_requested(capsys):
    _, rep = run(capsys, "mono", "rees-vals", IDEAL)
    assert "timing" not in rep
    _, rep = run(capsys, "mono", "rees-vals", IDEAL, "--timing")
    assert rep["timing"] >= 0


def test_text_output(capsys):
    assert main(["mono", "normal", IDEAL]) == 0
    out = capsys.readouterr().out
    assert "normal: true" in out and "command: mono normal" in out


def test_reports_are_byte_identical_across_processes():
    argv = [sys.executable, "-m", "dicritical", "mono", "reduction", '{"vars":["x","y"],"gens":[[3,0],[1,2],[0,3]]}', "--seed", "5", "--json"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second and json.loads(first)["seed"] == 5
