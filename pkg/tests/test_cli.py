import json
import shutil
import subprocess

import pytest

from semidirect.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from semidirect.io import evaluate, matroid_to_json
from semidirect.transversal import is_transversal
from semidirect.verify import fixtures as F


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def three_lines_expr():
    spec = F.three_lines_spec()
    return {
        "op": "principal_sum",
        "M": matroid_to_json(spec.M),
        "N": matroid_to_json(spec.N),
        "A": spec.M.ground.labels_of(spec.A),
        "B": spec.N.ground.labels_of(spec.B),
    }


def run(capsys, argv):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_roundtrip(tmp_path, capsys):
    expr = write(tmp_path, "expr.json", three_lines_expr())
    out_path = tmp_path / "out.json"
    code, out, _ = run(capsys, ["construct", expr, "-o", str(out_path)])
    assert code == EXIT_OK and out == ""
    M = evaluate(json.loads(out_path.read_text()))
    assert M == F.three_lines() and M.rank() == 4 and M.size == 10
    code, out, _ = run(capsys, ["construct", expr])
    assert evaluate(json.loads(out)) == M


def test_construct_dual_of_dual(tmp_path, capsys):
    inner = {"op": "uniform", "r": 2, "ground": ["a", "b", "c", "d"]}
    expr = write(tmp_path, "dd.json", {"op": "dual", "M": {"op": "dual", "M": inner}})
    code, out, _ = run(capsys, ["construct", expr])
    assert code == EXIT_OK
    assert json.loads(out) == matroid_to_json(evaluate(inner))


def test_bad_input_exits_with_usage_code(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{\"op\": ")
    code, _, err = run(capsys, ["construct", str(bad)])
    assert code == EXIT_USAGE and str(bad) in err and "line 1" in err
    code, _, err = run(capsys, ["construct", str(tmp_path / "missing.json")])
    assert code == EXIT_USAGE
    expr = write(tmp_path, "e.json", {"op": "dual", "M": {"op": "nope"}})
    code, _, err = run(capsys, ["construct", expr])
    assert code == EXIT_USAGE and "$.M.op" in err and "ParseError" in err


def test_props_families(tmp_path, capsys):
    five = write(tmp_path, "five.json", matroid_to_json(F.five_point()))
    code, out, _ = run(capsys, ["props", five, "--show", "flats"])
    report = json.loads(out)
    assert code == EXIT_OK and report["rank"] == 2
    assert report["family"] == sorted(F.FIVE_POINT_FLATS)
    u23 = write(tmp_path, "u23.json", {"kind": "uniform", "ground": ["1", "2", "3"], "data": {"r": 2}})
    _, out, _ = run(capsys, ["props", u23, "--show", "circuits"])
    assert json.loads(out)["family"] == [["1", "2", "3"]]
    union = write(tmp_path, "union.json", matroid_to_json(F.union_example_sum()))
    _, out, _ = run(capsys, ["props", union, "--show", "circuits"])
    circuits = json.loads(out)["family"]
    assert all(sorted(c) in map(sorted, circuits) for c in F.UNION_NONSPANNING_CIRCUITS)
    _, out, _ = run(capsys, ["props", five, "--show", "loops-coloops"])
    assert json.loads(out)["loops"] == ["d"] and json.loads(out)["coloops"] == []
    for show in ("cyclic-flats", "separators"):
        code, out, _ = run(capsys, ["props", five, "--show", show])
        assert code == EXIT_OK and "family" in json.loads(out)


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "check_principal_dual", "--seed", "7", "--count", "30"])
    assert code == EXIT_OK
    line = json.loads(out)
    assert line["theorem"] == "principal_dual" and line["status"] == "pass" and line["instances"] == 30
    code, _, err = run(capsys, ["verify", "--suite", "no_such_id"])
    assert code == EXIT_USAGE and "no_such_id" in err


def test_verify_failure_exit_code(monkeypatch, capsys):
    from semidirect import constructions as C

    monkeypatch.setattr(C, "principal_sum_by_union", lambda M, N, A, B: C.direct_sum(M, N))
    code, out, _ = run(capsys, ["verify", "--suite", "principal_rank", "--count", "200"])
    assert code == EXIT_FAIL and json.loads(out)["witness"]


def test_random(capsys):
    _, first, _ = run(capsys, ["random", "--seed", "1", "--n", "4"])
    _, second, _ = run(capsys, ["random", "--seed", "1", "--n", "4"])
    assert first == second and len(json.loads(first)["data"]) == 16
    _, out, _ = run(capsys, ["random", "--seed", "2", "--n", "6", "--source", "transversal"])
    assert is_transversal(evaluate(json.loads(out))).passed
    code, _, err = run(capsys, ["random", "--n", "20"])
    assert code == EXIT_USAGE and "GroundTooLarge" in err
    code, _, _ = run(capsys, ["random", "--source", "bogus"])
    assert code == EXIT_USAGE


def test_pretty_is_accepted_in_both_positions(capsys):
    _, before, _ = run(capsys, ["--pretty", "random", "--n", "2"])
    _, after, _ = run(capsys, ["random", "--n", "2", "--pretty"])
    assert before == after and before.count("\n") > 1
    _, plain, _ = run(capsys, ["random", "--n", "2"])
    assert json.loads(plain) == json.loads(before)


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--count", "-3"])
    assert err.value.code == 2


@pytest.mark.skipif(shutil.which("semidirect") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["semidirect", "random", "--seed", "3", "--n", "3"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["kind"] == "rank_table"
