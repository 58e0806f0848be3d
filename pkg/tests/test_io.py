import json

import pytest
from hypothesis import given

from conftest import matroids
from semidirect import constructions as C
from semidirect.io import (
    OPS,
    ParseError,
    evaluate,
    matrix_from_json,
    matrix_to_json,
    matroid_from_json,
    matroid_to_json,
    set_system_from_json,
    set_system_to_json,
)
from semidirect.linearalg import column_matroid
from semidirect.transversal import SetSystem, transversal_matroid
from semidirect.verify import fixtures as F


def roundtrip(obj):
    return json.loads(json.dumps(obj))


@given(matroids(max_n=6))
def test_rank_table_roundtrip(M):
    assert matroid_from_json(roundtrip(matroid_to_json(M))) == M


def test_every_source_kind():
    D = F.five_point_matrix()
    assert matrix_from_json(roundtrip(matrix_to_json(D))) == D
    assert matroid_from_json(matrix_to_json(D)) == column_matroid(D)
    S = SetSystem.from_labels("abc", [["a", "b"], ["c"]])
    obj = roundtrip(set_system_to_json(S))
    assert set_system_from_json(obj) == S
    assert matroid_from_json(obj) == transversal_matroid(S)
    bases = {"kind": "bases", "ground": list("abcde"), "data": [["a", "b"], ["a", "c"], ["a", "e"], ["b", "e"], ["c", "e"]]}
    assert matroid_from_json(bases) == F.five_point()
    uni = {"kind": "uniform", "ground": ["1", "2", "3"], "data": {"r": 2}}
    assert matroid_from_json(uni) == C.uniform(2, ["1", "2", "3"])


@pytest.mark.parametrize(
    "obj, path",
    [
        ([], "$"),
        ({"ground": ["a"]}, "$.kind"),
        ({"kind": "nope", "ground": [], "data": []}, "$.kind"),
        ({"kind": "rank_table", "ground": ["a"], "data": [0]}, "$.data"),
        ({"kind": "rank_table", "ground": ["a"], "data": [0, "1"]}, "$.data[1]"),
        ({"kind": "rank_table", "ground": ["a", 3], "data": [0]}, "$.ground[1]"),
        ({"kind": "rank_table", "ground": ["a"], "data": [0, 2]}, "$"),
        ({"kind": "bases", "ground": ["a"], "data": [["z"]]}, "$.data[0][0]"),
        ({"kind": "uniform", "ground": ["a"], "data": {"r": True}}, "$.data.r"),
        ({"kind": "uniform", "ground": ["a"], "data": {"r": 2}}, "$"),
        ({"kind": "matrix", "p": 4, "cols": ["a"], "entries": [[1]]}, "$"),
        ({"kind": "matrix", "p": 5, "cols": ["a"], "entries": [[1, 2]]}, "$.entries[0]"),
        ({"kind": "matrix", "p": 5, "rows": 2, "cols": ["a"], "entries": [[1]]}, "$.rows"),
        ({"kind": "set_system", "ground": ["a"], "sets": [["b"]]}, "$.sets[0][0]"),
    ],
)
def test_parse_errors_carry_paths(obj, path):
    with pytest.raises(ParseError) as err:
        matroid_from_json(obj)
    assert err.value.path == path


def test_expression_errors_carry_paths():
    with pytest.raises(ParseError) as err:
        evaluate({"op": "dual", "M": {"op": "frobnicate"}})
    assert err.value.path == "$.M.op"
    with pytest.raises(ParseError) as err:
        evaluate({"op": "principal_sum", "M": {"op": "uniform", "r": 1, "ground": ["a"]}})
    assert err.value.path == "$.N"
    with pytest.raises(ParseError) as err:
        evaluate({"op": "principal_extension", "K": {"op": "uniform", "r": 1, "ground": ["a"]}, "A": [], "b": 7})
    assert err.value.path == "$.b"
    with pytest.raises(ParseError):
        evaluate({"op": "direct_sum", "M": {"op": "uniform", "r": 1, "ground": ["a"]}, "N": {"op": "uniform", "r": 1, "ground": ["a"]}})


def test_evaluate_operations():
    u = lambda r, g: {"op": "uniform", "r": r, "ground": list(g)}  # noqa: E731
    assert evaluate({"op": "dual", "M": {"op": "dual", "M": u(2, "abcd")}}) == C.uniform(2, "abcd")
    expr = {"op": "principal_sum", "M": u(2, "abc"), "N": u(1, "xy"), "A": ["a"], "B": ["x"]}
    assert evaluate(expr) == C.principal_sum(C.uniform(2, "abc"), C.uniform(1, "xy"), ["a"], ["x"])
    assert evaluate({"op": "minor", "M": u(2, "abc"), "contract": ["a"]}) == C.uniform(1, "bc")
    assert evaluate({"op": "truncation", "M": u(3, "abc"), "k": 1}) == C.uniform(1, "abc")
    assert evaluate({"op": "free_extension", "M": u(1, "ab"), "e": "c"}) == C.uniform(1, "abc")
    lift = {"op": "higgs_lift", "Q": u(1, "abc"), "L": u(3, "abc"), "i": 1}
    assert evaluate(lift) == C.uniform(2, "abc")
    three = F.three_lines_spec()
    nested = {
        "op": "principal_sum",
        "M": matroid_to_json(three.M),
        "N": matroid_to_json(three.N),
        "A": three.M.ground.labels_of(three.A),
        "B": three.N.ground.labels_of(three.B),
    }
    P = evaluate(roundtrip(nested))
    assert P == F.three_lines() and P.rank() == 4 and P.size == 10
    assert {"union", "intersection", "higgs_semidirect", "extension_on_flat"} <= set(OPS)
