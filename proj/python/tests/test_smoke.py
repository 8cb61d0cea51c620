import pytest

import quiverlab as ql

R = [[2, 1, 0, 0], [3, 2, 1], [4, 1], [2]]


def test_zelevinsky_golden():
    assert ql.zelevinsky(3, R) == [7, 10, 3, 4, 11, 1, 5, 6, 8, 2, 9]


def test_codim_and_lace_array():
    assert ql.expected_codim(3, R) == 9
    assert ql.lace_array(3, R)["s"] == [[1, 1, 0, 0], [0, 1, 1], [2, 0], [1]]


def test_wmin_contains_golden_diagram():
    shapes = [[(m["rows"], m["cols"]) for m in W] for W in ql.wmin(3, R)]
    assert all(s == [(2, 3), (3, 4), (4, 2)] for s in shapes)
    assert len(shapes) >= 1


def test_component_formula_small():
    assert ql.component_check(1, [[1, 0], [1]])["equal"] is True


def test_double_schubert():
    terms = ql.schubert([2, 1], double=True)["terms"]
    assert {(tuple(t["mono"].items()), t["coeff"]) for t in terms} == {
        ((("x1", 1),), "1"),
        ((("y1", 1),), "-1"),
    }


def test_split_a_reassembles_transposition():
    assert ql.split_a([2, 1], [1]) == {"terms": [{"partitions": [[1]], "coeff": 1}]}


def test_theorem2_small():
    rep = ql.theorem2_check([3, 1, 2], 2)
    assert rep["ok"] and rep["bijective"]


def test_errors_are_value_errors():
    with pytest.raises(ql.QuiverError):
        ql.zelevinsky(1, [[1, 2], [1]])
    with pytest.raises(ValueError):
        ql.schubert([1, 1])
