import io
import json

import pytest

from bluher.cli import main


def run(argv):
    out = io.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_solve_gf8():
    code, text = run(["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1"])
    doc = json.loads(text)
    assert code == 0
    assert set(doc) == {"params", "case", "count", "roots", "diagnostics", "version"}
    assert doc["count"] == 3 and doc["roots"] == [2, 4, 6]
    assert doc["params"]["poly"] == [1, 1, 0, 1]


def test_solve_m2_counts():
    for a in range(1, 9):
        code, text = run(["solve", "--p", "3", "--k", "1", "--n", "2", "--a", str(a)])
        assert code == 0 and json.loads(text)["count"] in (0, 1, 2)


def test_solve_pd1_gf64():
    code, text = run(["solve", "--p", "2", "--k", "2", "--n", "6", "--a", "1"])
    assert json.loads(text)["count"] == 5


def test_solve_text_format():
    code, text = run(["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--format", "text"])
    assert code == 0 and "count: 3" in text


def test_custom_poly():
    code, text = run(["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--poly", "1,0,1,1"])
    doc = json.loads(text)
    assert doc["params"]["poly_str"] == "X^3 + X^2 + 1"
    assert doc["count"] == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["solve", "--p", "4", "--k", "1", "--n", "3", "--a", "1"],
        ["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "0"],
        ["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "8"],
        ["solve", "--p", "2", "--k", "1", "--n", "3", "--a", "1", "--poly", "1,1,1,1"],
        ["param", "--p", "2", "--k", "1", "--n", "3", "--u", "1"],
    ],
)
def test_invalid_parameters_exit_2(argv):
    assert run(argv)[0] == 2


def test_field_too_large_exit_3():
    assert run(["census", "--p", "2", "--k", "1", "--n", "16"])[0] == 3
    assert run(["verify", "--p", "2", "--k", "1", "--n", "17", "--a", "1"])[0] == 3


def test_census():
    code, text = run(["census", "--p", "2", "--k", "1", "--n", "3", "--verify"])
    doc = json.loads(text)
    assert code == 0
    assert {"i": 3, "M": 1} in doc["rows"]
    assert doc["total"] == 7
    assert doc["verification"] == {"agreements": 7, "mismatches": 0}
    code, text = run(["census", "--p", "2", "--k", "1", "--n", "3", "--verify", "--format", "text"])
    assert "agreements: 7, mismatches: 0" in text


def test_param():
    for u in range(2, 8):
        code, text = run(["param", "--p", "2", "--k", "1", "--n", "3", "--u", str(u)])
        doc = json.loads(text)
        assert code == 0 and doc["F_a_is_zero"] and doc["a"] == 1 and doc["count"] == 3


def test_verify_command():
    code, text = run(["verify", "--p", "5", "--k", "1", "--n", "3", "--a", "1"])
    doc = json.loads(text)
    assert code == 0 and doc["status"] == "match"
    assert {"x0", "beta", "w0"} <= set(doc["diagnostics"])
