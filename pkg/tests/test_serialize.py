import json

import numpy as np
import pytest
from hypothesis import given

from tepkit import fixtures
from tepkit.errors import InputError
from tepkit.serialize import dumps, load_matrix, matrix_from_dict, matrix_to_dict

from strategies import low_rank_matrices


@given(low_rank_matrices())
def test_round_trip_is_exact(a):
    back = matrix_from_dict(json.loads(dumps(a)))
    assert np.array_equal(back, a)


def test_dict_layout():
    d = matrix_to_dict(np.array([[1 + 2j, 3]]))
    assert d == {"rows": 1, "cols": 2, "data": [[1.0, 2.0], [3.0, 0.0]]}


def test_dumps_is_stable():
    text = dumps({"b": np.array([[1j]]), "x": float("inf"), "ok": np.bool_(True)})
    assert text == dumps({"b": np.array([[1j]]), "x": float("inf"), "ok": np.bool_(True)})
    assert '[0.0, 1.0]' in text
    doc = json.loads(text)
    assert doc["x"] is None and doc["ok"] is True


@pytest.mark.parametrize("obj,field", [
    ({"cols": 1, "data": [[0, 0]]}, "rows"),
    ({"rows": 1, "data": [[0, 0]]}, "cols"),
    ({"rows": 1, "cols": 1}, "data"),
    ({"rows": 0, "cols": 1, "data": []}, "rows"),
    ({"rows": 1, "cols": True, "data": [[0, 0]]}, "cols"),
    ({"rows": 1, "cols": 2, "data": [[0, 0]]}, "data"),
    ({"rows": 1, "cols": 1, "data": [[0]]}, "data[0]"),
    ({"rows": 1, "cols": 1, "data": [["a", 0]]}, "data[0]"),
])
def test_errors_name_the_field(obj, field):
    with pytest.raises(InputError, match=field.replace("[", r"\[")):
        matrix_from_dict(obj)


def test_not_an_object():
    with pytest.raises(InputError):
        matrix_from_dict([1, 2])


def test_load_errors(tmp_path):
    with pytest.raises(InputError, match="cannot read"):
        load_matrix(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError, match="invalid JSON"):
        load_matrix(bad)


@pytest.mark.parametrize("name,const", [
    ("E1.T.json", fixtures.E1_T),
    ("E2.A.json", fixtures.E2_A),
    ("E3.A.json", fixtures.E3_A),
    ("E3.T.json", fixtures.E3_T),
])
def test_shipped_fixtures(name, const):
    assert np.array_equal(fixtures.load_fixture(name), const)
