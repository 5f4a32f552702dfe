import io
import json

import pytest

from tepkit import fixtures
from tepkit.cli import run
from tepkit.serialize import matrix_from_dict

E1 = str(fixtures.fixture_path("E1.T.json"))
E2 = str(fixtures.fixture_path("E2.A.json"))
E3A = str(fixtures.fixture_path("E3.A.json"))


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def test_classify():
    status, out, err = _run("classify", E2, E1)
    assert status == 0 and not err
    doc = json.loads(out)
    assert doc["t_ep"]["holds"] is True and doc["ep"]["holds"] is False


def test_pinv():
    status, out, _ = _run("pinv", E1)
    doc = json.loads(out)
    x = matrix_from_dict(doc["pinv"])
    assert status == 0
    assert abs(x - fixtures.E1_T.conj().T).max() <= 1e-12
    assert set(doc["penrose_residuals"]) == {"AXA=A", "XAX=X", "(AX)*=AX", "(XA)*=XA"}


def test_decompose_kinds():
    assert json.loads(_run("decompose", E2, E1)[1])["kind"] == "square"
    doc = json.loads(_run("decompose", E2, E1, "--rect")[1])
    assert doc["kind"] == "rectangular" and "V" in doc
    assert all(r["holds"] for r in doc["residuals"].values())


def test_decompose_not_t_ep_exit_3():
    status, out, err = _run("decompose", E3A, E1)
    assert status == 3 and not out
    doc = json.loads(err)
    assert doc["error"] == "domain" and "DEF" in doc["residuals"]
    assert "Traceback" not in err


def test_generate_pair():
    status, out, _ = _run("generate", "--kind", "t_ep", "--rows", "4", "--cols", "3", "--rank", "2")
    doc = json.loads(out)
    assert status == 0 and set(doc) == {"A", "T"}
    assert doc["A"]["rows"] == 4 and doc["A"]["cols"] == 3


def test_generate_single():
    doc = json.loads(_run("generate", "--kind", "unitary", "--rows", "3")[1])
    assert doc["rows"] == 3 and len(doc["data"]) == 9


@pytest.mark.parametrize("argv", [
    ("generate", "--kind", "ep", "--rows", "3", "--rank", "5"),
    ("generate", "--kind", "bogus", "--rows", "3"),
    ("verify", "--law", "NOPE"),
    ("classify", E2),
    ("nonsense",),
])
def test_usage_errors_exit_2(argv):
    status, out, err = _run(*argv)
    assert status == 2 and not out
    assert json.loads(err)["error"] == "usage"


def test_input_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"rows": 1, "cols": 1}')
    status, _, err = _run("pinv", str(bad))
    assert status == 2 and "data" in json.loads(err)["message"]
    status, _, err = _run("pinv", str(tmp_path / "missing.json"))
    assert status == 2


def test_precondition_exit_3(tmp_path):
    t = tmp_path / "t.json"
    t.write_text(json.dumps({"rows": 1, "cols": 1, "data": [[2, 0]]}))
    status, _, err = _run("decompose", str(t), str(t))
    assert status == 3 and json.loads(err)["error"] == "precondition"


def test_verify_single_and_negative():
    status, out, _ = _run("verify", "--law", "CHAR6", "--trials", "10")
    assert status == 0 and json.loads(out)["passes"] == 10
    status, out, _ = _run("verify", "--law", "TEP-implies-TN-FALSE", "--trials", "3")
    doc = json.loads(out)
    assert status == 0 and doc["ok"] and doc["failures"]


def test_verify_failure_exit_1():
    # an absurdly strict tolerance makes exact identities fail numerically
    status, out, _ = _run("verify", "--law", "PINV-CHAR", "--trials", "5",
                          "--tol-atol", "0", "--tol-rtol", "0")
    assert status == 1 and json.loads(out)["ok"] is False


def test_verify_all():
    status, out, _ = _run("verify", "--law", "all", "--trials", "100", "--seed", "0")
    doc = json.loads(out)
    assert status == 0 and doc["ok"] and len(doc["reports"]) == 25


def test_env_rtol(monkeypatch):
    monkeypatch.setenv("TEPKIT_TOL_RTOL", "0")
    strict = json.loads(_run("classify", E2, E1, "--tol-atol", "0")[1])
    monkeypatch.setenv("TEPKIT_TOL_RTOL", "1e-10")
    loose = json.loads(_run("classify", E2, E1, "--tol-atol", "0")[1])
    assert loose["t_ep"]["holds"] is True
    assert strict["t_ep"]["residual"] == loose["t_ep"]["residual"]
    monkeypatch.setenv("TEPKIT_TOL_RTOL", "abc")
    status, _, err = _run("classify", E2, E1)
    assert status == 2 and "TEPKIT_TOL_RTOL" in err
    # an explicit flag wins over the environment
    assert _run("classify", E2, E1, "--tol-rtol", "1e-10")[0] == 0


def test_bad_tolerance_flag():
    status, _, err = _run("pinv", E1, "--tol-atol", "-1")
    assert status == 2 and json.loads(err)["error"] == "input"


def test_output_file(tmp_path):
    target = tmp_path / "out.json"
    status, out, _ = _run("pinv", E1, "--output", str(target))
    assert status == 0 and out == ""
    assert target.read_text() == _run("pinv", E1)[1]
    status, _, err = _run("pinv", E1, "-o", str(tmp_path / "no" / "such" / "dir.json"))
    assert status == 2 and "--output" in err
