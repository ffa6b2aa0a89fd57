import json

import pytest

import gcmwb

E3 = "ring A = F101[x,y]/(x^2, x*y^3); params Q = (y);"


def test_suite_report_is_versioned_and_sharp():
    code, rep = gcmwb.run_job_json(E3 + " run suite;")
    assert code == 0
    assert rep["version"] == gcmwb.REPORT_VERSION
    assert rep["ia"] == {"value": 3, "status": "stabilized", "trace": [1, 2, 3, 3, 3, 3, 3, 3, 3, 3]}
    thm = [e for e in rep["entries"] if e["bound"] == "Thm2.5"]
    assert thm and thm[0]["lhs"] == thm[0]["rhs"] == 2


def test_text_report_line():
    code, out = gcmwb.run_job(E3 + " run suite;", format="text")
    assert code == 0
    assert "Thm2.5: 2 ≤ 2 PASS (sharp)" in out


def test_cap_error_exit_code():
    code, out = gcmwb.run_job(E3 + " run suite with n=1;")
    assert code == 2
    assert "cap exceeded" in out


def test_seed_override_is_recorded():
    _, a = gcmwb.run_job_json(E3 + " run suite;", seed=11)
    _, b = gcmwb.run_job_json(E3 + " run suite;", seed=11)
    assert a == b
    assert a["config"]["seeds"]["engine"] == 11


def test_parse_error_position():
    with pytest.raises(gcmwb.ParseError) as info:
        gcmwb.normalize_job("ring A = F4[x]/();")
    assert "characteristic must be prime" in str(info.value)
    assert (info.value.line, info.value.column) == (1, 10)


def test_normalize_round_trip():
    text = gcmwb.normalize_job(E3 + " run graded with n=4;")
    assert gcmwb.normalize_job(text) == text


def test_engine_functions():
    assert gcmwb.colength(["x", "y"], ["x^2", "x*y^3"], ["y"]) == 2
    assert gcmwb.colength(["x", "y"], [], ["x"]) is None
    inv = gcmwb.invariants(["x", "y", "u", "v"], ["x*u", "x*v", "y*u", "y*v"], ["x-u", "y-v"])
    assert (inv["colength"], inv["multiplicity"], inv["iq"], inv["ia"]) == (3, 2, 1, 1)
    with pytest.raises(gcmwb.EngineError):
        gcmwb.invariants(["x", "y"], [], ["x", "x+x^2"])


def test_gcm_test_verdict():
    code, rep = gcmwb.run_job_json("ring C = F101[x,y,z]/(x*y, x*z); params Q = (x-y, z); run gcm-test;")
    assert code == 0
    assert rep["verdict"] == "not gCM"
    json.dumps(rep)
