from __future__ import annotations

import io
import json


from eis4.cli import run


def call(*argv):
    out = io.StringIO()
    rc = run(list(argv), stdout=out)
    return rc, out.getvalue()


def test_rank():
    assert call("rank", "--mk", "6") == (0, '{"rank":3}\n')


def test_verify_shuffle():
    rc, out = call("verify", "--claim", "shuffle", "--k1", "3", "--k2", "4", "--terms", "30")
    assert rc == 0 and json.loads(out)["status"] == "pass"


def test_verify_theta_and_g():
    assert call("verify", "--claim", "theta", "--terms", "50")[0] == 0
    assert call("verify", "--claim", "g-product", "--k", "6", "--terms", "15")[0] == 0
    assert call("verify", "--claim", "g-decomp", "--k", "5")[0] == 2


def test_usage_errors():
    assert call("nope")[0] == 2
    assert call("rank")[0] == 2
    assert call("rank", "--mk", "2")[0] == 2


def test_det_and_kernel():
    rc, out = call("det", "--aw", "6")
    assert rc == 0 and json.loads(out) == {"w": 6, "det": "-180/1", "ord2": 2, "ord2_formula": 2,
                                           "status": "pass"}
    rc, out = call("kernel", "--delta-tilde", "12")
    assert json.loads(out)["dim"] == 2


def test_qexp_formats_deterministic():
    a = call("qexp", "--series", "H2", "--k", "2", "--k2", "3", "--terms", "6")
    assert a == call("qexp", "--series", "H2", "--k", "2", "--k2", "3", "--terms", "6")
    d = json.loads(a[1])
    assert d["constant"]["kind"] == "opaque" and d["truncation"] == 6
    rc, out = call("qexp", "--series", "G", "--k", "4", "--terms", "3", "--format", "csv")
    assert out.splitlines()[0] == "n,generator,re,im"
    assert "2,1,-1/96,0/1" in out


def test_qexp_env_terms(monkeypatch):
    monkeypatch.setenv("EIS4_TERMS", "5")
    assert json.loads(call("qexp", "--series", "H", "--k", "3")[1])["truncation"] == 5


def test_relations_conjecture_express():
    d = json.loads(call("relations", "--k", "6", "--paper-literal")[1])
    rel = d["relations"][0]
    assert rel["atilde"][-1] == "-3/4" and rel["errata"][0]["printed"] == "3/4"
    assert "atilde_paper_literal" in rel
    d = json.loads(call("conjecture", "--N", "4", "--k", "6", "--j", "1")[1])
    assert d["vector"] == ["-8/1", "-4/1", "-2/3", "1/1", "1/1"]
    rc, out = call("express", "--N", "4", "--k", "10", "--j", "3")
    assert rc == 0 and json.loads(out)["coefficients"] == ["-20/21", "-248/105"]


def test_ttilde():
    d = json.loads(call("ttilde", "--k1", "1", "--k2", "1", "--tol", "1e-10")[1])
    assert abs(d["value"]["re"] + 1 / 32) < 1e-14 and d["method"] == "accelerated_sum"
    assert call("ttilde", "--k1", "1", "--k2", "1", "--tol", "1e-30")[0] == 1


def test_paper_suite_subset():
    rc, out = call("paper-suite", "--only", "examples", "theta")
    d = json.loads(out)
    assert rc == 0 and [c["claim"] for c in d["claims"]] == ["theta", "examples"]
    rc, out = call("paper-suite", "--only", "examples", "--paper-literal")
    assert rc == 1 and json.loads(out)["status"] == "fail"
    assert call("paper-suite", "--only", "bogus")[0] == 2
