import json

import dcl


def test_apply_dirac():
    # A+ (m_1h)^(2) = -2h (m_1h)^(1) at h = 1
    assert dcl.apply("A+", "X1^(2) e0", n=1, h="1", family="-") == "-2 X1^(1) e0"


def test_eval_exact():
    assert dcl.eval("X1^(2) e0", ["3"], n=1, h="1", family="-") == "6 e0"
    assert dcl.eval("X1^(2) e0", ["1/2"], n=1, h="1/2", family="-") == "0"


def test_decompose_hand_case():
    res = json.loads(dcl.decompose("X1^(1) e0", n=2, h="1", family="-"))
    assert res["feasible"] is True
    assert res["residual"]["terms"] == []
    assert len(res["components"]) == 2


def test_kernel_dimension():
    assert dcl.kernel_dimension(1, n=2, h="1", family="-") == 4


def test_verify_filter():
    code, report = dcl.verify(filter="Eq41")
    assert code == 0
    data = json.loads(report)
    assert data["claims"][0]["status"] == "confirmed"


def test_claim_catalogue():
    ids = dcl.claim_ids()
    assert len(ids) >= 45
    assert "Eq24" in ids
