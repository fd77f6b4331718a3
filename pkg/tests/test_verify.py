import json

import pytest

from minorclique import bounds, verify


def test_quick_suite_passes():
    report = verify.verify_suite("quick", seed=0)
    failed = [c for c in report["checks"] if not c["passed"]]
    assert report["passed"], failed
    names = {c["name"] for c in report["checks"]}
    assert "dense_hadwiger_formula" in names
    assert "recorded_wood_crossover" in names


def test_report_shape_and_determinism():
    a = verify.verify_suite("quick", seed=3)
    b = verify.verify_suite("quick", seed=3)
    assert json.dumps(a) == json.dumps(b)
    for chk in a["checks"]:
        assert set(chk) == {"name", "passed", "counters", "failures"}
    with pytest.raises(ValueError):
        verify.verify_suite("medium")


def test_fault_injection_is_reported(monkeypatch):
    # tamper a formula constant: the tree count loses its "+ (n-t+2) * ..."
    real = bounds.tree_count
    monkeypatch.setattr(bounds, "tree_count",
                        lambda t, k, n: real(t, k, n) + (k == t - 1))
    res = verify.check_t2_tree_counts(n_max=40)
    assert not res.passed
    assert res.failures


def test_fault_injection_whole_suite(monkeypatch):
    import minorclique.minors as minors

    real = minors.dense_hadwiger
    monkeypatch.setattr(minors, "dense_hadwiger", lambda g: real(g) + (g.n == 5))
    report = verify.verify_suite("quick", seed=0)
    assert not report["passed"]
    assert any(not c["passed"] for c in report["checks"])


def test_recorded_campaigns_never_fail():
    crossover = verify.recorded_wood_crossover(t=3 * 400 + 1)
    assert crossover.passed
    assert "grid" in crossover.counters
    shape = verify.recorded_matching_complement_shape(t_max=25)
    assert shape.passed and shape.counters["cells"] > 0
