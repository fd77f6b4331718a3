"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Every criterion runs at its stated scale and tolerance (all exact-integer
comparisons are 0-tolerance by construction).  Stated runtime limits are
asserted.  Run with `pytest tests/test_acceptance.py -v -s` to watch the
lines appear; the same campaigns back `minorclique verify --profile full`.
"""

import math
import time

import pytest

from minorclique import verify
from minorclique.constructions import wood_counterexample_check
from minorclique.turan import omega_star_range_check, t_star


def report(num: int, name: str, ok: bool, detail: str = ""):
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {num:02d} {name}: {status}" + (f" ({detail})" if detail else ""))


def run_campaign(num, name, result, limit_s=None, elapsed=None):
    detail = " ".join(f"{k}={v}" for k, v in result.counters.items())
    if limit_s is not None:
        detail += f" elapsed={elapsed:.1f}s/{limit_s}s"
    report(num, name, result.passed, detail)
    assert result.passed, result.failures
    if limit_s is not None:
        assert elapsed <= limit_s, f"runtime {elapsed:.1f}s exceeds {limit_s}s"


def test_01_dense_hadwiger_formula():
    t0 = time.time()
    res = verify.check_dense_hadwiger(exhaustive_n=7, random_graphs=500, seed=0)
    run_campaign(1, "dense-hadwiger-formula", res, limit_s=300, elapsed=time.time() - t0)
    assert res.counters["dense_checked"] >= 500


def test_02_optimizer_family_minor_free():
    t0 = time.time()
    res = verify.check_turan_minor_free(t_max=7)
    run_campaign(2, "optimizer-family-minor-free", res, limit_s=120,
                 elapsed=time.time() - t0)
    assert res.counters["instances"] == sum(t - 1 for t in range(2, 8))


def test_03_zykov_oracle():
    t0 = time.time()
    res = verify.check_zykov_oracle(n_max=6)
    run_campaign(3, "balanced-maximizer-oracle", res, limit_s=600,
                 elapsed=time.time() - t0)


def test_04_glued_tree_exact_value():
    res = verify.check_t2_tree_counts(n_max=200, t_lo=4, t_hi=10, step=1)
    run_campaign(4, "glued-tree-exact-count", res)


def test_05_count_sandwich():
    t0 = time.time()
    res = verify.check_cstar_sandwich(t_max=200)
    run_campaign(5, "optimizer-count-sandwich", res, limit_s=300,
                 elapsed=time.time() - t0)
    assert res.counters["cells"] == sum(t - 25 for t in range(26, 201))


def test_06_optimizer_structure_window():
    # Faithful to the stated range 1 <= k < t <= 300.  The k = 1 cells with
    # t >= 17 fail: the 1-clique count 2t - w - 1 is strictly decreasing in
    # w, so the optimizer is the single-part graph with w* = 1, while the
    # window's lower end sqrt(t)/4 exceeds 1.  Reported precisely; the k >= 2
    # cells all pass.
    failures = []
    cells = 0
    for t in range(2, 301):
        for k in range(1, t):
            cells += 1
            if not omega_star_range_check(t, k):
                failures.append((t, k, t_star(t, k).omega_star))
    ok = not failures
    detail = f"cells={cells} violations={len(failures)}"
    if failures:
        ks = sorted({k for _, k, _ in failures})
        ts = sorted({t for t, _, _ in failures})
        detail += f" (all at k={ks}, t in [{ts[0]}, {ts[-1]}])"
    report(6, "optimizer-structure-window", ok, detail)
    assert ok, (f"{len(failures)} cells violate the part-count window; "
                f"first: {failures[:3]}, all with k in {sorted({k for _, k, _ in failures})}")


def test_07_very_large_k_optimizer():
    res = verify.check_large_k_optimizer(t_max=300)
    run_campaign(7, "very-large-k-optimizer", res)
    assert res.counters["cells"] > 10000


def test_08_peeling_invariants():
    res = verify.check_peeling_invariants(instances=500, seed=0)
    run_campaign(8, "peeling-invariants", res)
    assert res.counters["instances"] == 500


def test_09_branch_disk_soundness():
    res = verify.check_branch_disks(instances=200, seed=0)
    res2 = verify.check_dense_terminal()
    ok = res.passed and res2.passed
    report(9, "branch-disk-soundness", ok,
           " ".join(f"{k}={v}" for k, v in res.counters.items()))
    assert res.passed, res.failures
    assert res2.passed, res2.failures
    assert res.counters["models_confirmed"] >= 3


def test_10_capacity_strictly_decreasing():
    res = verify.check_f_decreasing(t_max=500)
    run_campaign(10, "small-host-capacity-decreasing", res)
    assert res.counters["triples"] > 2_000_000


def test_11_conjectured_ceiling_disproof():
    # stated at t = 10^6 + 1 "(= 1 mod 3)", but 10^6 + 1 = 2 (mod 3); the
    # nearest admissible value at that scale is t = 10^6 itself.
    t0 = time.time()
    res = verify.check_wood_disproof(t=10**6)
    elapsed = time.time() - t0
    margins = []
    for lam in (0.40, 0.45, 0.50, 0.55):
        r = wood_counterexample_check(10**6, lam)
        margins.append(r.construction_count.log2 - r.conjecture_bound.log2)
    run_campaign(11, "conjectured-ceiling-disproof", res, limit_s=1.0, elapsed=elapsed)
    assert min(margins) > 1e-6
    assert wood_counterexample_check(10**6, 0.70).verdict is False


def test_12_construction_closed_forms():
    res = verify.check_construction_counts(seed=0, n_cap=500)
    run_campaign(12, "construction-closed-forms", res)
    assert res.counters["matchings"] == 12


def test_13_count_ratio_bound():
    res = verify.check_cstar_ratio(t_max=60)
    run_campaign(13, "successive-count-ratio", res)
    assert res.counters["cells"] == sum(t - 2 for t in range(3, 61))


def test_14_upper_bound_dominance():
    res = verify.check_bound_dominance(seed=0)
    detail = " ".join(f"{k}={v}" for k, v in res.counters.items())
    report(14, "upper-bound-dominance", res.passed, detail)
    assert res.passed, res.failures
    # crude-bound comparisons below the large-t threshold are recorded only
    assert res.counters["crude_ok"] + res.counters["crude_violated"] > 0
