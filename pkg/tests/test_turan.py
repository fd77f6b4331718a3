import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_graphs, random_graph
from minorclique.graphs import clique_census, clique_number, count_k_cliques
from minorclique.minors import has_clique_minor
from minorclique.turan import (
    MultipartiteSpec,
    balanced_k_cliques_binomial,
    c_star_sandwich,
    materialize,
    multipartite_k_cliques,
    omega_star_range_check,
    part_size_bound_check,
    t_star,
    turan_spec,
)


def test_spec_canonical_and_validated():
    assert MultipartiteSpec((1, 3, 2)).parts == (3, 2, 1)
    assert MultipartiteSpec((2, 2)).is_balanced
    assert not MultipartiteSpec((3, 1)).is_balanced
    with pytest.raises(ValueError):
        MultipartiteSpec(())
    with pytest.raises(ValueError):
        MultipartiteSpec((2, 0))


def test_turan_spec_examples():
    assert turan_spec(7, 3).parts == (3, 2, 2)
    assert turan_spec(6, 6).parts == (1,) * 6
    assert turan_spec(13, 6).parts == (3, 2, 2, 2, 2, 2)
    for bad in ((5, 0), (3, 4)):
        with pytest.raises(ValueError):
            turan_spec(*bad)


def test_multipartite_counts_examples():
    assert multipartite_k_cliques(MultipartiteSpec((2, 2, 1)), 3) == 4
    assert multipartite_k_cliques(MultipartiteSpec((2, 2)), 3) == 0
    assert multipartite_k_cliques(MultipartiteSpec((3, 2, 2, 2)), 2) == 30
    assert multipartite_k_cliques(MultipartiteSpec((5,)), 0) == 1


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=6), st.integers(0, 7))
def test_dp_matches_materialized_and_binomial(parts, k):
    spec = MultipartiteSpec(tuple(parts))
    dp = multipartite_k_cliques(spec, k)
    if spec.n_vertices <= 12:
        assert dp == count_k_cliques(materialize(spec), k)
    if spec.is_balanced:
        assert dp == balanced_k_cliques_binomial(spec, k)


def test_materialize_cap():
    with pytest.raises(ValueError):
        materialize(MultipartiteSpec((3000,)), cap=2000)


def test_t_star_examples():
    r = t_star(10, 8)
    assert (r.omega_star, r.count) == (9, 17)
    assert r.spec.parts == (2,) + (1,) * 8
    r = t_star(2, 1)
    assert (r.omega_star, r.count) == (1, 2) and r.spec.parts == (2,)
    # the scan is its own oracle: re-check by materializing every candidate
    r = t_star(12, 4)
    best = max(count_k_cliques(materialize(turan_spec(23 - w, w)), 4) for w in range(4, 12))
    assert r.count == best
    for bad in ((5, 5), (5, 0), (1, 1)):
        with pytest.raises(ValueError):
            t_star(*bad)


def test_t_star_matches_unpruned_scan(rng):
    for _ in range(50):
        t = rng.randint(2, 45)
        k = rng.randint(1, t - 1)
        r = t_star(t, k)
        counts = {w: multipartite_k_cliques(turan_spec(2 * t - w - 1, w), k)
                  for w in range(k, t)}
        best = max(counts.values())
        assert r.count == best
        assert r.omega_star == min(w for w, c in counts.items() if c == best)


def test_t_star_result_invariants(rng):
    for _ in range(40):
        t = rng.randint(2, 60)
        k = rng.randint(1, t - 1)
        r = t_star(t, k)
        assert k <= r.omega_star <= t - 1
        assert r.spec.n_vertices == 2 * t - r.omega_star - 1
        assert r.spec.is_balanced
        obj = json.loads(r.to_json())
        assert obj == {"t": t, "k": k, "omega": r.omega_star,
                       "parts": list(r.spec.parts), "count": str(r.count)}


def test_zykov_small_exhaustive():
    # all graphs on <= 5 vertices: the balanced graph maximizes every count
    for n in range(1, 6):
        best = {}
        for g in all_graphs(n):
            w = clique_number(g)
            for k, c in enumerate(clique_census(g)):
                key = (w, k)
                if c > best.get(key, -1):
                    best[key] = c
        for w in range(1, n + 1):
            for k in range(n + 1):
                brute = max(best.get((w2, k), 0) for w2 in range(1, w + 1))
                assert brute == multipartite_k_cliques(turan_spec(n, w), k)


def test_zykov_one_sided_random(rng):
    # n = 7, 8: random K_{w+1}-free graphs never beat the balanced value
    for _ in range(150):
        n = rng.randint(7, 8)
        g = random_graph(rng, n, rng.random())
        w = clique_number(g)
        census = clique_census(g)
        for k in range(n + 1):
            assert census[k] <= multipartite_k_cliques(turan_spec(n, w), k)


def test_optimizer_saturation():
    # any balanced spec with vertices + parts < 2t-1 is beaten at every k
    for t in range(2, 9):
        for k in range(1, t):
            best = -1
            argmax = []
            for l in range(1, 2 * t - 1):
                for n in range(l, 2 * t - l):
                    c = multipartite_k_cliques(turan_spec(n, l), k)
                    if c > best:
                        best, argmax = c, [(n, l)]
                    elif c == best:
                        argmax.append((n, l))
            assert best > 0
            assert all(n + l == 2 * t - 1 for n, l in argmax)


def test_optimizer_minor_free():
    for t in range(2, 8):
        for k in range(1, t):
            g = materialize(t_star(t, k).spec)
            assert has_clique_minor(g, t) is None


def test_ratio_bound_spot():
    for t in range(3, 25):
        for k in range(2, t):
            assert t_star(t, k - 1).count <= 4 * t * t * t_star(t, k).count


def test_h_monotone_under_shift(rng):
    for _ in range(60):
        t = rng.randint(3, 40)
        k = rng.randint(2, t - 1)
        i = rng.randint(0, k - 1)
        if t - i < 2 or k - i < 1:
            continue
        assert t_star(t, k).count >= t_star(t - i, k - i).count


def test_sandwich_examples():
    lo, up = c_star_sandwich(1000, 5)
    want = math.log2(math.comb(999, 5)) + 5 * math.log2(1.6)
    assert abs(lo.log2 - want) < 1e-9
    # clamp active once k >= t/8
    lo, up = c_star_sandwich(64, 8)
    assert lo.log2 == pytest.approx(math.log2(math.comb(63, 8)))
    assert up.log2 == pytest.approx(math.log2(math.comb(63, 8)) + 8)


def test_sandwich_brackets_t_star(rng):
    for _ in range(30):
        t = rng.randint(26, 200)
        k = rng.randint(25, t - 1)
        lo, up = c_star_sandwich(t, k)
        mid = math.log2(t_star(t, k).count)
        assert lo.log2 <= mid + 1e-9
        assert mid <= up.log2 + 1e-9


def test_part_size_bound_examples():
    assert part_size_bound_check(t_star(12, 4).spec, 4)
    assert part_size_bound_check(MultipartiteSpec((1, 1, 1)), 2)
    assert not part_size_bound_check(MultipartiteSpec((10, 1, 1)), 3)
    with pytest.raises(ValueError):
        part_size_bound_check(MultipartiteSpec((2, 2)), 1)


def test_part_size_bound_holds_at_optimizer(rng):
    for _ in range(40):
        t = rng.randint(3, 120)
        k = rng.randint(2, t - 1)
        assert part_size_bound_check(t_star(t, k).spec, k)


def test_omega_star_range_examples():
    assert t_star(9, 6).omega_star == 8
    assert omega_star_range_check(9, 6)
    assert omega_star_range_check(2, 1)
    assert omega_star_range_check(50, 8)
    # at k = 1 the optimizer is the single-part graph; the window misses it
    assert not omega_star_range_check(20, 1)
