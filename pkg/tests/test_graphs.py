import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_graphs, naive_count_k_cliques, random_graph
from minorclique.graphs import (
    Graph,
    GraphFormatError,
    clique_census,
    clique_number,
    count_k_cliques,
    from_edge_json,
    from_graph6,
    induced_subgraph,
    max_missing_degree,
    parse_graph,
    serialize_graph,
    to_graph6,
    total_clique_count,
)


def test_construction_validates():
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, (1,))  # self loop
    with pytest.raises(ValueError):
        Graph(1, (2,))  # out of range
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 5)])


def test_induced_subgraph_examples():
    k3, labels = induced_subgraph(Graph.complete(4), 0b0111)
    assert k3 == Graph.complete(3) and labels == (0, 1, 2)

    g = Graph.cycle(5)
    same, labels = induced_subgraph(g, g.vertex_mask)
    assert same == g and labels == (0, 1, 2, 3, 4)

    # C5 on {0,1,3}: only the edge (0,1) survives
    sub, labels = induced_subgraph(g, {0, 1, 3})
    assert labels == (0, 1, 3)
    assert sub.edges() == [(0, 1)]

    with pytest.raises(ValueError):
        induced_subgraph(g, 1 << 7)


def test_count_examples():
    assert count_k_cliques(Graph.complete(4), 3) == 4
    c4 = Graph.cycle(4)
    assert count_k_cliques(c4, 3) == 0
    assert count_k_cliques(Graph.complete(3), 0) == 1
    assert count_k_cliques(Graph.empty(7), 1) == 7
    assert count_k_cliques(Graph.complete(3), 5) == 0
    with pytest.raises(ValueError):
        count_k_cliques(c4, -1)


def test_count_petersen(petersen):
    assert count_k_cliques(petersen, 2) == 15
    assert count_k_cliques(petersen, 3) == 0


def test_count_against_subset_enumeration(rng):
    for n in range(6):
        for g in all_graphs(n):
            for k in range(n + 2):
                assert count_k_cliques(g, k) == naive_count_k_cliques(g, k)
    for _ in range(25):
        n = rng.randint(7, 10)
        g = random_graph(rng, n, rng.random())
        for k in range(n + 1):
            assert count_k_cliques(g, k) == naive_count_k_cliques(g, k)


def test_complete_graph_count_identity():
    for m in range(9):
        assert total_clique_count(Graph.complete(m)) == 2**m


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_count_relabel_invariant(data):
    n = data.draw(st.integers(2, 9))
    edges = data.draw(st.sets(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1])))
    perm = data.draw(st.permutations(range(n)))
    g = Graph.from_edges(n, edges)
    h = g.relabel(list(perm))
    k = data.draw(st.integers(0, n))
    assert count_k_cliques(g, k) == count_k_cliques(h, k)


def test_census_matches_counts(rng):
    for _ in range(30):
        n = rng.randint(0, 9)
        g = random_graph(rng, n, rng.random())
        assert clique_census(g) == [count_k_cliques(g, k) for k in range(n + 1)]


def test_clique_number_examples():
    assert clique_number(Graph.complete(6)) == 6
    assert clique_number(Graph.cycle(5)) == 2
    k5_minus = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)
                                    if (i, j) != (0, 1)])
    assert clique_number(k5_minus) == 4
    assert clique_number(Graph.empty(3)) == 1
    assert clique_number(Graph.empty(0)) == 0


def test_max_missing_degree_examples():
    assert max_missing_degree(Graph.complete(5)) == 0
    k6_minus_pm = Graph.from_edges(6, [(i, j) for i in range(6) for j in range(i + 1, 6)
                                       if (i, j) not in ((0, 1), (2, 3), (4, 5))])
    assert max_missing_degree(k6_minus_pm) == 1
    t73 = Graph.from_edges(7, [(i, j) for i in range(7) for j in range(i + 1, 7)
                               if not (i // 3 == 0 and j // 3 == 0)
                               and not ({i, j} <= {3, 4}) and not ({i, j} <= {5, 6})])
    assert max_missing_degree(t73) == 2
    with pytest.raises(ValueError):
        max_missing_degree(Graph.empty(0))


# -- graph6 / JSON ---------------------------------------------------------


def reference_graph6_decode(s: str) -> Graph:
    """Independent decoder: bit-string slicing, upper triangle column-wise."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if s[0] == "~":
        raise NotImplementedError("reference decoder handles n <= 62 only")
    n = ord(s[0]) - 63
    bit_string = "".join(format(ord(c) - 63, "06b") for c in s[1:])
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bit_string[idx] == "1":
                edges.append((i, j))
            idx += 1
    return Graph.from_edges(n, edges)


def test_graph6_k5():
    g = from_graph6("D~{")
    assert g == Graph.complete(5)
    assert g == reference_graph6_decode("D~{")
    assert to_graph6(Graph.complete(5)) == "D~{"


def test_graph6_against_reference(rng):
    for _ in range(60):
        n = rng.randint(0, 13)
        g = random_graph(rng, n, rng.random())
        assert reference_graph6_decode(to_graph6(g)) == g if n else from_graph6(to_graph6(g)) == g


def test_graph6_large_n_header():
    g = Graph.empty(100)
    s = to_graph6(g)
    assert s.startswith("~")
    assert from_graph6(s) == g
    assert from_graph6(">>graph6<<" + to_graph6(Graph.cycle(5))) == Graph.cycle(5)


def test_graph6_malformed():
    with pytest.raises(GraphFormatError):
        from_graph6("")
    with pytest.raises(GraphFormatError):
        from_graph6("D~")  # truncated body
    with pytest.raises(GraphFormatError):
        from_graph6("B" + chr(62))  # illegal character
    with pytest.raises(GraphFormatError):
        from_graph6("A" + chr(63 + 1))  # nonzero padding for n=2 (1 bit used)


def test_edge_json_examples():
    g = from_edge_json('{"n":3,"edges":[[0,1],[1,2],[0,2]]}')
    assert g == Graph.complete(3)
    with pytest.raises(GraphFormatError):
        from_edge_json('{"n":3,"edges":[[0,5]]}')
    with pytest.raises(GraphFormatError):
        from_edge_json('{"n":3,"edges":[[0,0]]}')
    with pytest.raises(GraphFormatError):
        from_edge_json('{"n":3,"edges":[[0,1],[1,0]]}')
    with pytest.raises(GraphFormatError):
        from_edge_json('{"edges":[]}')
    with pytest.raises(GraphFormatError):
        from_edge_json("[not json")


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_serialize_parse_round_trip(data):
    n = data.draw(st.integers(0, 12))
    edges = data.draw(st.sets(
        st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0)))
        .filter(lambda e: e[0] < e[1])))
    g = Graph.from_edges(n, edges) if n else Graph.empty(0)
    for fmt in ("graph6", "edge-list-json"):
        assert parse_graph(serialize_graph(g, fmt), fmt) == g


def test_edge_json_payload_shape():
    g = Graph.cycle(4)
    payload = json.loads(serialize_graph(g, "edge-list-json"))
    assert set(payload) == {"n", "edges"}
    assert payload["n"] == 4
    assert sorted(map(tuple, payload["edges"])) == [(0, 1), (0, 3), (1, 2), (2, 3)]
