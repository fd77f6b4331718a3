"""Undirected simple graphs as tuples of neighbor bitsets.

Vertices are the integers 0..n-1.  Each adjacency row is a Python int used
as a bitset, so neighborhood algebra is a single ``&``/``|`` and every count
in this package is an exact arbitrary-precision integer (there is no float
anywhere near a clique count).

Conventions fixed here and relied on everywhere else:
  * count_k_cliques(g, 0) == 1 and count_k_cliques(g, 1) == n, so that
    binomial identities like sum_k count_k_cliques(K_m, k) == 2**m hold;
  * the clique number of a nonempty edgeless graph is 1, of the empty
    graph 0;
  * all tie-breaking uses ascending vertex label.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list JSON input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int]):
        rows = tuple(adj)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"adjacency row {v} has out-of-range bits")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(rows):
            for u in bits(row):
                if not rows[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", rows)

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Fast path for constructors that preserve the invariants.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", rows)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count()})"

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls._trusted(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls._trusted(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)]) if n >= 3 else cls.empty(n)

    # -- basic queries -----------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            for u in bits(self.adj[v] >> (v + 1)):
                out.append((v, v + 1 + u))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- derived graphs ----------------------------------------------------

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph._trusted(
            self.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(self.adj))
        )

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            nv = perm[v]
            acc = 0
            for u in bits(row):
                acc |= 1 << perm[u]
            rows[nv] = acc
        return Graph._trusted(self.n, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        rows = list(self.adj) + [row << shift for row in other.adj]
        return Graph._trusted(self.n + other.n, tuple(rows))

    def components(self) -> list[int]:
        """Vertex masks of the connected components."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = self.adj[v] & ~comp
            while frontier:
                comp |= frontier
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected_set(self, s: int) -> bool:
        """True iff the induced subgraph on the nonempty vertex set ``s`` is connected."""
        if s == 0:
            return False
        start = s & -s
        comp = start
        frontier = self.adj[start.bit_length() - 1] & s & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u]
            frontier = nxt & s & ~comp
        return comp == s


def induced_subgraph(g: Graph, s: int | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on vertex set ``s`` (bitmask or iterable of labels).

    Vertices are relabeled 0..|s|-1 by ascending original label; the second
    return value maps new label -> original label.
    """
    mask = s if isinstance(s, int) else mask_of(s)
    if mask & ~g.vertex_mask:
        raise ValueError("vertex set contains out-of-range vertices")
    keep = list(bits(mask))
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        acc = 0
        for u in bits(g.adj[v] & mask):
            acc |= 1 << pos[u]
        rows.append(acc)
    return Graph._trusted(len(keep), tuple(rows)), tuple(keep)


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in min-degree peeling order, ties by ascending label."""
    alive = g.vertex_mask
    deg = g.degrees()
    order = []
    for _ in range(g.n):
        best = -1
        best_deg = g.n + 1
        for v in bits(alive):
            if deg[v] < best_deg:
                best_deg = deg[v]
                best = v
        order.append(best)
        alive &= ~(1 << best)
        for u in bits(g.adj[best] & alive):
            deg[u] -= 1
    return order


def count_k_cliques(g: Graph, k: int) -> int:
    """Exact number of k-vertex subsets inducing complete subgraphs.

    Pivot-free recursion intersecting neighbor bitsets along a degeneracy
    ordering; the result is an exact int (no overflow possible).
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return 1
    if k == 1:
        return g.n
    if k > g.n:
        return 0
    order = degeneracy_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    h = g.relabel(pos)
    adj = h.adj
    later = [adj[v] & ~((1 << (v + 1)) - 1) for v in range(h.n)]

    def rec(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            if cand.bit_count() < need:
                break
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += rec(adj[v] & cand, need - 1)
        return total

    total = 0
    for v in range(h.n):
        total += rec(later[v], k - 1)
    return total


def clique_census(g: Graph) -> list[int]:
    """Counts of k-cliques for every k = 0..n in a single enumeration.

    Visits every clique once, so only sensible when the total clique count
    is small (it is 2^n in the worst case).
    """
    out = [0] * (g.n + 1)
    out[0] = 1
    adj = g.adj
    later = [adj[v] & ~((1 << (v + 1)) - 1) for v in range(g.n)]

    def rec(cand: int, depth: int):
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            out[depth] += 1
            rec(adj[v] & cand, depth + 1)

    for v in range(g.n):
        out[1] += 1
        rec(later[v], 2)
    return out


def clique_number(g: Graph) -> int:
    """Order of the largest clique; 0 for the empty graph."""
    if g.n == 0:
        return 0
    order = degeneracy_order(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    h = g.relabel(pos)
    adj = h.adj
    best = 1

    def expand(cand: int, size: int):
        nonlocal best
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if size + 1 > best:
                best = size + 1
            expand(adj[v] & cand, size + 1)

    for v in range(h.n):
        expand(adj[v] & ~((1 << (v + 1)) - 1), 1)
    return best


def max_missing_degree(g: Graph) -> int:
    """n - delta - 1: the maximum degree of the complement graph."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    return g.n - 1 - min(g.degrees())


def total_clique_count(g: Graph) -> int:
    """Sum of count_k_cliques over k = 0..n (the empty clique included)."""
    return sum(count_k_cliques(g, k) for k in range(g.n + 1))


# -- graph6 ---------------------------------------------------------------

_G6_HEADER = ">>graph6<<"


def _g6_encode_size(n: int) -> str:
    if n < 0:
        raise GraphFormatError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + (n >> s & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise GraphFormatError("vertex count too large for graph6")


def _g6_decode_size(data: str) -> tuple[int, int]:
    """Return (n, number of characters consumed)."""
    if not data:
        raise GraphFormatError("empty graph6 string")
    if data[0] != "~":
        return ord(data[0]) - 63, 1
    if len(data) >= 2 and data[1] != "~":
        if len(data) < 4:
            raise GraphFormatError("truncated graph6 size")
        vals = [ord(c) - 63 for c in data[1:4]]
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    if len(data) < 8:
        raise GraphFormatError("truncated graph6 size")
    vals = [ord(c) - 63 for c in data[2:8]]
    n = 0
    for v in vals:
        n = n << 6 | v
    return n, 8


def to_graph6(g: Graph) -> str:
    out = [_g6_encode_size(g.n)]
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    data = text.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    n, used = _g6_decode_size(data)
    body = data[used:]
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphFormatError(f"graph6 body has {len(body)} chars, expected {(need + 5) // 6}")
    bitstream = 0
    for c in body:
        v = ord(c) - 63
        if not 0 <= v <= 63:
            raise GraphFormatError(f"illegal graph6 character {c!r}")
        bitstream = bitstream << 6 | v
    pad = len(body) * 6 - need
    if bitstream & ((1 << pad) - 1 if pad else 0):
        raise GraphFormatError("nonzero padding bits in graph6 body")
    rows = [0] * n
    k = len(body) * 6 - 1
    for j in range(1, n):
        for i in range(j):
            if bitstream >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, tuple(rows))


# -- edge-list JSON -------------------------------------------------------


def to_edge_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})


def from_edge_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise GraphFormatError('edge-list JSON must be {"n": int, "edges": [[u,v],...]}')
    n = obj["n"]
    if not isinstance(n, int) or n < 0:
        raise GraphFormatError("n must be a nonnegative integer")
    rows = [0] * n
    seen = set()
    for e in obj["edges"]:
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
            raise GraphFormatError(f"bad edge entry {e!r}")
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"edge endpoint out of range: {e}")
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {key}")
        seen.add(key)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, tuple(rows))


FORMATS = ("graph6", "edge-list-json")


def parse_graph(text: str, fmt: str) -> Graph:
    if fmt == "graph6":
        return from_graph6(text)
    if fmt == "edge-list-json":
        return from_edge_json(text)
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")


def serialize_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return to_graph6(g)
    if fmt == "edge-list-json":
        return to_edge_json(g)
    raise ValueError(f"unknown graph format {fmt!r}; expected one of {FORMATS}")
