"""Generators for the extremal constructions, and the conjecture-20 check.

Four construction kinds, all unions of one block type padded with isolated
vertices where divisibility allows it (isolated vertices add no cliques of
order >= 2 and no minors):

  tstar_union              disjoint copies of the optimizer graph T*_t(k)
  t2_tree                  K_{t-2} with pendant vertices glued to it
  ktminus_union            disjoint copies of K_t minus one edge
  matching_complement_union  disjoint complements of a perfect matching on
                             2(t-1)/3 edges (t = 1 mod 3; no padding here,
                             n must be a multiple of the block order)

``wood_counterexample_check`` compares, per vertex, the k-clique count of
the matching-complement union against C(t-2, k-1); exact big integers up
to t = 3000, log space beyond with a 1e-6 bit margin before declaring a
verdict.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .graphs import Graph, count_k_cliques, induced_subgraph
from .logspace import LogValue, log_binomial
from .minors import DEFAULT_VERTEX_CAP, has_clique_minor
from .turan import materialize, t_star

KINDS = ("tstar_union", "t2_tree", "ktminus_union", "matching_complement_union")
DEFAULT_BUILD_CAP = 10_000
EXACT_WOOD_LIMIT = 3000
WOOD_LOG_MARGIN = 1e-6


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    t: int
    n: int
    k: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown construction kind {self.kind!r}")

    def to_json(self) -> str:
        obj = {"kind": self.kind, "t": self.t, "n": self.n}
        if self.k is not None:
            obj["k"] = self.k
        return json.dumps(obj)


def spec_from_json(text: str) -> ConstructionSpec:
    obj = json.loads(text)
    return ConstructionSpec(kind=obj["kind"], t=obj["t"], n=obj["n"], k=obj.get("k"))


def matching_complement(m_edges: int) -> Graph:
    """Complement of a perfect matching with m edges: 2m vertices, pairs (2j, 2j+1) missing."""
    n = 2 * m_edges
    full = (1 << n) - 1
    rows = []
    for v in range(n):
        rows.append(full & ~(1 << v) & ~(1 << (v ^ 1)))
    return Graph(n, rows)


def kt_minus(t: int) -> Graph:
    """K_t with the edge {0, 1} removed."""
    g = Graph.complete(t)
    rows = list(g.adj)
    rows[0] &= ~2
    rows[1] &= ~1
    return Graph(t, rows)


def t2_tree(t: int, n: int) -> Graph:
    """Start from K_{t-2}; attach each further vertex to that same root clique."""
    if t < 3:
        raise ValueError("t must be >= 3")
    if n < t - 2:
        raise ValueError(f"need n >= t-2 = {t - 2}")
    root = (1 << (t - 2)) - 1
    rows = [(root & ~(1 << v)) for v in range(t - 2)]
    for v in range(t - 2, n):
        for u in range(t - 2):
            rows[u] |= 1 << v
        rows.append(root)
    return Graph(n, rows)


def _block(spec: ConstructionSpec) -> Graph:
    if spec.kind == "tstar_union":
        if spec.k is None:
            raise ValueError("tstar_union needs k")
        return materialize(t_star(spec.t, spec.k).spec)
    if spec.kind == "ktminus_union":
        if spec.t < 2:
            raise ValueError("ktminus_union needs t >= 2")
        return kt_minus(spec.t)
    if spec.kind == "matching_complement_union":
        if spec.t % 3 != 1:
            raise ValueError("matching_complement_union needs t = 1 (mod 3)")
        return matching_complement(2 * (spec.t - 1) // 3)
    raise ValueError(spec.kind)


def build(spec: ConstructionSpec, cap: int = DEFAULT_BUILD_CAP) -> Graph:
    """Materialize the construction on exactly n vertices."""
    if spec.n > cap:
        raise ValueError(f"materialization capped at {cap} vertices, got n={spec.n}")
    if spec.kind == "t2_tree":
        return t2_tree(spec.t, spec.n)
    block = _block(spec)
    if spec.n < block.n:
        raise ValueError(f"n={spec.n} is below the block order {block.n}")
    copies, pad = divmod(spec.n, block.n)
    if spec.kind == "matching_complement_union" and pad:
        raise ValueError(f"n must be a multiple of the block order {block.n}")
    g = Graph.empty(0)
    for _ in range(copies):
        g = g.disjoint_union(block)
    if pad:
        g = g.disjoint_union(Graph.empty(pad))
    return g


def closed_form_count(spec: ConstructionSpec, k: int) -> int:
    """Exact k-clique count of build(spec) without building it."""
    if k == 0:
        return 1
    if spec.kind == "t2_tree":
        first = math.comb(spec.t - 2, k)
        second = math.comb(spec.t - 2, k - 1) if k >= 1 else 0
        return first + (spec.n - spec.t + 2) * second
    block = _block(spec)
    copies, pad = divmod(spec.n, block.n)
    if spec.kind == "tstar_union":
        per = t_star(spec.t, spec.k).count if k == spec.k else count_k_cliques(block, k)
    elif spec.kind == "ktminus_union":
        per = math.comb(spec.t - 1, k) + (math.comb(spec.t - 2, k - 1) if k >= 1 else 0)
    else:
        m = 2 * (spec.t - 1) // 3
        per = math.comb(m, k) * 2**k
    total = copies * per
    if k == 1:
        total += pad
    return total


def verify_minor_free(spec: ConstructionSpec, cap: int = DEFAULT_VERTEX_CAP,
                      build_cap: int = DEFAULT_BUILD_CAP) -> bool:
    """True iff no connected component of build(spec) has a K_t minor.

    A clique minor lives inside one component, so components are checked
    independently; each must fit under the exact-search cap.
    """
    g = build(spec, cap=build_cap)
    for comp in g.components():
        sub, _ = induced_subgraph(g, comp)
        if sub.n >= spec.t and has_clique_minor(sub, spec.t, cap=cap) is not None:
            return False
    return True


@dataclass(frozen=True)
class WoodCheckResult:
    """Per-vertex comparison of construction vs conjectured ceiling.

    verdict True: the construction beats the ceiling (counterexample),
    False: it does not, None: log-space margin below 1e-6 bits (inconclusive).
    """

    t: int
    k: int
    construction_count: LogValue
    conjecture_bound: LogValue
    verdict: bool | None
    exact: bool

    def to_json(self) -> str:
        v = self.verdict if self.verdict is not None else "inconclusive"
        return json.dumps({
            "t": self.t, "k": self.k,
            "construction_log2": None if self.construction_count.zero
            else self.construction_count.log2,
            "conjecture_log2": None if self.conjecture_bound.zero
            else self.conjecture_bound.log2,
            "verdict": v, "exact": self.exact,
        })


def wood_counterexample_check(t: int, lam: float) -> WoodCheckResult:
    """Does the matching-complement union beat C(t-2, k-1) cliques per vertex?

    k = round(lam * t); requires 1/3 < lam < 1 and t = 1 (mod 3).
    """
    if not (1.0 / 3.0 < lam < 1.0):
        raise ValueError("lambda must lie strictly between 1/3 and 1")
    if t % 3 != 1 or t < 4:
        raise ValueError("t must be = 1 (mod 3) and >= 4")
    k = math.floor(lam * t + 0.5)
    m = 2 * (t - 1) // 3
    block = 4 * (t - 1) // 3
    lhs = log_binomial(m, k).scaled(float(k)) / LogValue.from_count(block)
    rhs = log_binomial(t - 2, k - 1)
    if t <= EXACT_WOOD_LIMIT:
        verdict = 3 * math.comb(m, k) * 2**k > 4 * (t - 1) * math.comb(t - 2, k - 1)
        return WoodCheckResult(t, k, lhs, rhs, verdict, exact=True)
    if lhs.zero:
        return WoodCheckResult(t, k, lhs, rhs, False, exact=False)
    diff = lhs.log2 - rhs.log2
    verdict = True if diff > WOOD_LOG_MARGIN else (False if diff < -WOOD_LOG_MARGIN else None)
    return WoodCheckResult(t, k, lhs, rhs, verdict, exact=False)
