"""Complete multipartite graphs handled symbolically, and the optimizer scan.

A spec is the descending tuple of part sizes of a complete multipartite
graph.  Its k-clique count is the elementary symmetric polynomial e_k of
the part sizes (pick k parts, one vertex from each), computed by dynamic
programming in exact integers, so nothing large is ever materialized.

The optimizer scan: among the balanced graphs T(2t-w-1, w) with
k <= w <= t-1, find the one with the most k-cliques.  Its count is the
per-block numerator of every matching lower-bound construction in this
package.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import lru_cache

from .graphs import Graph
from .logspace import LogValue, log_binomial

DEFAULT_MATERIALIZE_CAP = 2000


@dataclass(frozen=True)
class MultipartiteSpec:
    """Canonical (descending) part sizes of a complete multipartite graph."""

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("at least one part required")
        if any(a < 1 for a in self.parts):
            raise ValueError("part sizes must be >= 1")
        if list(self.parts) != sorted(self.parts, reverse=True):
            object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def n_vertices(self) -> int:
        return sum(self.parts)

    @property
    def width(self) -> int:
        return len(self.parts)

    @property
    def is_balanced(self) -> bool:
        return self.parts[0] - self.parts[-1] <= 1


def turan_spec(n: int, w: int) -> MultipartiteSpec:
    """Balanced spec with w parts summing to n (the graph T(n, w))."""
    if w < 1 or w > n:
        raise ValueError(f"need 1 <= w <= n, got w={w}, n={n}")
    q, r = divmod(n, w)
    return MultipartiteSpec((q + 1,) * r + (q,) * (w - r))


def multipartite_k_cliques(spec: MultipartiteSpec, k: int) -> int:
    """Exact k-clique count: e_k of the part sizes (0 when k > width)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > spec.width:
        return 0
    e = [0] * (k + 1)
    e[0] = 1
    for a in spec.parts:
        for j in range(k, 0, -1):
            e[j] += a * e[j - 1]
    return e[k]


def clique_count_vector(spec: MultipartiteSpec) -> list[int]:
    """All of e_0..e_width at once (same DP, full degree)."""
    e = [0] * (spec.width + 1)
    e[0] = 1
    top = 0
    for a in spec.parts:
        top += 1
        for j in range(top, 0, -1):
            e[j] += a * e[j - 1]
    return e


def _balanced_e_k(a: int, x: int, y: int, k: int) -> int:
    """e_k of x parts of size a and y parts of size a+1, by a running-term sum."""
    i0 = max(0, k - y)
    i1 = min(x, k)
    if i0 > i1:
        return 0
    cx = math.comb(x, i0)
    cy = math.comb(y, k - i0)
    pa = a**i0
    pb = (a + 1) ** (k - i0)
    total = 0
    for i in range(i0, i1 + 1):
        total += cx * cy * pa * pb
        if i < i1:
            cx = cx * (x - i) // (i + 1)
            cy = cy * (k - i) // (y - k + i + 1)
            pa *= a
            pb //= a + 1
    return total


def balanced_k_cliques_binomial(spec: MultipartiteSpec, k: int) -> int:
    """Closed form for balanced specs: sum_i C(x,i) C(y,k-i) a^i (a+1)^(k-i).

    x parts of the smaller size a, y parts of size a+1.  Agrees with the
    symmetric-polynomial DP (property-tested); O(k) big-int terms, which is
    what makes the optimizer scan affordable at t in the hundreds.
    """
    if not spec.is_balanced:
        raise ValueError("binomial form requires a balanced spec")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > spec.width:
        return 0
    a = spec.parts[-1]
    y = sum(1 for p in spec.parts if p == a + 1)
    return _balanced_e_k(a, spec.width - y, y, k)


def materialize(spec: MultipartiteSpec, cap: int = DEFAULT_MATERIALIZE_CAP) -> Graph:
    """Build the actual graph (parts get consecutive labels, largest first)."""
    n = spec.n_vertices
    if n > cap:
        raise ValueError(f"materialization capped at {cap} vertices, got {n}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for a in spec.parts:
        part_mask = ((1 << a) - 1) << start
        for _ in range(a):
            rows.append(full & ~part_mask)
        start += a
    return Graph(n, rows)


@dataclass(frozen=True)
class TStarResult:
    """Outcome of the optimizer scan at (t, k)."""

    t: int
    k: int
    omega_star: int
    spec: MultipartiteSpec
    count: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "t": self.t,
                "k": self.k,
                "omega": self.omega_star,
                "parts": list(self.spec.parts),
                "count": str(self.count),
            }
        )


@lru_cache(maxsize=200_000)
def t_star(t: int, k: int) -> TStarResult:
    """Scan w in [k, t-1] for the T(2t-w-1, w) with the most k-cliques.

    Ties break toward smaller w.  Candidates that provably cannot reach the
    incumbent are skipped via the Maclaurin bound e_k <= C(w, k) * (n/w)^k,
    tested in log space with a 1e-6-bit safety margin (five orders above
    the float error, so a skip always means strictly smaller and the
    tie-break is unaffected); survivors are evaluated exactly via the
    balanced closed form.
    """
    if k < 1 or k >= t:
        raise ValueError(f"need 1 <= k < t, got k={k}, t={t}")
    best_count = -1
    best_w = -1
    best_log = -math.inf
    lgamma = math.lgamma
    ln2 = math.log(2.0)
    lgk = lgamma(k + 1)
    # Seed near the empirical peak so the pruning bites early.
    seed = min(max(k, math.isqrt(t * k // 2)), t - 1)
    candidates = [seed] + [w for w in range(k, t) if w != seed]
    for w in candidates:
        n = 2 * t - w - 1
        if best_count > 0:
            ub = (lgamma(w + 1) - lgk - lgamma(w - k + 1)) / ln2 + k * math.log2(n / w)
            if ub < best_log - 1e-6:
                continue
        q, rem = divmod(n, w)
        c = _balanced_e_k(q, w - rem, rem, k)
        if c > best_count or (c == best_count and w < best_w):
            best_count = c
            best_w = w
            best_log = math.log2(c)
    return TStarResult(t, k, best_w, turan_spec(2 * t - best_w - 1, best_w), best_count)


def c_star_sandwich(t: int, k: int) -> tuple[LogValue, LogValue]:
    """log2 of C(t-1,k) * max(1, 2-4*sqrt(2k/t))^k and of C(t-1,k) * 2^k.

    These sandwich log2 of the optimizer count for k >= 25.
    """
    if k < 1 or k >= t:
        raise ValueError(f"need 1 <= k < t, got k={k}, t={t}")
    base = log_binomial(t - 1, k)
    factor = max(1.0, 2.0 - 4.0 * math.sqrt(2.0 * k / t))
    lower = base.scaled(k * math.log2(factor))
    upper = base.scaled(float(k))
    return lower, upper


def part_size_bound_check(spec: MultipartiteSpec, k: int) -> bool:
    """True iff every part size a satisfies a < 3 or (a-1)^2 < (4n-3k+7-4a)/(k-1)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    n = spec.n_vertices
    for a in spec.parts:
        if a < 3:
            continue
        if (a - 1) ** 2 * (k - 1) >= 4 * n - 3 * k + 7 - 4 * a:
            return False
    return True


def omega_star_range_check(t: int, k: int) -> bool:
    """True iff the optimizer's part count w* lies in [sqrt(tk)/4, 10*sqrt(tk)],
    and w* = t-1 whenever k >= 2t/3.
    """
    res = t_star(t, k)
    w = res.omega_star
    if 16 * w * w < t * k:  # w < sqrt(tk)/4
        return False
    if w * w > 100 * t * k:  # w > 10*sqrt(tk)
        return False
    if 3 * k >= 2 * t and w != t - 1:
        return False
    return True
