"""Evaluators for every closed-form clique-count bound, in base-2 log space.

Conventions, followed symbol by symbol:
  * the degeneracy-style degree scale is d(t) = BETA * t * sqrt(ln t) with
    BETA = 0.64 and a NATURAL log under the square root;
  * the encoding-length scale is r0(t) = 4 * sqrt(t) * (log2 t)^(1/4),
    base-2 logs;
  * "ln ln t" in the very-large-k bound is the natural log twice;
  * generalized binomials C(x, m) over a real top argument are falling
    products (zero once m exceeds x).

Exact big-integer paths exist where the counts fit (tree_count, and
log_binomial below 10^4); everything else is double precision on the log,
reproducible to ~1e-9.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .logspace import LogValue, log_binomial, log_sum, real_log_binomial
from .turan import t_star

BETA = 0.64
LARGE_T_REFERENCE = 2000  # below this, "t sufficiently large" flags apply


def thomason_degree(t: int | float) -> float:
    """d(t) = BETA * t * sqrt(ln t): the minimum-degree scale of hosts with no K_t minor."""
    return BETA * t * math.sqrt(math.log(t))


def encoding_length_scale(t: int | float) -> float:
    """r0(t) = 4 * sqrt(t) * (log2 t)^(1/4), as a real number."""
    return 4.0 * math.sqrt(t) * math.log2(t) ** 0.25


def crude_upper(t: int, k: int, n: int) -> LogValue:
    """log2 of C(d(t), k-1) * n: the degeneracy-style bound on k-clique counts."""
    if k < 2:
        raise ValueError("crude bound needs k >= 2")
    return real_log_binomial(thomason_degree(t), k - 1) * LogValue.from_count(n)


def tree_count(t: int, k: int, n: int) -> int:
    """Exact k-clique count of any (t-2)-tree on n vertices:
    C(t-2, k) + (n-t+2) * C(t-2, k-1).
    """
    if n < t - 2:
        raise ValueError(f"a (t-2)-tree needs n >= t-2, got n={n}, t={t}")
    first = math.comb(t - 2, k) if 0 <= k <= t - 2 else 0
    second = math.comb(t - 2, k - 1) if 1 <= k <= t - 1 else 0
    return first + (n - t + 2) * second


def count_Ht_bound(t: int, k: int, r: int, s: int) -> LogValue:
    """log2 of C(t-r-s, k-r) * 2^s: k-clique capacity of small bounded-minor hosts."""
    return log_binomial(t - r - s, k - r).scaled(float(s))


def encoding_count_bound(t: int, n: int, r: int, r_l: int, M: float) -> LogValue:
    """log2 of n * C(r-1, r_l) * M^(r-r_l-1) * C(r0, r_l) * (d/r0)^r_l.

    Counts the distinct anchor sequences of length r with exactly r_l
    large-extra steps, for any threshold M >= 1.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    if not 0 <= r_l < r:
        raise ValueError("need 0 <= r_l < r")
    if r > r0_bound(t):
        raise ValueError(f"r={r} exceeds the encoding length bound {r0_bound(t)}")
    r0 = encoding_length_scale(t)
    d = thomason_degree(t)
    return (
        LogValue.from_count(n)
        * log_binomial(r - 1, r_l)
        .scaled((r - r_l - 1) * math.log2(M))
        * real_log_binomial(r0, r_l).scaled(r_l * math.log2(d / r0))
    )


def key_lemma1_lower(r: int, r_l: int, t: int, M: float | None = None,
                     eps: float = 1.0 / 6.0) -> tuple[float, float]:
    """Two lower bounds on the guaranteed branch-disk count s_M(r, r_l).

    Returns (general, refined):
      general = r/3 - 7*log2(t)
      refined = r_l - 1 - 7*(log_{1/(1-eps)} d + 8*r_l*log_{1/(2eps)}(M)/M)
    Either may be negative, in which case it is vacuous.
    """
    if not 0.0 < eps <= 1.0 / 6.0:
        raise ValueError("eps must lie in (0, 1/6]")
    if M is None:
        M = math.log(t) ** 2
    if M < 1:
        raise ValueError("M must be >= 1")
    d = thomason_degree(t)
    general = r / 3.0 - 7.0 * math.log2(t)
    log_d = math.log(d) / math.log(1.0 / (1.0 - eps))
    log_m = 0.0 if M == 1 else math.log(M) / math.log(1.0 / (2.0 * eps))
    refined = r_l - 1 - 7.0 * (log_d + 8.0 * r_l * log_m / M)
    return general, refined


def r0_bound(t: int) -> int:
    """ceil(4 * sqrt(t) * (log2 t)^(1/4)): cap on the anchor-sequence length."""
    if t < 2:
        raise ValueError("t must be >= 2")
    return math.ceil(encoding_length_scale(t))


def klarge0_threshold(t: int) -> float:
    """Smallest k the very-large-k bound covers: 2t/3 + 2*sqrt(t)*(log2 t)^(1/4)."""
    return 2.0 * t / 3.0 + 2.0 * math.sqrt(t) * math.log2(t) ** 0.25


def theorem_klarge0_bound(t: int, k: int, n: int) -> LogValue:
    """Very-large-k upper bound:
    n * (C(t-1,k)+C(t-2,k-1))/t * t^(10*log2 t) * 2^min(4*r0*log2 t, 160*(t-k)*lnln t).
    """
    if k < klarge0_threshold(t):
        raise ValueError(f"k={k} below the very-large-k threshold {klarge0_threshold(t):.2f}")
    per_block = log_binomial(t - 1, k) + log_binomial(t - 2, k - 1)
    lg_t = math.log2(t)
    tail = min(4.0 * encoding_length_scale(t) * lg_t,
               160.0 * (t - k) * math.log(math.log(t)))
    return (LogValue.from_count(n) * per_block).scaled(10.0 * lg_t * lg_t - lg_t + tail)


def theorem_main_bound(t: int, k: int, n: int) -> LogValue:
    """Middle-range upper bound: n * C*(t,k)/|V(T*)| * 2^(8*sqrt(t)*(log2 t)^(5/4))."""
    res = t_star(t, k)
    per_vertex = LogValue.from_count(res.count) / LogValue.from_count(res.spec.n_vertices)
    tail = 8.0 * math.sqrt(t) * math.log2(t) ** 1.25
    return (LogValue.from_count(n) * per_vertex).scaled(tail)


def reduce2_bound(t: int, k: int, n: int, h_values: dict) -> LogValue:
    """log2 of sum_{r=1..min(r0,k)} n * C(r0, r-1) * (d/r0)^(r-1) * h_values[r].

    h_values[r] supplies the k-r clique capacity of the terminal graphs at
    depth r (callers use the optimizer count at (t-r+1, k-r)); entries may
    be ints or LogValues.
    """
    r_top = min(r0_bound(t), k)
    r0 = encoding_length_scale(t)
    d = thomason_degree(t)
    terms = []
    for r in range(1, r_top + 1):
        if r not in h_values:
            raise ValueError(f"missing h_value entry for r={r}")
        h = h_values[r]
        if not isinstance(h, LogValue):
            h = LogValue.from_count(h)
        term = (
            LogValue.from_count(n)
            * real_log_binomial(r0, r - 1).scaled((r - 1) * math.log2(d / r0))
            * h
        )
        terms.append(term)
    return log_sum(terms)


REGIMES = ("small_k", "middle", "very_large_k")


def regime_of(t: int, k: int) -> str:
    """Dispatch by the range of k: k >= 5t/6 very large, k >= t^(2/3) middle, else small."""
    if 6 * k >= 5 * t:
        return "very_large_k"
    if k >= t ** (2.0 / 3.0):
        return "middle"
    return "small_k"


@dataclass
class BoundReport:
    t: int
    k: int
    n: int
    regime: str
    entries: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)

    def to_json(self) -> str:
        bounds = {
            name: (None if lv.zero else lv.log2) for name, lv in self.entries.items()
        }
        return json.dumps(
            {"t": self.t, "k": self.k, "n": self.n, "regime": self.regime,
             "bounds": bounds, "flags": self.flags}
        )


def bound_report(t: int, k: int, n: int) -> BoundReport:
    """Evaluate every applicable bound at (t, k, n) and tag the regime."""
    if not 1 <= k < t:
        raise ValueError("need 1 <= k < t")
    rep = BoundReport(t=t, k=k, n=n, regime=regime_of(t, k))
    if t < LARGE_T_REFERENCE:
        rep.flags.append(f"t below the large-t reference {LARGE_T_REFERENCE}; "
                         "bounds are reported, not guaranteed")
    if k >= 2:
        rep.entries["crude"] = crude_upper(t, k, n)
    rep.entries["main"] = theorem_main_bound(t, k, n)
    if k >= klarge0_threshold(t):
        rep.entries["klarge0"] = theorem_klarge0_bound(t, k, n)
    if n >= t - 2:
        rep.entries["t2_tree"] = LogValue.from_count(tree_count(t, k, n))
    return rep


def grid_csv(ts, ks, n: int) -> str:
    """CSV export of bound_report over a (t, k) grid, one row per valid cell."""
    names = ["crude", "main", "klarge0", "t2_tree"]
    lines = ["t,k,n,regime," + ",".join(names)]
    for t in ts:
        for k in ks:
            if not 1 <= k < t:
                continue
            rep = bound_report(t, k, n)
            cells = []
            for name in names:
                lv = rep.entries.get(name)
                cells.append("" if lv is None or lv.zero else f"{lv.log2:.6f}")
            lines.append(f"{t},{k},{n},{rep.regime}," + ",".join(cells))
    return "\n".join(lines) + "\n"
