"""The anchor-peeling encoder for cliques, its audits, and branch disks.

Given a host graph g, a clique K and a target order t, the process removes
vertices in rounds.  A round finds the next *anchor* v_i: vertices of
minimum degree (ties by ascending label) are deleted one at a time until
the minimum-degree vertex itself belongs to K; that vertex is the anchor
and the surviving graph is G_i.  The anchor's non-neighbors inside G_i form
the layer D_i, removed together with it; the vertices discarded while
hunting the following anchor form Y_i.  The run stops at the first step r
where (checked in this order)

  1. the survivor count n_r has dropped to t - r, or
  2. the anchor's missing degree satisfies 4*d_r^2 <= n_r + r - t, or
  3. every clique vertex has served as an anchor (r = |K|).

Everything is integer arithmetic; condition 2 is the exact form of
d_r <= sqrt(n_r + r - t)/2 and is never evaluated when condition 1 already
fired, so no negative radicand arises.  The anchor sequence plus the
survivor counts n_2..n_r replay the entire run (see ``replay``), which is
what makes the sequence an encoding of K.

Branch disks: a set of vertices, disjoint from K and from the terminal
graph, whose induced subgraph is connected and which every vertex of
K union V(G_r) can see.  Contracting pairwise-adjacent disjoint disks on
top of the anchors and the surviving clique yields a clique minor
(``minor_from_branches``).  ``greedy_branch_set`` builds disks two ways:
whole Y-layers of size >= 2*d_i + 1, and unions of three consecutive
D-layers taken inside brackets where the missing degree has not decayed
below 7/8 of the bracket opener.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass

from . import minors
from .bounds import r0_bound  # re-exported: the cap on the anchor count
from .graphs import Graph, bits, clique_number, mask_of


def _nbrs(g: Graph, s: int) -> int:
    acc = 0
    for v in bits(s):
        acc |= g.adj[v]
    return acc & ~s

__all__ = [
    "PeelStep", "PeelingTrace", "BranchDiskCertificate",
    "peel", "replay", "verify_basic_facts", "verify_gap", "r0_bound",
    "count_large_extra_layers", "validate_branch_certificate",
    "greedy_branch_set", "minor_from_branches", "exhaustive_branch_set_size",
    "trace_to_jsonl", "trace_from_jsonl",
]

STOP_SMALL_ORDER = "small_order"
STOP_LOW_MISSING_DEGREE = "low_missing_degree"
STOP_CLIQUE_EXHAUSTED = "clique_exhausted"


@dataclass(frozen=True)
class PeelStep:
    """One round: anchor, survivors, the two removal layers, and the tallies."""

    index: int            # 1-based step number i
    vertex: int           # anchor v_i
    alive: int            # vertex mask of G_i (anchor still inside)
    dropped: int          # mask of D_i: non-neighbors of the anchor in G_i
    extra: tuple[int, ...]  # Y_i in removal order; empty at the stop step
    order: int            # n_i = |G_i|
    missing_degree: int   # d_i = |D_i|
    surplus: int          # n_i + i - t

    @property
    def extra_mask(self) -> int:
        return mask_of(self.extra)


@dataclass(frozen=True)
class PeelingTrace:
    target: int           # t
    clique: int           # mask of K
    steps: tuple[PeelStep, ...]
    stop_reason: str

    @property
    def r(self) -> int:
        return len(self.steps)

    @property
    def anchors(self) -> tuple[int, ...]:
        return tuple(s.vertex for s in self.steps)

    @property
    def terminal(self) -> int:
        """Vertex mask of the terminal graph G_r (nothing removed at the stop step)."""
        return self.steps[-1].alive


def _argmin_degree(adj, alive: int) -> int:
    best = -1
    best_deg = 1 << 62
    for v in bits(alive):
        deg = (adj[v] & alive).bit_count()
        if deg < best_deg:
            best_deg = deg
            best = v
    return best


def _hunt(adj, alive: int, clique: int) -> tuple[int, int, tuple[int, ...]]:
    """Delete minimum-degree vertices until the minimum sits in the clique.

    Returns (anchor, surviving mask, removed vertices in order).
    """
    removed = []
    while True:
        v = _argmin_degree(adj, alive)
        if clique >> v & 1:
            return v, alive, tuple(removed)
        alive &= ~(1 << v)
        removed.append(v)


def _check_clique(g: Graph, clique: int):
    if clique == 0:
        raise ValueError("clique must be nonempty")
    if clique & ~g.vertex_mask:
        raise ValueError("clique contains out-of-range vertices")
    for v in bits(clique):
        if clique & ~g.adj[v] & ~(1 << v):
            raise ValueError("the given vertex set does not induce a complete subgraph")


def peel(g: Graph, clique, t: int) -> PeelingTrace:
    """Run the peeling rounds for (g, K, t) and record the full trace."""
    K = clique if isinstance(clique, int) else mask_of(clique)
    _check_clique(g, K)
    if t < 2:
        raise ValueError("target order t must be >= 2")
    adj = g.adj
    ksize = K.bit_count()
    v, alive, _prefix = _hunt(adj, g.vertex_mask, K)
    steps: list[PeelStep] = []
    i = 0
    while True:
        i += 1
        n_i = alive.bit_count()
        dropped = alive & ~adj[v] & ~(1 << v)
        d_i = dropped.bit_count()
        surplus = n_i + i - t
        stop = None
        if n_i <= t - i:
            stop = STOP_SMALL_ORDER
        elif 4 * d_i * d_i <= surplus:
            stop = STOP_LOW_MISSING_DEGREE
        elif i == ksize:
            stop = STOP_CLIQUE_EXHAUSTED
        if stop is not None:
            steps.append(PeelStep(i, v, alive, dropped, (), n_i, d_i, surplus))
            return PeelingTrace(t, K, tuple(steps), stop)
        after = alive & ~(1 << v) & ~dropped
        v_next, alive_next, extra = _hunt(adj, after, K)
        steps.append(PeelStep(i, v, alive, dropped, extra, n_i, d_i, surplus))
        v, alive = v_next, alive_next


def replay(g: Graph, first_anchor: int, orders, t: int) -> PeelingTrace:
    """Rebuild a trace from the encoding: the first anchor and n_2..n_r.

    The deletion schedule is deterministic, so the anchor sequence is
    recoverable: each round deletes minimum-degree vertices (ties by label)
    until the survivor count matches the recorded n_i, at which point the
    minimum-degree vertex is the next anchor.
    """
    adj = g.adj
    alive = g.vertex_mask
    # Round 1: delete until the given anchor is the minimum-degree vertex.
    while True:
        v = _argmin_degree(adj, alive)
        if v == first_anchor:
            break
        alive &= ~(1 << v)
    steps: list[PeelStep] = []
    anchors = [first_anchor]
    v = first_anchor
    orders = list(orders)
    for idx, n_next in enumerate(orders, start=2):
        i = idx - 1
        n_i = alive.bit_count()
        dropped = alive & ~adj[v] & ~(1 << v)
        after = alive & ~(1 << v) & ~dropped
        extra = []
        cur = after
        while cur.bit_count() > n_next:
            u = _argmin_degree(adj, cur)
            cur &= ~(1 << u)
            extra.append(u)
        if cur.bit_count() != n_next:
            raise ValueError(f"cannot reach recorded order {n_next} at step {idx}")
        steps.append(PeelStep(i, v, alive, dropped, tuple(extra), n_i,
                              dropped.bit_count(), n_i + i - t))
        alive = cur
        v = _argmin_degree(adj, alive)
        anchors.append(v)
    i = len(orders) + 1
    n_i = alive.bit_count()
    dropped = alive & ~adj[v] & ~(1 << v)
    steps.append(PeelStep(i, v, alive, dropped, (), n_i, dropped.bit_count(), n_i + i - t))
    # The stop reason is re-derived from the final tallies.
    d_i = dropped.bit_count()
    if n_i <= t - i:
        stop = STOP_SMALL_ORDER
    elif 4 * d_i * d_i <= n_i + i - t:
        stop = STOP_LOW_MISSING_DEGREE
    else:
        stop = STOP_CLIQUE_EXHAUSTED
    clique = mask_of(anchors)  # the known-clique part: the anchors themselves
    return PeelingTrace(t, clique, tuple(steps), stop)


def verify_basic_facts(trace: PeelingTrace, g: Graph, seed: int = 0,
                       spot_checks: int = 4) -> list[str]:
    """Audit a trace against its host.  Returns a list of violations (empty = pass).

    Checked per step: the anchor is the tie-broken minimum-degree vertex
    and its missing degree is the maximum in G_i (fact 1); survivors avoid
    the anchor and its non-neighbors (fact 2); the remaining clique
    survives (fact 3); survivors sit in the common neighborhood of all
    earlier anchors (fact 4); random subsets of G_i of size d_i+1 dominate
    G_i and of size 2*d_i+1 are connected (fact 5, spot-checked); the last
    extra-deleted vertex has at least d_{i+1} non-neighbors among the next
    survivors (fact 6) and at most d_i - d_{i+1} inside D_i (fact 7).
    """
    out: list[str] = []
    adj = g.adj
    if not trace.steps:
        return ["empty trace"]
    if trace.clique & ~g.vertex_mask:
        return ["trace/graph mismatch: clique not within host"]
    rng = random.Random(seed)
    K = trace.clique
    steps = trace.steps
    for idx, st in enumerate(steps):
        alive = st.alive
        if st.vertex < 0 or not alive >> st.vertex & 1:
            out.append(f"step {st.index}: anchor not in its graph")
            continue
        if alive & ~g.vertex_mask:
            out.append(f"step {st.index}: graph mask out of range")
            continue
        # fact 1
        degs = {v: (adj[v] & alive).bit_count() for v in bits(alive)}
        vmin = min(degs, key=lambda v: (degs[v], v))
        if vmin != st.vertex:
            out.append(f"step {st.index}: anchor {st.vertex} is not the minimum-degree vertex")
        d_i = st.missing_degree
        max_missing = st.order - 1 - min(degs.values())
        if max_missing != d_i:
            out.append(f"step {st.index}: some vertex has missing degree {max_missing} > d_i={d_i}")
        if st.dropped != alive & ~adj[st.vertex] & ~(1 << st.vertex):
            out.append(f"step {st.index}: recorded D layer mismatches the adjacency")
        if st.order != alive.bit_count() or st.surplus != st.order + st.index - trace.target:
            out.append(f"step {st.index}: inconsistent tallies")
        # fact 5 spot checks
        pool = list(bits(alive))
        for size, want in ((d_i + 1, "dominating"), (2 * d_i + 1, "connected")):
            if size <= len(pool):
                for _ in range(spot_checks):
                    sample = mask_of(rng.sample(pool, size))
                    if want == "dominating":
                        cover = sample
                        for u in bits(sample):
                            cover |= adj[u]
                        if alive & ~cover:
                            out.append(f"step {st.index}: a {size}-set fails to dominate G_i")
                            break
                    else:
                        if not g.is_connected_set(sample):
                            out.append(f"step {st.index}: a {size}-set is disconnected")
                            break
        if idx + 1 == len(steps):
            if st.extra:
                out.append("stop step has nonempty extra layer")
            break
        nxt = steps[idx + 1]
        gone = (1 << st.vertex) | st.dropped | st.extra_mask
        if nxt.alive != alive & ~gone:
            out.append(f"step {st.index}: next graph is not G_i minus the removals")
        # fact 2
        if nxt.alive & ((1 << st.vertex) | (g.vertex_mask & ~adj[st.vertex] & ~(1 << st.vertex))):
            out.append(f"step {st.index}: survivors meet the anchor or its non-neighbors")
        # fact 3
        peeled = mask_of(s.vertex for s in steps[: idx + 1])
        if K & ~peeled & ~nxt.alive:
            out.append(f"step {st.index}: a clique vertex was lost")
        # fact 4
        common = g.vertex_mask
        for s in steps[: idx + 1]:
            common &= adj[s.vertex]
        if nxt.alive & ~common:
            out.append(f"step {st.index}: survivors leave the anchors' common neighborhood")
        # facts 6 and 7
        if st.extra:
            y = st.extra[-1]
            if (nxt.alive & ~adj[y]).bit_count() < nxt.missing_degree:
                out.append(f"step {st.index}: last extra vertex sees too much of the next graph")
            if (st.dropped & ~adj[y]).bit_count() > d_i - nxt.missing_degree:
                out.append(f"step {st.index}: last extra vertex misses too much of D_i")
    return out


def verify_gap(trace: PeelingTrace) -> bool:
    """True iff consecutive surpluses drop by more than sqrt(surplus)/2 each step."""
    for a, b in zip(trace.steps, trace.steps[1:]):
        diff = a.surplus - b.surplus
        if diff <= 0:
            return False
        if 4 * diff * diff <= a.surplus:
            return False
    return True


def count_large_extra_layers(trace: PeelingTrace, threshold: float | None = None) -> int:
    """Number of steps i < r whose extra layer has at least `threshold` vertices.

    Default threshold: (ln t)^2.
    """
    if threshold is None:
        threshold = math.log(trace.target) ** 2
    return sum(1 for st in trace.steps[:-1] if len(st.extra) >= threshold)


# -- branch disks ----------------------------------------------------------


@dataclass(frozen=True)
class BranchDiskCertificate:
    disks: tuple[int, ...]    # vertex masks
    host_clique: int          # mask of K
    terminal: int             # mask of V(G_r)


def validate_branch_certificate(g: Graph, cert: BranchDiskCertificate) -> bool:
    """Ground-truth check of the disk conditions; independent of any construction."""
    core = cert.host_clique | cert.terminal
    used = 0
    for disk in cert.disks:
        if disk == 0 or disk & ~g.vertex_mask:
            return False
        if disk & (core | used):
            return False
        used |= disk
        if not g.is_connected_set(disk):
            return False
        seen = 0
        for v in bits(disk):
            seen |= g.adj[v]
        if core & ~seen:
            return False  # some core vertex sees no disk vertex
    nbrs = [_nbrs(g, d) for d in cert.disks]
    for i in range(len(cert.disks)):
        for j in range(i + 1, len(cert.disks)):
            if not nbrs[i] & cert.disks[j]:
                return False
    return True


def greedy_branch_set(g: Graph, trace: PeelingTrace) -> BranchDiskCertificate:
    """Deterministic disk construction from a trace.

    (a) any extra layer Y_i with |Y_i| >= 2*d_i + 1 is taken whole;
    (b) steps 2..r-1 are cut into brackets (a bracket ends when the missing
        degree drops to or below 7/8 of its opener), and each run of three
        consecutive steps inside a bracket contributes D_a u D_{a+1} u D_{a+2}.
    """
    if not trace.steps:
        raise ValueError("empty trace")
    steps = trace.steps
    r = trace.r
    disks: list[int] = []
    for st in steps[:-1]:
        if len(st.extra) >= 2 * st.missing_degree + 1:
            disks.append(st.extra_mask)
    # brackets over steps 2..r-1 (1-based indices)
    lo = 2
    while lo <= r - 1:
        d_open = steps[lo - 1].missing_degree
        hi = lo
        while hi + 1 <= r - 1 and 8 * steps[hi].missing_degree > 7 * d_open:
            hi += 1
        a = lo
        while a + 2 <= hi:
            disks.append(steps[a - 1].dropped | steps[a].dropped | steps[a + 1].dropped)
            a += 3
        lo = hi + 1
    return BranchDiskCertificate(tuple(disks), trace.clique, trace.terminal)


def minor_from_branches(g: Graph, trace: PeelingTrace,
                        cert: BranchDiskCertificate) -> tuple[int, ...]:
    """Assemble a clique-minor model: early anchors as singletons, the
    surviving clique vertices as singletons, plus the disks.

    The order is (r-1) + |K minus the early anchors| + |disks|.
    """
    if not validate_branch_certificate(g, cert):
        raise ValueError("invalid branch-disk certificate")
    early = mask_of(st.vertex for st in trace.steps[:-1])
    survivors = trace.clique & ~early
    sets = [1 << st.vertex for st in trace.steps[:-1]]
    sets += [1 << v for v in bits(survivors)]
    sets += list(cert.disks)
    if not minors.validate_model(g, sets):
        raise AssertionError("assembled decomposition failed validation")
    return tuple(sets)


def exhaustive_branch_set_size(g: Graph, trace: PeelingTrace, cap: int = 12) -> int:
    """Exact maximum number of pairwise-adjacent disjoint disks, tiny hosts only.

    Enumerates every subset of the non-clique, non-terminal vertices that
    is a valid disk, then takes a maximum clique in the compatibility graph
    (disjoint + adjacent).  Exponential; refuses hosts above ``cap``.
    """
    if g.n > cap:
        raise minors.VertexCapExceeded(f"exhaustive disk search capped at {cap} vertices")
    core = trace.clique | trace.terminal
    pool = list(bits(g.vertex_mask & ~core))
    disks = []
    for sub in range(1, 1 << len(pool)):
        mask = 0
        m = sub
        while m:
            low = m & -m
            mask |= 1 << pool[low.bit_length() - 1]
            m ^= low
        if not g.is_connected_set(mask):
            continue
        seen = 0
        for v in bits(mask):
            seen |= g.adj[v]
        if core & ~seen:
            continue
        disks.append(mask)
    if not disks:
        return 0
    nbrs = [_nbrs(g, d) for d in disks]
    rows = [0] * len(disks)
    for i in range(len(disks)):
        for j in range(i + 1, len(disks)):
            if not disks[i] & disks[j] and nbrs[i] & disks[j]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return clique_number(Graph(len(disks), rows))


# -- trace serialization ---------------------------------------------------


def trace_to_jsonl(trace: PeelingTrace) -> str:
    """One StepRecord per line, then a stop line."""
    lines = []
    for st in trace.steps:
        lines.append(json.dumps({
            "i": st.index, "v": st.vertex,
            "G": sorted(bits(st.alive)), "D": sorted(bits(st.dropped)),
            "Y": list(st.extra),
            "n": st.order, "d": st.missing_degree, "n_prime": st.surplus,
        }))
    lines.append(json.dumps({"stop": trace.stop_reason, "r": trace.r}))
    return "\n".join(lines) + "\n"


def trace_from_jsonl(text: str, target: int, clique: int) -> PeelingTrace:
    steps = []
    stop = None
    for line in text.strip().splitlines():
        obj = json.loads(line)
        if "stop" in obj:
            stop = obj["stop"]
            continue
        steps.append(PeelStep(
            obj["i"], obj["v"], mask_of(obj["G"]), mask_of(obj["D"]),
            tuple(obj["Y"]), obj["n"], obj["d"], obj["n_prime"],
        ))
    if stop is None:
        raise ValueError("missing stop line")
    return PeelingTrace(target, clique, tuple(steps), stop)
