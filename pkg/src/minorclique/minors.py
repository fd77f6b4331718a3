"""Exact clique-minor containment on small graphs, with certificates.

A K_m-minor model ("branch decomposition") is a family of m pairwise
disjoint, nonempty, connected vertex sets with an edge between every pair.
``has_clique_minor`` searches for one exhaustively; the search is only
sensible up to ~14 vertices and refuses larger inputs rather than guess.

For graphs whose complement has maximum degree at most 1, or more generally
graphs with n >= omega + 2*Delta'^2 + 2 (Delta' the max missing degree),
the largest clique-minor order has the closed form floor((n + omega)/2);
``dense_hadwiger`` evaluates it, and the search is the independent witness
that the two agree.
"""

from __future__ import annotations

import json

from .graphs import Graph, bits, clique_number, max_missing_degree

DEFAULT_VERTEX_CAP = 14


class VertexCapExceeded(RuntimeError):
    """Exhaustive minor search refused: the graph exceeds the vertex cap."""


def validate_model(g: Graph, branch_sets, require_mutual_adjacency: bool = True) -> bool:
    """Independent check of a branch decomposition.

    Requires: sets nonempty and pairwise disjoint, each inducing a connected
    subgraph, and (for a clique-minor certificate) every pair joined by an
    edge.
    """
    sets = list(branch_sets)
    used = 0
    for s in sets:
        if s == 0 or s & ~g.vertex_mask:
            return False
        if s & used:
            return False
        used |= s
        if not g.is_connected_set(s):
            return False
    if require_mutual_adjacency:
        nbrs = [_set_neighbors(g, s) for s in sets]
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                if not nbrs[i] & sets[j]:
                    return False
    return True


def _set_neighbors(g: Graph, s: int) -> int:
    acc = 0
    for v in bits(s):
        acc |= g.adj[v]
    return acc & ~s


def has_clique_minor(g: Graph, m: int, cap: int = DEFAULT_VERTEX_CAP):
    """Search for a K_m-minor model; returns a tuple of branch-set masks or None.

    Branch sets are enumerated in canonical order (strictly ascending
    minimum vertex; each set grown by connected extension with an exclusion
    set so every candidate appears exactly once), which makes the answer
    deterministic.  Raises VertexCapExceeded for hosts larger than ``cap``.
    """
    if g.n > cap:
        raise VertexCapExceeded(f"minor search capped at {cap} vertices, got {g.n}")
    if m <= 0:
        return ()
    if m > g.n:
        return None
    adj = g.adj
    full = g.vertex_mask
    nbr_cache: dict[int, int] = {}

    def set_nbrs(s: int) -> int:
        cached = nbr_cache.get(s)
        if cached is None:
            cached = _set_neighbors(g, s)
            nbr_cache[s] = cached
        return cached

    chosen: list[int] = []
    chosen_nbrs: list[int] = []

    def place(idx: int, above: int, used: int):
        # Starts ascend and every member of a set exceeds its start, so all
        # remaining material lives in `above` (vertices past the last start).
        need = m - idx
        pool = above & ~used
        if pool.bit_count() < need:
            return None
        for s in bits(pool):
            room = pool & ~((2 << s) - 1)
            if room.bit_count() + 1 < need:
                break  # later starts only shrink the room
            hit = grow(idx, s, 1 << s, adj[s], room, used | (1 << s))
            if hit is not None:
                return hit
        return None

    def grow(idx: int, start: int, cur: int, cur_nbrs: int, ext_pool: int, used: int):
        # `used` already includes cur.  `ext_pool` is what this particular
        # set may still absorb (shrinks as siblings get excluded); vertices
        # outside it stay available to later sets via `used`.
        later = m - idx - 1
        rest = full & ~used & ~((2 << start) - 1)
        if all(cur_nbrs & prev for prev in chosen):
            ok = rest.bit_count() >= later
            if ok and later:
                if (cur_nbrs & rest).bit_count() < later:
                    ok = False
                else:
                    for pn in chosen_nbrs:
                        if (pn & rest).bit_count() < later:
                            ok = False
                            break
            if ok:
                if later == 0:
                    return tuple(chosen) + (cur,)
                chosen.append(cur)
                chosen_nbrs.append(set_nbrs(cur))
                hit = place(idx + 1, rest, used)
                chosen.pop()
                chosen_nbrs.pop()
                if hit is not None:
                    return hit
        if rest.bit_count() <= later:
            return None  # no vertex to spare for an extension
        ext = cur_nbrs & ext_pool & ~cur
        banned = 0
        for u in bits(ext):
            bit = 1 << u
            hit = grow(idx, start, cur | bit, cur_nbrs | adj[u],
                       ext_pool & ~banned, used | bit)
            if hit is not None:
                return hit
            banned |= bit
        return None

    return place(0, full, 0)


def hadwiger_number(g: Graph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Largest m such that K_m is a minor of g (0 for the empty graph)."""
    if g.n == 0:
        return 0
    w = clique_number(g)
    for m in range(g.n, w, -1):
        if has_clique_minor(g, m, cap=cap) is not None:
            return m
    return w  # a maximum clique is its own model


def is_dense(g: Graph) -> bool:
    """True iff n >= omega + 2*Delta'^2 + 2 or Delta' <= 1 (Delta' = max missing degree)."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    dbar = max_missing_degree(g)
    if dbar <= 1:
        return True
    slack = g.n - 2 * dbar * dbar - 2
    if slack < 1:
        return False  # omega >= 1 already exceeds the budget
    return clique_number(g) <= slack


def dense_hadwiger(g: Graph) -> int:
    """floor((n + omega)/2); equals hadwiger_number(g) whenever is_dense(g)."""
    if not is_dense(g):
        raise ValueError("dense_hadwiger requires is_dense(g)")
    return (g.n + clique_number(g)) // 2


def in_family_G(g: Graph, s: int) -> bool:
    """True iff floor((n + omega)/2) <= s - 1."""
    if g.n == 0:
        return True
    return (g.n + clique_number(g)) // 2 <= s - 1


def in_family_H(g: Graph, s: int, m: int, cap: int = DEFAULT_VERTEX_CAP) -> bool:
    """True iff g has at most m vertices and no clique minor of order s + 1."""
    if g.n > m:
        return False
    if s + 1 > g.n:
        return True
    return has_clique_minor(g, s + 1, cap=cap) is None


def model_to_json(branch_sets) -> str:
    return json.dumps({"branch_sets": [sorted(bits(s)) for s in branch_sets]})


def model_from_json(text: str) -> tuple[int, ...]:
    obj = json.loads(text)
    out = []
    for lst in obj["branch_sets"]:
        acc = 0
        for v in lst:
            acc |= 1 << v
        out.append(acc)
    return tuple(out)
