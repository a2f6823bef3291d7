"""Best-effort search for large independent sets in an intersection graph.

Greedy seeding, then branch and bound on bitsets.  A miss within the
budget says nothing about existence.
"""

from __future__ import annotations

import time

from .lines import IntersectionGraph


class _OutOfTime(Exception):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _greedy(nbrs: list[int], start: int, cand: int) -> int:
    """Extend the independent set ``start`` by repeatedly taking a min-degree candidate."""
    chosen = start
    while cand:
        v = min(_bits(cand), key=lambda u: (nbrs[u] & cand).bit_count())
        chosen |= 1 << v
        cand &= ~(nbrs[v] | (1 << v))
    return chosen


def _degree_bound(nbrs: list[int], cand: int) -> int:
    """alpha(H) <= |V| - |E| / maxdeg for the subgraph H induced on ``cand``."""
    verts = _bits(cand)
    degs = [(nbrs[v] & cand).bit_count() for v in verts]
    maxdeg = max(degs, default=0)
    if maxdeg == 0:
        return len(verts)
    edges = sum(degs) // 2
    return len(verts) - -(-edges // maxdeg)


def independent_set_search(
    graph: IntersectionGraph,
    target: int,
    budget: float = 10.0,
    seeds=(),
) -> list[int] | None:
    """Vertex indices of a pairwise non-adjacent set of size >= target, or None.

    ``budget`` is in seconds.  ``seeds`` are optional starting vertex sets
    (for instance a known disjoint family); each is extended greedily first.
    """
    n = graph.order
    if target > n:
        raise ValueError("target exceeds the number of vertices")
    if target <= 0:
        return []
    nbrs = graph.neighbour_masks()
    full = (1 << n) - 1
    deadline = time.monotonic() + budget

    def done(mask):
        return sorted(_bits(mask)) if mask.bit_count() >= target else None

    for seed in seeds:
        seed = list(seed)
        if not graph.is_independent(seed):
            continue
        start = 0
        for v in seed:
            start |= 1 << v
        cand = full & ~start
        for v in seed:
            cand &= ~nbrs[v]
        found = done(_greedy(nbrs, start, cand))
        if found:
            return found

    # greedy restarted from every vertex
    for v in range(n):
        if time.monotonic() > deadline:
            return None
        found = done(_greedy(nbrs, 1 << v, full & ~(nbrs[v] | (1 << v))))
        if found:
            return found

    ticks = [0]

    def expand(chosen: int, size: int, cand: int) -> int | None:
        ticks[0] += 1
        if ticks[0] % 256 == 0 and time.monotonic() > deadline:
            raise _OutOfTime
        if size >= target:
            return chosen
        if size + cand.bit_count() < target:
            return None
        if size + _degree_bound(nbrs, cand) < target:
            return None
        v = min(_bits(cand), key=lambda u: (nbrs[u] & cand).bit_count())
        hit = expand(chosen | (1 << v), size + 1, cand & ~(nbrs[v] | (1 << v)))
        if hit is not None:
            return hit
        return expand(chosen, size, cand & ~(1 << v))

    try:
        hit = expand(0, 0, full)
    except (_OutOfTime, RecursionError):
        return None
    return done(hit) if hit is not None else None
