"""Pairwise disjointness of line families, intersection graphs and line-count bounds."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb

from ..geom import Line, intersection_point, lines_disjoint


class DuplicateLines(ValueError):
    pass


def miyaoka_bound(d: int) -> int:
    """Maximum number of pairwise disjoint lines on a smooth surface of degree d."""
    if d < 3:
        raise ValueError("Miyaoka's bound needs d >= 3")
    return 2 * d * (d - 2)


def rams_bound(d: int) -> int:
    """Disjoint lines attained by the general construction for d >= 5."""
    if d < 5:
        raise ValueError("the construction needs d >= 5")
    return d * (d - 2) + 2


def _meeting_pairs(lines, rows, stop_at_first):
    out = []
    n = len(lines)
    for i in rows:
        li = lines[i]
        for j in range(i + 1, n):
            if not lines_disjoint(li, lines[j]):
                out.append((i, j))
                if stop_at_first:
                    return out
    return out


def meeting_pairs(lines: list[Line], workers: int = 1, stop_at_first: bool = False) -> list:
    """Index pairs (i < j) of lines that meet, in lexicographic order."""
    n = len(lines)
    if workers <= 1 or n < 64:
        return _meeting_pairs(lines, range(n), stop_at_first)
    # row i has n-1-i pairs; striping rows balances the work
    stripes = [range(k, n, workers) for k in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_meeting_pairs, [lines] * workers, stripes, [stop_at_first] * workers)
        pairs = sorted(p for part in parts for p in part)
    return pairs[:1] if stop_at_first else pairs


@dataclass
class DisjointnessCertificate:
    passed: bool
    lines: int
    pairs_checked: int
    witness: dict | None = None

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "lines": self.lines,
            "pairs_checked": self.pairs_checked,
            "witness": self.witness,
        }


def verify_disjoint_family(lines, workers: int = 1) -> DisjointnessCertificate:
    """Check every unordered pair; a failure carries the first meeting pair and a common point."""
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise DuplicateLines("the family contains a repeated line")
    hit = meeting_pairs(lines, workers=workers, stop_at_first=True)
    total = comb(len(lines), 2)
    if not hit:
        return DisjointnessCertificate(True, len(lines), total)
    i, j = hit[0]
    point = intersection_point(lines[i], lines[j])
    witness = {
        "pair": [i, j],
        "lines": [lines[i].to_json(), lines[j].to_json()],
        "common_point": point.to_json() if point is not None else None,
    }
    # pairs examined up to and including the witness
    checked = sum(len(lines) - 1 - r for r in range(i)) + (j - i)
    return DisjointnessCertificate(False, len(lines), checked, witness)


@dataclass
class IntersectionGraph:
    vertices: list
    adjacency: set = field(default_factory=set)

    def __post_init__(self):
        for i, j in self.adjacency:
            if i == j:
                raise ValueError("self-loop in intersection graph")

    @property
    def order(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.adjacency)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.adjacency

    def neighbour_masks(self) -> list[int]:
        masks = [0] * self.order
        for i, j in self.adjacency:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return masks

    def is_independent(self, subset) -> bool:
        return not any(self.has_edge(i, j) for i, j in combinations(sorted(subset), 2))

    @classmethod
    def from_edges(cls, n: int, edges) -> IntersectionGraph:
        return cls(list(range(n)), {(min(i, j), max(i, j)) for i, j in edges})


def build_intersection_graph(lines, workers: int = 1) -> IntersectionGraph:
    lines = list(lines)
    if len(set(lines)) != len(lines):
        raise DuplicateLines("graph vertices must be distinct lines")
    return IntersectionGraph(lines, set(meeting_pairs(lines, workers=workers)))
