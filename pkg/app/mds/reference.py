"""Whole-graph rendition of the planar algorithm with its literal constant.

Used as an equivalence oracle for the node-program pipeline; nothing here
goes through the LOCAL runtime.
"""

from __future__ import annotations

from dataclasses import dataclass

from app.graph import Graph, neighborhood_of_set

LITERAL_COVER_LIMIT = 6


@dataclass(frozen=True)
class ReferenceResult:
    d: frozenset[int]
    dom_map: dict[int, int]
    d_prime: frozenset[int]

    @property
    def dominating_set(self) -> frozenset[int]:
        return self.d | self.d_prime


def _closed(g: Graph, v: int) -> set[int]:
    return {v, *g.neighbors_of(v)}


def _coverable(g: Graph, v: int, limit: int) -> bool:
    """Is there A within V - {v}, |A| <= limit, with N(v) inside N[A]?"""

    targets = set(g.neighbors_of(v))
    reach = set().union(*(_closed(g, w) for w in targets)) - {v}
    widest = max((len(_closed(g, u) & targets) for u in reach), default=0)

    def extend(uncovered: frozenset[int], budget: int) -> bool:
        if not uncovered:
            return True
        if len(uncovered) > budget * widest:
            return False
        target = min(uncovered)
        for candidate in sorted(_closed(g, target) - {v}):
            if extend(uncovered - _closed(g, candidate), budget - 1):
                return True
        return False

    return extend(frozenset(targets), limit)


def algorithm1_reference(g: Graph) -> ReferenceResult:
    d = frozenset(v for v in g.vertices if not _coverable(g, v, LITERAL_COVER_LIMIT))
    dominated = set(neighborhood_of_set(g, d))
    undominated = [v for v in g.vertices if v not in dominated]
    residual = {
        w: len(_closed(g, w) - dominated)
        for w in g.vertices
    }
    dom_map = {}
    for v in undominated:
        candidates = sorted(_closed(g, v))
        best = max(residual[w] for w in candidates)
        dom_map[v] = next(w for w in candidates if residual[w] == best)
    return ReferenceResult(d=d, dom_map=dom_map, d_prime=frozenset(dom_map.values()))
