"""Exact references: minimum dominating set, coverage and depth-1 minors.

Everything here is exponential and meant for small instances only; the
harness decides which instances are small enough.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from app.graph import Graph, UnknownVertexError
from app.minors import k_t3
from shared.constants import DEFAULT_ORACLE_BUDGET

logger = logging.getLogger(__name__)

NAIVE_MINOR_LIMIT = 12


class OracleBudgetExceeded(RuntimeError):
    """The search ran out of nodes before proving optimality."""

    def __init__(self, best: tuple[int, ...], explored_nodes: int):
        super().__init__(
            f"Oracle budget exhausted after {explored_nodes} nodes; "
            f"best dominating set found has size {len(best)}"
        )
        self.best = best
        self.explored_nodes = explored_nodes


class OracleSizeLimitError(ValueError):
    """The instance is too large for an enumerating oracle."""


@dataclass(frozen=True)
class OracleResult:
    gamma: int
    witness: tuple[int, ...]
    explored_nodes: int

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "witness": list(self.witness),
            "explored_nodes": self.explored_nodes,
        }


def greedy_dominating_set(g: Graph) -> tuple[int, ...]:
    """Repeatedly take the vertex covering most undominated vertices."""
    undominated = set(g.vertices)
    chosen = []
    while undominated:
        best = max(
            g.vertices,
            key=lambda v: (len(undominated & {v, *g.neighbors_of(v)}), -v),
        )
        chosen.append(best)
        undominated -= {best, *g.neighbors_of(best)}
    return tuple(sorted(chosen))


def exact_mds(g: Graph, budget: int = DEFAULT_ORACLE_BUDGET) -> OracleResult:
    ids = g.vertices
    index = {v: i for i, v in enumerate(ids)}
    closed = [
        (1 << i) | sum(1 << index[u] for u in g.neighbors_of(v)) for i, v in enumerate(ids)
    ]
    full = (1 << len(ids)) - 1
    widest = max((mask.bit_count() for mask in closed), default=1)

    greedy = greedy_dominating_set(g)
    best = [sum(1 << index[v] for v in greedy)]
    explored = 0

    def lower_bound(uncovered: int) -> int:
        # Vertices with pairwise disjoint closed neighbourhoods need distinct dominators.
        packed = 0
        blocked = 0
        for i in _bits(uncovered):
            if not closed[i] & blocked:
                packed += 1
                blocked |= closed[i]
        by_volume = -(-uncovered.bit_count() // widest)
        return max(packed, by_volume)

    def search(chosen: int, covered: int, size: int) -> None:
        nonlocal explored
        explored += 1
        if explored > budget:
            raise OracleBudgetExceeded(_ids(ids, best[0]), explored - 1)
        if covered == full:
            if size < best[0].bit_count():
                best[0] = chosen
            return
        uncovered = full & ~covered
        if size + lower_bound(uncovered) >= best[0].bit_count():
            return
        pick = min(_bits(uncovered), key=lambda i: (closed[i].bit_count(), i))
        options = sorted(
            _bits(closed[pick]),
            key=lambda a: (-(closed[a] & uncovered).bit_count(), a),
        )
        for a in options:
            search(chosen | (1 << a), covered | closed[a], size + 1)

    if ids:
        search(0, 0, 0)
    witness = _ids(ids, best[0])
    logger.debug(
        "Exact dominating set found",
        extra={"n": len(ids), "gamma": len(witness), "explored_nodes": explored},
    )
    return OracleResult(gamma=len(witness), witness=witness, explored_nodes=explored)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _ids(ids: tuple[int, ...], mask: int) -> tuple[int, ...]:
    return tuple(ids[i] for i in _bits(mask))


def exact_coverage(g: Graph, v: int, k: int) -> bool:
    """Brute force over every A within V - {v} of size at most k."""
    if v not in g:
        raise UnknownVertexError(v)
    targets = set(g.neighbors_of(v))
    others = [u for u in g.vertices if u != v]
    for size in range(0, min(k, len(others)) + 1):
        for subset in combinations(others, size):
            covered = set(subset).union(*(g.neighbors_of(a) for a in subset))
            if targets <= covered:
                return True
    return False


def naive_depth1_minor(g: Graph, t: int) -> bool:
    """Enumerate every split of V into stars and test the contraction.

    Each vertex is either a star center or a leaf of an adjacent center;
    singleton stars cost nothing, since the contraction only needs to
    contain K_{t,3} as a subgraph.
    """
    if g.order() > NAIVE_MINOR_LIMIT:
        raise OracleSizeLimitError(
            f"naive minor enumeration supports at most {NAIVE_MINOR_LIMIT} vertices"
        )
    target = k_t3(t).to_networkx()
    vertices = g.vertices
    for count in range(t + 3, len(vertices) + 1):
        for centers in combinations(vertices, count):
            center_set = set(centers)
            leaves = [v for v in vertices if v not in center_set]
            choices = [
                [c for c in g.neighbors_of(leaf) if c in center_set] for leaf in leaves
            ]
            if any(not options for options in choices):
                continue
            for assignment in product(*choices):
                owner = dict(zip(leaves, assignment))
                if _contains_target(g, owner, centers, target, t):
                    return True
    return False


def _contains_target(g: Graph, owner: dict[int, int], centers, target: nx.Graph, t: int) -> bool:
    contracted = nx.Graph()
    contracted.add_nodes_from(centers)
    for u, v in g.edges:
        a, b = owner.get(u, u), owner.get(v, v)
        if a != b:
            contracted.add_edge(a, b)
    if contracted.number_of_edges() < 3 * t:
        return False
    if sum(1 for _, degree in contracted.degree() if degree >= 3) < t + 3:
        return False
    return GraphMatcher(contracted, target).subgraph_is_monomorphic()
