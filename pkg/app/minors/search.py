"""Exact search for depth-1 minor models of K_{t,3}.

A model is three pairwise disjoint "narrow" stars (the side of size 3 in
K_{t,3}) plus ``t`` pairwise disjoint "wide" stars, each touching all three
narrow stars. Every minimal model is 2-connected, so the search runs per
nonplanar block. Stars are vertex bitmasks; a narrow star needs at most
``t`` leaves and a wide star at most 3.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import networkx as nx

from app.graph import Graph, closed_ball
from shared.constants import CANONICAL_K33_RADIUS, MAX_CANONICAL_K33_VERTICES

from .stars import MinorModel, StarDecomposition, k_t3, validate_model

logger = logging.getLogger(__name__)

WIDE_LEAF_CAP = 3


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_t(t: int) -> None:
    if isinstance(t, bool) or not isinstance(t, int) or t < 3:
        raise ValueError(f"t must be an integer >= 3, got {t!r}")


def max_model_order(t: int) -> int:
    """Largest vertex count of a model whose stars carry no redundant leaf."""
    return 3 * (t + 1) + 4 * t


@dataclass(frozen=True)
class _Star:
    mask: int
    size: int
    boundary: int


class StarSearch:
    """Enumerates K_{t,3} models in one graph, smallest stars first."""

    def __init__(self, g: Graph, t: int):
        _check_t(t)
        self.graph = g
        self.t = t
        self.ids = g.vertices
        self.index = {vertex: i for i, vertex in enumerate(self.ids)}
        self.adj = [
            sum(1 << self.index[u] for u in g.neighbors_of(vertex)) for vertex in self.ids
        ]
        self.narrow = self._stars(t)
        self.wide = self.narrow if t == WIDE_LEAF_CAP else self._stars(WIDE_LEAF_CAP)
        self.touching = [self._touching(star) for star in self.narrow]
        self._static: tuple[list[int], dict[int, int]] | None = None

    def _stars(self, cap: int) -> tuple[_Star, ...]:
        masks = set()
        for i in range(len(self.ids)):
            neighbors = list(_bits(self.adj[i]))
            for k in range(min(cap, len(neighbors)) + 1):
                for leaves in combinations(neighbors, k):
                    mask = 1 << i
                    for leaf in leaves:
                        mask |= 1 << leaf
                    masks.add(mask)
        stars = []
        for mask in masks:
            reach = 0
            for i in _bits(mask):
                reach |= self.adj[i]
            stars.append(_Star(mask=mask, size=mask.bit_count(), boundary=reach & ~mask))
        stars.sort(key=lambda star: (star.size, star.mask))
        return tuple(stars)

    def _touching(self, star: _Star) -> int:
        found = 0
        for j, wide in enumerate(self.wide):
            if not wide.mask & star.mask and wide.mask & star.boundary:
                found |= 1 << j
        return found

    def _pairings(self) -> tuple[list[int], dict[int, int]]:
        """Size-independent part of the search, computed once per graph.

        Returns the narrow stars that can take part in any model and, for
        each, the bitmask of later narrow stars it can be paired with.
        """
        if self._static is None:
            t = self.t
            narrow = self.narrow
            touching = self.touching
            eligible = [
                i
                for i, star in enumerate(narrow)
                if star.boundary.bit_count() >= t and touching[i].bit_count() >= t
            ]
            partners = {}
            for pos, i in enumerate(eligible):
                found = 0
                for j in eligible[pos + 1 :]:
                    if narrow[i].mask & narrow[j].mask:
                        continue
                    if (touching[i] & touching[j]).bit_count() >= t:
                        found |= 1 << j
                partners[i] = found
            self._static = (eligible, partners)
        return self._static

    def models(
        self,
        budget: int,
        required: int | None = None,
        exact: bool = False,
    ) -> Iterator[tuple[tuple[int, int, int], tuple[int, ...]]]:
        """Yield (narrow star indices, wide star indices) for every model.

        Only models of at most ``budget`` vertices are produced, exactly
        ``budget`` when ``exact`` is set. With ``required`` one of the
        narrow stars must contain that vertex; for t = 3 the two sides are
        interchangeable, so this loses no model containing it.
        """
        t = self.t
        narrow = self.narrow
        touching = self.touching
        required_mask = 0 if required is None else 1 << self.index[required]
        static_eligible, static_partners = self._pairings()

        # narrow is sorted by size, so eligible stays sorted too
        eligible = []
        for i in static_eligible:
            if narrow[i].size + 2 + t > budget:
                break
            eligible.append(i)
        allowed = 0
        containing = 0
        for i in eligible:
            allowed |= 1 << i
            if narrow[i].mask & required_mask:
                containing |= 1 << i

        for i in eligible:
            first = narrow[i].size
            pairs = static_partners[i] & allowed
            for j in _bits(pairs):
                second = narrow[j].size
                if first + second + 1 + t > budget:
                    break
                thirds = pairs & static_partners[j]
                if required_mask and not (narrow[i].mask | narrow[j].mask) & required_mask:
                    thirds &= containing
                for k in _bits(thirds):
                    size = first + second + narrow[k].size
                    if size + t > budget:
                        break
                    common = touching[i] & touching[j] & touching[k]
                    if common.bit_count() < t:
                        continue
                    used = narrow[i].mask | narrow[j].mask | narrow[k].mask
                    for wides in self._pack(common, used, budget - size, exact):
                        yield (i, j, k), wides

    def _pack(self, common: int, used: int, room: int, exact: bool) -> Iterator[tuple[int, ...]]:
        wide = self.wide
        t = self.t
        # A candidate holding another candidate strictly only adds redundant leaves.
        kept: list[int] = []
        for j in _bits(common):
            mask = wide[j].mask
            if any(
                wide[other].mask & mask == wide[other].mask and wide[other].mask != mask
                for other in kept
            ):
                continue
            kept.append(j)

        chosen: list[int] = []

        def extend(start: int, occupied: int, left: int) -> Iterator[tuple[int, ...]]:
            needed = t - len(chosen)
            if needed == 0:
                if not exact or left == 0:
                    yield tuple(chosen)
                return
            if left < needed:
                return
            for pos in range(start, len(kept)):
                if len(kept) - pos < needed:
                    return
                star = wide[kept[pos]]
                if star.mask & occupied or star.size > left - (needed - 1):
                    continue
                chosen.append(kept[pos])
                yield from extend(pos + 1, occupied | star.mask, left - star.size)
                chosen.pop()

        yield from extend(0, used, room)

    def vertex_ids(self, mask: int) -> tuple[int, ...]:
        return tuple(self.ids[i] for i in _bits(mask))

    def union_mask(self, narrow: tuple[int, ...], wides: tuple[int, ...]) -> int:
        mask = 0
        for i in narrow:
            mask |= self.narrow[i].mask
        for j in wides:
            mask |= self.wide[j].mask
        return mask

    def _center(self, members: tuple[int, ...]) -> int:
        for vertex in members:
            others = set(members) - {vertex}
            if others <= set(self.graph.neighbors_of(vertex)):
                return vertex
        raise AssertionError("star mask without a center")

    def build_model(self, narrow: tuple[int, ...], wides: tuple[int, ...]) -> MinorModel:
        groups = [self.vertex_ids(self.narrow[i].mask) for i in narrow]
        groups += [self.vertex_ids(self.wide[j].mask) for j in wides]
        branch = {}
        stars = {}
        for target_vertex, members in enumerate(groups, start=1):
            center = self._center(members)
            branch[target_vertex] = center
            stars[center] = set(members) - {center}

        witnesses = {}
        for a in range(1, 4):
            for b in range(4, self.t + 4):
                witnesses[(a, b)] = next(
                    (x, y)
                    for x in groups[a - 1]
                    for y in groups[b - 1]
                    if self.graph.has_edge(x, y)
                )
        return MinorModel(
            target=k_t3(self.t),
            decomposition=StarDecomposition(stars),
            branch=branch,
            edge_witnesses=witnesses,
        )


def nonplanar_blocks(g: Graph, min_order: int, containing: int | None = None) -> list[Graph]:
    """Nonplanar biconnected blocks of ``g`` with at least ``min_order`` vertices."""
    nx_graph = g.to_networkx()
    blocks = []
    for component in nx.biconnected_components(nx_graph):
        if len(component) < min_order:
            continue
        if containing is not None and containing not in component:
            continue
        is_planar, _ = nx.check_planarity(nx_graph.subgraph(component))
        if not is_planar:
            blocks.append(g.induced(component))
    blocks.sort(key=lambda block: block.vertices)
    return blocks


def has_k_t3_depth1_minor(g: Graph, t: int) -> MinorModel | None:
    _check_t(t)
    for block in nonplanar_blocks(g, t + 3):
        search = StarSearch(block, t)
        budget = min(block.order(), max_model_order(t))
        for narrow, wides in search.models(budget):
            model = search.build_model(narrow, wides)
            validate_model(g, model)
            return model
    return None


def is_locally_embeddable(g: Graph, t: int) -> bool:
    return has_k_t3_depth1_minor(g, t) is None


class _BlockWitnesses:
    """K_{3,3} model vertex sets of one block, grouped by size.

    Shared by every vertex whose ball has this block, so each size is
    enumerated at most once per block.
    """

    def __init__(self, block: Graph):
        self.search = StarSearch(block, 3)
        self.order = block.order()
        self._by_size: dict[int, frozenset[int]] = {}
        self._minimal: dict[int, bool] = {}

    def contains_model_with(self, v: int) -> bool:
        budget = min(self.order, MAX_CANONICAL_K33_VERTICES)
        return next(self.search.models(budget, required=v), None) is not None

    def unions(self, size: int) -> frozenset[int]:
        if size not in self._by_size:
            search = self.search
            self._by_size[size] = frozenset(
                search.union_mask(narrow, wides)
                for narrow, wides in search.models(size, exact=True)
            )
        return self._by_size[size]

    def is_deletion_minimal(self, mask: int) -> bool:
        # G[S - x] has a model exactly when a smaller model set lies inside S.
        if mask not in self._minimal:
            self._minimal[mask] = not any(
                smaller & mask == smaller
                for size in range(6, mask.bit_count())
                for smaller in self.unions(size)
            )
        return self._minimal[mask]

    def candidates(self, size: int, v: int) -> list[tuple[int, ...]]:
        bit = 1 << self.search.index[v]
        return [
            self.search.vertex_ids(mask)
            for mask in self.unions(size)
            if mask & bit and self.is_deletion_minimal(mask)
        ]


@lru_cache(maxsize=256)
def _block_witnesses(block: Graph) -> _BlockWitnesses:
    return _BlockWitnesses(block)


def find_canonical_k33(g: Graph, v: int) -> Graph | None:
    """Return the canonical K_{3,3} witness around ``v``, if any.

    The witness is a vertex set S within distance 6 of ``v`` that contains
    ``v``, whose induced graph has K_{3,3} as a depth-1 minor while no
    G[S - x] does. Among those, the smallest S wins, ties broken by the
    sorted ID sequence.
    """
    ball = closed_ball(g, v, CANONICAL_K33_RADIUS).subgraph
    blocks = [
        _block_witnesses(block) for block in nonplanar_blocks(ball, 6, containing=v)
    ]
    blocks = [block for block in blocks if block.contains_model_with(v)]
    if not blocks:
        return None

    largest = min(max(block.order for block in blocks), MAX_CANONICAL_K33_VERTICES)
    for size in range(6, largest + 1):
        found = [
            witness
            for block in blocks
            if block.order >= size
            for witness in block.candidates(size, v)
        ]
        if found:
            witness = min(found)
            logger.debug(
                "Found canonical K33 witness",
                extra={"vertex": v, "witness_size": size, "candidates": len(found)},
            )
            return ball.induced(witness)
    return None
