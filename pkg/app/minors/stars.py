"""Star decompositions, star contraction and depth-1 minor models."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from app.graph import Graph


class InvalidDecompositionError(ValueError):
    """Raised when stars overlap or a leaf is not adjacent to its center."""


class InvalidModelError(ValueError):
    """Raised when a minor model does not realise its target graph."""


def _freeze_stars(stars: Mapping[int, Iterable[int]]) -> Mapping[int, frozenset[int]]:
    return MappingProxyType(
        {center: frozenset(leaves) for center, leaves in sorted(stars.items())}
    )


@dataclass(frozen=True)
class StarDecomposition:
    """Pairwise disjoint stars, keyed by center."""

    stars: Mapping[int, frozenset[int]]

    def __init__(self, stars: Mapping[int, Iterable[int]]):
        object.__setattr__(self, "stars", _freeze_stars(stars))

    @property
    def centers(self) -> tuple[int, ...]:
        return tuple(self.stars)

    def members(self, center: int) -> frozenset[int]:
        return self.stars[center] | {center}

    def vertices(self) -> frozenset[int]:
        return frozenset().union(*(self.members(c) for c in self.stars))

    def owner(self) -> dict[int, int]:
        """Map every star vertex to the center of its star."""
        owners = {}
        for center in self.stars:
            for vertex in self.members(center):
                owners[vertex] = center
        return owners

    def validate(self, g: Graph) -> None:
        seen: set[int] = set()
        for center, leaves in self.stars.items():
            if center not in g:
                raise InvalidDecompositionError(f"star center {center} is not in the graph")
            if center in leaves:
                raise InvalidDecompositionError(f"star {center} lists its center as a leaf")
            for leaf in leaves:
                if not g.has_edge(center, leaf):
                    raise InvalidDecompositionError(
                        f"leaf {leaf} is not adjacent to star center {center}"
                    )
            members = self.members(center)
            overlap = seen & members
            if overlap:
                raise InvalidDecompositionError(
                    f"stars overlap on {sorted(overlap)}"
                )
            seen |= members

    def to_dict(self) -> dict[int, list[int]]:
        return {center: sorted(leaves) for center, leaves in self.stars.items()}


def contract(g: Graph, dec: StarDecomposition) -> Graph:
    """Contract every star of ``dec`` into its center.

    Non-star vertices keep their IDs; loops and parallel edges collapse.
    """
    dec.validate(g)
    owners = dec.owner()
    image = {vertex: owners.get(vertex, vertex) for vertex in g.vertices}
    edges = {
        (min(image[u], image[v]), max(image[u], image[v]))
        for u, v in g.edges
        if image[u] != image[v]
    }
    return Graph.from_edges(sorted(edges), set(image.values()))


def complete_bipartite(left: int, right: int) -> Graph:
    """K_{left,right} on IDs 1..left (first side) and left+1..left+right."""
    return Graph.from_edges(
        (a, left + b) for a in range(1, left + 1) for b in range(1, right + 1)
    )


def k_t3(t: int) -> Graph:
    """K_{t,3} with the three-vertex side on IDs 1..3 and the t-side on 4..t+3."""
    return complete_bipartite(3, t)


@dataclass(frozen=True)
class MinorModel:
    """A depth-1 minor model of ``target`` in some host graph.

    ``branch`` maps each target vertex to the center of its star and
    ``edge_witnesses`` maps each target edge (a < b) to a host edge joining
    the two stars.
    """

    target: Graph
    decomposition: StarDecomposition
    branch: Mapping[int, int]
    edge_witnesses: Mapping[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    @property
    def vertices(self) -> frozenset[int]:
        return self.decomposition.vertices()

    def subgraph(self, host: Graph) -> Graph:
        """Stars plus witness edges, as a subgraph of ``host``."""
        edges = {
            (min(center, leaf), max(center, leaf))
            for center, leaves in self.decomposition.stars.items()
            for leaf in leaves
        }
        edges.update((min(x, y), max(x, y)) for x, y in self.edge_witnesses.values())
        for u, v in edges:
            if not host.has_edge(u, v):
                raise InvalidModelError(f"edge {u}-{v} is not in the host graph")
        return Graph.from_edges(sorted(edges), self.vertices)

    def to_dict(self) -> dict:
        return {
            "target": {"vertices": list(self.target.vertices), "edges": [list(e) for e in self.target.edges]},
            "stars": {str(c): leaves for c, leaves in self.decomposition.to_dict().items()},
            "branch": {str(a): c for a, c in sorted(self.branch.items())},
            "edge_witnesses": [
                {"target_edge": list(edge), "host_edge": list(witness)}
                for edge, witness in sorted(self.edge_witnesses.items())
            ],
        }


def validate_model(g: Graph, model: MinorModel) -> None:
    """Check ``model`` against ``g`` independently of how it was found."""
    dec = model.decomposition
    try:
        dec.validate(g)
    except InvalidDecompositionError as exc:
        raise InvalidModelError(str(exc)) from exc

    if set(model.branch) != set(model.target.vertices):
        raise InvalidModelError("branch map must cover every target vertex")
    if sorted(model.branch.values()) != sorted(dec.centers):
        raise InvalidModelError("branch map must be a bijection onto the star centers")

    for a, b in model.target.edges:
        witness = model.edge_witnesses.get((a, b))
        if witness is None:
            raise InvalidModelError(f"target edge {a}-{b} has no witness")
        x, y = witness
        if not g.has_edge(x, y):
            raise InvalidModelError(f"witness {x}-{y} is not a host edge")
        star_a = dec.members(model.branch[a])
        star_b = dec.members(model.branch[b])
        if not ((x in star_a and y in star_b) or (x in star_b and y in star_a)):
            raise InvalidModelError(
                f"witness {x}-{y} does not join the stars of {a} and {b}"
            )
