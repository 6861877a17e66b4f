"""Immutable simple graphs with neighbourhood and ball queries."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

VertexId = int


class GraphError(ValueError):
    """Raised when a graph cannot be built or queried as requested."""


class UnknownVertexError(GraphError, KeyError):
    """Raised when a vertex ID is not a member of the graph."""

    def __init__(self, vertex):
        super().__init__(f"Unknown vertex ID: {vertex!r}")
        self.vertex = vertex

    def __str__(self) -> str:
        return self.args[0]


class EmptyGraphError(GraphError):
    """Raised by queries that are undefined on the empty graph."""


def _check_vertex_id(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise GraphError(f"Vertex IDs must be positive integers, got {value!r}")
    return value


class Graph:
    """A finite, undirected, simple graph with stable positive integer IDs.

    Instances never change after construction. Adjacency is kept as sorted
    ID tuples so every query answers in ascending ID order.
    """

    __slots__ = ("_nx", "_adj", "_vertices")

    def __init__(self, nx_graph: nx.Graph):
        self._nx = nx.freeze(nx.Graph(nx_graph))
        self._adj = {
            vertex: tuple(sorted(self._nx.adj[vertex])) for vertex in self._nx
        }
        self._vertices = tuple(sorted(self._adj))

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[int, int]],
        vertices: Iterable[int] = (),
    ) -> "Graph":
        nx_graph = nx.Graph()
        for vertex in vertices:
            nx_graph.add_node(_check_vertex_id(vertex))
        for u, v in edges:
            _check_vertex_id(u)
            _check_vertex_id(v)
            if u == v:
                raise GraphError(f"Self-loop on vertex {u} is not allowed")
            nx_graph.add_edge(u, v)
        return cls(nx_graph)

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph) -> "Graph":
        if nx_graph.is_directed() or nx_graph.is_multigraph():
            raise GraphError("Only simple undirected graphs are supported")
        return cls.from_edges(nx_graph.edges(), nx_graph.nodes())

    @classmethod
    def empty(cls) -> "Graph":
        return cls(nx.Graph())

    def to_networkx(self) -> nx.Graph:
        """Return the frozen networkx graph backing this instance."""
        return self._nx

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            sorted((min(u, v), max(u, v)) for u, v in self._nx.edges())
        )

    def order(self) -> int:
        return len(self._adj)

    def size(self) -> int:
        return self._nx.number_of_edges()

    def max_id(self) -> int:
        return max(self._adj, default=0)

    def has_vertex(self, vertex) -> bool:
        return vertex in self._adj

    def has_edge(self, u, v) -> bool:
        return self._nx.has_edge(u, v)

    def neighbors_of(self, vertex) -> tuple[int, ...]:
        try:
            return self._adj[vertex]
        except (KeyError, TypeError):
            raise UnknownVertexError(vertex) from None

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        for vertex in keep:
            if vertex not in self._adj:
                raise UnknownVertexError(vertex)
        return Graph(self._nx.subgraph(keep))

    def without(self, vertices: Iterable[int]) -> "Graph":
        """Return G − X, the subgraph induced by the remaining vertices."""
        drop = set(vertices)
        return Graph(self._nx.subgraph(v for v in self._adj if v not in drop))

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        images = [mapping[v] for v in self._adj]
        if len(set(images)) != len(images):
            raise GraphError("Relabelling must be injective")
        return Graph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self._nx.edges()),
            images,
        )

    def disjoint_union(self, other: "Graph", offset: int | None = None) -> "Graph":
        """Return self plus a copy of ``other`` with IDs shifted by ``offset``."""
        shift = self.max_id() if offset is None else offset
        shifted = {v: v + shift for v in other.vertices}
        if set(shifted.values()) & set(self._adj):
            raise GraphError("Offset makes the vertex sets overlap")
        return Graph.from_edges(
            list(self._nx.edges()) + [(shifted[u], shifted[v]) for u, v in other.edges],
            list(self._adj) + list(shifted.values()),
        )

    def __contains__(self, vertex) -> bool:
        return vertex in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self):
        return iter(self.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.order()}, m={self.size()})"

    def __reduce__(self):
        return (Graph.from_edges, (self.edges, self.vertices))


@dataclass(frozen=True)
class Ball:
    """The induced graph G[N^r[center]]."""

    center: int
    radius: int
    subgraph: Graph

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.subgraph.vertices


def _require(g: Graph, vertex) -> None:
    if vertex not in g:
        raise UnknownVertexError(vertex)


def neighbors(g: Graph, v: int) -> tuple[int, ...]:
    """Return the open neighbourhood N(v) in ascending ID order."""
    return g.neighbors_of(v)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors_of(v))


def distance_ball_vertices(g: Graph, v: int, r: int) -> tuple[int, ...]:
    """Return N^r[v], the vertices within distance ``r`` of ``v``."""
    _require(g, v)
    if r < 0:
        raise GraphError(f"Radius must be non-negative, got {r}")
    lengths = nx.single_source_shortest_path_length(g.to_networkx(), v, cutoff=r)
    return tuple(sorted(lengths))


def closed_ball(g: Graph, v: int, r: int) -> Ball:
    return Ball(center=v, radius=r, subgraph=g.induced(distance_ball_vertices(g, v, r)))


def neighborhood_of_set(g: Graph, a: Iterable[int]) -> tuple[int, ...]:
    """Return the closed neighbourhood N[A]."""
    covered: set[int] = set()
    for vertex in a:
        covered.add(vertex)
        covered.update(g.neighbors_of(vertex))
    return tuple(sorted(covered))


def is_dominating_set(g: Graph, d: Iterable[int]) -> bool:
    members = set(d)
    for vertex in members:
        _require(g, vertex)
    return all(
        vertex in members or any(u in members for u in g.neighbors_of(vertex))
        for vertex in g.vertices
    )


def undominated_vertices(g: Graph, d: Iterable[int]) -> tuple[int, ...]:
    covered = set(neighborhood_of_set(g, d))
    return tuple(v for v in g.vertices if v not in covered)


def edge_density(g: Graph) -> Fraction:
    if g.order() == 0:
        raise EmptyGraphError("Edge density is undefined on the empty graph")
    return Fraction(g.size(), g.order())
