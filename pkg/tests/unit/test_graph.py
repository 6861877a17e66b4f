import pickle
from fractions import Fraction

import pytest

from app.graph import (
    EmptyGraphError,
    Graph,
    GraphError,
    UnknownVertexError,
    closed_ball,
    degree,
    distance_ball_vertices,
    edge_density,
    is_dominating_set,
    neighborhood_of_set,
    undominated_vertices,
)
from tests.fixtures import k33, path_graph


class TestGraph:
    def test_vertices_and_neighbors_are_sorted(self):
        g = Graph.from_edges([(5, 2), (2, 9), (2, 3)])

        assert g.vertices == (2, 3, 5, 9)
        assert g.neighbors_of(2) == (3, 5, 9)
        assert g.edges == ((2, 3), (2, 5), (2, 9))
        assert degree(g, 2) == 3

    def test_isolated_vertices_are_kept(self):
        g = Graph.from_edges([(1, 2)], [1, 2, 7])

        assert g.order() == 3
        assert g.size() == 1
        assert g.neighbors_of(7) == ()

    @pytest.mark.parametrize("edges", [[(1, 1)], [(0, 1)], [(-2, 1)], [(True, 2)]])
    def test_rejects_self_loops_and_bad_ids(self, edges):
        with pytest.raises(GraphError):
            Graph.from_edges(edges)

    def test_unknown_vertex(self):
        g = path_graph(3)

        with pytest.raises(UnknownVertexError) as exc_info:
            g.neighbors_of(42)

        assert exc_info.value.vertex == 42
        assert isinstance(exc_info.value, KeyError)

    def test_induced_and_without(self):
        g = path_graph(5)

        assert g.induced([2, 3, 4]).edges == ((2, 3), (3, 4))
        assert g.without([3]).edges == ((1, 2), (4, 5))
        with pytest.raises(UnknownVertexError):
            g.induced([1, 99])

    def test_relabel_must_be_injective(self):
        g = path_graph(3)

        assert g.relabel({1: 10, 2: 20, 3: 30}).edges == ((10, 20), (20, 30))
        with pytest.raises(GraphError):
            g.relabel({1: 5, 2: 5, 3: 6})

    def test_disjoint_union_shifts_ids(self):
        union = path_graph(2).disjoint_union(path_graph(3))

        assert union.vertices == (1, 2, 3, 4, 5)
        assert union.edges == ((1, 2), (3, 4), (4, 5))
        with pytest.raises(GraphError):
            path_graph(3).disjoint_union(path_graph(2), offset=1)

    def test_equality_survives_pickling(self):
        g = k33()

        assert pickle.loads(pickle.dumps(g)) == g
        assert hash(pickle.loads(pickle.dumps(g))) == hash(g)


class TestQueries:
    def test_distance_ball(self):
        g = path_graph(5)

        assert distance_ball_vertices(g, 1, 2) == (1, 2, 3)
        assert distance_ball_vertices(g, 3, 0) == (3,)
        assert closed_ball(g, 3, 1).subgraph.edges == ((2, 3), (3, 4))

    def test_negative_radius(self):
        with pytest.raises(GraphError):
            distance_ball_vertices(path_graph(2), 1, -1)

    def test_domination(self):
        g = path_graph(5)

        assert is_dominating_set(g, {2, 4})
        assert not is_dominating_set(g, {2})
        assert undominated_vertices(g, {2}) == (4, 5)
        assert neighborhood_of_set(g, {1, 5}) == (1, 2, 4, 5)

    def test_domination_rejects_foreign_vertices(self):
        with pytest.raises(UnknownVertexError):
            is_dominating_set(path_graph(3), {1, 8})

    def test_edge_density(self):
        assert edge_density(k33()) == Fraction(3, 2)
        with pytest.raises(EmptyGraphError):
            edge_density(Graph.empty())
