import pytest

from app.generators import complete, cycle, star
from app.graph import Graph, UnknownVertexError, is_dominating_set
from app.oracle import (
    OracleBudgetExceeded,
    OracleSizeLimitError,
    exact_coverage,
    exact_mds,
    greedy_dominating_set,
    naive_depth1_minor,
)
from tests.fixtures import grid_graph, isolated, path_graph, petersen


@pytest.mark.parametrize(
    "g, gamma",
    [
        (star(5), 1),
        (cycle(5), 2),
        (path_graph(5), 2),
        (grid_graph(3, 3), 3),
        (grid_graph(4, 4), 4),
        (petersen(), 3),
        (complete(6), 1),
        (isolated(3), 3),
        (isolated(0), 0),
    ],
    ids=["star", "c5", "p5", "grid3", "grid4", "petersen", "k6", "isolated", "empty"],
)
def test_exact_mds(g, gamma):
    result = exact_mds(g)

    assert result.gamma == gamma
    assert len(result.witness) == gamma
    assert is_dominating_set(g, result.witness)


def test_star_witness():
    assert exact_mds(star(5)).witness == (1,)


def test_budget_exhaustion_reports_the_best_set():
    with pytest.raises(OracleBudgetExceeded) as exc_info:
        exact_mds(grid_graph(3, 3), budget=1)

    assert exc_info.value.best == (2, 5, 8)
    assert exc_info.value.explored_nodes == 1


def test_greedy_dominates():
    g = grid_graph(5, 5)

    assert is_dominating_set(g, greedy_dominating_set(g))


def test_result_dict():
    assert exact_mds(star(2)).to_dict() == {"gamma": 1, "witness": [1], "explored_nodes": 1}


def test_exact_coverage():
    g = star(4)

    assert exact_coverage(g, 1, 4)
    assert not exact_coverage(g, 1, 3)
    with pytest.raises(UnknownVertexError):
        exact_coverage(g, 99, 1)


def test_naive_minor_size_limit():
    with pytest.raises(OracleSizeLimitError):
        naive_depth1_minor(Graph.from_edges((), range(1, 14)), 3)
