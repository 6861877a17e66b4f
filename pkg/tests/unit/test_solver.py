import random

import pytest

from app.generators import complete, cycle, planar_plus_handles, random_planar_triangulation, star
from app.graph import is_dominating_set
from app.mds import Config, algorithm1_reference, default_config, solve, total_bound_factor
from app.oracle import exact_mds
from shared.constants import ROUND_SLACK
from tests.fixtures import grid_graph, isolated, k33_plus_grid, path_graph, three_block_chain


def test_complete_graph_needs_one_vertex():
    result = solve(complete(4), default_config())

    assert result.d == frozenset()
    assert result.d_phase2 == {1}
    assert dict(result.dom_map) == {1: 1, 2: 1, 3: 1, 4: 1}
    assert result.total == 1
    assert result.rounds_used == 5


def test_isolated_vertices_dominate_themselves():
    result = solve(isolated(5), default_config())

    assert result.dominating_set == {1, 2, 3, 4, 5}
    assert dict(result.dom_map) == {v: v for v in range(1, 6)}


def test_empty_graph():
    result = solve(isolated(0), default_config())

    assert result.total == 0
    assert dict(result.dom_map) == {}


def test_phase_traces():
    result = solve(grid_graph(3, 3), default_config())

    assert [trace.phase_name for trace in result.trace] == ["phase1", "phase2"]
    assert result.rounds_for("phase1") == 2
    assert result.rounds_for("preprocess") == 0
    assert result.rounds_for("phase2") == 3
    assert result.t == 3


def test_grid_meets_the_planar_bound():
    g = grid_graph(4, 4)

    result = solve(g, default_config())
    gamma = exact_mds(g).gamma

    assert is_dominating_set(g, result.dominating_set)
    assert gamma == 4
    assert result.total <= total_bound_factor(3, 3) * gamma
    assert len(result.d_phase1) <= 4 * gamma


def test_k33_is_cleared_before_phase2():
    g = k33_plus_grid()

    result = solve(g, default_config(genus=1))

    assert result.d_preprocess == {1, 2, 3, 4, 5, 6}
    assert result.chosen_witnesses == ((1, 2, 3, 4, 5, 6),)
    assert result.rounds_for("preprocess") == 18
    assert result.t == 7
    assert is_dominating_set(g, result.dominating_set)
    assert result.rounds_used <= 12 * 1 + 20


def test_handles_keep_the_preprocessing_budget():
    g = planar_plus_handles(20, 2, random.Random(3))

    result = solve(g, default_config(genus=2))

    assert is_dominating_set(g, result.dominating_set)
    assert len(result.d_preprocess) <= 24 * 2
    assert len(result.chosen_witnesses) == 2


def test_first_order_rule_still_dominates():
    g = random_planar_triangulation(30, random.Random(5))

    result = solve(g, Config(c=3, phase2_rule="fo"))

    assert is_dominating_set(g, result.dominating_set)


def test_workers_do_not_change_the_result():
    g = grid_graph(5, 4)

    assert solve(g, default_config(), workers=3).dominating_set == solve(g, default_config()).dominating_set


@pytest.mark.parametrize(
    "g",
    [
        grid_graph(4, 5),
        cycle(9),
        star(8),
        path_graph(7),
        random_planar_triangulation(25, random.Random(11)),
        random_planar_triangulation(25, random.Random(12)),
    ],
    ids=["grid", "cycle", "star", "path", "triangulation-11", "triangulation-12"],
)
def test_matches_whole_graph_reference(g):
    result = solve(g, default_config())
    reference = algorithm1_reference(g)

    assert result.d_phase1 == reference.d
    assert dict(result.dom_map) == reference.dom_map
    assert result.d_phase2 == reference.d_prime
    assert result.dominating_set == reference.dominating_set


def test_order_preserving_relabel_commutes_with_solve():
    g = random_planar_triangulation(20, random.Random(2))
    mapping = {v: 3 * v + 7 for v in g.vertices}

    original = solve(g, default_config())
    relabelled = solve(g.relabel(mapping), default_config())

    assert relabelled.dominating_set == {mapping[v] for v in original.dominating_set}
    assert dict(relabelled.dom_map) == {mapping[v]: mapping[w] for v, w in original.dom_map.items()}


def test_genus_three_chain_stays_within_the_round_bound():
    g = three_block_chain()

    result = solve(g, default_config(genus=3))

    assert result.d_preprocess == set(range(1, 19))
    assert result.rounds_for("preprocess") == 6 + 3 * 12
    assert result.rounds_used == 2 + 42 + 3
    assert result.rounds_used <= 12 * 3 + ROUND_SLACK
    assert is_dominating_set(g, result.dominating_set)
