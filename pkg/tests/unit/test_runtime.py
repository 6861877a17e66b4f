import pytest

from app.graph import Graph
from app.local import (
    LocalityViolationError,
    NodeProgram,
    Phase,
    PipelineConfigurationError,
    RoundTrace,
    compose_phases,
    local_view,
    run_program,
    total_rounds,
)
from tests.fixtures import path_graph


def _degree(view, _config):
    return len(view.neighbors(view.center))


def _ball_edges(view, _config):
    return view.subgraph.edges


class TestLocalView:
    def test_ball_contents(self):
        view = local_view(path_graph(5), 3, 1)

        assert view.vertices == (2, 3, 4)
        assert view.distance(2) == 1
        assert view.neighbors(3) == (2, 4)
        assert view.closed_neighborhood(3) == (2, 3, 4)

    def test_boundary_neighbourhoods_are_unknown(self):
        view = local_view(path_graph(5), 3, 1)

        with pytest.raises(LocalityViolationError):
            view.neighbors(2)

    def test_outside_the_ball(self):
        view = local_view(path_graph(5), 3, 1, {5: {"mark": True}})

        assert not view.has_vertex(5)
        with pytest.raises(LocalityViolationError):
            view.distance(5)
        with pytest.raises(LocalityViolationError):
            view.annotation(5, "mark")

    def test_annotations_inside_the_ball(self):
        view = local_view(path_graph(5), 3, 2, {5: {"mark": True}})

        assert view.annotation(5, "mark") is True
        assert view.annotation(4, "mark", "absent") == "absent"


class TestRunProgram:
    def test_outputs_and_rounds(self):
        program = NodeProgram("degree", declared_radius=1, decide=_degree, overhead=2)

        outputs, trace = run_program(path_graph(4), program)

        assert outputs == {1: 1, 2: 2, 3: 2, 4: 1}
        assert trace == RoundTrace("degree", 3)

    def test_workers_do_not_change_outputs(self):
        program = NodeProgram("ball", declared_radius=2, decide=_ball_edges)
        g = path_graph(9)

        assert run_program(g, program, workers=4)[0] == run_program(g, program)[0]

    def test_output_depends_only_on_the_ball(self):
        program = NodeProgram("ball", declared_radius=2, decide=_ball_edges)
        g = path_graph(10)
        changed = Graph.from_edges(list(g.edges) + [(8, 10)])

        before, _ = run_program(g, program)
        after, _ = run_program(changed, program)

        assert before[1] == after[1]
        assert before[2] == after[2]
        assert before[9] != after[9]

    def test_reading_beyond_the_radius_fails(self):
        def peek(view, _config):
            return view.neighbors(view.center + 1)

        program = NodeProgram("peek", declared_radius=1, decide=peek)

        with pytest.raises(LocalityViolationError):
            run_program(path_graph(3), program)

    def test_annotations_must_name_graph_vertices(self):
        program = NodeProgram("degree", declared_radius=1, decide=_degree)

        with pytest.raises(PipelineConfigurationError):
            run_program(path_graph(3), program, {9: {"x": 1}})

    def test_negative_radius(self):
        with pytest.raises(ValueError):
            NodeProgram("bad", declared_radius=-1, decide=_degree)


class TestPipeline:
    @staticmethod
    def _sum_of_neighbor_degrees(view, _config):
        return sum(view.annotation(u, "degree") for u in view.neighbors(view.center))

    def test_phases_see_earlier_annotations(self):
        pipeline = compose_phases(
            [
                Phase(
                    "degree",
                    produces="degree",
                    program=NodeProgram("degree", 1, _degree),
                ),
                Phase(
                    "sum",
                    produces="sum",
                    consumes=("degree",),
                    program=NodeProgram("sum", 1, self._sum_of_neighbor_degrees),
                ),
            ]
        )

        result = pipeline.run(path_graph(3))

        assert result.collect("degree") == {1: 1, 2: 2, 3: 1}
        assert result.collect("sum") == {1: 2, 2: 2, 3: 2}
        assert result.rounds_used == 2
        assert [trace.phase_name for trace in result.traces] == ["degree", "sum"]

    def test_runner_phases_report_their_own_traces(self):
        def runner(g, _annotations):
            return {v: v * 10 for v in g.vertices}, [RoundTrace("inner.1", 4), RoundTrace("inner.2", 5)]

        result = compose_phases([Phase("inner", produces="x", runner=runner)]).run(path_graph(2))

        assert result.collect("x") == {1: 10, 2: 20}
        assert result.rounds_used == 9

    def test_unproduced_annotation_is_rejected(self):
        with pytest.raises(PipelineConfigurationError):
            compose_phases(
                [Phase("sum", produces="sum", consumes=("degree",), program=NodeProgram("sum", 1, _degree))]
            )

    def test_initial_keys_satisfy_consumers(self):
        phase = Phase("sum", produces="sum", consumes=("degree",), program=NodeProgram("sum", 1, _degree))

        assert compose_phases([phase], initial_keys=("degree",)).phases == (phase,)

    def test_phase_needs_exactly_one_body(self):
        with pytest.raises(PipelineConfigurationError):
            Phase("empty", produces="x")
        with pytest.raises(PipelineConfigurationError):
            Phase(
                "both",
                produces="x",
                program=NodeProgram("degree", 1, _degree),
                runner=lambda g, a: ({}, []),
            )


def test_total_rounds():
    assert total_rounds([RoundTrace("a", 2), RoundTrace("b", 3)]) == 5
    assert total_rounds([]) == 0


def test_two_ball_of_a_five_cycle_is_everything():
    program = NodeProgram("count", declared_radius=2, decide=lambda view, _config: len(view.vertices))
    five_cycle = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)])

    outputs, _ = run_program(five_cycle, program)

    assert outputs == dict.fromkeys(range(1, 6), 5)


def test_empty_pipeline():
    result = compose_phases([]).run(path_graph(3))

    assert result.rounds_used == 0
    assert result.annotations == {}
