"""Synchronous LOCAL-model executor.

Node programs never exchange explicit messages. With unbounded message
sizes, ``r`` synchronous rounds tell a vertex exactly its radius-``r`` ball,
so a program is a pure function of that ball (a ``LocalView``) and the
executor charges ``declared_radius`` rounds for running it.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Mapping, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from app.graph import Graph, closed_ball

logger = logging.getLogger(__name__)

Annotations = Mapping[int, Mapping[str, Any]]


class LocalityViolationError(RuntimeError):
    """Raised when a node program reads outside its declared ball."""


class PipelineConfigurationError(RuntimeError):
    """Raised when a phase consumes an annotation no earlier phase produces."""


@dataclass(frozen=True)
class RoundTrace:
    phase_name: str
    rounds_used: int


def total_rounds(traces: Iterable[RoundTrace]) -> int:
    return sum(trace.rounds_used for trace in traces)


class LocalView:
    """Everything a vertex knows after ``radius`` rounds.

    The full neighbourhood of ``u`` is only known when ``u`` lies strictly
    inside the ball; the induced ball graph itself is always readable.
    """

    __slots__ = ("_ball", "_distances", "_annotations")

    def __init__(self, ball, annotations: Annotations):
        self._ball = ball
        self._distances = _bfs_distances(ball.subgraph, ball.center)
        self._annotations = {
            vertex: annotations[vertex]
            for vertex in ball.subgraph.vertices
            if vertex in annotations
        }

    @property
    def center(self) -> int:
        return self._ball.center

    @property
    def radius(self) -> int:
        return self._ball.radius

    @property
    def ball(self):
        return self._ball

    @property
    def subgraph(self) -> Graph:
        return self._ball.subgraph

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._ball.subgraph.vertices

    def has_vertex(self, vertex) -> bool:
        return vertex in self._distances

    def distance(self, vertex) -> int:
        try:
            return self._distances[vertex]
        except KeyError:
            raise LocalityViolationError(
                f"vertex {vertex} lies outside the {self.radius}-ball of {self.center}"
            ) from None

    def neighbors(self, vertex) -> tuple[int, ...]:
        if self.distance(vertex) >= self.radius:
            raise LocalityViolationError(
                f"N({vertex}) is not determined by the {self.radius}-ball of {self.center}"
            )
        return self._ball.subgraph.neighbors_of(vertex)

    def closed_neighborhood(self, vertex) -> tuple[int, ...]:
        return tuple(sorted((vertex, *self.neighbors(vertex))))

    def annotation(self, vertex, key: str, default=None):
        self.distance(vertex)
        return self._annotations.get(vertex, {}).get(key, default)


def _bfs_distances(g: Graph, source: int) -> dict[int, int]:
    distances = {source: 0}
    frontier = [source]
    while frontier:
        next_frontier = []
        for vertex in frontier:
            for neighbor in g.neighbors_of(vertex):
                if neighbor not in distances:
                    distances[neighbor] = distances[vertex] + 1
                    next_frontier.append(neighbor)
        frontier = next_frontier
    return distances


@dataclass(frozen=True)
class NodeProgram:
    """A deterministic per-vertex algorithm over a radius-``declared_radius`` ball."""

    name: str
    declared_radius: int
    decide: Callable[[LocalView, Any], Any]
    config: Any = None
    overhead: int = 0

    def __post_init__(self):
        if self.declared_radius < 0 or self.overhead < 0:
            raise ValueError("Radius and overhead must be non-negative")

    @property
    def rounds(self) -> int:
        return self.declared_radius + self.overhead


def local_view(g: Graph, vertex: int, radius: int, annotations: Annotations | None = None) -> LocalView:
    return LocalView(closed_ball(g, vertex, radius), annotations or {})


def run_program(
    g: Graph,
    prog: NodeProgram,
    annotations: Annotations | None = None,
    workers: int = 1,
) -> tuple[dict[int, Any], RoundTrace]:
    annotations = annotations or {}
    for vertex in annotations:
        if vertex not in g:
            raise PipelineConfigurationError(
                f"annotation keyed by vertex {vertex} outside the graph"
            )

    def decide(vertex: int):
        view = local_view(g, vertex, prog.declared_radius, annotations)
        return prog.decide(view, prog.config)

    vertices = g.vertices
    if workers > 1 and len(vertices) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(decide, vertices))
    else:
        results = [decide(vertex) for vertex in vertices]

    trace = RoundTrace(phase_name=prog.name, rounds_used=prog.rounds)
    logger.debug(
        "Ran node program",
        extra={"phase": prog.name, "vertices": len(vertices), "rounds": trace.rounds_used},
    )
    return dict(zip(vertices, results)), trace


PhaseRunner = Callable[[Graph, Annotations], tuple[Mapping[int, Any], Sequence[RoundTrace]]]


@dataclass(frozen=True)
class Phase:
    """One pipeline step: either a single node program or a composite runner."""

    name: str
    produces: str
    consumes: tuple[str, ...] = ()
    program: NodeProgram | None = None
    runner: PhaseRunner | None = None

    def __post_init__(self):
        if (self.program is None) == (self.runner is None):
            raise PipelineConfigurationError(
                f"phase {self.name!r} needs exactly one of program or runner"
            )

    def execute(self, g: Graph, annotations: Annotations, workers: int = 1):
        if self.program is not None:
            outputs, trace = run_program(g, self.program, annotations, workers)
            return outputs, [trace]
        outputs, traces = self.runner(g, annotations)
        return outputs, list(traces)


@dataclass
class PipelineResult:
    annotations: dict[int, dict[str, Any]] = field(default_factory=dict)
    traces: list[RoundTrace] = field(default_factory=list)

    @property
    def rounds_used(self) -> int:
        return total_rounds(self.traces)

    def collect(self, key: str) -> dict[int, Any]:
        return {
            vertex: values[key]
            for vertex, values in sorted(self.annotations.items())
            if key in values
        }


@dataclass(frozen=True)
class Pipeline:
    phases: tuple[Phase, ...]
    initial_keys: tuple[str, ...] = ()

    def run(
        self,
        g: Graph,
        annotations: Annotations | None = None,
        workers: int = 1,
    ) -> PipelineResult:
        result = PipelineResult(
            annotations={
                vertex: dict(values) for vertex, values in (annotations or {}).items()
            }
        )
        # Phases are barriers: every vertex finishes phase k before phase k+1.
        for phase in self.phases:
            outputs, traces = phase.execute(g, result.annotations, workers)
            for vertex, value in outputs.items():
                result.annotations.setdefault(vertex, {})[phase.produces] = value
            result.traces.extend(traces)
        return result


def compose_phases(phases: Sequence[Phase], initial_keys: Iterable[str] = ()) -> Pipeline:
    available = set(initial_keys)
    for phase in phases:
        missing = [key for key in phase.consumes if key not in available]
        if missing:
            raise PipelineConfigurationError(
                f"phase {phase.name!r} consumes {', '.join(missing)} "
                "before any earlier phase produces it"
            )
        available.add(phase.produces)
    return Pipeline(phases=tuple(phases), initial_keys=tuple(initial_keys))
