"""Elimination of K_{3,3} depth-1 minors before phase 2.

A 6-round witness stage lets every vertex of G - D compute its canonical
witness K_v from its 6-ball. Each iteration then runs a 12-round conflict
stage: K_v is kept unless a smaller ID within distance 12 holds an
intersecting witness. Kept witnesses are pairwise disjoint and join D. The
witnesses of the next iteration are recomputed from the ball gathered by
that same conflict stage, so only the first witness stage is charged and g
iterations cost at most 6 + 12g rounds. Witnesses only shrink as D grows,
so once no witness is left every vertex stops.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import dataclass

from app.graph import Graph
from app.local import LocalView, NodeProgram, RoundTrace, run_program, total_rounds
from app.minors import find_canonical_k33
from shared.constants import CANONICAL_K33_RADIUS, CONFLICT_RADIUS

from .config import Config

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PreprocessResult:
    additions: frozenset[int]
    traces: tuple[RoundTrace, ...]
    iterations: int
    clean: bool
    chosen: tuple[tuple[int, ...], ...]

    @property
    def trace(self) -> RoundTrace:
        return RoundTrace(phase_name="preprocess", rounds_used=total_rounds(self.traces))


def _decide_witness(view: LocalView, _cfg) -> tuple[int, ...] | None:
    witness = find_canonical_k33(view.subgraph, view.center)
    return None if witness is None else witness.vertices


def _decide_chosen(view: LocalView, _cfg) -> bool:
    v = view.center
    own = view.annotation(v, "witness")
    if not own:
        return False
    own = set(own)
    for u in view.vertices:
        if u >= v:
            break
        other = view.annotation(u, "witness")
        if other and own.intersection(other):
            return False
    return True


WITNESS_PROGRAM = NodeProgram(
    name="preprocess.witness",
    declared_radius=CANONICAL_K33_RADIUS,
    decide=_decide_witness,
)

CONFLICT_PROGRAM = NodeProgram(
    name="preprocess.conflict",
    declared_radius=CONFLICT_RADIUS,
    decide=_decide_chosen,
)


def preprocess(g: Graph, d: Iterable[int], cfg: Config, workers: int = 1) -> PreprocessResult:
    start = frozenset(d)
    current = set(start)
    traces: list[RoundTrace] = []
    chosen: list[tuple[int, ...]] = []
    iterations = 0
    clean = False

    if cfg.g == 0:
        return PreprocessResult(frozenset(), (), 0, False, ())

    remaining = g.without(current)
    witnesses, trace = run_program(remaining, WITNESS_PROGRAM, workers=workers)
    traces.append(trace)
    for iteration in range(1, cfg.g + 1):
        found = {v: w for v, w in witnesses.items() if w is not None}
        if not found:
            clean = True
            break

        annotations = {v: {"witness": w} for v, w in found.items()}
        picked, trace = run_program(remaining, CONFLICT_PROGRAM, annotations, workers)
        traces.append(RoundTrace(f"{trace.phase_name}.{iteration}", trace.rounds_used))
        for v in sorted(v for v, keep in picked.items() if keep):
            chosen.append(found[v])
            current.update(found[v])
        iterations = iteration
        logger.info(
            "Preprocessing iteration finished",
            extra={
                "iteration": iteration,
                "witness_vertices": len(found),
                "chosen": len(chosen),
                "d_size": len(current),
            },
        )
        if iteration < cfg.g:
            remaining = g.without(current)
            witnesses, _ = run_program(remaining, WITNESS_PROGRAM, workers=workers)

    return PreprocessResult(
        additions=frozenset(current - start),
        traces=tuple(traces),
        iterations=iterations,
        clean=clean,
        chosen=tuple(chosen),
    )
