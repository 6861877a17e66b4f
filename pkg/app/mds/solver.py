"""The full pipeline: phase 1, preprocessing, phase 2."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from app.graph import Graph
from app.local import Phase, RoundTrace, compose_phases, run_program, total_rounds

from .config import Config
from .phase1 import phase1_program
from .phase2 import phase2_program
from .preprocess import PreprocessResult, preprocess

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DsResult:
    d_phase1: frozenset[int]
    d_preprocess: frozenset[int]
    d_phase2: frozenset[int]
    dom_map: Mapping[int, int]
    trace: tuple[RoundTrace, ...]
    config: Config
    t: int
    preprocess_clean: bool = False
    chosen_witnesses: tuple[tuple[int, ...], ...] = field(default=())

    @property
    def d(self) -> frozenset[int]:
        """D = phase-1 output plus preprocessing additions."""
        return self.d_phase1 | self.d_preprocess

    @property
    def dominating_set(self) -> frozenset[int]:
        return self.d_phase1 | self.d_preprocess | self.d_phase2

    @property
    def total(self) -> int:
        return len(self.dominating_set)

    @property
    def rounds_used(self) -> int:
        return total_rounds(self.trace)

    def rounds_for(self, phase: str) -> int:
        return total_rounds(
            trace
            for trace in self.trace
            if trace.phase_name == phase or trace.phase_name.startswith(f"{phase}.")
        )


class _PreprocessStage:
    """Pipeline runner for preprocessing; remembers its outcome for phase 2."""

    def __init__(self, cfg: Config, workers: int):
        self.cfg = cfg
        self.workers = workers
        self.result: PreprocessResult | None = None

    def __call__(self, g: Graph, annotations):
        d = [v for v, values in annotations.items() if values.get("phase1")]
        self.result = preprocess(g, d, self.cfg, self.workers)
        return {v: True for v in self.result.additions}, self.result.traces

    @property
    def t(self) -> int:
        return self.cfg.resolved_t(self.result.clean)

    def run_phase2(self, g: Graph, annotations):
        outputs, trace = run_program(
            g, phase2_program(self.cfg, self.t), annotations, self.workers
        )
        return outputs, [trace]


def solve(g: Graph, cfg: Config, workers: int = 1) -> DsResult:
    stage = _PreprocessStage(cfg, workers)
    pipeline = compose_phases(
        [
            Phase(name="phase1", produces="phase1", program=phase1_program(cfg)),
            Phase(
                name="preprocess",
                produces="preprocess",
                consumes=("phase1",),
                runner=stage,
            ),
            Phase(
                name="phase2",
                produces="dom",
                consumes=("phase1", "preprocess"),
                runner=stage.run_phase2,
            ),
        ]
    )
    outcome = pipeline.run(g, workers=workers)

    d_phase1 = frozenset(v for v, member in outcome.collect("phase1").items() if member)
    dom_map = {v: w for v, w in outcome.collect("dom").items() if w is not None}
    result = DsResult(
        d_phase1=d_phase1,
        d_preprocess=stage.result.additions,
        d_phase2=frozenset(dom_map.values()),
        dom_map=MappingProxyType(dom_map),
        trace=tuple(outcome.traces),
        config=cfg,
        t=stage.t,
        preprocess_clean=stage.result.clean,
        chosen_witnesses=stage.result.chosen,
    )
    logger.info(
        "Solved dominating set instance",
        extra={
            "n": g.order(),
            "m": g.size(),
            "size_phase1": len(result.d_phase1),
            "size_preprocess": len(result.d_preprocess),
            "size_phase2": len(result.d_phase2),
            "rounds": result.rounds_used,
        },
    )
    return result
