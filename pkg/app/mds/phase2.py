"""Phase 2: every undominated vertex picks a dominator in its closed neighbourhood."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from app.graph import Graph
from app.local import LocalView, NodeProgram, run_program
from shared.constants import PHASE2_RADIUS

from .config import Config, Phase2Rule

# Annotation keys marking membership in D.
IN_D_KEYS = ("phase1", "preprocess")


@dataclass(frozen=True)
class Phase2Settings:
    rule: Phase2Rule
    threshold: int


def _in_d(view: LocalView, vertex: int) -> bool:
    return any(view.annotation(vertex, key, False) for key in IN_D_KEYS)


def _dominated(view: LocalView, vertex: int) -> bool:
    return any(_in_d(view, u) for u in view.closed_neighborhood(vertex))


def residual_degree(view: LocalView, vertex: int) -> int:
    """|N[vertex] - N[D]|: how many undominated vertices it would cover."""
    return sum(1 for u in view.closed_neighborhood(vertex) if not _dominated(view, u))


def _decide_dominator(view: LocalView, settings: Phase2Settings) -> int | None:
    v = view.center
    if _dominated(view, v):
        return None
    candidates = view.closed_neighborhood(v)
    residual = {w: residual_degree(view, w) for w in candidates}
    if settings.rule is Phase2Rule.MAX_RESIDUAL:
        best = max(residual.values())
        return min(w for w in candidates if residual[w] == best)
    for w in candidates:
        if residual[w] > settings.threshold:
            return w
    return candidates[0]


def phase2_program(cfg: Config, t: int | None = None) -> NodeProgram:
    t = cfg.resolved_t() if t is None else t
    settings = Phase2Settings(rule=cfg.phase2_rule, threshold=cfg.fo_threshold(t))
    return NodeProgram(
        name="phase2",
        declared_radius=PHASE2_RADIUS,
        decide=_decide_dominator,
        config=settings,
    )


def phase2(
    g: Graph,
    d: Iterable[int],
    cfg: Config,
    t: int | None = None,
    workers: int = 1,
) -> tuple[dict[int, int], frozenset[int]]:
    annotations = {v: {"phase1": True} for v in d}
    outputs, _ = run_program(g, phase2_program(cfg, t), annotations, workers)
    dom_map = {v: w for v, w in outputs.items() if w is not None}
    return dom_map, frozenset(dom_map.values())
