"""Phase 1: vertices whose neighbourhood no small set of others can cover."""

from __future__ import annotations

from collections.abc import Mapping, Sequence

from app.graph import Graph
from app.local import LocalView, NodeProgram, run_program
from shared.constants import PHASE1_RADIUS

from .config import Config


def _cover_search(
    targets: Sequence[int],
    options: Mapping[int, Sequence[int]],
    k: int,
) -> tuple[int, ...] | None:
    """Find at most ``k`` vertices dominating every target.

    ``options[w]`` lists the vertices allowed to dominate ``w``. Branches on
    the uncovered target with the fewest options.
    """
    covers: dict[int, int] = {}
    for i, target in enumerate(targets):
        for candidate in options[target]:
            covers[candidate] = covers.get(candidate, 0) | (1 << i)
    full = (1 << len(targets)) - 1
    widest = max((mask.bit_count() for mask in covers.values()), default=0)

    def search(covered: int, chosen: tuple[int, ...]) -> tuple[int, ...] | None:
        if covered == full:
            return tuple(sorted(chosen))
        left = k - len(chosen)
        uncovered = full & ~covered
        if left <= 0 or uncovered.bit_count() > left * widest:
            return None
        pick = min(
            (i for i in range(len(targets)) if uncovered >> i & 1),
            key=lambda i: (len(options[targets[i]]), targets[i]),
        )
        ordered = sorted(
            options[targets[pick]],
            key=lambda a: (-(covers[a] & uncovered).bit_count(), a),
        )
        for candidate in ordered:
            found = search(covered | covers[candidate], chosen + (candidate,))
            if found is not None:
                return found
        return None

    return search(0, ())


def coverage_witness(g: Graph, v: int, k: int) -> tuple[int, ...] | None:
    """Return some A, |A| <= k, v not in A, with N(v) inside N[A]; else None.

    Candidates come from N^2[v] - {v}: anything dominating w in N(v) lies
    in N[w].
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    targets = g.neighbors_of(v)
    options = {
        w: tuple(u for u in (w, *g.neighbors_of(w)) if u != v) for w in targets
    }
    return _cover_search(targets, options, k)


def _decide_membership(view: LocalView, cfg: Config) -> bool:
    v = view.center
    targets = view.neighbors(v)
    options = {
        w: tuple(u for u in view.closed_neighborhood(w) if u != v) for w in targets
    }
    return _cover_search(targets, options, cfg.coverage_limit) is None


def phase1_program(cfg: Config) -> NodeProgram:
    return NodeProgram(
        name="phase1",
        declared_radius=PHASE1_RADIUS,
        decide=_decide_membership,
        config=cfg,
    )


def phase1(g: Graph, cfg: Config, workers: int = 1) -> frozenset[int]:
    outputs, _ = run_program(g, phase1_program(cfg), workers=workers)
    return frozenset(v for v, member in outputs.items() if member)
