"""Seeded graph families with certified genus bounds."""

from __future__ import annotations

import json
import logging
import random
from collections.abc import Callable, Mapping
from dataclasses import dataclass, field

import networkx as nx

from app.graph import Graph
from app.minors import complete_graph_genus, euler_edge_bound
from shared.constants import FAMILY_VALUES

logger = logging.getLogger(__name__)


class GeneratorParameterError(ValueError):
    """Raised for unknown families or out-of-range size parameters."""


def _grid_ids(rows: int, cols: int):
    return {(r, c): r * cols + c + 1 for r in range(rows) for c in range(cols)}


def _positive(params: Mapping, name: str, minimum: int = 1) -> int:
    try:
        value = params[name]
    except KeyError:
        raise GeneratorParameterError(f"missing parameter {name!r}") from None
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise GeneratorParameterError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def grid(rows: int, cols: int) -> Graph:
    ids = _grid_ids(rows, cols)
    lattice = nx.grid_2d_graph(rows, cols)
    return Graph.from_edges(
        ((ids[u], ids[v]) for u, v in lattice.edges()), ids.values()
    )


def toroidal_grid(rows: int, cols: int) -> Graph:
    ids = _grid_ids(rows, cols)
    lattice = nx.grid_2d_graph(rows, cols, periodic=True)
    return Graph.from_edges(
        ((ids[u], ids[v]) for u, v in lattice.edges()), ids.values()
    )


def cycle(n: int) -> Graph:
    return Graph.from_edges((i, i % n + 1) for i in range(1, n + 1))


def star(leaves: int) -> Graph:
    return Graph.from_edges((1, i) for i in range(2, leaves + 2))


def complete(n: int) -> Graph:
    return Graph.from_edges(
        ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)),
        range(1, n + 1),
    )


def random_planar_triangulation(n: int, rng: random.Random) -> Graph:
    """Insert vertices one at a time into uniformly chosen faces.

    Starts from a triangle (two faces) and joins each new vertex to the three
    corners of its face, so the result is maximal planar with 3n - 6 edges.
    """
    edges = [(1, 2), (2, 3), (1, 3)]
    faces = [(1, 2, 3), (1, 2, 3)]
    for vertex in range(4, n + 1):
        a, b, c = faces.pop(rng.randrange(len(faces)))
        edges.extend(((a, vertex), (b, vertex), (c, vertex)))
        faces.extend(((a, b, vertex), (b, c, vertex), (a, c, vertex)))
    return Graph.from_edges(edges)


def subdivided_k33(subdivisions: int, offset: int = 0) -> Graph:
    """K_{3,3} with every edge subdivided ``subdivisions`` times.

    Branch vertices get IDs offset+1..offset+6, subdivision vertices follow.
    """
    edges = []
    next_id = offset + 7
    for a in range(offset + 1, offset + 4):
        for b in range(offset + 4, offset + 7):
            path = [a]
            for _ in range(subdivisions):
                path.append(next_id)
                next_id += 1
            path.append(b)
            edges.extend(zip(path, path[1:]))
    return Graph.from_edges(edges)


def planar_plus_handles(n: int, h: int, rng: random.Random, subdivisions: int = 0) -> Graph:
    """A random triangulation with ``h`` K_{3,3} gadgets hanging off it.

    Each gadget shares exactly one vertex with the triangulation, so every
    gadget is its own block and the genus is exactly ``h``.
    """
    if n < max(4, h):
        raise GeneratorParameterError(
            f"a triangulation on {n} vertices cannot host {h} disjoint attachments"
        )
    base = random_planar_triangulation(n, rng)
    sites = sorted(rng.sample(base.vertices, h))
    edges = list(base.edges)
    next_id = n + 1
    for site in sites:
        gadget = subdivided_k33(subdivisions)
        mapping = {1: site}
        for vertex in gadget.vertices[1:]:
            mapping[vertex] = next_id
            next_id += 1
        edges.extend((mapping[u], mapping[v]) for u, v in gadget.edges)
    return Graph.from_edges(edges, base.vertices)


def shuffle_ids(g: Graph, seed: int) -> Graph:
    """Apply a seeded permutation of the IDs 1..n."""
    rng = random.Random(seed)
    images = list(range(1, g.order() + 1))
    rng.shuffle(images)
    return g.relabel(dict(zip(g.vertices, images)))


def _canonical_params(params: Mapping) -> dict:
    return dict(sorted(params.items()))


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: Mapping[str, int] = field(default_factory=dict)
    seed: int = 0
    shuffle_ids: int | None = None

    def __post_init__(self):
        if self.family not in FAMILY_VALUES:
            raise GeneratorParameterError(
                f"unknown family {self.family!r}; expected one of {', '.join(FAMILY_VALUES)}"
            )
        object.__setattr__(self, "params", _canonical_params(self.params))

    @property
    def params_key(self) -> str:
        return json.dumps(dict(self.params), sort_keys=True, separators=(",", ":"))

    @property
    def sort_key(self) -> tuple:
        shuffle = -1 if self.shuffle_ids is None else self.shuffle_ids
        return (self.family, self.params_key, self.seed, shuffle)

    @property
    def certified_genus(self) -> int:
        family = self.family
        if family in ("grid", "cycle", "random_planar_triangulation", "star"):
            return 0
        if family in ("toroidal_grid", "subdivided_k33"):
            return 1
        if family == "planar_plus_k33_handles":
            return _positive(self.params, "h", minimum=0)
        return complete_graph_genus(_positive(self.params, "n"))

    def describe(self) -> dict:
        return {
            "family": self.family,
            "params": dict(self.params),
            "seed": self.seed,
            "shuffle_ids": self.shuffle_ids,
        }


def _build_grid(params, _rng):
    return grid(_positive(params, "rows"), _positive(params, "cols"))


def _build_toroidal(params, _rng):
    return toroidal_grid(_positive(params, "rows", 3), _positive(params, "cols", 3))


def _build_cycle(params, _rng):
    return cycle(_positive(params, "n", 3))


def _build_triangulation(params, rng):
    return random_planar_triangulation(_positive(params, "n", 3), rng)


def _build_handles(params, rng):
    subdivisions = params.get("subdivisions", 0)
    if (
        isinstance(subdivisions, bool)
        or not isinstance(subdivisions, int)
        or not 0 <= subdivisions <= 2
    ):
        raise GeneratorParameterError(f"subdivisions must be 0, 1 or 2, got {subdivisions!r}")
    return planar_plus_handles(
        _positive(params, "n", 4), _positive(params, "h", 0), rng, subdivisions
    )


def _build_subdivided(params, _rng):
    return subdivided_k33(_positive(params, "subdivisions", 0))


def _build_star(params, _rng):
    return star(_positive(params, "leaves"))


def _build_complete(params, _rng):
    return complete(_positive(params, "n"))


BUILDERS: dict[str, Callable[[Mapping, random.Random], Graph]] = {
    "grid": _build_grid,
    "cycle": _build_cycle,
    "random_planar_triangulation": _build_triangulation,
    "toroidal_grid": _build_toroidal,
    "planar_plus_k33_handles": _build_handles,
    "subdivided_k33": _build_subdivided,
    "star": _build_star,
    "complete": _build_complete,
}


def certify(g: Graph, genus: int) -> None:
    """Raise unless ``g`` respects the Euler edge bound for ``genus``."""
    if g.order() < 3:
        return
    bound = euler_edge_bound(g.order(), genus)
    if g.size() > bound:
        raise GeneratorParameterError(
            f"{g.size()} edges exceed the genus-{genus} bound of {bound}"
        )


def generate(spec: GenSpec) -> Graph:
    rng = random.Random(spec.seed)
    g = BUILDERS[spec.family](spec.params, rng)
    if spec.shuffle_ids is not None:
        g = shuffle_ids(g, spec.shuffle_ids)
    certify(g, spec.certified_genus)
    logger.debug(
        "Generated instance",
        extra={**spec.describe(), "n": g.order(), "m": g.size()},
    )
    return g
