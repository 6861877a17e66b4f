"""Small named graphs shared by the unit tests."""

import networkx as nx

from app.generators import grid
from app.graph import Graph
from app.minors import complete_bipartite


def path_graph(n: int) -> Graph:
    return Graph.from_edges(((i, i + 1) for i in range(1, n)), range(1, n + 1))


def grid_graph(rows: int, cols: int) -> Graph:
    return grid(rows, cols)


def isolated(n: int) -> Graph:
    return Graph.from_edges((), range(1, n + 1))


def k33() -> Graph:
    """K_{3,3} on IDs 1..6, sides {1, 2, 3} and {4, 5, 6}."""
    return complete_bipartite(3, 3)


def k33_plus_grid(rows: int = 3, cols: int = 3) -> Graph:
    """K_{3,3} on 1..6 next to a disjoint planar grid on 7.. ."""
    return k33().disjoint_union(grid_graph(rows, cols), offset=6)


def k33_with_pendant() -> Graph:
    """K_{3,3} plus vertex 7 hanging off vertex 1."""
    return Graph.from_edges(list(k33().edges) + [(1, 7)])


def wheel(spokes: int) -> Graph:
    return Graph.from_networkx(
        nx.convert_node_labels_to_integers(nx.wheel_graph(spokes + 1), first_label=1)
    )


def petersen() -> Graph:
    return Graph.from_networkx(
        nx.convert_node_labels_to_integers(nx.petersen_graph(), first_label=1)
    )


def three_block_chain() -> Graph:
    """K_{3,3} on 1..6, then K_{3,4} blocks glued at cut vertices 6 and 12.

    The blocks are {7, 8, 9} x {6, 10, 11, 12} and {13, 14, 15} x {12, 16, 17, 18};
    the genus is 3.
    """
    edges = list(k33().edges)
    edges += [(a, b) for a in (7, 8, 9) for b in (6, 10, 11, 12)]
    edges += [(a, b) for a in (13, 14, 15) for b in (12, 16, 17, 18)]
    return Graph.from_edges(edges)
