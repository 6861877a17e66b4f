from app.graph.core import (
    Ball,
    EmptyGraphError,
    Graph,
    GraphError,
    UnknownVertexError,
    VertexId,
    closed_ball,
    degree,
    distance_ball_vertices,
    edge_density,
    is_dominating_set,
    neighborhood_of_set,
    neighbors,
    undominated_vertices,
)
from app.graph.edgelist import (
    EdgeListDocument,
    EdgeListFormatError,
    read_edge_list,
    write_edge_list,
)

__all__ = [
    "Ball",
    "EdgeListDocument",
    "EdgeListFormatError",
    "EmptyGraphError",
    "Graph",
    "GraphError",
    "UnknownVertexError",
    "VertexId",
    "closed_ball",
    "degree",
    "distance_ball_vertices",
    "edge_density",
    "is_dominating_set",
    "neighborhood_of_set",
    "neighbors",
    "read_edge_list",
    "undominated_vertices",
    "write_edge_list",
]
