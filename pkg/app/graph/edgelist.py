"""Reading and writing the plain-text edge-list interchange format.

    # comment
    p <num_vertices> <num_edges> genus=<g-or-unknown>
    v <id>          (optional, declares an isolated vertex)
    <u> <v>         (one line per edge)
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Graph, GraphError

UNKNOWN_GENUS = "unknown"


class EdgeListFormatError(GraphError):
    """Raised when edge-list text is malformed."""

    def __init__(self, message: str, line_number: int | None = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True)
class EdgeListDocument:
    graph: Graph
    genus: int | None


def _parse_id(token: str, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise EdgeListFormatError(f"not a decimal ID: {token!r}", line_number)
    if value < 1:
        raise EdgeListFormatError(f"IDs must be positive: {value}", line_number)
    return value


def _parse_header(tokens: list[str], line_number: int) -> tuple[int, int, int | None]:
    if len(tokens) != 4 or not tokens[3].startswith("genus="):
        raise EdgeListFormatError(
            "header must read 'p <num_vertices> <num_edges> genus=<g>'", line_number
        )
    try:
        num_vertices, num_edges = int(tokens[1]), int(tokens[2])
    except ValueError:
        raise EdgeListFormatError("header counts must be integers", line_number)
    if num_vertices < 0 or num_edges < 0:
        raise EdgeListFormatError("header counts must be non-negative", line_number)
    genus_value = tokens[3].split("=", 1)[1]
    if genus_value == UNKNOWN_GENUS:
        return num_vertices, num_edges, None
    try:
        genus = int(genus_value)
    except ValueError:
        raise EdgeListFormatError(f"invalid genus: {genus_value!r}", line_number)
    if genus < 0:
        raise EdgeListFormatError("genus must be non-negative", line_number)
    return num_vertices, num_edges, genus


def read_edge_list(text: str) -> EdgeListDocument:
    header = None
    declared: list[int] = []
    edges: list[tuple[int, int]] = []
    seen_edges: set[tuple[int, int]] = set()

    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header is not None:
                raise EdgeListFormatError("duplicate header", line_number)
            header = _parse_header(tokens, line_number)
            continue
        if header is None:
            raise EdgeListFormatError("edge before header", line_number)
        if tokens[0] == "v":
            if len(tokens) != 2:
                raise EdgeListFormatError("vertex line must read 'v <id>'", line_number)
            declared.append(_parse_id(tokens[1], line_number))
            continue
        if len(tokens) != 2:
            raise EdgeListFormatError("edge line must hold two IDs", line_number)
        u, v = (_parse_id(token, line_number) for token in tokens)
        if u == v:
            raise EdgeListFormatError(f"self-loop on {u}", line_number)
        key = (min(u, v), max(u, v))
        if key in seen_edges:
            raise EdgeListFormatError(f"duplicate edge {u} {v}", line_number)
        seen_edges.add(key)
        edges.append(key)

    if header is None:
        raise EdgeListFormatError("missing 'p' header line")
    num_vertices, num_edges, genus = header
    if len(edges) != num_edges:
        raise EdgeListFormatError(
            f"header declares {num_edges} edges, found {len(edges)}"
        )

    vertices = set(declared)
    for u, v in edges:
        vertices.update((u, v))
    if len(vertices) > num_vertices:
        raise EdgeListFormatError(
            f"header declares {num_vertices} vertices, found {len(vertices)}"
        )
    # Undeclared isolated vertices take the smallest unused IDs.
    candidate = 1
    while len(vertices) < num_vertices:
        if candidate not in vertices:
            vertices.add(candidate)
        candidate += 1

    return EdgeListDocument(graph=Graph.from_edges(edges, vertices), genus=genus)


def write_edge_list(g: Graph, genus: int | None = None, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {part}" for part in comment.splitlines())
    genus_text = UNKNOWN_GENUS if genus is None else str(genus)
    lines.append(f"p {g.order()} {g.size()} genus={genus_text}")
    contiguous = g.vertices == tuple(range(1, g.order() + 1))
    if not contiguous:
        lines.extend(f"v {v}" for v in g.vertices if not g.neighbors_of(v))
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
