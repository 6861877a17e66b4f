import json

from app.graph import Graph, write_edge_list


def write_graph(directory, g: Graph, genus: int | None = 0, name: str = "graph.txt"):
    path = directory / name
    path.write_text(write_edge_list(g, genus))
    return path


def invoke_json(cli_runner, args):
    """Run a command that prints one JSON document and return it parsed."""
    result = cli_runner.invoke(args=args)
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)
