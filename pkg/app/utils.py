"""Small helpers shared by the command-line layer."""

from __future__ import annotations

import json
from collections.abc import Iterable
from typing import IO

from app.graph import EdgeListDocument, read_edge_list


def dump_json(data) -> str:
    """Deterministic JSON: sorted keys, two-space indent."""
    return json.dumps(data, sort_keys=True, indent=2)


def load_json(stream: IO[str]):
    return json.load(stream)


def read_graph(stream: IO[str]) -> EdgeListDocument:
    return read_edge_list(stream.read())


def parse_params(pairs: Iterable[str]) -> dict[str, int]:
    """Turn ``["rows=4", "cols=5"]`` into ``{"rows": 4, "cols": 5}``."""
    params = {}
    for pair in pairs:
        name, sep, raw = pair.partition("=")
        name = name.strip()
        if not sep or not name:
            raise ValueError(f"parameter must look like name=value, got {pair!r}")
        try:
            params[name] = int(raw)
        except ValueError:
            raise ValueError(f"parameter {name} must be an integer, got {raw!r}") from None
    return params
