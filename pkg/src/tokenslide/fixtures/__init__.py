"""Named fixture instances shipped with the package.

Each fixture is a JSON file holding an edge-list graph plus two vertex sets
and a default model; the test suite and the CLI address them by name.
"""

from __future__ import annotations

import json
from importlib import resources

from ..graph import Graph, parse_graph
from ..model import IndependentSet, make_independent_set

_NAMES = ("P3", "P4", "P5", "C6", "CLAW", "FIG1")


def names() -> tuple[str, ...]:
    return _NAMES


def load(name: str) -> dict:
    """Raw instance dict: {"graph", "I", "J", "model"}."""
    key = name.upper()
    if key not in _NAMES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(_NAMES)}")
    path = resources.files(__package__).joinpath(f"{key.lower()}.json")
    return json.loads(path.read_text(encoding="utf-8"))


def graph(name: str) -> Graph:
    return parse_graph(load(name)["graph"])


def instance(name: str) -> tuple[Graph, IndependentSet, IndependentSet, str]:
    """Parsed fixture: (graph, I, J, model)."""
    raw = load(name)
    g = parse_graph(raw["graph"])
    i = make_independent_set(g, [g.vertex(x) for x in raw["I"]])
    j = make_independent_set(g, [g.vertex(x) for x in raw["J"]])
    return g, i, j, raw["model"]
