"""Small reference graphs used by tests, docs and the oracle.

Graphs are immutable, so these are shared module-level constants.
"""

from __future__ import annotations

from .graph import DirectedGraph, validate

# one vertex with one loop
g_loop = validate(DirectedGraph(["v"], {"a": ("v", "v")}))

# one vertex with two loops
g_double = validate(DirectedGraph(["v"], {"a": ("v", "v"), "b": ("v", "v")}))

# two looped vertices with a connecting edge from u to v
g_flow = validate(
    DirectedGraph(
        ["u", "v"],
        {"a": ("u", "u"), "b": ("v", "v"), "c": ("u", "v")},
    )
)


def fixture_graphs() -> dict[str, DirectedGraph]:
    return {"g_loop": g_loop, "g_double": g_double, "g_flow": g_flow}
