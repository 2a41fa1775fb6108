"""JSON codecs for every value the command line reads or writes.

Printing followed by parsing is the identity on canonical values, and
printing is deterministic: keys are sorted and all orderings are the
canonical ones chosen by the constructing modules.
"""

from __future__ import annotations

import json

from .circle import ClosedCircleSet, OpenCircleSet, as_angle, format_angle
from .errors import MalformedHullError, NotAMaximalTailError
from .graph import Cycle, DirectedGraph
from .lattice import Hull, HullEntry, IdealPair, PrimitiveIdeal, ideal_pair
from .tails import MaximalTail, classify_tail


def canonical_dumps(value) -> str:
    return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def graph_to_json(graph: DirectedGraph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [
            {"id": eid, "src": src, "rng": rng}
            for eid, (src, rng) in sorted(graph.edges.items())
        ],
    }


def graph_from_json(data) -> DirectedGraph:
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    rows = []
    for entry in data.get("edges", []):
        if not isinstance(entry, dict) or not {"id", "src", "rng"} <= entry.keys():
            raise ValueError(
                "each edge must be an object with 'id', 'src' and 'rng' fields"
            )
        rows.append((entry["id"], entry["src"], entry["rng"]))
    return DirectedGraph(data.get("vertices", []), rows)


def open_set_to_json(value: OpenCircleSet):
    if value.is_full:
        return "full"
    if value.is_empty():
        return "empty"
    return [[format_angle(a), format_angle(b)] for a, b in value.arcs]


def open_set_from_json(data) -> OpenCircleSet:
    if data == "full":
        return OpenCircleSet.full()
    if data == "empty":
        return OpenCircleSet.empty()
    if not isinstance(data, list):
        raise ValueError("open circle set JSON must be 'full', 'empty' or arcs")
    return OpenCircleSet.from_arcs(data)


def closed_set_to_json(value: ClosedCircleSet):
    if value.is_full:
        return "full"
    if value.is_empty():
        return "empty"
    return {
        "arcs": [[format_angle(a), format_angle(b)] for a, b in value.arcs],
        "points": [format_angle(p) for p in value.points],
    }


def closed_set_from_json(data) -> ClosedCircleSet:
    if data == "full":
        return ClosedCircleSet.full()
    if data == "empty":
        return ClosedCircleSet.empty()
    if not isinstance(data, dict):
        raise ValueError(
            "closed circle set JSON must be 'full', 'empty' or an object"
        )
    arcs = tuple((a, b) for a, b in data.get("arcs", []))
    points = tuple(data.get("points", []))
    return ClosedCircleSet(arcs, points)


def tail_to_json(tail: MaximalTail) -> dict:
    return {
        "vertices": sorted(tail.vertices),
        "kind": tail.kind,
        "cycle": list(tail.cycle.edges) if tail.is_cyclic else None,
        "period": tail.period,
    }


def tail_from_json(graph: DirectedGraph, data) -> MaximalTail:
    if not isinstance(data, dict) or "vertices" not in data:
        raise ValueError("a maximal tail must be an object with a 'vertices' field")
    tail = classify_tail(graph, data["vertices"])
    declared_kind = data.get("kind")
    if declared_kind is not None and declared_kind != tail.kind:
        raise ValueError(f"tail {data['vertices']} is {tail.kind}, not {declared_kind}")
    declared_cycle = data.get("cycle")
    if declared_cycle is not None and Cycle(tuple(declared_cycle)) != tail.cycle:
        raise ValueError(f"tail {data['vertices']} has cycle {tail.cycle}")
    declared_period = data.get("period")
    if declared_period is not None and declared_period != tail.period:
        raise ValueError(f"tail {data['vertices']} has period {tail.period}")
    return tail


def prim_to_json(prim: PrimitiveIdeal) -> dict:
    return {"tail": tail_to_json(prim.tail), "z": format_angle(prim.angle)}


def prim_from_json(graph: DirectedGraph, data) -> PrimitiveIdeal:
    if not isinstance(data, dict) or not {"tail", "z"} <= data.keys():
        raise ValueError(
            "a primitive ideal must be an object with 'tail' and 'z' fields"
        )
    return PrimitiveIdeal(tail_from_json(graph, data["tail"]), as_angle(data["z"]))


def pair_to_json(pair: IdealPair) -> dict:
    return {
        "H": sorted(pair.vertices),
        "U": [
            {"cycle": list(cycle.edges), "set": open_set_to_json(value)}
            for cycle, value in pair.cycle_sets
        ],
    }


def pair_from_json(graph: DirectedGraph, data) -> IdealPair:
    if not isinstance(data, dict):
        raise ValueError("an ideal pair must be an object with 'H' and 'U' fields")
    assignment = []
    for entry in data.get("U", []):
        if not isinstance(entry, dict) or not {"cycle", "set"} <= entry.keys():
            raise ValueError(
                "each 'U' entry must be an object with 'cycle' and 'set' fields"
            )
        assignment.append((tuple(entry["cycle"]), open_set_from_json(entry["set"])))
    return ideal_pair(graph, data.get("H", []), assignment)


def hull_to_json(shape: Hull) -> list:
    return [
        {"tail": tail_to_json(entry.tail), "allowed": closed_set_to_json(entry.allowed)}
        for entry in shape.entries
    ]


def hull_from_json(graph: DirectedGraph, data) -> Hull:
    if not isinstance(data, list):
        raise MalformedHullError("hull JSON must be a list of strata")
    entries = []
    for item in data:
        if not isinstance(item, dict) or not {"tail", "allowed"} <= item.keys():
            raise MalformedHullError(
                "each hull stratum must be an object with 'tail' and 'allowed' fields"
            )
        try:
            tail = tail_from_json(graph, item["tail"])
        except NotAMaximalTailError as err:
            raise MalformedHullError(str(err)) from err
        entries.append(HullEntry(tail, closed_set_from_json(item["allowed"])))
    return Hull(tuple(entries))


def strata_to_json(strata) -> list:
    return [{"tail": tail_to_json(tail), "z": note} for tail, note in strata]


def report_to_json(report) -> dict:
    return {
        "pass": report.passed,
        "checked": report.checked,
        "mismatches": list(report.mismatches),
    }
