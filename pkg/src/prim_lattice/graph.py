"""Finite directed graphs and their hereditary/saturation combinatorics.

Conventions used throughout the package:

* Vertex and edge ids are opaque strings.  Every ordering that appears in
  a result is lexicographic on ids, so identical inputs give identical
  outputs.
* An edge ``e`` runs from its source ``s(e)`` to its range ``r(e)``, and
  "forward" reachability always means travelling from source to range.
* Paths compose right to left: in a path ``e_1 ... e_n`` each junction
  satisfies ``s(e_i) = r(e_{i+1})``, so the path as a whole has range
  ``r(e_1)`` and source ``s(e_n)``.  A cycle additionally closes up,
  ``r(e_1) = s(e_n)``, and never revisits a vertex.

A vertex set is *hereditary* when pulling any edge back stays inside it
(``r(e)`` in the set forces ``s(e)`` in the set) and *saturated* when a
vertex all of whose feeders lie inside is itself inside.  Complements of
saturated hereditary sets are exactly the vertex sets that are forward
closed and internally fed, which is why these closures drive everything
else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    DanglingEndpointError,
    EmptyGraphError,
    NotACycleError,
    NotHereditaryError,
    SourceVertexError,
    UnknownVertexError,
)

VertexSet = frozenset


class DirectedGraph:
    """A finite directed graph with named edges.

    ``edges`` may be a mapping ``id -> (source, range)`` or an iterable of
    ``(id, source, range)`` triples.  Instances are immutable by
    convention; all derived data is precomputed here.  Construction only
    rejects duplicate edge ids, everything else (dangling endpoints,
    vertices with no feeders, emptiness) is reported by :func:`validate`
    so that intermediate graphs can still be built and inspected.
    """

    def __init__(self, vertices: Iterable[str], edges=()) -> None:
        self.vertices = tuple(sorted({str(v) for v in vertices}))
        if isinstance(edges, Mapping):
            rows = [(str(e), str(s), str(r)) for e, (s, r) in edges.items()]
        else:
            rows = [(str(e), str(s), str(r)) for e, s, r in edges]
        table = {}
        for eid, src, rng in sorted(rows):
            if eid in table:
                raise ValueError(f"duplicate edge id {eid!r}")
            table[eid] = (src, rng)
        self.edges = table
        ins = {v: [] for v in self.vertices}
        outs = {v: [] for v in self.vertices}
        for eid, (src, rng) in table.items():
            if rng in ins:
                ins[rng].append(eid)
            if src in outs:
                outs[src].append(eid)
        self._in = {v: tuple(es) for v, es in ins.items()}
        self._out = {v: tuple(es) for v, es in outs.items()}

    def src(self, edge: str) -> str:
        return self.edges[edge][0]

    def rng(self, edge: str) -> str:
        return self.edges[edge][1]

    def in_edges(self, vertex: str) -> tuple[str, ...]:
        """Edges whose range is ``vertex``, sorted by edge id."""
        if vertex not in self._in:
            raise UnknownVertexError(vertex)
        return self._in[vertex]

    def out_edges(self, vertex: str) -> tuple[str, ...]:
        """Edges whose source is ``vertex``, sorted by edge id."""
        if vertex not in self._out:
            raise UnknownVertexError(vertex)
        return self._out[vertex]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirectedGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(sorted(self.edges.items()))))

    def __repr__(self) -> str:
        return f"DirectedGraph(vertices={list(self.vertices)!r}, edges={self.edges!r})"


def validate(graph: DirectedGraph) -> DirectedGraph:
    """Check that ``graph`` is nonempty, well formed and source-free.

    Returns the graph itself so calls can be chained.  "Source-free"
    means every vertex receives at least one edge.
    """
    if not graph.vertices:
        raise EmptyGraphError("graph has no vertices")
    declared = set(graph.vertices)
    for eid, (src, rng) in graph.edges.items():
        if src not in declared or rng not in declared:
            raise DanglingEndpointError(eid)
    for v in graph.vertices:
        if not graph.in_edges(v):
            raise SourceVertexError(v)
    return graph


def _vertex_subset(graph: DirectedGraph, subset: Iterable[str]) -> frozenset:
    sub = frozenset(subset)
    for v in sub:
        if v not in graph._in:
            raise UnknownVertexError(v)
    return sub


def is_hereditary(graph: DirectedGraph, subset: Iterable[str]) -> bool:
    sub = _vertex_subset(graph, subset)
    return all(graph.src(e) in sub for v in sub for e in graph.in_edges(v))


def hereditary_closure(graph: DirectedGraph, subset: Iterable[str]) -> frozenset:
    """Smallest superset closed under edge pullback.

    Whenever the range of an edge lies in the set, its source is added,
    until nothing changes.
    """
    closure = set(_vertex_subset(graph, subset))
    stack = list(closure)
    while stack:
        v = stack.pop()
        for e in graph.in_edges(v):
            s = graph.src(e)
            if s not in closure:
                closure.add(s)
                stack.append(s)
    return frozenset(closure)


def _saturation_fixpoint(graph: DirectedGraph, start: frozenset) -> frozenset:
    closure = set(start)
    changed = True
    while changed:
        changed = False
        for v in graph.vertices:
            if v in closure:
                continue
            if all(graph.src(e) in closure for e in graph.in_edges(v)):
                closure.add(v)
                changed = True
        if changed:
            closure = set(hereditary_closure(graph, closure))
    return frozenset(closure)


def saturate(graph: DirectedGraph, subset: Iterable[str]) -> frozenset:
    """Smallest saturated hereditary superset of a hereditary set.

    A vertex is absorbed as soon as every one of its feeders lies inside;
    the hereditary closure is re-run after each round of absorptions.
    """
    sub = _vertex_subset(graph, subset)
    if not is_hereditary(graph, sub):
        raise NotHereditaryError(f"{sorted(sub)} is not hereditary")
    return _saturation_fixpoint(graph, sub)


def saturated_hereditary_closure(graph: DirectedGraph, subset: Iterable[str]) -> frozenset:
    """Smallest saturated hereditary superset of an arbitrary vertex set."""
    return _saturation_fixpoint(graph, hereditary_closure(graph, subset))


def is_saturated_hereditary(graph: DirectedGraph, subset: Iterable[str]) -> bool:
    sub = _vertex_subset(graph, subset)
    return sub == saturated_hereditary_closure(graph, sub)


def enumerate_saturated_hereditary(graph: DirectedGraph) -> list[frozenset]:
    """All saturated hereditary vertex sets, sorted by size then members.

    The family is generated rather than filtered out of the power set: it
    is closed under intersection, and every member is the join of the
    principal closures of its own vertices, so closing the principal
    closures under pairwise join reaches everything.
    """
    found = {saturated_hereditary_closure(graph, frozenset())}
    for v in graph.vertices:
        found.add(saturated_hereditary_closure(graph, frozenset({v})))
    frontier = list(found)
    while frontier:
        fresh = []
        for known in list(found):
            for new in frontier:
                joined = saturated_hereditary_closure(graph, known | new)
                if joined not in found:
                    found.add(joined)
                    fresh.append(joined)
        frontier = fresh
    return sorted(found, key=lambda h: (len(h), tuple(sorted(h))))


def subgraph_without(graph: DirectedGraph, subset: Iterable[str]) -> DirectedGraph:
    """The graph left after deleting a hereditary set and its edges.

    Kept edges are those whose source survives; hereditarity guarantees
    their ranges survive too, so the result is well formed.  The result
    is not validated here, deleting everything is allowed.
    """
    removed = _vertex_subset(graph, subset)
    if not is_hereditary(graph, removed):
        raise NotHereditaryError(f"{sorted(removed)} is not hereditary")
    kept_vertices = [v for v in graph.vertices if v not in removed]
    kept_edges = {e: sr for e, sr in graph.edges.items() if sr[0] not in removed}
    return DirectedGraph(kept_vertices, kept_edges)


def reachable_ranges(graph: DirectedGraph, subset: Iterable[str]) -> frozenset:
    """All vertices reachable forward from ``subset``, including it."""
    reached = set(_vertex_subset(graph, subset))
    stack = list(reached)
    while stack:
        v = stack.pop()
        for e in graph.out_edges(v):
            r = graph.rng(e)
            if r not in reached:
                reached.add(r)
                stack.append(r)
    return frozenset(reached)


@dataclass(frozen=True, order=True)
class Path:
    """A nonempty composable edge sequence, stored right to left."""

    edges: tuple[str, ...]


def path_from_edges(graph: DirectedGraph, edge_ids: Iterable[str]) -> Path:
    ids = tuple(str(e) for e in edge_ids)
    if not ids:
        raise ValueError("a path needs at least one edge")
    for e in ids:
        if e not in graph.edges:
            raise ValueError(f"unknown edge {e!r}")
    for i in range(len(ids) - 1):
        if graph.src(ids[i]) != graph.rng(ids[i + 1]):
            raise ValueError(
                f"edges {ids[i]!r} and {ids[i + 1]!r} do not compose"
            )
    return Path(ids)


@dataclass(frozen=True, order=True)
class Cycle:
    """A cycle identified up to cyclic rotation of its edges.

    Construction normalises to the lexicographically least rotation, so
    two rotations of the same cycle compare and hash equal.  Use
    :func:`cycle_from_edges` to also check the sequence really is a
    cycle of a given graph.
    """

    edges: tuple[str, ...]

    def __post_init__(self):
        ids = tuple(self.edges)
        if not ids:
            raise ValueError("a cycle has at least one edge")
        rotations = [ids[i:] + ids[:i] for i in range(len(ids))]
        object.__setattr__(self, "edges", min(rotations))

    def __len__(self) -> int:
        return len(self.edges)


def cycle_from_edges(graph: DirectedGraph, edge_ids: Iterable[str]) -> Cycle:
    """Validate an edge sequence as a cycle of ``graph`` and canonicalise it."""
    ids = tuple(str(e) for e in edge_ids)
    if not ids:
        raise NotACycleError("a cycle has at least one edge")
    for e in ids:
        if e not in graph.edges:
            raise NotACycleError(f"unknown edge {e!r}")
    for i in range(len(ids)):
        follower = ids[(i + 1) % len(ids)]
        if graph.src(ids[i]) != graph.rng(follower):
            raise NotACycleError("edges do not close up into a cycle")
    sources = [graph.src(e) for e in ids]
    if len(set(sources)) != len(sources):
        raise NotACycleError("cycle revisits a vertex")
    return Cycle(ids)


def cycle_vertices(graph: DirectedGraph, cycle: Cycle) -> frozenset:
    return frozenset(graph.src(e) for e in cycle.edges)


def cycle_base(graph: DirectedGraph, cycle: Cycle) -> str:
    """The range of the first edge of the canonical rotation."""
    return graph.rng(cycle.edges[0])


def is_entrance_free(graph: DirectedGraph, cycle: Cycle, subset: Iterable[str]) -> bool:
    """Whether ``cycle`` lies in ``subset`` with no other feeder from it.

    True exactly when every cycle vertex's only in-edge with source in
    ``subset`` is the cycle edge arriving there.
    """
    inside = _vertex_subset(graph, subset)
    if not cycle_vertices(graph, cycle) <= inside:
        return False
    for e in cycle.edges:
        v = graph.rng(e)
        feeders = [f for f in graph.in_edges(v) if graph.src(f) in inside]
        if feeders != [e]:
            return False
    return True


def entrance_free_cycles(graph: DirectedGraph, subset: Iterable[str]) -> list[Cycle]:
    """All cycles in ``subset`` without entrance, one per rotation class.

    On an entrance-free cycle every vertex has exactly one feeder from
    inside ``subset``, so following unique feeders backwards from each
    vertex either fails fast or traces the cycle through that vertex.
    """
    inside = _vertex_subset(graph, subset)
    feeders = {
        v: [e for e in graph.in_edges(v) if graph.src(e) in inside] for v in inside
    }
    found = set()
    for start in sorted(inside):
        edges = []
        seen = set()
        v = start
        while True:
            if v in seen:
                if v == start:
                    found.add(Cycle(tuple(edges)))
                break
            if len(feeders[v]) != 1:
                break
            seen.add(v)
            edge = feeders[v][0]
            edges.append(edge)
            v = graph.src(edge)
    return sorted(found)
