"""Brute-force reference computations and randomized law checking.

Everything here recomputes answers from first principles, by exhaustive
subset enumeration or by direct axiom checks, so the fast paths in the
other modules have something independent to be compared against.  The
random generators are plain ``random.Random`` consumers, so seeded runs
are reproducible.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .circle import OpenCircleSet, punctured_circle
from .errors import GraphAlgebraError, TooLargeError
from .graph import (
    DirectedGraph,
    enumerate_saturated_hereditary,
    entrance_free_cycles,
    validate,
)
from .lattice import (
    IdealPair,
    PrimitiveIdeal,
    closure_contains,
    contained_in_prim,
    ideal_pair,
    meet_of_primitives,
    pair_join,
    pair_leq,
    pair_meet,
)
from .tails import enumerate_maximal_tails, is_maximal_tail

SUBSET_LIMIT = 16


@dataclass
class OracleReport:
    """Outcome of one oracle run: how much was checked, what disagreed."""

    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def record(self, description: str) -> None:
        self.mismatches.append(description)


def _all_subsets(graph: DirectedGraph):
    vertices = graph.vertices
    if len(vertices) > SUBSET_LIMIT:
        raise TooLargeError(
            f"{len(vertices)} vertices exceed the {SUBSET_LIMIT}-vertex "
            "brute-force guard"
        )
    for size in range(len(vertices) + 1):
        for combo in itertools.combinations(vertices, size):
            yield frozenset(combo)


def brute_maximal_tails(graph: DirectedGraph) -> list[frozenset]:
    """Every subset passing the maximal-tail axioms, exhaustively."""
    return [s for s in _all_subsets(graph) if is_maximal_tail(graph, s)]


def brute_saturated_hereditary(graph: DirectedGraph) -> list[frozenset]:
    """Every subset whose complement is forward closed and internally fed.

    This checks the two complement axioms directly instead of reusing
    the closure operators, so it is an independent route to the same
    family the fast enumeration generates.
    """
    results = []
    for subset in _all_subsets(graph):
        complement = frozenset(graph.vertices) - subset
        forward_closed = all(
            rng in complement
            for src, rng in graph.edges.values()
            if src in complement
        )
        internally_fed = all(
            any(graph.src(e) in complement for e in graph.in_edges(v))
            for v in complement
        )
        if forward_closed and internally_fed:
            results.append(subset)
    return results


def check_lattice_laws(graph: DirectedGraph, sample: list[IdealPair]) -> OracleReport:
    """Bound and extremality checks for meets and joins over a sample.

    Every multiset of up to three pairs drawn from ``sample`` is met and
    joined; the results must bound the family and must be extremal among
    the sample, all judged through the order relation alone.  Tripwire
    errors are recorded as mismatches rather than raised.
    """
    report = OracleReport()
    families = []
    for size in (1, 2, 3):
        families.extend(itertools.combinations_with_replacement(sample, size))
    for family in families:
        label = [sorted(p.vertices) for p in family]
        try:
            met = pair_meet(graph, list(family))
            joined = pair_join(graph, list(family))
        except GraphAlgebraError as err:
            report.record(f"tripwire on {label}: {err}")
            continue
        for pair in family:
            if not pair_leq(graph, met, pair):
                report.record(f"meet of {label} is not a lower bound")
            if not pair_leq(graph, pair, joined):
                report.record(f"join of {label} is not an upper bound")
        for probe in sample:
            if all(pair_leq(graph, probe, pair) for pair in family):
                if not pair_leq(graph, probe, met):
                    report.record(
                        f"meet of {label} misses a greater lower bound"
                    )
            if all(pair_leq(graph, pair, probe) for pair in family):
                if not pair_leq(graph, joined, probe):
                    report.record(
                        f"join of {label} misses a smaller upper bound"
                    )
        report.checked += 1
    return report


def _enriched_angles(prims, pair: IdealPair, zgrid) -> list[Fraction]:
    """The probe grid: given angles, arc endpoints, and their midpoints."""
    points = {Fraction(z) % 1 for z in zgrid}
    points.update(prim.angle for prim in prims)
    for _, value in pair.cycle_sets:
        points.update(value.endpoints())
    ordered = sorted(points)
    for here, there in zip(ordered, ordered[1:] + ordered[:1]):
        gap = (there - here) % 1
        if gap == 0:
            gap = Fraction(1)
        points.add((here + gap / 2) % 1)
    return sorted(points)


def check_closure_coherence(
    graph: DirectedGraph, prims: list[PrimitiveIdeal], zgrid=()
) -> OracleReport:
    """Compare topological closure against containment in the meet.

    A primitive ideal lies in the closure of a finite set exactly when
    it contains the intersection of the set, so the direct closure test
    and the composed meet-then-containment test must agree everywhere.
    The angle grid is enriched with every angle and endpoint appearing
    in the inputs plus the midpoints between consecutive ones.
    """
    report = OracleReport()
    met = meet_of_primitives(graph, prims)
    angles = _enriched_angles(prims, met, zgrid)
    for tail in enumerate_maximal_tails(graph):
        probes = angles if tail.is_cyclic else [Fraction(0)]
        for angle in probes:
            target = PrimitiveIdeal(tail, angle)
            direct = closure_contains(graph, prims, target)
            composed = contained_in_prim(graph, met, target)
            if direct != composed:
                report.record(
                    f"tail {sorted(tail.vertices)} at {angle}: closure says "
                    f"{direct}, meet containment says {composed}"
                )
            report.checked += 1
    return report


def random_graph(
    rng: random.Random, max_vertices: int = 5, max_edges: int = 10
) -> DirectedGraph:
    """A random validated graph; vertices without feeders get a loop."""
    count = rng.randint(1, max_vertices)
    vertices = [f"v{i}" for i in range(count)]
    edges = {}
    for i in range(rng.randint(0, max(0, max_edges - count))):
        edges[f"e{i}"] = (rng.choice(vertices), rng.choice(vertices))
    fed = {rng_v for _, rng_v in edges.values()}
    for i, v in enumerate(vertices):
        if v not in fed:
            edges[f"loop{i}"] = (v, v)
    return validate(DirectedGraph(vertices, edges))


def random_angle(rng: random.Random, max_denominator: int = 12) -> Fraction:
    denominator = rng.randint(1, max_denominator)
    return Fraction(rng.randrange(denominator), denominator)


def random_proper_open_set(
    rng: random.Random, max_arcs: int = 3, max_denominator: int = 12
) -> OpenCircleSet:
    """A random proper open circle set, biased toward interesting shapes."""
    style = rng.random()
    if style < 0.15:
        return OpenCircleSet.empty()
    if style < 0.3:
        return punctured_circle(random_angle(rng, max_denominator))
    for _ in range(20):
        arcs = []
        for _ in range(rng.randint(1, max_arcs)):
            start = random_angle(rng, max_denominator)
            length = random_angle(rng, max_denominator)
            if length == 0:
                length = Fraction(1, max_denominator)
            arcs.append((start, start + length))
        candidate = OpenCircleSet.from_arcs(arcs)
        if candidate.is_proper():
            return candidate
    return OpenCircleSet.empty()


def random_ideal_pair(rng: random.Random, graph: DirectedGraph) -> IdealPair:
    hereditary = rng.choice(enumerate_saturated_hereditary(graph))
    cycles = entrance_free_cycles(graph, frozenset(graph.vertices) - hereditary)
    assignment = {c: random_proper_open_set(rng) for c in cycles}
    return ideal_pair(graph, hereditary, assignment)


def random_primitive(rng: random.Random, graph: DirectedGraph) -> PrimitiveIdeal:
    tail = rng.choice(enumerate_maximal_tails(graph))
    angle = random_angle(rng) if tail.is_cyclic else Fraction(0)
    return PrimitiveIdeal(tail, angle)
