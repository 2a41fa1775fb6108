"""Exact circle-set algebra, checked against rational grid sampling."""

from __future__ import annotations

import math
import random
from fractions import Fraction as F

import pytest

from prim_lattice import (
    ClosedCircleSet,
    OpenCircleSet,
    as_angle,
    finite_closed_set,
    format_angle,
    punctured_circle,
)


def _grid(*sets):
    """All multiples of 1/N for N twice the lcm of every denominator seen.

    Endpoints land on the grid and so do points strictly between any two
    of them, so two canonical sets agree everywhere iff they agree here.
    """
    denominators = [1]
    for s in sets:
        for a, b in s.arcs:
            denominators += [a.denominator, b.denominator]
        for p in getattr(s, "points", ()):
            denominators.append(p.denominator)
    n = 2 * math.lcm(*denominators)
    return [F(k, n) for k in range(n)]


def _random_open(rng):
    arcs = []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(1, 10)
        start = F(rng.randrange(d), d)
        e = rng.randint(1, 10)
        length = F(rng.randint(1, e), e)
        arcs.append((start, start + length))
    return OpenCircleSet.from_arcs(arcs)


class TestAngles:
    def test_parse_and_format(self):
        assert as_angle("1/2") == F(1, 2)
        assert as_angle("0") == 0
        assert format_angle(F(3, 4)) == "3/4"
        assert format_angle(F(0)) == "0"

    def test_wraps_onto_the_circle(self):
        assert as_angle(F(11, 10)) == F(1, 10)
        assert as_angle(-F(1, 4)) == F(3, 4)


class TestCanonicalForm:
    def test_overlapping_arcs_merge(self):
        s = OpenCircleSet.from_arcs([(F(0), F(3, 5)), (F(1, 2), F(1))])
        assert s.arcs == ((F(0), F(1)),)

    def test_touching_open_arcs_stay_split(self):
        s = OpenCircleSet.from_arcs([(F(0), F(1, 2)), (F(1, 2), F(1))])
        assert s.arcs == ((F(0), F(1, 2)), (F(1, 2), F(1)))

    def test_wraparound_cover_detected_as_full(self):
        s = OpenCircleSet.from_arcs([(F(0), F(3, 5)), (F(1, 2), F(11, 10))])
        assert s.is_full

    def test_wrap_arc_swallows_leading_arc(self):
        s = OpenCircleSet.from_arcs([(F(0), F(1, 2)), (F(1, 2), F(3, 2))])
        assert s.arcs == ((F(1, 2), F(3, 2)),)

    def test_wrap_arc_contains_seam(self):
        s = OpenCircleSet.from_arcs([(F(3, 4), F(9, 8))])
        assert s.contains(0)
        assert s.contains(F(7, 8))
        assert not s.contains(F(1, 8))
        assert not s.contains(F(3, 4))

    def test_circle_minus_point(self):
        s = punctured_circle(F(1, 2))
        assert s.arcs == ((F(1, 2), F(3, 2)),)
        assert s.is_proper()
        assert not s.contains(F(1, 2))
        assert s.contains(0)

    def test_degenerate_arc_rejected(self):
        with pytest.raises(ValueError):
            OpenCircleSet.from_arcs([(F(1, 2), F(1, 2))])

    def test_closed_touching_pieces_merge(self):
        s = ClosedCircleSet(((F(0), F(1, 4)), (F(1, 4), F(1, 2))), ())
        assert s.arcs == ((F(0), F(1, 2)),)
        full = ClosedCircleSet(((F(0), F(1, 2)), (F(1, 2), F(1))), ())
        assert full.is_full

    def test_closed_point_absorbed_by_arc(self):
        s = ClosedCircleSet(((F(0), F(1, 4)),), (F(1, 4), F(3, 4)))
        assert s.arcs == ((F(0), F(1, 4)),)
        assert s.points == (F(3, 4),)

    def test_closed_wrap_through_seam(self):
        s = ClosedCircleSet(((F(3, 4), F(1)), (F(0), F(1, 4))), ())
        assert s.arcs == ((F(3, 4), F(5, 4)),)
        assert s.contains(0)

    def test_finite_closed_set_dedupes(self):
        s = finite_closed_set([F(1, 2), F(3, 2), F(0)])
        assert s.points == (F(0), F(1, 2))
        assert s.arcs == ()

    def test_reconstruction_is_identity(self):
        rng = random.Random(3)
        for _ in range(50):
            s = _random_open(rng)
            assert OpenCircleSet(s.arcs, s.is_full) == s
            c = s.complement()
            assert ClosedCircleSet(c.arcs, c.points, c.is_full) == c


class TestOperations:
    def test_intersect_worked_example(self):
        a = OpenCircleSet.from_arcs([(F(0), F(3, 5))])
        b = OpenCircleSet.from_arcs([(F(1, 2), F(1))])
        assert a.intersect(b).arcs == ((F(1, 2), F(3, 5)),)
        assert a.union(b).arcs == ((F(0), F(1)),)

    def test_complement_worked_examples(self):
        a = OpenCircleSet.from_arcs([(F(0), F(1, 2))])
        c = a.complement()
        assert c.arcs == ((F(1, 2), F(1)),)
        assert c.points == ()
        assert c.contains(0)
        assert punctured_circle(0).complement() == finite_closed_set([0])

    def test_closure_fills_shared_endpoint(self):
        a = OpenCircleSet.from_arcs([(F(0), F(3, 5)), (F(3, 5), F(1))])
        assert a.closure().is_full

    def test_full_and_empty_algebra(self):
        full, empty = OpenCircleSet.full(), OpenCircleSet.empty()
        assert full.union(empty) == full
        assert full.intersect(empty) == empty
        assert not full.is_proper()
        assert empty.is_proper() and empty.is_empty()
        assert full.complement() == ClosedCircleSet.empty()
        assert empty.complement() == ClosedCircleSet.full()
        assert ClosedCircleSet.full().interior() == full

    def test_interior_drops_points(self):
        c = ClosedCircleSet(((F(0), F(1, 4)),), (F(1, 2),))
        assert c.interior() == OpenCircleSet.from_arcs([(F(0), F(1, 4))])

    def test_subset_order(self):
        a = OpenCircleSet.from_arcs([(F(0), F(1, 4))])
        b = OpenCircleSet.from_arcs([(F(0), F(1, 2))])
        assert a.is_subset(b)
        assert not b.is_subset(a)
        assert OpenCircleSet.empty().is_subset(a)
        assert a.is_subset(OpenCircleSet.full())


class TestSampledLaws:
    def test_union_intersect_membership(self):
        rng = random.Random(17)
        for _ in range(100):
            a, b = _random_open(rng), _random_open(rng)
            union, meet = a.union(b), a.intersect(b)
            for theta in _grid(a, b, union, meet):
                assert union.contains(theta) == (a.contains(theta) or b.contains(theta))
                assert meet.contains(theta) == (a.contains(theta) and b.contains(theta))

    def test_complement_membership(self):
        rng = random.Random(19)
        for _ in range(100):
            a = _random_open(rng)
            c = a.complement()
            for theta in _grid(a, c):
                assert c.contains(theta) == (not a.contains(theta))
            assert c.complement() == a

    def test_de_morgan(self):
        rng = random.Random(29)
        for _ in range(80):
            a, b = _random_open(rng), _random_open(rng)
            assert a.union(b).complement() == a.complement().intersect(b.complement())
            assert a.intersect(b).complement() == a.complement().union(b.complement())

    def test_lattice_laws(self):
        rng = random.Random(31)
        for _ in range(80):
            a, b, c = _random_open(rng), _random_open(rng), _random_open(rng)
            assert a.union(b) == b.union(a)
            assert a.intersect(b) == b.intersect(a)
            assert a.union(a) == a
            assert a.intersect(a) == a
            assert a.union(b.union(c)) == a.union(b).union(c)
            assert a.intersect(b.intersect(c)) == a.intersect(b).intersect(c)
            assert a.intersect(b).is_subset(a)
            assert a.is_subset(a.union(b))

    def test_closure_interior_duality(self):
        rng = random.Random(37)
        for _ in range(80):
            a = _random_open(rng)
            assert a.closure().complement() == a.complement().interior()
            closed = a.closure()
            assert closed.interior().closure() == closed
            for theta in _grid(a, closed):
                if a.contains(theta):
                    assert closed.contains(theta)
            inner = a.complement().interior()
            for theta in _grid(a, inner):
                if inner.contains(theta):
                    assert not a.contains(theta)
