"""Triangle centers, the nine-point circle and the tangential triangle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .classification import ACUTE, OBTUSE, RIGHT, PairClassification
from .errors import CollinearVerticesError, RightTriangleError
from .geometry import EPS, Circle, Line, Point, line_line_intersection, midpoint, tangent_at


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        longest = max(self.a.distance(self.b), self.b.distance(self.c), self.c.distance(self.a))
        if abs(self.twice_signed_area) <= EPS * longest**2:
            raise CollinearVerticesError(f"vertices {self.a}, {self.b}, {self.c} are collinear")

    @property
    def vertices(self) -> Tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    @property
    def twice_signed_area(self) -> float:
        return (self.b - self.a).cross(self.c - self.a)

    def midpoints(self) -> Tuple[Point, Point, Point]:
        """Midpoints of the sides opposite a, b and c, in that order."""
        return (midpoint(self.b, self.c), midpoint(self.c, self.a), midpoint(self.a, self.b))

    def side_lines(self) -> Tuple[Line, Line, Line]:
        """Lines bc, ca, ab."""
        return (Line.through(self.b, self.c), Line.through(self.c, self.a), Line.through(self.a, self.b))

    def angles(self) -> Tuple[float, float, float]:
        """Interior angles at a, b, c (law of cosines)."""
        la, lb, lc = self.b.distance(self.c), self.c.distance(self.a), self.a.distance(self.b)

        def angle(opp, s1, s2):
            return math.acos(max(-1.0, min(1.0, (s1 * s1 + s2 * s2 - opp * opp) / (2 * s1 * s2))))

        return (angle(la, lb, lc), angle(lb, lc, la), angle(lc, la, lb))


@dataclass(frozen=True)
class TriangleCenters:
    circumcenter: Point
    circumradius: float
    orthocenter: Point
    nine_point_center: Point
    nine_point_radius: float


def circumcircle(t: Triangle) -> Circle:
    # coordinates relative to vertex a keep the determinant well scaled
    b, c = t.b - t.a, t.c - t.a
    d = 2 * b.cross(c)
    bb, cc = b.dot(b), c.dot(c)
    center = Point((c.y * bb - b.y * cc) / d, (b.x * cc - c.x * bb) / d)
    radius = (abs(center) + abs(center - b) + abs(center - c)) / 3
    return Circle(t.a + center, radius)


def orthocenter(t: Triangle) -> Point:
    o = circumcircle(t).center
    return o + (t.a - o) + (t.b - o) + (t.c - o)


def nine_point_circle(t: Triangle) -> Circle:
    circ = circumcircle(t)
    h = circ.center + (t.a - circ.center) + (t.b - circ.center) + (t.c - circ.center)
    return Circle(midpoint(circ.center, h), circ.radius / 2)


def triangle_centers(t: Triangle) -> TriangleCenters:
    circ = circumcircle(t)
    h = orthocenter(t)
    return TriangleCenters(circ.center, circ.radius, h, midpoint(circ.center, h), circ.radius / 2)


def midpoint_triangle(t: Triangle) -> Triangle:
    return Triangle(*t.midpoints())


def classify_triangle(t: Triangle) -> PairClassification:
    """Acute, Right or Obtuse from the distance between circumcenter and nine-point center.

    ``ON`` is below, at, or above ``R/2`` exactly when the largest angle is
    below, at, or above a right angle. Triangles within ``EPS * R`` of the
    boundary count as right.
    """
    circ = circumcircle(t)
    on = nine_point_circle(t).center.distance(circ.center)
    half = circ.radius / 2
    if abs(on - half) < EPS * circ.radius:
        return RIGHT
    return ACUTE if on < half else OBTUSE


def tangential_triangle(t: Triangle) -> Triangle:
    """Triangle bounded by the tangents to the circumcircle at the vertices.

    Vertex order follows ``t``: the first vertex is where the tangents at
    ``t.b`` and ``t.c`` meet, and so on.
    """
    if classify_triangle(t) == RIGHT:
        raise RightTriangleError("tangents at the ends of a diameter are parallel")
    circ = circumcircle(t)
    ta, tb, tc = (tangent_at(v, circ) for v in t.vertices)
    out = []
    for l1, l2 in ((tb, tc), (tc, ta), (ta, tb)):
        p = line_line_intersection(l1, l2)
        if p is None:
            raise RightTriangleError("tangents at the ends of a diameter are parallel")
        out.append(p)
    return Triangle(*out)
