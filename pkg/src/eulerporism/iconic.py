"""The inscribed conic with a focus at the circumcenter.

The sides of a triangle are the lines through the side midpoints
perpendicular to the segments joining them to the circumcenter ``O``. Since
the midpoints sweep the Euler circle, the conic enveloping those lines (the
negative pedal of the Euler circle with respect to ``O``) touches all three
sides. It is shared by every triangle with the same circumcircle and Euler
circle, and polarity in the circumcircle maps it onto the inverted Euler
circle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from .classification import Kind
from .errors import (
    FocusNotAtCenterError,
    NotAcuteError,
    PedalPointOnCircleError,
    RightTriangleError,
)
from .geometry import (
    EPS,
    Circle,
    GeneralizedCircle,
    Line,
    Point,
    invert_generalized_circle,
    tolerance,
)
from .triangle import Triangle, circumcircle, classify_triangle, nine_point_circle

DEFAULT_AXIS = Point(1.0, 0.0)


class ConicKind(Enum):
    ELLIPSE = "Ellipse"
    HYPERBOLA = "Hyperbola"


@dataclass(frozen=True)
class CentralConic:
    """Ellipse or hyperbola in focal form.

    ``focus = center + c * axis_dir``; the other focus is the reflection of
    ``focus`` in ``center``.
    """

    center: Point
    focus: Point
    axis_dir: Point
    a: float
    c: float

    def __post_init__(self):
        if self.a <= 0 or self.c < 0:
            raise ValueError("need a > 0 and c >= 0")
        if abs(abs(self.axis_dir) - 1.0) > EPS:
            raise ValueError("axis_dir must be a unit vector")
        if abs(self.a - self.c) <= tolerance(self.a):
            raise ValueError("c == a is a degenerate conic")
        expected = self.center + self.axis_dir * self.c
        if expected.distance(self.focus) > tolerance(self.a, self.c, *self.center):
            raise ValueError("focus is not center + c * axis_dir")

    @property
    def kind(self) -> ConicKind:
        return ConicKind.ELLIPSE if self.c < self.a else ConicKind.HYPERBOLA

    @property
    def b(self) -> float:
        return math.sqrt(abs(self.a * self.a - self.c * self.c))

    @property
    def eccentricity(self) -> float:
        return self.c / self.a

    @property
    def second_focus(self) -> Point:
        return self.center * 2 - self.focus

    @property
    def auxiliary_circle(self) -> Circle:
        return Circle(self.center, self.a)

    @property
    def vertices(self) -> Tuple[Point, Point]:
        """The two ends of the major (transverse) axis."""
        return (self.center + self.axis_dir * self.a, self.center - self.axis_dir * self.a)

    def tangent_through_pedal(self, foot: Point) -> Line:
        """Tangent whose foot from the focus is ``foot`` (a point of the auxiliary circle)."""
        return Line.from_point_normal(foot, foot - self.focus)

    def tangent_lines(self, n: int) -> List[Line]:
        """``n`` tangents, one per equally spaced foot on the auxiliary circle."""
        aux = self.auxiliary_circle
        return [self.tangent_through_pedal(aux.point_at(2 * math.pi * (k + 0.5) / n)) for k in range(n)]

    def sample(self, n: int, extent: float | None = None) -> List[List[Point]]:
        """Polylines tracing the curve: one closed loop, or one per hyperbola branch.

        Hyperbola branches are cut where they leave the disc of radius
        ``extent`` around the center (default ``4 * c``).
        """
        u, v = self.axis_dir, self.axis_dir.perp()
        a, b = self.a, self.b
        if self.kind is ConicKind.ELLIPSE:
            pts = []
            for k in range(n):
                t = 2 * math.pi * k / n
                pts.append(self.center + u * (a * math.cos(t)) + v * (b * math.sin(t)))
            return [pts + [pts[0]]]
        reach = extent if extent is not None else 4 * self.c
        tmax = math.acosh(max(1.0, reach / self.c))
        branches = []
        for sign in (1.0, -1.0):
            pts = []
            for k in range(n):
                t = -tmax + 2 * tmax * k / (n - 1)
                pts.append(self.center + u * (sign * a * math.cosh(t)) + v * (b * math.sinh(t)))
            branches.append(pts)
        return branches


def negative_pedal_of_circle(E: Circle, D: Point) -> CentralConic:
    """Envelope of the lines through M perpendicular to DM, M running over ``E``.

    A conic centered at the center of ``E`` with a focus at ``D`` and
    semi-axis equal to the radius: an ellipse when ``D`` is inside ``E``, a
    hyperbola when outside.
    """
    offset = D - E.center
    c = abs(offset)
    if abs(c - E.radius) <= tolerance(E.radius, c):
        raise PedalPointOnCircleError("pedal point on the circle gives a degenerate envelope")
    axis = offset / c if c > 0 else DEFAULT_AXIS
    return CentralConic(E.center, D, axis, E.radius, c)


def iconic_of_triangle(t: Triangle) -> CentralConic:
    if classify_triangle(t).kind is Kind.RIGHT:
        raise RightTriangleError("the circumcenter lies on the Euler circle of a right triangle")
    return negative_pedal_of_circle(nine_point_circle(t), circumcircle(t).center)


def tangency_residual(line: Line, conic: CentralConic) -> float:
    """Distance of the pedal foot from the auxiliary circle.

    A line touches the conic exactly when the foot of the perpendicular from
    a focus lies on the auxiliary circle, so zero means tangent.
    """
    foot = line.foot(conic.focus)
    return abs(foot.distance(conic.center) - conic.a)


def is_tangent_line(line: Line, conic: CentralConic, tol: float = EPS) -> bool:
    return tangency_residual(line, conic) <= tol * max(1.0, conic.a)


def dual_of_iconic(conic: CentralConic, C: Circle) -> GeneralizedCircle:
    """Image of a conic focused at the center of ``C`` under polarity in ``C``.

    The pole of a tangent is the inverse of its pedal foot, so the poles of
    all tangents fill the inverse of the auxiliary circle.
    """
    if conic.focus.distance(C.center) > tolerance(C.radius, *C.center):
        raise FocusNotAtCenterError("polarity maps the conic to a circle only when it is focused at the center")
    return invert_generalized_circle(conic.auxiliary_circle, C)


@dataclass(frozen=True)
class InellipseReport:
    center_offset: float
    vertex_residuals: Tuple[float, float]
    axis_ratio: float


def inellipse_geometry_check(t: Triangle) -> InellipseReport:
    """Compare the inscribed ellipse with the Euler circle of an acute triangle.

    Both are centered at the nine-point center, the major-axis ends lie on
    the Euler circle and the major axis equals the Euler diameter.
    """
    if classify_triangle(t).kind is not Kind.ACUTE:
        raise NotAcuteError("the in-ellipse exists only for acute triangles")
    E = nine_point_circle(t)
    conic = iconic_of_triangle(t)
    v1, v2 = conic.vertices
    return InellipseReport(
        center_offset=conic.center.distance(E.center),
        vertex_residuals=(abs(E.residual(v1)), abs(E.residual(v2))),
        axis_ratio=(2 * conic.a) / (2 * E.radius),
    )
