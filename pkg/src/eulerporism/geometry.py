"""Inversive and projective primitives for circles and lines in the plane.

Everything here is a pure function of immutable values. Incidence predicates
("on the circle", "tangent", "through the center") share one relative
tolerance, see :func:`tolerance`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Tuple, Union

from .errors import (
    CenterInversionError,
    IdenticalCirclesError,
    LineThroughCenterError,
    NonFiniteError,
    NotOnCircleError,
)

EPS = 1e-9


def tolerance(*magnitudes: float) -> float:
    """Absolute tolerance ``EPS * max(1, |m|...)`` for the given operand scales."""
    return EPS * max(1.0, *(abs(m) for m in magnitudes))


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteError(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point:
        return Point(self.x / k, self.y / k)

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __abs__(self) -> float:
        return math.hypot(self.x, self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def perp(self) -> Point:
        """Counter-clockwise quarter turn."""
        return Point(-self.y, self.x)

    def unit(self) -> Point:
        return self / abs(self)

    def distance(self, other: Point) -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    @classmethod
    def polar(cls, r: float, theta: float, origin: Point | None = None) -> Point:
        p = cls(r * math.cos(theta), r * math.sin(theta))
        return p if origin is None else origin + p

    @classmethod
    def from_complex(cls, z: complex) -> Point:
        return cls(z.real, z.imag)

    def __complex__(self) -> complex:
        return complex(self.x, self.y)


ORIGIN = Point(0.0, 0.0)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.radius):
            raise NonFiniteError(f"non-finite radius {self.radius}")
        if self.radius <= 0:
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    def point_at(self, theta: float) -> Point:
        return Point.polar(self.radius, theta, self.center)

    def angle_of(self, p: Point) -> float:
        """Polar angle of ``p`` seen from the center, in [0, 2*pi)."""
        return math.atan2(p.y - self.center.y, p.x - self.center.x) % (2 * math.pi)

    def residual(self, p: Point) -> float:
        """Signed distance of ``p`` from the circle (positive outside)."""
        return p.distance(self.center) - self.radius

    def contains(self, p: Point) -> bool:
        """True when ``p`` is incident to the circle within tolerance."""
        return abs(self.residual(p)) <= tolerance(self.radius, *self.center)

    def isclose(self, other: Circle, tol: float = EPS) -> bool:
        return (
            self.center.distance(other.center) <= tol
            and abs(self.radius - other.radius) <= tol
        )


@dataclass(frozen=True)
class Line:
    """The set of points p with ``normal . p == offset``.

    Build through :meth:`from_coefficients` (or the other constructors) to
    get the canonical form: unit normal, ``offset >= 0``, and for lines through
    the origin the first nonzero normal coordinate positive.
    """

    nx: float
    ny: float
    offset: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.nx, self.ny, self.offset)):
            raise NonFiniteError("non-finite line coefficients")

    @classmethod
    def from_coefficients(cls, a: float, b: float, c: float) -> Line:
        """Line ``a*x + b*y = c``."""
        n = math.hypot(a, b)
        if n == 0:
            raise ValueError("degenerate line: zero normal")
        a, b, c = a / n, b / n, c / n
        if c < 0 or (c == 0 and (a < 0 or (a == 0 and b < 0))):
            a, b, c = -a, -b, -c
        return cls(a + 0.0, b + 0.0, c + 0.0)

    @classmethod
    def from_point_normal(cls, p: Point, n: Point) -> Line:
        return cls.from_coefficients(n.x, n.y, n.dot(p))

    @classmethod
    def through(cls, p: Point, q: Point) -> Line:
        n = (q - p).perp()
        return cls.from_coefficients(n.x, n.y, n.dot(p))

    @property
    def normal(self) -> Point:
        return Point(self.nx, self.ny)

    @property
    def direction(self) -> Point:
        return Point(-self.ny, self.nx)

    def signed_distance(self, p: Point) -> float:
        return self.nx * p.x + self.ny * p.y - self.offset

    def distance(self, p: Point) -> float:
        return abs(self.signed_distance(p))

    def foot(self, p: Point) -> Point:
        """Orthogonal projection of ``p`` onto the line."""
        return p - self.normal * self.signed_distance(p)

    def shifted(self, delta: float) -> Line:
        return Line.from_coefficients(self.nx, self.ny, self.offset + delta)

    def isclose(self, other: Line, tol: float = EPS) -> bool:
        def close(s: float) -> bool:
            return (
                abs(self.nx - s * other.nx) <= tol
                and abs(self.ny - s * other.ny) <= tol
                and abs(self.offset - s * other.offset) <= tol
            )

        # near the origin the canonical sign rule is numerically fragile
        return close(1.0) or (abs(self.offset) <= tol and close(-1.0))


GeneralizedCircle = Union[Circle, Line]


def generalized_isclose(g: GeneralizedCircle, h: GeneralizedCircle, tol: float = EPS) -> bool:
    if isinstance(g, Circle) and isinstance(h, Circle):
        return g.isclose(h, tol)
    if isinstance(g, Line) and isinstance(h, Line):
        return g.isclose(h, tol)
    return False


def generalized_residual(g: GeneralizedCircle, p: Point) -> float:
    """Distance from ``p`` to the circle or line ``g``."""
    if isinstance(g, Circle):
        return abs(g.residual(p))
    return g.distance(p)


# ---------------------------------------------------------------------------
# inversion, poles and polars


def invert_point(p: Point, inv: Circle) -> Point:
    v = p - inv.center
    d2 = v.dot(v)
    if math.sqrt(d2) <= tolerance(inv.radius):
        raise CenterInversionError(f"{p} is the inversion center")
    return inv.center + v * (inv.radius**2 / d2)


def _passes_through(c: Circle, p: Point) -> bool:
    return abs(c.center.distance(p) - c.radius) <= tolerance(c.radius, c.center.distance(p))


def invert_generalized_circle(g: GeneralizedCircle, inv: Circle) -> GeneralizedCircle:
    """Image of a circle or line under inversion in ``inv``.

    A circle through the inversion center maps to a line, a line off the
    center maps to a circle through it, and a line through the center is
    fixed.
    """
    o, k = inv.center, inv.radius**2
    if isinstance(g, Line):
        s = -g.signed_distance(o)
        if abs(s) <= tolerance(inv.radius):
            return g
        n = g.normal
        return Circle(o + n * (k / (2 * s)), k / (2 * abs(s)))

    if _passes_through(g, o):
        u = (g.center - o).unit()
        return Line.from_point_normal(o + u * (k / (2 * g.radius)), u)
    return invert_circle(g, inv)


def invert_circle(g: Circle, inv: Circle) -> Circle:
    """Circle-to-circle inversion for ``g`` not through the inversion center.

    Inverts the two ends of the diameter of ``g`` lying on the line of centers;
    the image circle is the one having the two images as a diameter.
    """
    o, k = inv.center, inv.radius**2
    dist = g.center.distance(o)
    if dist == 0:
        return Circle(o, k / g.radius)
    u = (g.center - o) / dist
    near, far = k / (dist - g.radius), k / (dist + g.radius)
    return Circle(o + u * ((near + far) / 2), abs(near - far) / 2)


def polar_line(p: Point, inv: Circle) -> Line:
    v = p - inv.center
    d = abs(v)
    if d <= tolerance(inv.radius):
        raise CenterInversionError(f"{p} is the circle center; its polar is at infinity")
    u = v / d
    return Line.from_point_normal(inv.center + u * (inv.radius**2 / d), u)


def pole_of_line(line: Line, inv: Circle) -> Point:
    s = -line.signed_distance(inv.center)
    if abs(s) <= tolerance(inv.radius):
        raise LineThroughCenterError("line passes through the circle center")
    return inv.center + line.normal * (inv.radius**2 / s)


# ---------------------------------------------------------------------------
# tangents and intersections


def tangent_at(p: Point, c: Circle) -> Line:
    if not c.contains(p):
        raise NotOnCircleError(f"{p} is not on {c} (residual {c.residual(p):.3g})")
    n = (p - c.center).unit()
    return Line.from_coefficients(n.x, n.y, n.dot(c.center) + c.radius)


def tangents_from_point(p: Point, c: Circle) -> List[Tuple[Line, Point]]:
    """Tangent lines from ``p`` to ``c`` with their points of tangency.

    Two for an exterior point, one (the tangent at ``p``) for a point on the
    circle, none for an interior point.
    """
    v = p - c.center
    d = abs(v)
    tol = tolerance(c.radius, d)
    if abs(d - c.radius) <= tol:
        return [(tangent_at(p, c), p)]
    if d < c.radius:
        return []
    u = v / d
    cos_a = c.radius / d
    sin_a = math.sqrt(max(0.0, 1.0 - cos_a * cos_a))
    out = []
    for sign in (1.0, -1.0):
        n = u * cos_a + u.perp() * (sign * sin_a)
        t = c.center + n * c.radius
        out.append((Line.from_coefficients(n.x, n.y, n.dot(c.center) + c.radius), t))
    return out


def line_circle_intersection(line: Line, c: Circle) -> List[Point]:
    s = line.signed_distance(c.center)
    foot = c.center - line.normal * s
    tol = tolerance(c.radius, *c.center)
    if abs(s) > c.radius + tol:
        return []
    if abs(abs(s) - c.radius) <= tol:
        return [foot]
    h = math.sqrt(c.radius**2 - s * s)
    t = line.direction
    return [foot + t * h, foot - t * h]


def circle_circle_intersection(a: Circle, b: Circle) -> List[Point]:
    v = b.center - a.center
    d = abs(v)
    tol = tolerance(a.radius, b.radius, *a.center, *b.center)
    if d <= tol:
        if abs(a.radius - b.radius) <= tol:
            raise IdenticalCirclesError(f"{a} and {b} coincide")
        return []
    if d > a.radius + b.radius + tol or d < abs(a.radius - b.radius) - tol:
        return []
    u = v / d
    x = (a.radius**2 - b.radius**2 + d * d) / (2 * d)
    if abs(d - (a.radius + b.radius)) <= tol or abs(d - abs(a.radius - b.radius)) <= tol:
        return [a.center + u * x]
    h = math.sqrt(max(0.0, a.radius**2 - x * x))
    base = a.center + u * x
    return [base + u.perp() * h, base - u.perp() * h]


def line_line_intersection(l1: Line, l2: Line) -> Point | None:
    """Meeting point of two lines, or None when they are parallel."""
    det = l1.nx * l2.ny - l1.ny * l2.nx
    if abs(det) <= EPS:
        return None
    x = (l1.offset * l2.ny - l1.ny * l2.offset) / det
    y = (l1.nx * l2.offset - l1.offset * l2.nx) / det
    return Point(x, y)


def common_tangents(a: Circle, b: Circle) -> List[Tuple[Line, Point, Point]]:
    """Lines tangent to both circles, each with its tangency point on ``a`` and on ``b``.

    Outer tangents come first, then inner ones (which exist only for
    disjoint circles). Concentric circles have none.
    """
    v = b.center - a.center
    d = abs(v)
    if d <= tolerance(a.radius, b.radius):
        return []
    u = v / d
    out = []
    # signed distances from the line: +r_a for a, +/-r_b for b
    for kb in (1.0, -1.0):
        m = (kb * b.radius - a.radius) / d
        if abs(m) > 1.0 + EPS:
            continue
        m = max(-1.0, min(1.0, m))
        s = math.sqrt(1.0 - m * m)
        signs = (1.0, -1.0) if s > 0 else (1.0,)
        for sg in signs:
            n = u * m + u.perp() * (sg * s)
            w = n.dot(a.center) - a.radius
            line = Line.from_coefficients(n.x, n.y, w)
            out.append((line, a.center - n * a.radius, b.center - n * (kb * b.radius)))
    return out
