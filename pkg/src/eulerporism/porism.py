"""Triangles sharing a prescribed circumcircle and Euler circle.

Inverting the Euler circle ``E`` in the circumcircle ``C`` gives a circle
``E'`` such that ``(E', C)`` is a circumcircle/incircle pair (acute case) or a
circumcircle/excircle pair (obtuse case). The wanted triangles are the
contact triangles of the triangles inscribed in ``E'`` and circumscribed
about ``C``; they are built here vertex-first by chasing tangents.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

from . import classification as verdicts
from .classification import Kind, PairClassification
from .errors import (
    DegenerateSeedError,
    ExternalTangencyError,
    InvalidPairError,
    NoTriangleError,
    NotRightPairError,
    SeedNotOnCircleError,
    CollinearVerticesError,
)
from .geometry import (
    EPS,
    Circle,
    GeneralizedCircle,
    Line,
    Point,
    circle_circle_intersection,
    common_tangents,
    invert_circle,
    line_circle_intersection,
    tangent_at,
    tangents_from_point,
    tolerance,
)
from .triangle import Triangle, circumcircle, nine_point_circle

TWO_PI = 2 * math.pi


def check_pair(C: Circle, E: Circle) -> PairClassification:
    """Decide whether ``C`` and ``E`` are the circumcircle and Euler circle of some triangle."""
    R = C.radius
    if abs(E.radius - R / 2) > EPS * R:
        return verdicts.RADIUS_MISMATCH
    on = E.center.distance(C.center)
    if on >= 1.5 * R - EPS * R:
        return verdicts.TOO_FAR_APART
    if abs(on - R / 2) <= EPS * R:
        return verdicts.RIGHT
    return verdicts.ACUTE if on < R / 2 else verdicts.OBTUSE


def _require(C: Circle, E: Circle, *kinds: Kind) -> PairClassification:
    verdict = check_pair(C, E)
    if verdict.kind not in kinds:
        raise InvalidPairError(f"pair is {verdict}; need one of {', '.join(k.value for k in kinds)}")
    return verdict


def right_tangency_point(C: Circle, E: Circle) -> Point:
    """Point where an Euler circle through the circumcenter touches the circumcircle."""
    u = (E.center - C.center).unit()
    return C.center + u * C.radius


def euler_prime(C: Circle, E: Circle) -> GeneralizedCircle:
    """Inverse of the Euler circle in the circumcircle.

    A line (the tangent to ``C`` at the contact point) when the pair is right.
    """
    verdict = _require(C, E, Kind.ACUTE, Kind.RIGHT, Kind.OBTUSE)
    if verdict.kind is Kind.RIGHT:
        a = right_tangency_point(C, E)
        return tangent_at(a, C)
    return invert_circle(E, C)


class PorismKind(Enum):
    INCIRCLE = "Incircle"
    EXCIRCLE = "Excircle"


@dataclass(frozen=True)
class PoristicPair:
    """``E'`` as circumcircle with ``C`` as its incircle or one of its excircles."""

    outer: Circle
    inner: Circle
    kind: PorismKind
    classification: PairClassification

    @property
    def center_distance(self) -> float:
        return self.outer.center.distance(self.inner.center)

    def chapple_sides(self) -> Tuple[float, float]:
        R1, r1, d1 = self.outer.radius, self.inner.radius, self.center_distance
        if self.kind is PorismKind.INCIRCLE:
            return (R1 - r1) ** 2, d1 * d1 + r1 * r1
        return (R1 + r1) ** 2, d1 * d1 + r1 * r1

    @property
    def chapple_residual(self) -> float:
        """Relative defect of the Euler-Chapple relation for this kind."""
        lhs, rhs = self.chapple_sides()
        return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)


def make_poristic_pair(C: Circle, E: Circle) -> PoristicPair:
    verdict = _require(C, E, Kind.ACUTE, Kind.OBTUSE)
    kind = PorismKind.INCIRCLE if verdict.kind is Kind.ACUTE else PorismKind.EXCIRCLE
    return PoristicPair(invert_circle(E, C), C, kind, verdict)


# ---------------------------------------------------------------------------
# vertex-first construction


def _check_seed(C: Circle, seed: Point) -> None:
    if not C.contains(seed):
        raise SeedNotOnCircleError(f"seed {seed} is off the circumcircle (residual {C.residual(seed):.3g})")


def _other_tangency(b_prime: Point, C: Circle, skip: Line) -> Point:
    """Tangency point on ``C`` of the tangent from ``b_prime`` that is not ``skip``."""
    tangents = tangents_from_point(b_prime, C)
    if len(tangents) < 2:
        raise NoTriangleError(f"{b_prime} is not outside the circumcircle")
    # the two tangents meet at b_prime so they are never parallel
    tangents.sort(key=lambda lt: abs(lt[0].normal.dot(skip.normal)))
    return tangents[0][1]


def construct_triangle(C: Circle, E: Circle, seed: Point) -> Triangle:
    """The triangle with a vertex at ``seed``, circumcircle ``C`` and Euler circle ``E``.

    The tangent to ``C`` at the seed cuts ``E'`` at two points; the second
    tangents from those points touch ``C`` at the remaining vertices.
    Raises :class:`NoTriangleError` when the tangent misses ``E'``.
    """
    _check_seed(C, seed)
    _require(C, E, Kind.ACUTE, Kind.OBTUSE)
    e_prime = invert_circle(E, C)
    a_tan = tangent_at(seed, C)
    hits = line_circle_intersection(a_tan, e_prime)
    if len(hits) < 2:
        raise NoTriangleError(f"tangent at {seed} does not cut E' in two points (sterile seed)")
    b, c = (_other_tangency(p, C, a_tan) for p in hits)
    try:
        return Triangle(seed, b, c)
    except CollinearVerticesError as exc:
        raise NoTriangleError(f"seed {seed} gives a degenerate triangle") from exc


def construct_at_angle(C: Circle, E: Circle, theta: float) -> Triangle:
    return construct_triangle(C, E, C.point_at(theta))


def roundtrip_residuals(C: Circle, E: Circle, t: Triangle) -> dict:
    """Deviations of the triangle's circumcircle and nine-point circle from ``C`` and ``E``."""
    circ, npc = circumcircle(t), nine_point_circle(t)
    return {
        "circumcenter": circ.center.distance(C.center),
        "circumradius": abs(circ.radius - C.radius),
        "nine_point_center": npc.center.distance(E.center),
        "nine_point_radius": abs(npc.radius - E.radius),
    }


# ---------------------------------------------------------------------------
# fertile arcs


@dataclass(frozen=True)
class ArcSet:
    """Union of disjoint half-open angular intervals on a circle, all inside [0, 2*pi)."""

    circle: Circle
    arcs: Tuple[Tuple[float, float], ...] = field(default_factory=tuple)

    def __post_init__(self):
        prev_end = 0.0
        for start, end in self.arcs:
            if not (prev_end <= start < end <= TWO_PI):
                raise ValueError(f"arcs must be sorted, disjoint and inside [0, 2pi): {self.arcs}")
            prev_end = end

    @classmethod
    def from_intervals(cls, circle: Circle, intervals) -> ArcSet:
        """Normalize intervals given as (start, end) with end > start, possibly wrapping past 2*pi."""
        pieces = []
        for start, end in intervals:
            length = end - start
            if length <= 0:
                continue
            if length >= TWO_PI:
                return cls(circle, ((0.0, TWO_PI),))
            s = start % TWO_PI
            e = s + length
            if e > TWO_PI:
                pieces += [(s, TWO_PI), (0.0, e - TWO_PI)]
            else:
                pieces.append((s, e))
        pieces.sort()
        merged: List[List[float]] = []
        for s, e in pieces:
            if merged and s <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], e)
            else:
                merged.append([s, e])
        return cls(circle, tuple((s, e) for s, e in merged if e > s))

    @property
    def measure(self) -> float:
        return sum(e - s for s, e in self.arcs)

    @property
    def is_full(self) -> bool:
        return self.arcs == ((0.0, TWO_PI),)

    def contains(self, theta: float) -> bool:
        theta %= TWO_PI
        return any(s <= theta < e for s, e in self.arcs)

    def runs(self) -> List[Tuple[float, float]]:
        """Maximal arcs with the split at the 0 / 2*pi seam undone (``end`` may exceed 2*pi)."""
        runs = [list(a) for a in self.arcs]
        if len(runs) > 1 and runs[0][0] == 0.0 and runs[-1][1] == TWO_PI:
            first = runs.pop(0)
            runs[-1][1] = TWO_PI + first[1]
        return [(s, e) for s, e in runs]

    def boundaries(self) -> List[float]:
        """Angles in [0, 2*pi) where the set starts or stops."""
        if self.is_full:
            return []
        return sorted(x % TWO_PI for run in self.runs() for x in run)

    def sample(self, n: int) -> List[float]:
        """``n`` angles equally spaced in angle over the set, sorted increasingly.

        Sample k sits at fraction ``(k + 1/2) / n`` of the total measure, so
        no sample falls on an arc end.
        """
        runs = self.runs()
        total = sum(e - s for s, e in runs)
        out = []
        for k in range(n):
            target = (k + 0.5) * total / n
            for s, e in runs:
                if target < e - s:
                    out.append((s + target) % TWO_PI)
                    break
                target -= e - s
            else:
                out.append(runs[-1][1] % TWO_PI)
        return sorted(out)


def is_fertile(C: Circle, e_prime: Circle, theta: float) -> bool:
    """Does the tangent to ``C`` at angle ``theta`` cut ``e_prime`` in two points?"""
    return len(line_circle_intersection(tangent_at(C.point_at(theta), C), e_prime)) == 2


def fertile_arcs(C: Circle, E: Circle) -> ArcSet:
    """Seeds on ``C`` from which :func:`construct_triangle` succeeds.

    All of ``C`` in the acute case. In the obtuse case the arcs are bounded by
    the tangency points on ``C`` of the common tangents of ``C`` and ``E'``.
    """
    verdict = _require(C, E, Kind.ACUTE, Kind.OBTUSE)
    if verdict.kind is Kind.ACUTE:
        return ArcSet(C, ((0.0, TWO_PI),))
    e_prime = invert_circle(E, C)
    cuts = sorted({C.angle_of(t_on_c) for _, t_on_c, _ in common_tangents(C, e_prime)})
    if not cuts:
        return ArcSet(C, ((0.0, TWO_PI),)) if is_fertile(C, e_prime, 0.0) else ArcSet(C, ())
    intervals = []
    for i, start in enumerate(cuts):
        end = cuts[i + 1] if i + 1 < len(cuts) else cuts[0] + TWO_PI
        if is_fertile(C, e_prime, (start + end) / 2):
            intervals.append((start, end))
    return ArcSet.from_intervals(C, intervals)


def lens_arc(C: Circle, E: Circle) -> Tuple[Point, Point, ArcSet]:
    """Intersection points P1, P2 of ``C`` and ``E`` and the arc of ``C`` between them inside ``E``."""
    pts = circle_circle_intersection(C, E)
    if len(pts) != 2:
        raise InvalidPairError("circumcircle and Euler circle are not secant")
    p1, p2 = pts
    a1, a2 = C.angle_of(p1), C.angle_of(p2)
    if a2 < a1:
        a2 += TWO_PI
    mid = C.point_at((a1 + a2) / 2)
    if E.residual(mid) < 0:
        return p1, p2, ArcSet.from_intervals(C, [(a1, a2)])
    return p1, p2, ArcSet.from_intervals(C, [(a2, a1 + TWO_PI)])


def family_sweep(C: Circle, E: Circle, n: int) -> List[Triangle]:
    """``n`` triangles seeded at angles equally spaced over the fertile arcs."""
    if n < 1:
        raise ValueError("n must be at least 1")
    arcs = fertile_arcs(C, E)
    return [construct_at_angle(C, E, theta) for theta in arcs.sample(n)]


# ---------------------------------------------------------------------------
# right-angle case


def right_angle_family(C: Circle, E: Circle, seed_angle: float) -> Triangle:
    """Right triangle with its right angle at the contact point of ``E`` and ``C``.

    The hypotenuse is the diameter of ``C`` through the point at ``seed_angle``.
    """
    verdict = check_pair(C, E)
    if verdict.kind is not Kind.RIGHT:
        on = E.center.distance(C.center)
        if verdict.reason is verdicts.Reason.TOO_FAR_APART and abs(on - 1.5 * C.radius) <= EPS * C.radius:
            raise ExternalTangencyError("externally tangent circles admit no triangle")
        raise NotRightPairError(f"pair is {verdict}, not Right")
    a = right_tangency_point(C, E)
    s = C.point_at(seed_angle)
    tol = tolerance(C.radius, *C.center)
    if s.distance(a) <= tol or (C.center * 2 - s).distance(a) <= tol:
        raise DegenerateSeedError("the diameter through the seed passes through the contact point")
    try:
        return Triangle(a, s, C.center * 2 - s)
    except CollinearVerticesError as exc:
        raise DegenerateSeedError("the diameter through the seed passes through the contact point") from exc
