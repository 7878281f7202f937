"""JSON scenes and reports.

Circles are ``{"cx", "cy", "r"}``, points ``{"x", "y"}``, a triangle is a
list of three points and angles are radians. Floats are written with
Python's shortest round-trip repr, so ``parse(serialize(scene)) == scene``
bit for bit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .classification import PairClassification
from .geometry import Circle, Line, Point, GeneralizedCircle
from .iconic import CentralConic
from .porism import ArcSet
from .triangle import Triangle, circumcircle, nine_point_circle

IO_TOLERANCE = 1e-6


class SceneError(ValueError):
    """Malformed or inconsistent scene/report document."""


def _num(obj: Dict[str, Any], key: str) -> float:
    try:
        value = obj[key]
    except (KeyError, TypeError):
        raise SceneError(f"missing numeric field {key!r}") from None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise SceneError(f"field {key!r} must be a number, got {value!r}")
    if not math.isfinite(value):
        raise SceneError(f"field {key!r} is not finite")
    return float(value)


def point_to_json(p: Point) -> dict:
    return {"x": p.x, "y": p.y}


def point_from_json(obj: Any) -> Point:
    return Point(_num(obj, "x"), _num(obj, "y"))


def circle_to_json(c: Circle) -> dict:
    return {"cx": c.center.x, "cy": c.center.y, "r": c.radius}


def circle_from_json(obj: Any) -> Circle:
    r = _num(obj, "r")
    if r <= 0:
        raise SceneError(f"circle radius must be positive, got {r}")
    return Circle(Point(_num(obj, "cx"), _num(obj, "cy")), r)


def line_to_json(line: Line) -> dict:
    return {"nx": line.nx, "ny": line.ny, "offset": line.offset}


def line_from_json(obj: Any) -> Line:
    return Line(_num(obj, "nx"), _num(obj, "ny"), _num(obj, "offset"))


def generalized_to_json(g: GeneralizedCircle) -> dict:
    if isinstance(g, Circle):
        return {"circle": circle_to_json(g)}
    return {"line": line_to_json(g)}


def generalized_from_json(obj: Any) -> GeneralizedCircle:
    if isinstance(obj, dict) and "circle" in obj:
        return circle_from_json(obj["circle"])
    if isinstance(obj, dict) and "line" in obj:
        return line_from_json(obj["line"])
    raise SceneError("generalized circle needs a 'circle' or 'line' member")


def triangle_to_json(t: Triangle) -> list:
    return [point_to_json(v) for v in t.vertices]


def triangle_from_json(obj: Any) -> Triangle:
    if not isinstance(obj, list) or len(obj) != 3:
        raise SceneError("a triangle is a list of exactly three points")
    try:
        return Triangle(*(point_from_json(p) for p in obj))
    except ValueError as exc:
        raise SceneError(str(exc)) from exc


def conic_to_json(conic: CentralConic) -> dict:
    return {
        "kind": conic.kind.value,
        "center": point_to_json(conic.center),
        "focus": point_to_json(conic.focus),
        "axis_dir": point_to_json(conic.axis_dir),
        "a": conic.a,
        "c": conic.c,
        "b": conic.b,
    }


def conic_from_json(obj: Any) -> CentralConic:
    try:
        return CentralConic(
            point_from_json(obj["center"]),
            point_from_json(obj["focus"]),
            point_from_json(obj["axis_dir"]),
            _num(obj, "a"),
            _num(obj, "c"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SceneError(f"bad conic: {exc}") from exc


def arcs_to_json(arcs: ArcSet) -> dict:
    return {"circle": circle_to_json(arcs.circle), "arcs": [[s, e] for s, e in arcs.arcs]}


def arcs_from_json(obj: Any) -> ArcSet:
    try:
        return ArcSet(circle_from_json(obj["circle"]), tuple((float(s), float(e)) for s, e in obj["arcs"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise SceneError(f"bad arc set: {exc}") from exc


@dataclass(frozen=True)
class Scene:
    circumcircle: Circle
    euler_circle: Optional[Circle] = None
    triangle: Optional[Triangle] = None
    seeds: Tuple[Point, ...] = ()

    def __post_init__(self):
        if self.euler_circle is None and self.triangle is None:
            raise SceneError("a scene needs an euler_circle, a triangle, or both")
        if self.triangle is not None:
            tol = IO_TOLERANCE * max(1.0, self.circumcircle.radius)
            if not circumcircle(self.triangle).isclose(self.circumcircle, tol):
                raise SceneError("triangle does not have the given circumcircle")
            if self.euler_circle is not None and not nine_point_circle(self.triangle).isclose(self.euler_circle, tol):
                raise SceneError("triangle does not have the given euler_circle")

    @property
    def euler(self) -> Circle:
        """The Euler circle, derived from the triangle when not given."""
        if self.euler_circle is not None:
            return self.euler_circle
        return nine_point_circle(self.triangle)

    def to_json(self) -> dict:
        out: Dict[str, Any] = {"circumcircle": circle_to_json(self.circumcircle)}
        if self.euler_circle is not None:
            out["euler_circle"] = circle_to_json(self.euler_circle)
        if self.triangle is not None:
            out["triangle"] = triangle_to_json(self.triangle)
        if self.seeds:
            out["seeds"] = [point_to_json(p) for p in self.seeds]
        return out

    @classmethod
    def from_json(cls, obj: Any) -> Scene:
        if not isinstance(obj, dict):
            raise SceneError("scene must be a JSON object")
        if "circumcircle" not in obj:
            raise SceneError("scene needs a circumcircle")
        seeds = obj.get("seeds", [])
        if not isinstance(seeds, list):
            raise SceneError("seeds must be a list of points")
        return cls(
            circumcircle=circle_from_json(obj["circumcircle"]),
            euler_circle=circle_from_json(obj["euler_circle"]) if "euler_circle" in obj else None,
            triangle=triangle_from_json(obj["triangle"]) if "triangle" in obj else None,
            seeds=tuple(point_from_json(p) for p in seeds),
        )


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def serialize_scene(scene: Scene) -> str:
    return dumps(scene.to_json())


def parse_scene(text: str) -> Scene:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"invalid JSON: {exc}") from exc
    return Scene.from_json(obj)


def load_scene(path: str) -> Scene:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SceneError(f"cannot read scene {path}: {exc}") from exc
    return parse_scene(text)


@dataclass
class Report:
    command: str
    verdict: PairClassification
    status: str = "ok"
    message: str = ""
    residuals: Dict[str, float] = field(default_factory=dict)
    triangles: List[Triangle] = field(default_factory=list)
    seed_angles: List[float] = field(default_factory=list)
    arcs: Optional[ArcSet] = None
    conic: Optional[CentralConic] = None
    euler_prime: Optional[GeneralizedCircle] = None
    lens_points: List[Point] = field(default_factory=list)

    def __post_init__(self):
        for name, value in self.residuals.items():
            if not math.isfinite(value):
                raise ValueError(f"residual {name} is not finite: {value}")

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "verdict": str(self.verdict),
            "status": self.status,
            "message": self.message,
            "residuals": dict(self.residuals),
            "triangles": [triangle_to_json(t) for t in self.triangles],
            "seed_angles": list(self.seed_angles),
            "arcs": arcs_to_json(self.arcs) if self.arcs is not None else None,
            "conic": conic_to_json(self.conic) if self.conic is not None else None,
            "euler_prime": generalized_to_json(self.euler_prime) if self.euler_prime is not None else None,
            "lens_points": [point_to_json(p) for p in self.lens_points],
        }

    @classmethod
    def from_json(cls, obj: Any) -> Report:
        if not isinstance(obj, dict):
            raise SceneError("report must be a JSON object")
        try:
            return cls(
                command=str(obj["command"]),
                verdict=PairClassification.parse(obj["verdict"]),
                status=str(obj.get("status", "ok")),
                message=str(obj.get("message", "")),
                residuals={k: float(v) for k, v in obj.get("residuals", {}).items()},
                triangles=[triangle_from_json(t) for t in obj.get("triangles", [])],
                seed_angles=[float(a) for a in obj.get("seed_angles", [])],
                arcs=arcs_from_json(obj["arcs"]) if obj.get("arcs") else None,
                conic=conic_from_json(obj["conic"]) if obj.get("conic") else None,
                euler_prime=generalized_from_json(obj["euler_prime"]) if obj.get("euler_prime") else None,
                lens_points=[point_from_json(p) for p in obj.get("lens_points", [])],
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, SceneError):
                raise
            raise SceneError(f"bad report: {exc}") from exc


def load_report(path: str) -> Report:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise SceneError(f"cannot read report {path}: {exc}") from exc
    return Report.from_json(obj)
