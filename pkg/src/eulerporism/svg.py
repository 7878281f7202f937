"""SVG rendering of a scene and its report.

The drawing uses mathematical orientation (y up) through one top-level
``scale(1,-1)`` group; labels are flipped back locally. Numbers are printed
with a fixed format so equal inputs give byte-identical files.
"""

from __future__ import annotations

import math
from typing import Iterable, List, Tuple
from xml.sax.saxutils import escape

from .geometry import Circle, Line, Point
from .scene import Report, Scene

CONIC_SAMPLES = 512

STYLE = {
    "circumcircle": 'fill="none" stroke="#1f3a93" stroke-width="{w}"',
    "euler": 'fill="none" stroke="#7b1e3a" stroke-width="{w}"',
    "euler_prime": 'fill="none" stroke="#7b1e3a" stroke-width="{w}" stroke-dasharray="{dash}"',
    "triangle": 'fill="none" stroke="#222222" stroke-width="{w}"',
    "conic": 'fill="none" stroke="#e67e22" stroke-width="{w}"',
    "arc": 'fill="none" stroke="#27ae60" stroke-opacity="0.6" stroke-width="{w3}"',
    "marker": 'fill="none" stroke="#000000" stroke-width="{w}"',
}


def _f(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _bounds(circles: Iterable[Circle]) -> Tuple[float, float, float, float]:
    xs0, ys0, xs1, ys1 = [], [], [], []
    for c in circles:
        xs0.append(c.center.x - c.radius)
        xs1.append(c.center.x + c.radius)
        ys0.append(c.center.y - c.radius)
        ys1.append(c.center.y + c.radius)
    x0, y0, x1, y1 = min(xs0), min(ys0), max(xs1), max(ys1)
    pad = 0.1 * max(x1 - x0, y1 - y0)
    return x0 - pad, y0 - pad, x1 + pad, y1 + pad


def _circle(c: Circle, style: str) -> str:
    return f'<circle cx="{_f(c.center.x)}" cy="{_f(c.center.y)}" r="{_f(c.radius)}" {style}/>'


def _line(line: Line, box, style: str) -> str:
    # clip the infinite line to the diagonal of the view box
    x0, y0, x1, y1 = box
    half = math.hypot(x1 - x0, y1 - y0)
    mid = line.foot(Point((x0 + x1) / 2, (y0 + y1) / 2))
    p, q = mid + line.direction * half, mid - line.direction * half
    return f'<line x1="{_f(p.x)}" y1="{_f(p.y)}" x2="{_f(q.x)}" y2="{_f(q.y)}" {style}/>'


def _polyline(points: List[Point], style: str) -> str:
    coords = " ".join(f"{_f(p.x)},{_f(p.y)}" for p in points)
    return f'<polyline points="{coords}" {style}/>'


def _arc_path(circle: Circle, start: float, end: float, style: str) -> str:
    # full circles are drawn as two half arcs
    pieces = []
    steps = 1 if end - start < math.pi else 2
    angles = [start + (end - start) * k / steps for k in range(steps + 1)]
    p0 = circle.point_at(angles[0])
    d = [f"M {_f(p0.x)} {_f(p0.y)}"]
    r = _f(circle.radius)
    for a in angles[1:]:
        p = circle.point_at(a)
        d.append(f"A {r} {r} 0 0 1 {_f(p.x)} {_f(p.y)}")
    pieces.append(f'<path d="{" ".join(d)}" {style}/>')
    return "".join(pieces)


def _label(p: Point, text: str, size: float, style: str) -> List[str]:
    s = size
    cross = (
        f'<path d="M {_f(p.x - s)} {_f(p.y - s)} L {_f(p.x + s)} {_f(p.y + s)} '
        f'M {_f(p.x - s)} {_f(p.y + s)} L {_f(p.x + s)} {_f(p.y - s)}" {style}/>'
    )
    label = (
        f'<text transform="translate({_f(p.x + 1.5 * s)},{_f(p.y + 1.5 * s)}) scale(1,-1)" '
        f'font-family="sans-serif" font-size="{_f(4 * s)}">{escape(text)}</text>'
    )
    return [cross, label]


def render_svg(scene: Scene, report: Report, width: int = 800) -> str:
    C = scene.circumcircle
    E = scene.euler
    e_prime = report.euler_prime
    circles = [C, E] + ([e_prime] if isinstance(e_prime, Circle) else [])
    box = _bounds(circles)
    x0, y0, x1, y1 = box
    span = max(x1 - x0, y1 - y0)
    w = span / 400
    st = {k: v.format(w=_f(w), w3=_f(3 * w), dash=f"{_f(4 * w)} {_f(3 * w)}") for k, v in STYLE.items()}
    height = round(width * (y1 - y0) / (x1 - x0))

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="{_f(x0)} {_f(-y1)} {_f(x1 - x0)} {_f(y1 - y0)}">',
        f"<title>{escape(report.command)}: {escape(str(report.verdict))}</title>",
        '<g transform="scale(1,-1)">',
    ]

    def layer(name: str, items: List[str]) -> None:
        out.append(f'<g id="{name}">')
        out.extend(items)
        out.append("</g>")

    layer("circumcircle", [_circle(C, st["circumcircle"])])
    layer("euler-circle", [_circle(E, st["euler"])])
    if isinstance(e_prime, Circle):
        layer("euler-prime", [_circle(e_prime, st["euler_prime"])])
    elif isinstance(e_prime, Line):
        layer("euler-prime", [_line(e_prime, box, st["euler_prime"])])
    if report.arcs is not None:
        layer("fertile-arcs", [_arc_path(C, s, e, st["arc"]) for s, e in report.arcs.arcs])
    layer(
        "triangles",
        [
            '<polygon points="{}" {}/>'.format(" ".join(f"{_f(v.x)},{_f(v.y)}" for v in t.vertices), st["triangle"])
            for t in report.triangles
        ],
    )
    if report.conic is not None:
        reach = span
        layer("iconic", [_polyline(b, st["conic"]) for b in report.conic.sample(CONIC_SAMPLES, reach)])
    if report.lens_points:
        items: List[str] = []
        for i, p in enumerate(report.lens_points, start=1):
            items += _label(p, f"P{i}", span / 150, st["marker"])
        layer("intersections", items)
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
