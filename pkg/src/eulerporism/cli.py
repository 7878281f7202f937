"""Command-line front end.

Exit codes: 0 success, 1 malformed input or I/O failure, 2 the circles are
not a circumcircle/Euler-circle pair usable by the command, 3 the seed is
sterile (no triangle through it).
"""

from __future__ import annotations

import argparse
import math
import sys
from typing import List, Optional, Sequence

from .classification import Kind
from .errors import (
    DegenerateSeedError,
    GeometryError,
    InvalidPairError,
    NoTriangleError,
    NotAcuteError,
    RightTriangleError,
    SeedNotOnCircleError,
)
from .geometry import Circle
from .iconic import dual_of_iconic, iconic_of_triangle, inellipse_geometry_check, tangency_residual
from .porism import (
    check_pair,
    construct_at_angle,
    euler_prime,
    family_sweep,
    fertile_arcs,
    lens_arc,
    make_poristic_pair,
    right_angle_family,
    right_tangency_point,
    roundtrip_residuals,
)
from .scene import Report, Scene, SceneError, dumps, load_report, load_scene
from .svg import render_svg
from .triangle import Triangle

EXIT_OK, EXIT_INPUT, EXIT_INCOMPATIBLE, EXIT_STERILE = 0, 1, 2, 3

ARC_SAMPLES = 360


class CommandFailed(Exception):
    """Carries a partial report and the exit code it maps to."""

    def __init__(self, code: int, message: str, report: Optional[Report] = None):
        super().__init__(message)
        self.code = code
        self.report = report


def _max_residuals(C: Circle, E: Circle, triangles: Sequence[Triangle]) -> dict:
    out = {"circumcenter": 0.0, "circumradius": 0.0, "nine_point_center": 0.0, "nine_point_radius": 0.0}
    for t in triangles:
        for k, v in roundtrip_residuals(C, E, t).items():
            out[k] = max(out[k], v)
    return out


def _format_arcs(report_arcs) -> str:
    if report_arcs is None or not report_arcs.arcs:
        return "none"
    return ", ".join(f"[{s:.6f}, {e:.6f})" for s, e in report_arcs.arcs)


def _incompatible(command: str, scene: Scene) -> CommandFailed:
    verdict = check_pair(scene.circumcircle, scene.euler)
    return CommandFailed(
        EXIT_INCOMPATIBLE,
        f"circles are not a circumcircle/Euler circle pair: {verdict}",
        Report(command, verdict, status="Incompatible"),
    )


def _base_report(command: str, scene: Scene) -> Report:
    C, E = scene.circumcircle, scene.euler
    verdict = check_pair(C, E)
    if not verdict.compatible:
        raise _incompatible(command, scene)
    report = Report(command, verdict, euler_prime=euler_prime(C, E))
    if verdict.kind is Kind.OBTUSE:
        p1, p2, _ = lens_arc(C, E)
        report.lens_points = [p1, p2]
    return report


def cmd_check(scene: Scene) -> Report:
    C, E = scene.circumcircle, scene.euler
    verdict = check_pair(C, E)
    residuals = {"radius_defect": abs(E.radius - C.radius / 2) / C.radius}
    report = Report("check", verdict, residuals=residuals)
    if not verdict.compatible:
        report.status = "Incompatible"
        raise CommandFailed(EXIT_INCOMPATIBLE, f"not a circumcircle/Euler circle pair: {verdict}", report)
    report.euler_prime = euler_prime(C, E)
    if verdict.kind is Kind.RIGHT:
        report.residuals["tangency"] = abs(E.center.distance(C.center) - C.radius / 2) / C.radius
    else:
        report.residuals["chapple"] = make_poristic_pair(C, E).chapple_residual
    return report


def _right_family_angles(C: Circle, E: Circle, n: int) -> List[float]:
    base = C.angle_of(right_tangency_point(C, E))
    # a diameter and its reverse give the same triangle, so half a turn suffices
    return [base + (k + 0.5) * math.pi / n for k in range(n)]


def cmd_construct(scene: Scene, seed_angle: Optional[float]) -> Report:
    C, E = scene.circumcircle, scene.euler
    report = _base_report("construct", scene)
    if seed_angle is not None:
        angles = [seed_angle]
    elif scene.seeds:
        for p in scene.seeds:
            if not C.contains(p):
                raise SeedNotOnCircleError(f"scene seed {p} is not on the circumcircle")
        angles = [C.angle_of(p) for p in scene.seeds]
    else:
        raise SceneError("construct needs --seed-angle or scene seeds")
    report.seed_angles = angles
    if report.verdict.kind is Kind.RIGHT:
        try:
            report.triangles = [right_angle_family(C, E, a) for a in angles]
        except DegenerateSeedError as exc:
            report.status = "DegenerateSeed"
            raise CommandFailed(EXIT_STERILE, str(exc), report) from exc
    else:
        report.arcs = fertile_arcs(C, E)
        try:
            report.triangles = [construct_at_angle(C, E, a) for a in angles]
        except NoTriangleError as exc:
            report.status = "NoTriangle"
            report.message = f"{exc}; fertile arcs: {_format_arcs(report.arcs)}"
            raise CommandFailed(EXIT_STERILE, report.message, report) from exc
    report.residuals = _max_residuals(C, E, report.triangles)
    return report


def cmd_family(scene: Scene, n: int) -> Report:
    C, E = scene.circumcircle, scene.euler
    if n < 1:
        raise SceneError("--n must be at least 1")
    report = _base_report("family", scene)
    if report.verdict.kind is Kind.RIGHT:
        report.seed_angles = _right_family_angles(C, E, n)
        report.triangles = [right_angle_family(C, E, a) for a in report.seed_angles]
    else:
        report.arcs = fertile_arcs(C, E)
        report.seed_angles = report.arcs.sample(n)
        report.triangles = family_sweep(C, E, n)
    report.residuals = _max_residuals(C, E, report.triangles)
    return report


def cmd_arcs(scene: Scene) -> Report:
    C, E = scene.circumcircle, scene.euler
    report = _base_report("arcs", scene)
    report.arcs = fertile_arcs(C, E)
    mismatches = 0
    for k in range(ARC_SAMPLES):
        theta = 2 * math.pi * k / ARC_SAMPLES
        try:
            construct_at_angle(C, E, theta)
            built = True
        except NoTriangleError:
            built = False
        mismatches += built != report.arcs.contains(theta)
    report.residuals = {"sampling_mismatches": float(mismatches), "fertile_measure": report.arcs.measure}
    return report


def cmd_iconic(scene: Scene) -> Report:
    C, E = scene.circumcircle, scene.euler
    report = _base_report("iconic", scene)
    if report.verdict.kind is Kind.RIGHT:
        raise RightTriangleError("right triangles have no central i-conic")
    t = scene.triangle if scene.triangle is not None else family_sweep(C, E, 1)[0]
    conic = iconic_of_triangle(t)
    report.triangles = [t]
    report.conic = conic
    dual = dual_of_iconic(conic, C)
    ep = report.euler_prime
    report.residuals = {
        "side_tangency": max(tangency_residual(side, conic) for side in t.side_lines()),
        "dual_vs_euler_prime": max(dual.center.distance(ep.center), abs(dual.radius - ep.radius)),
    }
    try:
        check = inellipse_geometry_check(t)
    except NotAcuteError:
        pass
    else:
        report.residuals["center_offset"] = check.center_offset
        report.residuals["vertex_residual"] = max(check.vertex_residuals)
        report.residuals["axis_ratio_error"] = abs(check.axis_ratio - 1.0)
    return report


def overview_report(scene: Scene, n: int = 1) -> Report:
    """Everything drawable for a scene: E', fertile arcs, triangles, i-conic, lens points."""
    C, E = scene.circumcircle, scene.euler
    verdict = check_pair(C, E)
    if not verdict.compatible:
        return Report("render", verdict, status="Incompatible")
    report = _base_report("render", scene)
    if scene.triangle is not None:
        report.triangles = [scene.triangle]
    elif verdict.kind is Kind.RIGHT:
        report.triangles = [right_angle_family(C, E, a) for a in _right_family_angles(C, E, n)]
    else:
        report.triangles = family_sweep(C, E, n)
    if verdict.kind is not Kind.RIGHT:
        report.arcs = fertile_arcs(C, E)
        report.conic = iconic_of_triangle(report.triangles[0])
    return report


def cmd_render(scene: Scene, report: Report, out_path: str) -> str:
    svg = render_svg(scene, report)
    try:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(svg)
    except OSError as exc:
        raise SceneError(f"cannot write {out_path}: {exc}") from exc
    return svg


# ---------------------------------------------------------------------------


def _summary(report: Report) -> str:
    lines = [f"{report.command}: {report.verdict} ({report.status})"]
    if report.message:
        lines.append(report.message)
    for name, value in report.residuals.items():
        lines.append(f"  {name} = {value:.3e}")
    for i, t in enumerate(report.triangles):
        verts = "  ".join(f"({v.x:.9f}, {v.y:.9f})" for v in t.vertices)
        lines.append(f"  triangle {i}: {verts}")
    if report.arcs is not None:
        lines.append(f"  fertile arcs: {_format_arcs(report.arcs)}")
    if report.conic is not None:
        c = report.conic
        lines.append(
            f"  i-conic: {c.kind.value} center ({c.center.x:.9f}, {c.center.y:.9f}) a={c.a:.9f} c={c.c:.9f}"
        )
    return "\n".join(lines)


def _emit(report: Report, args) -> None:
    if args.json:
        sys.stdout.write(dumps(report.to_json()))
    else:
        print(_summary(report))
    out = getattr(args, "out", None)
    if out and args.command != "render":
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(dumps(report.to_json()))
        except OSError as exc:
            raise SceneError(f"cannot write {out}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerporism",
        description="Triangles with a prescribed circumcircle and Euler circle.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--scene", required=True, help="scene JSON file")
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--out", help="write the report JSON (or the SVG for render) here")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("check", parents=[common], help="classify the circle pair")
    p = sub.add_parser("construct", parents=[common], help="build the triangle through one seed")
    p.add_argument("--seed-angle", type=float, help="seed position on the circumcircle, radians")
    p = sub.add_parser("family", parents=[common], help="sweep triangles over the fertile arcs")
    p.add_argument("--n", type=int, default=8, help="number of triangles (default 8)")
    sub.add_parser("arcs", parents=[common], help="fertile arcs of the circumcircle")
    sub.add_parser("iconic", parents=[common], help="inscribed conic focused at the circumcenter")
    p = sub.add_parser("render", parents=[common], help="draw the scene as SVG")
    p.add_argument("--report", help="report JSON from another command (default: computed)")
    p.add_argument("--n", type=int, default=1, help="triangles to draw when the scene has none")
    return parser


def run(args) -> int:
    scene = load_scene(args.scene)
    if args.command == "check":
        report = cmd_check(scene)
    elif args.command == "construct":
        report = cmd_construct(scene, args.seed_angle)
    elif args.command == "family":
        report = cmd_family(scene, args.n)
    elif args.command == "arcs":
        report = cmd_arcs(scene)
    elif args.command == "iconic":
        report = cmd_iconic(scene)
    else:
        if not args.out:
            raise SceneError("render needs --out")
        report = load_report(args.report) if args.report else overview_report(scene, args.n)
        cmd_render(scene, report, args.out)
        if args.json:
            sys.stdout.write(dumps(report.to_json()))
        return EXIT_OK
    _emit(report, args)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return run(args)
    except CommandFailed as exc:
        if exc.report is not None:
            if not exc.report.message:
                exc.report.message = str(exc)
            if args.json:
                sys.stdout.write(dumps(exc.report.to_json()))
        print(f"eulerporism {args.command}: {exc}", file=sys.stderr)
        return exc.code
    except (InvalidPairError, RightTriangleError) as exc:
        print(f"eulerporism {args.command}: {exc}", file=sys.stderr)
        return EXIT_INCOMPATIBLE
    except (NoTriangleError, DegenerateSeedError) as exc:
        print(f"eulerporism {args.command}: {exc}", file=sys.stderr)
        return EXIT_STERILE
    except (SceneError, GeometryError, ValueError, OSError) as exc:
        print(f"eulerporism {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - the exit-code contract is total
        print(f"eulerporism {args.command}: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
