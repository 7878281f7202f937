"""Acceptance criteria, one test each.

Every test prints a single ``[PASS]`` / ``[FAIL]`` line with its measured
worst case and runtime, then asserts. Run with ``pytest tests/test_acceptance.py -v``.
"""
import math
import time

import numpy as np
import pytest

from conftest import euler_at
from oracles import (
    circle_through,
    circumcenter_bisectors,
    implicit_double_root_residual,
    orthocenter_altitudes,
    random_triangles,
)
from scenes import SCENES, argv_for
from eulerporism.classification import Kind
from eulerporism.cli import main
from eulerporism.errors import ExternalTangencyError, NoTriangleError
from eulerporism.geometry import ORIGIN, Circle, Line, Point, invert_generalized_circle, invert_point, tolerance
from eulerporism.iconic import (
    CentralConic,
    ConicKind,
    dual_of_iconic,
    iconic_of_triangle,
    is_tangent_line,
    tangency_residual,
)
from eulerporism.porism import (
    construct_at_angle,
    euler_prime,
    family_sweep,
    fertile_arcs,
    lens_arc,
    make_poristic_pair,
    right_angle_family,
)
from eulerporism.scene import Scene, parse_scene, serialize_scene
from eulerporism.triangle import (
    circumcircle,
    classify_triangle,
    midpoint_triangle,
    nine_point_circle,
    orthocenter,
    tangential_triangle,
    triangle_centers,
)

TOL = 1e-9
D_GRID = [round(0.05 * k, 2) for k in range(30) if k != 10]
SEEDS = 360


@pytest.fixture
def announce(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        assert ok, detail

    return emit


def _triangles(seed, n=1000):
    return random_triangles(np.random.default_rng(seed), n)


def _circle_gap(g, h):
    return max(g.center.distance(h.center), abs(g.radius - h.radius))


def test_criterion_1_nine_point_identities(announce):
    tris = _triangles(1)
    # independent references, computed before the clock starts
    refs = []
    for t in tris:
        O = circumcenter_bisectors(*t.vertices)
        H = orthocenter_altitudes(*t.vertices)
        refs.append((O.distance(t.a), (O + H) / 2, circle_through(*t.midpoints())))
    start = time.perf_counter()
    worst_radius = worst_center = worst_agree = 0.0
    for t, (R_ref, N_ref, (mid_center, mid_radius)) in zip(tris, refs):
        centers = triangle_centers(t)
        R = centers.circumradius
        E = nine_point_circle(t)
        via_mid = circumcircle(midpoint_triangle(t))
        N = (centers.circumcenter + centers.orthocenter) / 2
        worst_radius = max(worst_radius, abs(E.radius - R_ref / 2) / (R_ref / 2))
        worst_center = max(worst_center, E.center.distance(N_ref) / R_ref)
        worst_agree = max(
            worst_agree,
            _circle_gap(via_mid, E) / R,
            E.center.distance(N) / R,
            max(mid_center.distance(E.center), abs(mid_radius - R / 2)) / R,
        )
    elapsed = time.perf_counter() - start
    ok = max(worst_radius, worst_center, worst_agree) <= TOL and elapsed < 1.0
    announce(
        1,
        ok,
        f"radius rel {worst_radius:.1e}, center/R {worst_center:.1e}, "
        f"characterizations/R {worst_agree:.1e}, {elapsed:.2f}s",
    )


def test_criterion_2_tangential_triangle(announce):
    tris = [t for t in _triangles(2, 1100) if classify_triangle(t).kind is not Kind.RIGHT][:1000]
    start = time.perf_counter()
    worst_vertex = worst_circle = 0.0
    for t in tris:
        C = circumcircle(t)
        tt = tangential_triangle(t)
        for v, m in zip(tt.vertices, t.midpoints()):
            inv = invert_point(m, C)
            worst_vertex = max(worst_vertex, v.distance(inv) / tolerance(abs(inv - C.center)) * TOL)
        image = invert_generalized_circle(nine_point_circle(t), C)
        cc = circumcircle(tt)
        worst_circle = max(worst_circle, _circle_gap(cc, image) / tolerance(image.radius) * TOL)
    elapsed = time.perf_counter() - start
    ok = len(tris) == 1000 and max(worst_vertex, worst_circle) <= TOL and elapsed < 1.0
    announce(2, ok, f"vertex rel {worst_vertex:.1e}, circle rel {worst_circle:.1e}, {elapsed:.2f}s")


def test_criterion_3_euler_chapple_grid(announce, unit):
    start = time.perf_counter()
    worst = 0.0
    for d in D_GRID:
        pair = make_poristic_pair(unit, euler_at(d))
        ep = euler_prime(unit, euler_at(d))
        R1, d1, r1 = ep.radius, ep.center.distance(ORIGIN), unit.radius
        if d < 0.5:
            residual = abs((R1 - r1) ** 2 - (d1**2 + r1**2))
        else:
            residual = abs((R1 + r1) ** 2 - (d1**2 + r1**2))
        worst = max(worst, residual, pair.chapple_residual)
    elapsed = time.perf_counter() - start
    announce(3, worst <= TOL and elapsed < 0.1, f"worst residual {worst:.1e} over {len(D_GRID)} d, {elapsed:.3f}s")


@pytest.fixture(scope="module")
def closure():
    """Criterion 4 sweep, shared with criterion 5: per d, arcs and the built triangles."""
    C = Circle(ORIGIN, 1.0)
    start = time.perf_counter()
    data = {}
    for d in D_GRID:
        E = euler_at(d)
        arcs = fertile_arcs(C, E)
        built, sterile = [], []
        for k in range(SEEDS):
            theta = 2 * math.pi * k / SEEDS
            try:
                built.append((theta, construct_at_angle(C, E, theta)))
            except NoTriangleError:
                sterile.append(theta)
        data[d] = (E, arcs, built, sterile)
    return C, data, time.perf_counter() - start


def test_criterion_4_poncelet_closure(announce, closure):
    C, data, elapsed = closure
    worst = 0.0
    misplaced = 0
    total = 0
    for d, (E, arcs, built, sterile) in data.items():
        for theta, t in built:
            worst = max(worst, _circle_gap(circumcircle(t), C), _circle_gap(nine_point_circle(t), E))
            misplaced += not arcs.contains(theta)
            total += 1
        misplaced += sum(arcs.contains(theta) for theta in sterile)
    ok = worst <= TOL and misplaced == 0 and elapsed < 10.0
    announce(4, ok, f"{total} triangles, worst residual {worst:.1e}, arc mismatches {misplaced}, {elapsed:.2f}s")


def test_criterion_5_trichotomy(announce, closure):
    C, data, _ = closure
    exceptions = 0
    checked = 0
    for d, (E, arcs, built, _) in data.items():
        lens = lens_arc(C, E)[2] if d > 0.5 else None
        for _, t in built:
            checked += 1
            kind = classify_triangle(t).kind
            if kind is not (Kind.ACUTE if d < 0.5 else Kind.OBTUSE):
                exceptions += 1
                continue
            if lens is not None:
                inside = [v for v in t.vertices if E.residual(v) < 0]
                on_arc = [v for v in t.vertices if lens.contains(C.angle_of(v))]
                exceptions += not (len(inside) == 1 and inside == on_arc)
    announce(5, exceptions == 0, f"{checked} triangles, {exceptions} exceptions")


def test_criterion_6_right_case(announce, unit):
    E = euler_at(0.5)
    worst = 0.0
    bad = 0
    for k in range(100):
        angle = 2 * math.pi * (k + 0.5) / 100
        t = right_angle_family(unit, E, angle)
        worst = max(worst, t.a.distance(Point(1.0, 0.0)), (t.b + t.c).distance(ORIGIN) / 2)
        worst = max(worst, _circle_gap(nine_point_circle(t), E))
        bad += classify_triangle(t).kind is not Kind.RIGHT
    try:
        right_angle_family(unit, euler_at(1.5), 1.0)
        rejected = False
    except ExternalTangencyError:
        rejected = True
    ok = worst <= TOL and bad == 0 and rejected
    announce(6, ok, f"100 seeds, worst residual {worst:.1e}, non-right {bad}, external tangency rejected {rejected}")


def test_criterion_7_iconic_suite(announce):
    rng = np.random.default_rng(7)
    tris = [t for t in random_triangles(rng, 1100) if classify_triangle(t).kind is not Kind.RIGHT][:1000]
    start = time.perf_counter()
    worst_side = worst_dual = worst_spread = 0.0
    kind_mismatch = 0
    for t in tris:
        conic = iconic_of_triangle(t)
        scale = max(1.0, conic.a, abs(conic.center))
        for side in t.side_lines():
            worst_side = max(worst_side, tangency_residual(side, conic) / scale)
        acute = classify_triangle(t).kind is Kind.ACUTE
        kind_mismatch += acute != (conic.kind is ConicKind.ELLIPSE)
        C = circumcircle(t)
        ep = euler_prime(C, nine_point_circle(t))
        worst_dual = max(worst_dual, _circle_gap(dual_of_iconic(conic, C), ep) / tolerance(ep.radius, abs(ep.center)) * TOL)
    for _ in range(20):
        R = float(rng.uniform(0.5, 3.0))
        O = Point(*map(float, rng.uniform(-3, 3, 2)))
        d = float(rng.uniform(0.0, 1.45))
        while abs(d - 0.5) < 0.01:
            d = float(rng.uniform(0.0, 1.45))
        C, E = Circle(O, R), euler_at(d, R, float(rng.uniform(0, 2 * math.pi)), O)
        conics = [iconic_of_triangle(t) for t in family_sweep(C, E, 50)]
        ref = conics[0]
        for conic in conics[1:]:
            spread = max(conic.center.distance(ref.center), abs(conic.a - ref.a), abs(conic.c - ref.c))
            if d > 0.01:
                spread = max(spread, conic.axis_dir.distance(ref.axis_dir))
            worst_spread = max(worst_spread, spread)
    elapsed = time.perf_counter() - start
    ok = max(worst_side, worst_dual, worst_spread) <= TOL and kind_mismatch == 0 and elapsed < 10.0
    announce(
        7,
        ok,
        f"side residual {worst_side:.1e}, kind mismatches {kind_mismatch}, "
        f"family spread {worst_spread:.1e}, dual rel {worst_dual:.1e}, {elapsed:.2f}s",
    )


def _random_conic(rng):
    a = float(rng.uniform(0.2, 5.0))
    ratio = float(rng.choice([rng.uniform(0.0, 0.9), rng.uniform(1.1, 3.0)]))
    phi = float(rng.uniform(0, 2 * math.pi))
    axis = Point(math.cos(phi), math.sin(phi))
    center = Point(*map(float, rng.uniform(-5, 5, 2)))
    return CentralConic(center, center + axis * (ratio * a), axis, a, ratio * a)


def test_criterion_8_oracle_equivalence(announce):
    rng = np.random.default_rng(8)
    disagreements = 0
    ratio_violations = 0
    compared = 0
    for i in range(10_000):
        conic = _random_conic(rng)
        foot = conic.auxiliary_circle.point_at(float(rng.uniform(0, 2 * math.pi)))
        if foot.distance(conic.focus) < 1e-6:
            foot = conic.auxiliary_circle.point_at(1.0)
        tangent = conic.tangent_through_pedal(foot)
        kind = i % 3
        if kind == 0:
            line = tangent
        elif kind == 1:
            line = tangent.shifted(float(10 ** rng.uniform(-6, -2)) * float(rng.choice([-1.0, 1.0])))
        else:
            phi = float(rng.uniform(0, 2 * math.pi))
            line = Line(math.cos(phi), math.sin(phi), float(rng.uniform(0, 10)))
        focal = tangency_residual(line, conic)
        algebraic = implicit_double_root_residual(line, conic)
        disagreements += is_tangent_line(line, conic) != (algebraic <= TOL * max(1.0, conic.a))
        if 1e-12 < focal < 1e-3 and 1e-12 < algebraic < 1e-3:
            compared += 1
            ratio_violations += not (0.1 <= focal / algebraic <= 10.0)
    tris = _triangles(88)
    worst_h = 0.0
    for t in tris:
        oracle = orthocenter_altitudes(*t.vertices)
        worst_h = max(worst_h, orthocenter(t).distance(oracle) / max(1.0, abs(oracle)))
    ok = disagreements == 0 and ratio_violations == 0 and worst_h <= TOL
    announce(
        8,
        ok,
        f"10000 line/conic pairs, verdict disagreements {disagreements}, "
        f"ratio>10 {ratio_violations} of {compared} small pairs; orthocenter rel {worst_h:.1e}",
    )


def test_criterion_9_cli_contract(announce, tmp_path, capsys):
    rng = np.random.default_rng(9)
    roundtrip_failures = 0
    for _ in range(100):
        R = float(rng.uniform(0.1, 10))
        O = Point(*map(float, rng.uniform(-10, 10, 2)))
        scene = Scene(Circle(O, R), euler_at(float(rng.uniform(0, 1.4)), R, float(rng.uniform(0, 6.3)), O))
        text = serialize_scene(scene)
        roundtrip_failures += parse_scene(text) != scene or serialize_scene(parse_scene(text)) != text
    svgs = []
    for run in range(2):
        out = tmp_path / f"render{run}.svg"
        argv = argv_for(tmp_path, "obtuse")
        main(["render", "--scene", argv[2], "--out", str(out), "--n", "3"])
        svgs.append(out.read_bytes())
    deterministic = svgs[0] == svgs[1] and len(svgs[0]) > 0
    wrong_codes = []
    for name, (_, _, expected) in sorted(SCENES.items()):
        code = main(argv_for(tmp_path, name))
        if code != expected:
            wrong_codes.append(f"{name}={code}")
    capsys.readouterr()
    ok = roundtrip_failures == 0 and deterministic and not wrong_codes
    announce(
        9,
        ok,
        f"round-trip failures {roundtrip_failures}, render deterministic {deterministic}, "
        f"{len(SCENES)} fixture scenes, wrong exit codes {wrong_codes or 'none'}",
    )
