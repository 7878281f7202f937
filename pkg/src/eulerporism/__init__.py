"""Triangles sharing a circumcircle and an Euler (nine-point) circle.

Inversion in the circumcircle turns the Euler circle into a circle that is
Poncelet-poristic with the circumcircle; the triangles are recovered by
chasing tangents from a vertex seed.
"""

from .classification import Kind, PairClassification, Reason
from .errors import GeometryError, NoTriangleError
from .geometry import (
    Circle,
    GeneralizedCircle,
    Line,
    Point,
    circle_circle_intersection,
    invert_generalized_circle,
    invert_point,
    line_circle_intersection,
    polar_line,
    pole_of_line,
    tangent_at,
    tangents_from_point,
)
from .iconic import (
    CentralConic,
    ConicKind,
    dual_of_iconic,
    iconic_of_triangle,
    inellipse_geometry_check,
    is_tangent_line,
    negative_pedal_of_circle,
    tangency_residual,
)
from .porism import (
    ArcSet,
    PoristicPair,
    check_pair,
    construct_triangle,
    euler_prime,
    family_sweep,
    fertile_arcs,
    make_poristic_pair,
    right_angle_family,
)
from .triangle import (
    Triangle,
    circumcircle,
    classify_triangle,
    nine_point_circle,
    orthocenter,
    tangential_triangle,
)

__version__ = "0.1.0"
