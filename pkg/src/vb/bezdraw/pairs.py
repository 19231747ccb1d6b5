"""Provide constrained curve constructions used by the RAC drawer.

Two building blocks are provided:

* `outside_pair` draws two curves crossing at a right angle inside
  a triangle ABC and outside the quadrilateral ABEF.
* `slope_curve` replaces the diagonal AB of a convex quadrilateral by
  a cubic passing through a given point X of AB with a prescribed slope.

Both work in a normalized frame reached by a similarity map, so angles
computed in the frame hold in the original one.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConstructionError, GeometryError
from .geometry import (
        EPS_GEOM, AffineMap, ConvexPolygon, CubicBezier, Point, QuadBezier,
        contains, crossing_angle, orient, point_in_triangle)
from .log import DEBUG2

logger = logging.getLogger(__name__)

SAFETY_FACTOR = 0.9
MIRROR_LIMIT = 8 / 9    # right angle curves exist for crossing abscissa below
EPS_ANGLE = 1e-6


# --- right angle crossing pair outside a quadrilateral:

@dataclass(frozen=True)
class OutsidePairResult:
    """Right angle crossing pair AE, BF inside triangle ABC.

    The curves are parametrized from E (resp. F) at t=0 to A (resp. B)
    at t=1 and cross at `t_cross` on both.
    """

    E: Point
    F: Point
    curve_AE: CubicBezier
    curve_BF: CubicBezier
    crossing: Point
    t_cross: float
    apex: Point
    quad: ConvexPolygon

    def angle(self) -> float:
        """Crossing angle of the pair."""
        return crossing_angle(self.curve_AE, self.t_cross,
                              self.curve_BF, self.t_cross)


def isosceles_inscribe(A, B, D, safety: float = SAFETY_FACTOR) -> Point:
    """Apex C of an isosceles triangle ABC inside triangle ABD.

    The apex lies on the perpendicular bisector of AB at `safety` times the
    largest height keeping it inside ABD.

    Examples:
        >>> isosceles_inscribe((0, 0), (1, 0), (0.5, 1))
        Point(0.5, 0.9)
        >>> isosceles_inscribe((0, 0), (1, 0), (0, 1))
        Point(0.5, 0.45)
    """
    A, B, D = Point.of(A), Point.of(B), Point.of(D)
    base = B - A
    if abs(orient(A, B, D)) <= EPS_GEOM * max(1.0, base.dot(base)):
        raise GeometryError('degenerate triangle')
    mid = (A + B) / 2
    normal = base.perp().unit()
    if normal.dot(D - A) < 0:
        normal = -normal
    height = math.inf
    for p, q in ((A, D), (B, D)):
        side = q - p
        denom = normal.cross(side)
        if abs(denom) < EPS_GEOM:
            continue
        h = (p - mid).cross(side) / denom
        s = (p - mid).cross(normal) / denom
        if h > 0 and -EPS_GEOM <= s <= 1 + EPS_GEOM:
            height = min(height, h)
    if not math.isfinite(height):
        raise ConstructionError('bisector of AB does not leave triangle ABD')
    apex = mid + normal * (safety * height)
    if not point_in_triangle(apex, A, B, D):
        raise ConstructionError('inscribed apex outside triangle ABD')
    return apex


def outside_e_x(cy: float) -> float:
    """Abscissa of E for the normalized isosceles triangle of height cy.

    Examples:
        >>> round(outside_e_x(1.0), 6)
        0.545832
    """
    disc = 16 * cy**4 + 48 * cy**3 + 40 * cy**2 + 12 * cy + 1
    return (4 * cy**2 + 6 * cy + 3 - math.sqrt(disc)) / 4


def outside_t_cross(cy: float) -> float:
    """Curve parameter of the crossing for the normalized triangle.

    Examples:
        >>> outside_t_cross(1.0) == (5 - math.sqrt(13)) / 6
        True
    """
    return (4 * cy + 1 - math.sqrt(4 * cy**2 + 8 * cy + 1)) / (6 * cy)


def normalized_outside_pair(cy: float) -> OutsidePairResult:
    """Build the crossing pair for A=(0,0), B=(1,0), C=(1/2, cy)."""
    if not cy > 0:
        raise GeometryError(f'apex height {cy} must be positive')
    ex = outside_e_x(cy)
    if not 0.5 < ex < 0.75:
        raise ConstructionError(f'construction infeasible: E_x={ex} for Cy={cy}')
    A, B, C = Point(0, 0), Point(1, 0), Point(0.5, cy)
    E, F = Point(ex, cy / 2), Point(1 - ex, cy / 2)
    g1 = QuadBezier(E, C, A).elevate()
    g2 = QuadBezier(F, C, B).elevate()
    t_cross = outside_t_cross(cy)
    crossing = g1.point_at(t_cross)
    return OutsidePairResult(E, F, g1, g2, crossing, t_cross, C,
                             ConvexPolygon((A, B, E, F)))


def outside_pair(A, B, C, eps_angle: float = EPS_ANGLE) -> OutsidePairResult:
    """Right angle crossing pair inside triangle ABC, outside ABEF.

    The triangle is mapped to A=(0,0), B=(1,0) with C above the x-axis.
    Unless C is already on the bisector of AB, an isosceles triangle is
    inscribed first.

    Raises:
        GeometryError: degenerate triangle
        ConstructionError: the pair does not cross at a right angle
    """
    A, B, C = Point.of(A), Point.of(B), Point.of(C)
    if abs(orient(A, B, C)) <= EPS_GEOM * max(1.0, (B - A).dot(B - A)):
        raise GeometryError('degenerate triangle')
    reflect = orient(A, B, C) < 0
    to_norm = AffineMap.two_point(A, B, (0, 0), (1, 0), reflect=reflect)
    c_norm = to_norm.apply_point(C)
    if abs(c_norm.x - 0.5) > EPS_GEOM:
        c_norm = isosceles_inscribe((0, 0), (1, 0), c_norm)
    norm = normalized_outside_pair(c_norm.y)
    back = to_norm.inverse()
    result = OutsidePairResult(
            back.apply_point(norm.E), back.apply_point(norm.F),
            norm.curve_AE.transform(back), norm.curve_BF.transform(back),
            back.apply_point(norm.crossing), norm.t_cross,
            back.apply_point(norm.apex), norm.quad.transform(back))
    angle = result.angle()
    if abs(angle - math.pi / 2) > eps_angle:
        raise ConstructionError(f'outside pair crosses at {angle} rad')
    logger.debug('outside pair: Cy=%g t=%g', c_norm.y, norm.t_cross)
    return result


# --- curve through a point with a given slope:

@dataclass(frozen=True)
class RightAngleCurveParams:
    """Control data of the curve f1 from B=(0,0) to A=(1,0).

    f1 crosses the x-axis at (x0, 0) with a vertical tangent at t0.
    """

    x0: float
    D1x: float
    C1: Point
    D1: Point
    t0: float
    r: float

    @property
    def curve(self) -> CubicBezier:
        """The curve f1 with control points B, D1, C1, A."""
        return CubicBezier((0, 0), self.D1, self.C1, (1, 0))


def right_angle_params(x0: float, r: float) -> RightAngleCurveParams:
    """Compute the control data of the right angle curve.

    Examples:
        >>> p = right_angle_params(0.5, 1.0)
        >>> p.D1x, p.C1.x, p.t0
        (1.0, 0.0, 0.5)
    """
    if not 0.0 < x0 <= MIRROR_LIMIT:
        raise GeometryError(f'crossing abscissa {x0} not in (0, 8/9]')
    if r == 0:
        raise GeometryError('scale r must be nonzero')
    d1x = x0 + float(np.cbrt(x0 * x0 - x0 ** 3))
    c1x = (d1x - math.sqrt(max(0.0, 4 * d1x - 3 * d1x * d1x))) / 2
    c1y = (1 - 2 * c1x + d1x) / (2 * d1x - c1x) * r
    t0 = (c1x - 2 * d1x) / (-1 + 3 * c1x - 3 * d1x)
    if not 0.0 < t0 < 1.0:
        raise ConstructionError(f'crossing parameter {t0} not in (0, 1)')
    return RightAngleCurveParams(x0, d1x, Point(c1x, c1y), Point(d1x, -r), t0, r)


def right_angle_curve(x0: float, r: float) -> tuple[CubicBezier, float]:
    """Curve f1 crossing the x-axis at (x0, 0) vertically, and its parameter."""
    params = right_angle_params(x0, r)
    return params.curve, params.t0


def baseline_curve(x0: float, t0: float) -> CubicBezier:
    """Curve f2 tracing segment (0,0)-(1,0) monotonically with f2(t0)=(x0,0).

    Examples:
        >>> baseline_curve(0.5, 0.5)
        CubicBezier(Point(0.0, 0.0), Point(0.5, 0.0), Point(0.5, 0.0), Point(1.0, 0.0))
    """
    if not 0.0 < t0 < 1.0:
        raise GeometryError(f'baseline parameter {t0} not in (0, 1)')
    c = (x0 - t0 ** 3) / (3 * (1 - t0) * t0)
    return CubicBezier((0, 0), (c, 0), (c, 0), (1, 0))


def solve_k(f1: CubicBezier, f2: CubicBezier, t0: float, m: float) -> float:
    """Weight k with slope m of k*f1 + (1-k)*f2 at t0.

    Examples:
        >>> f1, t0 = right_angle_curve(0.5, 1.0)
        >>> round(solve_k(f1, baseline_curve(0.5, t0), t0, 1.0), 12)
        0.333333333333
    """
    d1, d2 = f1.derivative(t0), f2.derivative(t0)
    denom = d1.y - m * d1.x + m * d2.x
    if abs(denom) < EPS_GEOM:
        raise ConstructionError(f'slope {m} not reachable')
    return m * d2.x / denom


def combine(f1: CubicBezier, f2: CubicBezier, k: float) -> CubicBezier:
    """Control-point convex combination k*f1 + (1-k)*f2."""
    return CubicBezier(*((p * k) + (q * (1 - k)) for p, q in zip(f1, f2)))


def bounding_quad(x0: float, r: float, D1x: float, C1x: float) -> ConvexPolygon:
    """Quadrilateral bounding the right angle curve of scale r.

    Examples:
        >>> bounding_quad(0.5, 1.0, 1.0, 0.0)[1:3]
        (Point(0.5, -0.5), Point(1.0, 0.0))
    """
    alpha, beta = _quad_heights(x0, D1x, C1x)
    return ConvexPolygon(((0, 0), (x0, -r * alpha), (1, 0), (x0, r * beta)))


def _quad_heights(x0: float, D1x: float, C1x: float) -> tuple[float, float]:
    alpha = x0 / D1x
    beta = (1 - 2 * C1x + D1x) * (x0 - 1) / ((C1x - 1) * (2 * D1x - C1x))
    return alpha, beta


def fit_r(target_quad: ConvexPolygon, x0: float, D1x: float, C1x: float,
          sign: float = 1.0, safety: float = SAFETY_FACTOR) -> float:
    """Largest |r| keeping the bounding quadrilateral inside target_quad.

    The target is given in the normalized frame and must contain the
    segment (0,0)-(1,0).

    Examples:
        >>> sq = ConvexPolygon([(0, -0.5), (1, -0.5), (1, 0.5), (0, 0.5)])
        >>> round(fit_r(sq, 0.5, 1.0, 0.0), 12)
        0.9
    """
    if not (target_quad.contains_point((0, 0)) and target_quad.contains_point((1, 0))):
        raise GeometryError('target quadrilateral does not contain segment AB')
    extent = target_quad.vertical_extent(x0)
    if extent is None or not extent[0] < 0 < extent[1]:
        raise GeometryError('target quadrilateral does not contain segment AB')
    y_low, y_high = extent
    alpha, beta = _quad_heights(x0, D1x, C1x)
    if sign > 0:
        bound = min(-y_low / alpha, y_high / beta)
    else:
        bound = min(-y_low / beta, y_high / alpha)
    return safety * bound


@dataclass(frozen=True)
class SlopeCurveSpec:
    """Curve replacing the diagonal AB, through X with slope m.

    `m` is the slope in the frame with B at the origin and A on the
    positive x-axis. `result` runs from `start` to the opposite diagonal
    endpoint and passes through X at parameter `t0`.
    """

    quad: ConvexPolygon
    X: Point
    m: float
    k: float
    r: float
    t0: float
    mirrored: bool
    result: CubicBezier

    @property
    def start(self) -> Point:
        """Endpoint at t=0."""
        return self.result.p0


def slope_curve(quad: ConvexPolygon, A, B, X, m: float,
                safety: float = SAFETY_FACTOR, max_halvings: int = 8
                ) -> SlopeCurveSpec:
    """Cubic from B to A through X making slope m, contained in quad.

    Args:
        quad: convex quadrilateral with diagonal AB
        A, B: opposite vertices of quad
        X: point of segment AB strictly between A and B
        m: slope at X in the frame with B at the origin and A at (1, 0)
        safety: fraction of the largest admissible scale used
        max_halvings: retries with half the scale when containment fails

    Raises:
        GeometryError: X not strictly inside AB or quad not containing AB
        ConstructionError: the weight or containment conditions fail
    """
    A, B, X = Point.of(A), Point.of(B), Point.of(X)
    to_norm = AffineMap.two_point(B, A, (0, 0), (1, 0))
    x_norm = to_norm.apply_point(X)
    if abs(x_norm.y) > 1e-6 or not 0.0 < x_norm.x < 1.0:
        raise GeometryError('X is not strictly between A and B')
    mirrored = x_norm.x >= MIRROR_LIMIT
    slope = m
    if mirrored:
        flip = AffineMap(-1.0, 0.0, 0.0, 1.0, 1.0, 0.0)    # x -> 1 - x
        to_norm = flip.compose(to_norm)
        slope = -m
    x0 = to_norm.apply_point(X).x
    target = quad.transform(to_norm)
    unit = right_angle_params(x0, 1.0)
    if slope == 0:
        sign = 1.0
    else:
        sign = math.copysign(1.0, slope) * math.copysign(1.0, unit.curve.derivative(unit.t0).y)
    r = sign * fit_r(target, x0, unit.D1x, unit.C1.x, sign, safety)
    f2 = baseline_curve(x0, unit.t0)
    back = to_norm.inverse()
    for _ in range(max_halvings + 1):
        params = right_angle_params(x0, r)
        f1 = params.curve
        k = solve_k(f1, f2, params.t0, slope)
        if not -EPS_GEOM <= k <= 1 + EPS_GEOM:
            raise ConstructionError(f'weight k={k} outside [0, 1] for slope {m}')
        k = min(1.0, max(0.0, k))
        f3 = combine(f1, f2, k)
        if contains(target, f3, EPS_GEOM):
            logger.log(DEBUG2, 'slope curve: x0=%g m=%g k=%g r=%g', x0, m, k, r)
            return SlopeCurveSpec(quad, X, m, k, r, params.t0, mirrored,
                                  f3.transform(back))
        r /= 2
    raise ConstructionError('slope curve does not fit the quadrilateral')
