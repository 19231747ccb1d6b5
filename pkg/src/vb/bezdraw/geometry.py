"""Provide floating point geometry of points, affine maps and cubic Béziers.

All types are immutable. Coordinates are 64-bit floats in drawing units.

Examples:
    >>> c = CubicBezier((0, 0), (0, 1), (1, 1), (1, 0))
    >>> c.point_at(0.5)
    Point(0.5, 0.75)
    >>> round(c.curvature_at(0.5), 12)
    2.666666666667
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple, Union

import numpy as np
from scipy import optimize

from .errors import GeometryError

EPS_GEOM = 1e-9     # geometric predicates
EPS_DERIV = 1e-12   # degenerate tangent
CLUSTER_TOL = 1e-5  # parameter distance merging intersection hits
MAX_ACTIVE_PAIRS = 4096     # subdivision pairs per level before overlap
MAX_DEPTH = 64
ROOT_IMAG_TOL = 1e-6    # imaginary part of a root taken as real
OVERLAP_SAMPLES = 257


class Point(tuple):
    """Two dimensional immutable point (vector).

    Examples:
        >>> Point(1, 2) + Point(3, 4)
        Point(4.0, 6.0)
        >>> Point(3, 4).norm()
        5.0
        >>> Point(1, 0).cross(Point(0, 1))
        1.0
    """

    __slots__ = ()

    def __new__(cls, x: float, y: float) -> Point:
        """Create a point, rejecting NaN and infinite coordinates."""
        fx, fy = float(x), float(y)
        if not (math.isfinite(fx) and math.isfinite(fy)):
            raise GeometryError(f'non-finite coordinates ({x}, {y})')
        return super().__new__(cls, (fx, fy))

    @classmethod
    def of(cls, p: PointLike) -> Point:
        """Convert a 2-sequence to Point (no copy for Point)."""
        if isinstance(p, Point):
            return p
        return cls(p[0], p[1])

    @property
    def x(self) -> float:
        """The x coordinate."""
        return self[0]

    @property
    def y(self) -> float:
        """The y coordinate."""
        return self[1]

    def __add__(self, other: PointLike) -> Point:   # type: ignore[override]
        return Point(self[0] + other[0], self[1] + other[1])

    def __sub__(self, other: PointLike) -> Point:
        return Point(self[0] - other[0], self[1] - other[1])

    def __mul__(self, k: float) -> Point:   # type: ignore[override]
        return Point(self[0] * k, self[1] * k)

    __rmul__ = __mul__

    def __truediv__(self, k: float) -> Point:
        return Point(self[0] / k, self[1] / k)

    def __neg__(self) -> Point:
        return Point(-self[0], -self[1])

    def dot(self, other: PointLike) -> float:
        """Dot product."""
        return self[0] * other[0] + self[1] * other[1]

    def cross(self, other: PointLike) -> float:
        """Z component of the cross product."""
        return self[0] * other[1] - self[1] * other[0]

    def norm(self) -> float:
        """Euclidean length."""
        return math.hypot(self[0], self[1])

    def unit(self) -> Point:
        """Unit vector of the same direction."""
        length = self.norm()
        if length < EPS_DERIV:
            raise GeometryError('unit vector of a zero vector')
        return self / length

    def perp(self) -> Point:
        """The vector rotated by +90 degrees."""
        return Point(-self[1], self[0])

    def __repr__(self) -> str:
        return f'Point({self[0]!r}, {self[1]!r})'


PointLike = Union[Point, Tuple[float, float], Sequence[float]]


def lerp(p: PointLike, q: PointLike, t: float) -> Point:
    """Linear interpolation (1-t)p + tq."""
    return Point(p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)


def orient(a: PointLike, b: PointLike, c: PointLike) -> float:
    """Twice the signed area of triangle abc (positive if counterclockwise)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def point_in_triangle(
        p: PointLike, a: PointLike, b: PointLike, c: PointLike,
        tol: float = EPS_GEOM) -> bool:
    """Test whether p lies in the closed triangle abc (either orientation).

    Examples:
        >>> point_in_triangle((0.5, 0.4), (0, 0), (1, 0), (0.5, 1))
        True
        >>> point_in_triangle((0.9, 0.9), (0, 0), (1, 0), (0.5, 1))
        False
    """
    sign = 1.0 if orient(a, b, c) >= 0 else -1.0
    return all(sign * orient(u, v, p) >= -tol * math.dist(u, v)
               for u, v in ((a, b), (b, c), (c, a)))


# --- curves:

class QuadBezier(tuple):
    """Two dimensional immutable quadratic Bézier curve."""

    __slots__ = ()

    def __new__(cls, q0: PointLike, q1: PointLike, q2: PointLike) -> QuadBezier:
        return super().__new__(cls, (Point.of(q0), Point.of(q1), Point.of(q2)))

    def point_at(self, t: float) -> Point:
        """Evaluate (1-t)²q0 + 2t(1-t)q1 + t²q2."""
        _check_unit(t)
        mt = 1.0 - t
        q0, q1, q2 = self
        return q0 * (mt * mt) + q1 * (2 * t * mt) + q2 * (t * t)

    def elevate(self) -> CubicBezier:
        """Return the cubic tracing the identical curve.

        Examples:
            >>> QuadBezier((0, 0), (3, 3), (6, 0)).elevate()
            CubicBezier(Point(0.0, 0.0), Point(2.0, 2.0), Point(4.0, 2.0), Point(6.0, 0.0))
        """
        q0, q1, q2 = self
        return CubicBezier(q0, (q0 + q1 * 2) / 3, (q1 * 2 + q2) / 3, q2)


def elevate(q: QuadBezier) -> CubicBezier:
    """Degree-elevate a quadratic Bézier."""
    return q.elevate()


class CubicBezier(tuple):
    """Two dimensional immutable cubic Bézier curve p0, p1, p2, p3."""

    __slots__ = ()

    def __new__(cls, p0: PointLike, p1: PointLike, p2: PointLike,
                p3: PointLike) -> CubicBezier:
        return super().__new__(
                cls, (Point.of(p0), Point.of(p1), Point.of(p2), Point.of(p3)))

    @classmethod
    def line(cls, p: PointLike, q: PointLike) -> CubicBezier:
        """Straight segment pq with linear parametrization.

        Examples:
            >>> CubicBezier.line((0, 0), (3, 0)).point_at(0.5)
            Point(1.5, 0.0)
        """
        p, q = Point.of(p), Point.of(q)
        return cls(p, lerp(p, q, 1 / 3), lerp(p, q, 2 / 3), q)

    @property
    def p0(self) -> Point:
        """The start point."""
        return self[0]

    @property
    def p1(self) -> Point:
        """The first inner control point."""
        return self[1]

    @property
    def p2(self) -> Point:
        """The second inner control point."""
        return self[2]

    @property
    def p3(self) -> Point:
        """The end point."""
        return self[3]

    def __repr__(self) -> str:
        return 'CubicBezier({}, {}, {}, {})'.format(*map(repr, self))

    def point_at(self, t: float) -> Point:
        """Evaluate the curve; exact at t=0 and t=1."""
        _check_unit(t)
        if t == 0.0:
            return self[0]
        if t == 1.0:
            return self[3]
        mt = 1.0 - t
        b0, b1, b2, b3 = mt * mt * mt, 3 * mt * mt * t, 3 * mt * t * t, t * t * t
        p0, p1, p2, p3 = self
        return Point(b0 * p0[0] + b1 * p1[0] + b2 * p2[0] + b3 * p3[0],
                     b0 * p0[1] + b1 * p1[1] + b2 * p2[1] + b3 * p3[1])

    def derivative(self, t: float) -> Point:
        """First derivative at t."""
        p0, p1, p2, p3 = self
        mt = 1.0 - t
        return ((p1 - p0) * (3 * mt * mt) + (p2 - p1) * (6 * mt * t)
                + (p3 - p2) * (3 * t * t))

    def second_derivative(self, t: float) -> Point:
        """Second derivative at t."""
        p0, p1, p2, p3 = self
        return ((p2 - p1 * 2 + p0) * (6 * (1.0 - t))
                + (p3 - p2 * 2 + p1) * (6 * t))

    def curvature_at(self, t: float, eps_deriv: float = EPS_DERIV) -> float:
        """Unsigned curvature |x'y'' - y'x''| / (x'^2 + y'^2)^(3/2).

        Returns:
            curvature, `math.inf` where the tangent degenerates (cusp)
        """
        _check_unit(t)
        d1 = self.derivative(t)
        speed = d1.norm()
        if speed < eps_deriv:
            return math.inf
        return abs(d1.cross(self.second_derivative(t))) / speed ** 3

    def subdivide(self, t: float) -> tuple[CubicBezier, CubicBezier]:
        """Split by de Casteljau's algorithm; left piece covers [0, t]."""
        if not 0.0 < t < 1.0:
            raise GeometryError(f'subdivision parameter {t} not in (0, 1)')
        return self._split(t)

    def _split(self, t: float) -> tuple[CubicBezier, CubicBezier]:
        p0, p1, p2, p3 = self
        a, b, c = lerp(p0, p1, t), lerp(p1, p2, t), lerp(p2, p3, t)
        d, e = lerp(a, b, t), lerp(b, c, t)
        f = lerp(d, e, t)
        return CubicBezier(p0, a, d, f), CubicBezier(f, e, c, p3)

    def transform(self, m: AffineMap) -> CubicBezier:
        """Map the control points by an affine map."""
        return CubicBezier(*(m.apply_point(p) for p in self))

    def reversed(self) -> CubicBezier:
        """The same curve traversed from p3 to p0."""
        return CubicBezier(self[3], self[2], self[1], self[0])

    def bbox(self) -> tuple[float, float, float, float]:
        """Bounding box (xmin, ymin, xmax, ymax) of the control polygon."""
        xs = [p[0] for p in self]
        ys = [p[1] for p in self]
        return min(xs), min(ys), max(xs), max(ys)

    def flatness(self) -> float:
        """Maximum distance of the inner control points from the chord."""
        p0, p1, p2, p3 = self
        chord = p3 - p0
        length = chord.norm()
        if length < EPS_DERIV:
            return max((p1 - p0).norm(), (p2 - p0).norm())
        return max(abs(chord.cross(p1 - p0)), abs(chord.cross(p2 - p0))) / length

    def is_linear(self, tol: float = 1e-12) -> bool:
        """Test for a straight segment with linear parametrization."""
        p0, p1, p2, p3 = self
        scale = max(1.0, (p3 - p0).norm())
        return ((p1 - lerp(p0, p3, 1 / 3)).norm() <= tol * scale
                and (p2 - lerp(p0, p3, 2 / 3)).norm() <= tol * scale)

    def tangent_at_start(self) -> Point:
        """Direction from p0 to the first control point distinct from it."""
        for p in self[1:]:
            if (p - self[0]).norm() > EPS_DERIV:
                return (p - self[0]).unit()
        raise GeometryError('degenerate curve has no tangent')

    def tangent_at_end(self) -> Point:
        """Direction from p3 to the last control point distinct from it."""
        return self.reversed().tangent_at_start()

    def sample(self, t: Iterable[float] | np.ndarray) -> np.ndarray:
        """Evaluate at many parameters; returns an (n, 2) array."""
        t = np.asarray(t, dtype=float)[:, None]
        mt = 1.0 - t
        ctrl = np.asarray(self, dtype=float)
        return (mt ** 3 * ctrl[0] + 3 * mt ** 2 * t * ctrl[1]
                + 3 * mt * t ** 2 * ctrl[2] + t ** 3 * ctrl[3])

    def curvature_samples(
            self, t: np.ndarray, eps_deriv: float = EPS_DERIV) -> np.ndarray:
        """Vectorized curvature; `inf` at degenerate tangents."""
        t = np.asarray(t, dtype=float)
        ctrl = np.asarray(self, dtype=float)
        mt = (1.0 - t)[:, None]
        tt = t[:, None]
        d1 = (3 * mt ** 2 * (ctrl[1] - ctrl[0]) + 6 * mt * tt * (ctrl[2] - ctrl[1])
              + 3 * tt ** 2 * (ctrl[3] - ctrl[2]))
        d2 = (6 * mt * (ctrl[2] - 2 * ctrl[1] + ctrl[0])
              + 6 * tt * (ctrl[3] - 2 * ctrl[2] + ctrl[1]))
        speed = np.hypot(d1[:, 0], d1[:, 1])
        cross = np.abs(d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0])
        with np.errstate(divide='ignore', invalid='ignore'):
            kappa = cross / speed ** 3
        return np.where(speed < eps_deriv, np.inf, kappa)


def evaluate(c: CubicBezier, t: float) -> Point:
    """Evaluate a cubic Bézier at t in [0, 1]."""
    return c.point_at(t)


def subdivide(c: CubicBezier, t: float) -> tuple[CubicBezier, CubicBezier]:
    """Split a cubic Bézier at t in (0, 1)."""
    return c.subdivide(t)


def _check_unit(t: float) -> None:
    if not 0.0 <= t <= 1.0:
        raise GeometryError(f'curve parameter {t} not in [0, 1]')


def max_curvature(
        c: CubicBezier, samples: int = 1024,
        eps_deriv: float = EPS_DERIV) -> tuple[float, float]:
    """Maximum curvature over the curve and the parameter attaining it.

    The curve is sampled at `samples` parameters and the best interior
    sample is refined by golden-section search on its bracketing samples.

    Returns:
        (kappa, t); kappa is `math.inf` for a cusp, 0 for straight curves
    """
    if c.is_linear() or c.flatness() == 0.0 and c.p0 != c.p3:
        return 0.0, 0.0
    ts = np.linspace(0.0, 1.0, samples)
    kappa = c.curvature_samples(ts, eps_deriv)
    best = int(np.argmax(kappa))
    if not math.isfinite(kappa[best]):
        return math.inf, float(ts[best])
    if 0 < best < samples - 1 and kappa[best] > max(kappa[best - 1], kappa[best + 1]):
        res = optimize.minimize_scalar(
                lambda t: -c.curvature_at(min(1.0, max(0.0, t)), eps_deriv),
                bracket=(ts[best - 1], ts[best], ts[best + 1]),
                method='golden', options={'xtol': 1e-10})
        t_best = min(1.0, max(0.0, float(res.x)))
        k_best = c.curvature_at(t_best, eps_deriv)
        if k_best >= kappa[best]:
            return k_best, t_best
    return float(kappa[best]), float(ts[best])


# --- affine maps:

@dataclass(frozen=True)
class AffineMap:
    """Affine map p -> L p + (e, f) with L = [[a, b], [c, d]].

    Examples:
        >>> m = AffineMap.similarity(scale=2.0, angle=math.pi / 2,
        ...                          translation=(1.0, 0.0))
        >>> m.apply_point((1.0, 0.0))
        Point(1.0, 2.0)
        >>> m.inverse().apply_point(m.apply_point((3.0, 4.0)))
        Point(3.0, 4.0)
    """

    a: float = 1.0
    b: float = 0.0
    c: float = 0.0
    d: float = 1.0
    e: float = 0.0
    f: float = 0.0

    @classmethod
    def identity(cls) -> AffineMap:
        """The identity map."""
        return cls()

    @classmethod
    def translation(cls, v: PointLike) -> AffineMap:
        """Translation by v."""
        return cls(e=float(v[0]), f=float(v[1]))

    @classmethod
    def similarity(
            cls, scale: float = 1.0, angle: float = 0.0,
            reflect: bool = False,
            translation: PointLike = (0.0, 0.0)) -> AffineMap:
        """Uniform scale, optional reflection y -> -y, rotation, translation.

        The reflection is applied first, the translation last.
        """
        cos, sin = math.cos(angle) * scale, math.sin(angle) * scale
        sgn = -1.0 if reflect else 1.0
        return cls(cos, -sin * sgn, sin, cos * sgn,
                   float(translation[0]), float(translation[1]))

    @classmethod
    def two_point(
            cls, p: PointLike, q: PointLike, p_img: PointLike,
            q_img: PointLike, reflect: bool = False) -> AffineMap:
        """The similarity sending p to p_img and q to q_img.

        Examples:
            >>> m = AffineMap.two_point((2, 2), (2, 4), (1, 0), (0, 0))
            >>> m.apply_point((2, 3))
            Point(0.5, 0.0)
        """
        p, q, p_img, q_img = map(Point.of, (p, q, p_img, q_img))
        src, dst = q - p, q_img - p_img
        if src.norm() < EPS_DERIV or dst.norm() < EPS_DERIV:
            raise GeometryError('two-point map from coincident points')
        if reflect:
            src = Point(src[0], -src[1])
        scale = dst.norm() / src.norm()
        angle = math.atan2(src.cross(dst), src.dot(dst))
        base = cls.similarity(scale, angle, reflect)
        shift = p_img - base.apply_point(p)
        return cls(base.a, base.b, base.c, base.d, shift[0], shift[1])

    def det(self) -> float:
        """Determinant of the linear part."""
        return self.a * self.d - self.b * self.c

    def is_similarity(self, tol: float = EPS_GEOM) -> bool:
        """Test for an angle preserving (conformal) invertible map."""
        col1 = math.hypot(self.a, self.c)
        col2 = math.hypot(self.b, self.d)
        return (abs(self.det()) > tol
                and abs(col1 - col2) <= tol * max(col1, col2)
                and abs(self.a * self.b + self.c * self.d) <= tol * col1 * col2)

    def apply_point(self, p: PointLike) -> Point:
        """Map a single point."""
        x, y = p[0], p[1]
        return Point(self.a * x + self.b * y + self.e,
                     self.c * x + self.d * y + self.f)

    def apply_vector(self, v: PointLike) -> Point:
        """Map a direction vector (linear part only)."""
        return Point(self.a * v[0] + self.b * v[1], self.c * v[0] + self.d * v[1])

    def compose(self, other: AffineMap) -> AffineMap:
        """The map self ∘ other (apply `other` first)."""
        return AffineMap(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
                self.a * other.e + self.b * other.f + self.e,
                self.c * other.e + self.d * other.f + self.f)

    def inverse(self) -> AffineMap:
        """The inverse map."""
        det = self.det()
        if abs(det) < EPS_DERIV:
            raise GeometryError('singular affine map')
        a, b, c, d = self.d / det, -self.b / det, -self.c / det, self.a / det
        return AffineMap(a, b, c, d, -(a * self.e + b * self.f),
                         -(c * self.e + d * self.f))


def apply(m: AffineMap, c: CubicBezier) -> CubicBezier:
    """Apply an invertible affine map to a curve via its control points."""
    if abs(m.det()) < EPS_DERIV:
        raise GeometryError('singular affine map')
    return c.transform(m)


# --- convex polygons:

class ConvexPolygon(tuple):
    """Convex polygon with counterclockwise vertices.

    Clockwise input is reversed. Collinear vertices are tolerated within
    `EPS_GEOM`.

    Examples:
        >>> sq = ConvexPolygon([(0, 0), (0, 1), (1, 1), (1, 0)])
        >>> sq[1]
        Point(1.0, 0.0)
        >>> sq.contains_point((0.5, 0.5))
        True
        >>> sq.vertical_extent(0.5)
        (0.0, 1.0)
    """

    __slots__ = ()

    def __new__(cls, vertices: Iterable[PointLike]) -> ConvexPolygon:
        pts = [Point.of(p) for p in vertices]
        if len(pts) < 3:
            raise GeometryError('polygon needs at least 3 vertices')
        if len(set(pts)) != len(pts):
            raise GeometryError('polygon has repeated vertices')
        area = sum(p.cross(q) for p, q in zip(pts, pts[1:] + pts[:1]))
        if area < 0:
            pts.reverse()
        poly = super().__new__(cls, pts)
        if not poly.is_convex():
            raise GeometryError('polygon is not convex')
        return poly

    def edges(self) -> list[tuple[Point, Point]]:
        """Boundary edges in counterclockwise order."""
        return list(zip(self, self[1:] + self[:1]))

    def is_convex(self, tol: float = EPS_GEOM) -> bool:
        """Test that all turns are left turns (within tolerance)."""
        n = len(self)
        scale = max(max(abs(c) for p in self for c in p), 1.0)
        return all(orient(self[i - 1], self[i], self[(i + 1) % n])
                   >= -tol * scale * scale for i in range(n))

    def contains_point(self, p: PointLike, tol: float = EPS_GEOM) -> bool:
        """Test p against the polygon inflated by tol."""
        return all(orient(u, v, p) >= -tol * math.dist(u, v)
                   for u, v in self.edges())

    def vertical_extent(self, x: float) -> tuple[float, float] | None:
        """Interval of y covered by the polygon on the vertical line at x."""
        ys = []
        for u, v in self.edges():
            lo, hi = min(u[0], v[0]), max(u[0], v[0])
            if lo <= x <= hi:
                if hi - lo < EPS_DERIV:
                    ys.extend((u[1], v[1]))
                else:
                    ys.append(lerp(u, v, (x - u[0]) / (v[0] - u[0]))[1])
        if not ys:
            return None
        return min(ys), max(ys)

    def scaled(self, factor: float, center: PointLike | None = None
               ) -> ConvexPolygon:
        """Polygon scaled about center (default the vertex centroid)."""
        if center is None:
            center = centroid(self)
        return ConvexPolygon(lerp(center, p, factor) for p in self)

    def transform(self, m: AffineMap) -> ConvexPolygon:
        """Map the vertices by an affine map."""
        return ConvexPolygon(m.apply_point(p) for p in self)


def centroid(points: Sequence[PointLike]) -> Point:
    """Average of points."""
    n = len(points)
    return Point(sum(p[0] for p in points) / n, sum(p[1] for p in points) / n)


def contains(poly: ConvexPolygon, c: CubicBezier, tol: float = EPS_GEOM,
             max_depth: int = 40) -> bool:
    """Test that the curve lies in the polygon inflated by tol.

    Pieces whose control points all lie inside are accepted by the convex
    hull property; pieces with a point on the curve outside are rejected;
    other pieces are halved.
    """
    stack = [(c, 0)]
    while stack:
        piece, depth = stack.pop()
        inside = [poly.contains_point(p, tol) for p in piece]
        if all(inside):
            continue
        if not inside[0] or not inside[3]:
            return False
        mid = piece.point_at(0.5)
        if not poly.contains_point(mid, tol):
            return False
        if depth >= max_depth:
            continue
        left, right = piece._split(0.5)
        stack.extend(((left, depth + 1), (right, depth + 1)))
    return True


# --- intersections:

@dataclass(frozen=True)
class Hit:
    """One intersection of two curves."""

    t_a: float
    t_b: float
    point: Point


@dataclass(frozen=True)
class IntersectionResult:
    """Intersections of two curves or the overlap outcome."""

    hits: tuple[Hit, ...] = ()
    overlap: bool = False

    def __len__(self) -> int:
        return len(self.hits)

    def __iter__(self):
        return iter(self.hits)


def segment_intersection(
        p: PointLike, q: PointLike, r: PointLike, s: PointLike,
        tol: float = EPS_GEOM) -> tuple[float, float] | str | None:
    """Intersect segments pq and rs.

    Returns:
        (t, u) parameters on pq and rs, the string 'overlap' for collinear
        overlapping segments, None when disjoint

    Examples:
        >>> segment_intersection((0, 0), (1, 1), (0, 1), (1, 0))
        (0.5, 0.5)
        >>> segment_intersection((0, 0), (1, 0), (0, 1), (1, 1)) is None
        True
        >>> segment_intersection((0, 0), (2, 0), (1, 0), (3, 0))
        'overlap'
    """
    p, q, r, s = map(Point.of, (p, q, r, s))
    d1, d2, w = q - p, s - r, r - p
    denom = d1.cross(d2)
    len1, len2 = d1.norm(), d2.norm()
    if abs(denom) <= tol * len1 * len2:
        if abs(d1.cross(w)) > tol * max(len1, EPS_DERIV) * max(len1, 1.0):
            return None
        if len1 < EPS_DERIV:
            return None
        u0 = w.dot(d1) / (len1 * len1)
        u1 = (s - p).dot(d1) / (len1 * len1)
        lo, hi = max(0.0, min(u0, u1)), min(1.0, max(u0, u1))
        if hi - lo > tol:
            return 'overlap'
        if hi < lo - tol / max(len1, EPS_DERIV):
            return None
        t = min(1.0, max(0.0, (lo + hi) / 2))
        point = lerp(p, q, t)
        u = (point - r).dot(d2) / max(len2 * len2, EPS_DERIV)
        return t, min(1.0, max(0.0, u))
    t = w.cross(d2) / denom
    u = w.cross(d1) / denom
    slack_t = tol / max(len1, EPS_DERIV)
    slack_u = tol / max(len2, EPS_DERIV)
    if -slack_t <= t <= 1 + slack_t and -slack_u <= u <= 1 + slack_u:
        return min(1.0, max(0.0, t)), min(1.0, max(0.0, u))
    return None


def _boxes_overlap(b1, b2, tol: float) -> bool:
    return not (b1[2] < b2[0] - tol or b2[2] < b1[0] - tol
                or b1[3] < b2[1] - tol or b2[3] < b1[1] - tol)


def _shared_ends(a: CubicBezier, b: CubicBezier, tol: float
                 ) -> list[tuple[float, float]]:
    ends = []
    for ta, pa in ((0.0, a[0]), (1.0, a[3])):
        for tb, pb in ((0.0, b[0]), (1.0, b[3])):
            if (pa - pb).norm() <= tol:
                ends.append((ta, tb))
    return ends


def _in_exclusion(ta0, ta1, tb0, tb1, ends, radius) -> bool:
    return any(abs(ta0 - ea) < radius and abs(ta1 - ea) < radius
               and abs(tb0 - eb) < radius and abs(tb1 - eb) < radius
               for ea, eb in ends)


def _refine(a: CubicBezier, b: CubicBezier, ta: float, tb: float
            ) -> tuple[float, float]:
    """Newton iteration on a(ta) - b(tb) = 0 started at a subdivision hit."""
    for _ in range(12):
        diff = a.point_at(ta) - b.point_at(tb)
        da, db = a.derivative(ta), b.derivative(tb)
        det = -da.cross(db)
        if abs(det) < EPS_DERIV * max(1.0, da.norm() * db.norm()):
            break
        step_a = -(diff.cross(-db)) / det
        step_b = -(da.cross(diff)) / det
        new_a = min(1.0, max(0.0, ta + step_a))
        new_b = min(1.0, max(0.0, tb + step_b))
        if abs(new_a - ta) < 1e-16 and abs(new_b - tb) < 1e-16:
            break
        ta, tb = new_a, new_b
    return ta, tb


def _bernstein_roots(d: Sequence[float]) -> list[float]:
    """Real roots in [0, 1] of the cubic with Bernstein coefficients d.

    Examples:
        >>> _bernstein_roots([-1, -1 / 3, 1 / 3, 1])
        [0.5]
        >>> _bernstein_roots([1, 1, 1, 1])
        []
    """
    d0, d1, d2, d3 = d
    coeffs = np.array([d3 - d0 + 3 * (d1 - d2), 3 * (d0 - 2 * d1 + d2),
                       3 * (d1 - d0), d0], dtype=float)
    scale = np.abs(coeffs).max()
    if scale == 0:
        return []
    coeffs[np.abs(coeffs) < 1e-13 * scale] = 0.0
    roots = np.roots(coeffs)
    real = roots[np.abs(roots.imag) <= ROOT_IMAG_TOL].real
    return sorted(float(min(1.0, max(0.0, t))) for t in real
                  if -ROOT_IMAG_TOL <= t <= 1 + ROOT_IMAG_TOL)


def _is_straight(c: CubicBezier, tol: float) -> bool:
    return (c[3] - c[0]).norm() > tol and c.flatness() <= tol


def _line_parameter(line: CubicBezier, p: Point, u: Point) -> float:
    """Parameter of the point of a straight curve with direction u nearest to p."""
    ts = _bernstein_roots([(c - p).dot(u) for c in line]) or [0.0, 1.0]
    return min(ts, key=lambda t: (line.point_at(t) - p).norm())


def _collinear_hits(line: CubicBezier, curve: CubicBezier, u: Point, tol: float
                    ) -> list[tuple[float, float]] | None:
    """Contact of a straight curve with a curve on the same line; None for overlap."""
    ts = np.linspace(0.0, 1.0, OVERLAP_SAMPLES)
    along_line = (line.sample(ts) - line[0]) @ np.asarray(u)
    along_curve = (curve.sample(ts) - line[0]) @ np.asarray(u)
    lo = max(along_line.min(), along_curve.min())
    hi = min(along_line.max(), along_curve.max())
    if hi - lo > tol:
        return None
    if hi < lo - tol:
        return []
    point = line[0] + u * ((lo + hi) / 2)
    return [(_line_parameter(line, point, u), _line_parameter(curve, point, u))]


def _line_hits(line: CubicBezier, curve: CubicBezier, tol: float
               ) -> list[tuple[float, float]] | None:
    """Raw (t_line, t_curve) contacts of a straight curve with a cubic.

    The signed distance of the cubic from the line is a cubic polynomial in
    Bernstein form, so its roots are the contacts.
    """
    u = (line[3] - line[0]).unit()
    normal = Point(-u.y, u.x)
    dist = [(c - line[0]).dot(normal) for c in curve]
    if max(map(abs, dist)) <= tol:
        return _collinear_hits(line, curve, u, tol)
    raw = []
    for t in _bernstein_roots(dist):
        p = curve.point_at(t)
        s = _line_parameter(line, p, u)
        if (line.point_at(s) - p).norm() <= tol:
            raw.append((s, t))
    return raw


def _distance_to(c: CubicBezier, p: Point) -> float:
    ts = np.linspace(0.0, 1.0, OVERLAP_SAMPLES)
    i = int(np.argmin(np.hypot(*(c.sample(ts) - p).T)))
    res = optimize.minimize_scalar(
            lambda t: (c.point_at(t) - p).norm(), method='bounded',
            bounds=(ts[max(i - 1, 0)], ts[min(i + 1, len(ts) - 1)]),
            options={'xatol': 1e-14})
    return float(res.fun)


def _overlapping(a: CubicBezier, b: CubicBezier, active, tol: float) -> bool:
    """Test whether the longest run of active pieces of a lies on b."""
    intervals = sorted({(a0, a1) for _, a0, a1, _, _, _ in active})
    runs = [list(intervals[0])]
    for lo, hi in intervals[1:]:
        if lo <= runs[-1][1]:
            runs[-1][1] = max(runs[-1][1], hi)
        else:
            runs.append([lo, hi])
    lo, hi = max(runs, key=lambda r: r[1] - r[0])
    return all(_distance_to(b, a.point_at(t)) <= 10 * tol
               for t in np.linspace(lo, hi, 9))


def _subdivision_hits(a: CubicBezier, b: CubicBezier, tol: float,
                      ends, exclusion: float) -> list[tuple[float, float]] | None:
    """Raw contacts of two curved cubics; None when they overlap.

    Both pieces of every pair are halved while their bounding boxes
    overlap, until both are flat within tol.
    """
    raw: list[tuple[float, float]] = []
    active = [(a, 0.0, 1.0, b, 0.0, 1.0)]
    for _ in range(MAX_DEPTH):
        if not active:
            break
        if len(active) > MAX_ACTIVE_PAIRS:
            if _overlapping(a, b, active, tol):
                return None
            active.sort(key=lambda pair: (pair[0].point_at(0.5)
                                          - pair[3].point_at(0.5)).norm())
            del active[MAX_ACTIVE_PAIRS // 2:]
        following = []
        for ca, a0, a1, cb, b0, b1 in active:
            if not _boxes_overlap(ca.bbox(), cb.bbox(), tol):
                continue
            if ends and _in_exclusion(a0, a1, b0, b1, ends, exclusion):
                continue
            if ca.flatness() <= tol and cb.flatness() <= tol:
                seg = segment_intersection(ca[0], ca[3], cb[0], cb[3], tol)
                if seg == 'overlap':
                    # flat collinear pieces: pick the middle of the overlap
                    raw.append(((a0 + a1) / 2, (b0 + b1) / 2))
                elif seg is not None:
                    s, u = seg      # type: ignore[misc]
                    raw.append((a0 + (a1 - a0) * s, b0 + (b1 - b0) * u))
                continue
            am, bm = (a0 + a1) / 2, (b0 + b1) / 2
            a_left, a_right = ca._split(0.5)
            b_left, b_right = cb._split(0.5)
            for pa, x0, x1 in ((a_left, a0, am), (a_right, am, a1)):
                for pb, y0, y1 in ((b_left, b0, bm), (b_right, bm, b1)):
                    following.append((pa, x0, x1, pb, y0, y1))
        active = following
    return raw


def intersect(
        a: CubicBezier, b: CubicBezier, tol: float = EPS_GEOM,
        exclusion: float = 0.0, cluster: float = CLUSTER_TOL
        ) -> IntersectionResult:
    """Intersect two cubic Bézier curves.

    A straight curve is intersected with the other one by solving the cubic
    equation of the signed distance from its line. Two curved cubics are
    subdivided together while their bounding boxes overlap until both pieces
    are flat within tol; flat pieces are intersected as segments. Hits are
    polished by Newton iteration on the full curves and hits closer than
    `cluster` in both parameters are merged. Overlap is reported only for
    collinear straight curves or when a run of pieces of a lies on b.

    Args:
        a, b: the curves
        tol: distance tolerance of a hit
        exclusion: parameter radius around endpoints shared by both curves
            (equal within tol) in which hits are ignored
        cluster: parameter distance for merging hits

    Returns:
        the hits sorted by t_a, or the overlap outcome

    Examples:
        >>> res = intersect(CubicBezier.line((0, 0), (1, 1)),
        ...                 CubicBezier.line((0, 1), (1, 0)))
        >>> [(round(h.t_a, 12), round(h.t_b, 12)) for h in res]
        [(0.5, 0.5)]
    """
    if tol <= 0:
        raise GeometryError('intersection tolerance must be positive')
    ends = _shared_ends(a, b, tol) if exclusion > 0 else []
    raw: list[tuple[float, float]] | None
    if _is_straight(a, tol):
        raw = _line_hits(a, b, tol)
    elif _is_straight(b, tol):
        raw = _line_hits(b, a, tol)
        if raw is not None:
            raw = [(ta, tb) for tb, ta in raw]
    else:
        raw = _subdivision_hits(a, b, tol, ends, exclusion)
    if raw is None:
        return IntersectionResult(overlap=True)
    hits = _cluster_hits(a, b, raw, tol, cluster)
    if hits is None:
        return IntersectionResult(overlap=True)
    if ends:
        hits = [h for h in hits
                if not any(abs(h.t_a - ea) < exclusion and abs(h.t_b - eb) < exclusion
                           for ea, eb in ends)]
    return IntersectionResult(tuple(hits))


def _cluster_hits(a, b, raw, tol, cluster) -> list[Hit] | None:
    """Merge nearby raw hits; None if a cluster spans a shared sub-arc."""
    if not raw:
        return []
    raw.sort()
    groups: list[list[tuple[float, float]]] = [[raw[0]]]
    for ta, tb in raw[1:]:
        last = groups[-1][-1]
        if abs(ta - last[0]) < cluster and abs(tb - last[1]) < cluster:
            groups[-1].append((ta, tb))
        else:
            groups.append([(ta, tb)])
    hits: list[Hit] = []
    for group in groups:
        span_a = group[-1][0] - group[0][0]
        if span_a > 1e3 * cluster:
            return None
        ta, tb = group[len(group) // 2]
        ra, rb = _refine(a, b, ta, tb)
        if (a.point_at(ra) - b.point_at(rb)).norm() < tol:
            ta, tb = ra, rb
        pa, pb = a.point_at(ta), b.point_at(tb)
        if (pa - pb).norm() >= tol:
            continue
        hit = Hit(ta, tb, lerp(pa, pb, 0.5))
        if hits and abs(hits[-1].t_a - ta) < cluster and abs(hits[-1].t_b - tb) < cluster:
            continue
        hits.append(hit)
    return hits


def crossing_angle(a: CubicBezier, t_a: float, b: CubicBezier, t_b: float,
                   eps_deriv: float = EPS_DERIV) -> float:
    """Acute angle between the tangents a'(t_a) and b'(t_b), in [0, pi/2].

    Examples:
        >>> s1 = CubicBezier.line((0, 0), (1, 1))
        >>> s2 = CubicBezier.line((0, 1), (1, 0))
        >>> round(crossing_angle(s1, 0.5, s2, 0.5), 12) == round(math.pi / 2, 12)
        True
    """
    da, db = a.derivative(t_a), b.derivative(t_b)
    if da.norm() < eps_deriv or db.norm() < eps_deriv:
        raise GeometryError('crossing angle at a degenerate tangent')
    return math.atan2(abs(da.cross(db)), abs(da.dot(db)))
