"""Test vb.bezdraw.geometry."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vb.bezdraw.errors import GeometryError
from vb.bezdraw.geometry import (
        AffineMap, ConvexPolygon, CubicBezier, Point, apply, contains, crossing_angle,
        evaluate, intersect, max_curvature, segment_intersection, subdivide)

coord = st.floats(min_value=-100, max_value=100, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)
curve = st.tuples(point, point, point, point).map(lambda ps: CubicBezier(*ps))


def test_point_rejects_non_finite():
    with pytest.raises(GeometryError):
        Point(math.nan, 0)
    with pytest.raises(GeometryError):
        Point(0, math.inf)


def test_unit_of_zero_vector():
    with pytest.raises(GeometryError):
        Point(0, 0).unit()


@given(curve)
def test_endpoints_exact(c):
    assert c.point_at(0.0) == c.p0
    assert c.point_at(1.0) == c.p3


@given(curve, st.floats(min_value=0.01, max_value=0.99))
def test_subdivide_joins(c, t):
    left, right = subdivide(c, t)
    assert left.p3 == right.p0
    scale = max(1.0, max(abs(v) for p in c for v in p))
    assert math.dist(left.p3, evaluate(c, t)) < 1e-9 * scale


def test_parameter_outside_unit_interval():
    c = CubicBezier.line((0, 0), (1, 0))
    with pytest.raises(GeometryError):
        c.point_at(1.5)
    with pytest.raises(GeometryError):
        c.subdivide(0.0)


def test_sample_matches_point_at():
    c = CubicBezier((0, 0), (1, 3), (4, -2), (5, 1))
    ts = np.linspace(0, 1, 11)
    pts = c.sample(ts)
    for t, p in zip(ts, pts):
        assert math.dist(p, c.point_at(float(t))) < 1e-12


def test_curvature_of_line_and_cusp():
    assert max_curvature(CubicBezier.line((0, 0), (3, 4)))[0] == 0.0
    cusp = CubicBezier((0, 0), (1, 1), (0, 1), (1, 0))
    assert cusp.curvature_at(0.5) == math.inf


def test_curvature_of_circle_approximation():
    k = 4 * (math.sqrt(2) - 1) / 3
    arc = CubicBezier((1, 0), (1, k), (k, 1), (0, 1))
    kappa, _ = max_curvature(arc)
    assert kappa == pytest.approx(1.0, rel=0.03)


@settings(max_examples=200, deadline=None)
@given(curve, st.floats(min_value=0.05, max_value=0.95))
def test_curvature_against_finite_differences(c, t):
    h = 1e-4
    d1 = (c.point_at(t + h) - c.point_at(t - h)) / (2 * h)
    d2 = (c.point_at(t + h) - c.point_at(t) * 2 + c.point_at(t - h)) / (h * h)
    speed = d1.norm()
    if speed < 1.0:
        return
    numeric = abs(d1.cross(d2)) / speed ** 3
    exact = c.curvature_at(t)
    # central differences are exact on cubics up to O(h^2) in d1 and rounding in d2
    slack = 1e-4 * (1.0 + d2.norm()) / speed ** 2
    assert numeric == pytest.approx(exact, rel=1e-4, abs=slack)


def test_affine_similarity_preserves_angles():
    m = AffineMap.similarity(scale=3.0, angle=0.7, reflect=True, translation=(2, -5))
    assert m.is_similarity()
    a = CubicBezier.line((0, 0), (2, 1))
    b = CubicBezier.line((0, 1), (2, 0))
    before = crossing_angle(a, 0.5, b, 0.5)
    after = crossing_angle(apply(m, a), 0.5, apply(m, b), 0.5)
    assert after == pytest.approx(before, abs=1e-12)


def test_affine_compose_inverse():
    m = AffineMap(2, 1, -1, 3, 4, 5)
    ident = m.compose(m.inverse())
    p = ident.apply_point((7, -3))
    assert p[0] == pytest.approx(7) and p[1] == pytest.approx(-3)
    with pytest.raises(GeometryError):
        AffineMap(1, 2, 2, 4).inverse()


def test_convex_polygon():
    tri = ConvexPolygon([(0, 0), (0, 4), (4, 0)])
    assert tri.contains_point((1, 1))
    assert not tri.contains_point((3, 3))
    with pytest.raises(GeometryError):
        ConvexPolygon([(0, 0), (2, 0), (1, 0.2), (1, 2)])
    with pytest.raises(GeometryError):
        ConvexPolygon([(0, 0), (1, 0)])


def test_contains_curve():
    square = ConvexPolygon([(0, 0), (4, 0), (4, 4), (0, 4)])
    assert contains(square, CubicBezier((0.5, 0.5), (3, 3.5), (1, 3.5), (3.5, 0.5)))
    assert not contains(square, CubicBezier((0.5, 0.5), (2, 9), (2, 9), (3.5, 0.5)))


def test_segment_intersection_cases():
    assert segment_intersection((0, 0), (2, 0), (1, -1), (1, 1)) == (0.5, 0.5)
    assert segment_intersection((0, 0), (1, 0), (2, -1), (2, 1)) is None
    assert segment_intersection((0, 0), (2, 0), (1, 0), (3, 0)) == 'overlap'


def test_intersect_two_points():
    a = CubicBezier((0, 0), (1, 2), (2, 2), (3, 0))
    b = CubicBezier.line((0, 1), (3, 1))
    res = intersect(a, b)
    assert len(res) == 2
    for hit in res:
        assert hit.point[1] == pytest.approx(1.0, abs=1e-9)
        assert math.dist(a.point_at(hit.t_a), b.point_at(hit.t_b)) < 1e-9


def test_intersect_overlap_and_exclusion():
    c = CubicBezier((0, 0), (1, 2), (2, 2), (3, 0))
    assert intersect(c, c).overlap
    d = CubicBezier((0, 0), (1, -2), (2, -1), (3, -3))
    assert len(intersect(c, d, exclusion=1e-4)) == 0
    assert len(intersect(c, d)) == 1


def test_intersect_line_with_s_curve():
    line = CubicBezier.line((0, 0), (10, 10))
    s_curve = CubicBezier((1, 9), (2, 2), (8, 8), (9, 1))
    for a, b in ((line, s_curve), (s_curve, line)):
        res = intersect(a, b)
        assert not res.overlap
        assert len(res) == 1
        hit = res.hits[0]
        assert hit.t_a == pytest.approx(0.5, abs=1e-12)
        assert hit.t_b == pytest.approx(0.5, abs=1e-12)
        assert hit.point == pytest.approx((5, 5), abs=1e-9)


def test_intersect_collinear_lines():
    a = CubicBezier.line((0, 0), (2, 0))
    assert intersect(a, CubicBezier.line((1, 0), (3, 0))).overlap
    res = intersect(a, CubicBezier.line((2, 0), (3, 0)))
    assert not res.overlap
    assert [(h.t_a, h.t_b) for h in res] == [(1.0, 0.0)]
    assert len(intersect(a, CubicBezier.line((3, 0), (4, 0)))) == 0


def test_intersect_two_arches():
    a = CubicBezier((0, 0), (1, 2), (2, 2), (3, 0))
    b = CubicBezier((0, 1.5), (1, -0.5), (2, -0.5), (3, 1.5))
    res = intersect(a, b)
    expected = [(1 - math.sqrt(0.5)) / 2, (1 + math.sqrt(0.5)) / 2]
    assert not res.overlap
    assert [h.t_a for h in res] == pytest.approx(expected, abs=1e-9)
    assert [h.t_b for h in res] == pytest.approx(expected, abs=1e-9)


def _cross(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    return u[..., 0] * v[..., 1] - u[..., 1] * v[..., 0]


def _sampled_crossings(a: CubicBezier, b: CubicBezier, n: int = 4001) -> int:
    """Count proper crossings of the two sampled polylines."""
    pa, pb = a.sample(np.linspace(0, 1, n)), b.sample(np.linspace(0, 1, n))
    count = 0
    for i in range(n - 1):
        p, q = pa[i], pa[i + 1]
        side = _cross(q - p, pb - p)
        for j in np.nonzero(side[:-1] * side[1:] < 0)[0]:
            r, s = pb[j], pb[j + 1]
            if _cross(s - r, p - r) * _cross(s - r, q - r) < 0:
                count += 1
    return count


@pytest.mark.slow
@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_intersect_against_sampling(seed):
    rng = np.random.default_rng(seed)
    a = CubicBezier(*rng.uniform(0, 10, (4, 2)))
    b = CubicBezier(*rng.uniform(0, 10, (4, 2)))
    res = intersect(a, b)
    if res.overlap:
        return
    for hit in res:
        if min(hit.t_a, 1 - hit.t_a, hit.t_b, 1 - hit.t_b) < 1e-3:
            return
        da, db = a.derivative(hit.t_a), b.derivative(hit.t_b)
        if abs(da.unit().cross(db.unit())) < 1e-2:
            return
    assert len(res) == _sampled_crossings(a, b)


def test_crossing_angle_degenerate():
    c = CubicBezier((0, 0), (0, 0), (1, 1), (2, 0))
    with pytest.raises(GeometryError):
        crossing_angle(c, 0.0, CubicBezier.line((0, 0), (1, 0)), 0.0)
