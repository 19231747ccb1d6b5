"""Test vb.bezdraw.planar."""

from __future__ import annotations

import math

import numpy as np
import pytest

from vb.bezdraw import planar
from vb.bezdraw.errors import GeometryError, JointBoxError
from vb.bezdraw.planar import JointBoxDrawing, JointBoxEdge
from vb.bezdraw.verify import MODE_PLANAR, resolution_bound, verify_drawing

FIXTURE_NAMES = ['single-edge', 'two-boxes', 'triangle', 'star-1', 'star-3', 'star-8',
                 'wheel-5', 'wheel-6', 'wheel-8', 'wheel-10']


def test_edge_curve_params_known_value():
    params = planar.EdgeCurveParams.create(10, 0, 1, 3)
    assert params.s == 0 and params.k == 0.25
    assert params.P == planar.Point(1.0, 0.75)
    assert params.curve.p3 == planar.Point(10.0, 0.0)


@pytest.mark.parametrize('b1, b2, i, d', [
    (1.0, 0.0, 1, 1),
    (10.0, 9.5, 1, 1),
    (10.0, -1.0, 1, 1),
    (10.0, 0.0, 0, 2),
    (10.0, 0.0, 3, 2),
])
def test_edge_curve_params_domain(b1, b2, i, d):
    with pytest.raises(GeometryError):
        planar.EdgeCurveParams.create(b1, b2, i, d)


@pytest.mark.parametrize('region, target', [
    ('R', (9, 2)), ('L', (-9, 2)), ('M-right', (2, -9)), ('M-left', (-2, -9)),
])
def test_normalize_edge_regions(region, target):
    a = (5, 7)
    b = (a[0] + target[0], a[1] + target[1])
    jbd = JointBoxDrawing([a, b], [JointBoxEdge(0, region, 1, 1)])
    m = planar.normalize_edge(jbd.edges[0], jbd)
    assert m.apply_point(a) == planar.Point(0.0, 0.0)
    assert m.apply_point(b) == planar.Point(9.0, 2.0)
    assert m.is_similarity()


def test_port_region():
    assert planar.port_region((5, 2)) == 'R'
    assert planar.port_region((-5, 0)) == 'L'
    assert planar.port_region((0, -3)) == 'M-right'
    assert planar.port_region((-1, -3)) == 'M-left'
    assert planar.port_region((3, 3)) is None
    assert planar.port_region((0, 4)) is None


def test_bend_on_box_boundary():
    jbd = planar.make_fixture('star-4')
    for edge in jbd.edges:
        bend = jbd.bend(edge)
        ax, ay = jbd.positions[edge.a]
        assert abs(bend.x - ax) + abs(bend.y - ay) == pytest.approx(jbd.half_size(edge.a))


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_fixtures_are_planar(name):
    jbd = planar.make_fixture(name)
    d = planar.draw_planar(jbd)
    report = verify_drawing(d, MODE_PLANAR)
    assert report.passed, report.summary()
    assert not report.crossings


@pytest.mark.parametrize('d', [2, 4, 8, 16, 32])
def test_star_angular_resolution(d):
    drawing = planar.draw_planar(planar.make_fixture(f'star-{d}'))
    report = verify_drawing(drawing, MODE_PLANAR)
    bound = resolution_bound(d)
    assert report.angular_resolution[0] >= bound - 1e-9


def test_wheel_shape():
    jbd = planar.make_fixture('wheel-7')
    assert len(jbd.positions) == 8
    assert jbd.degree(0) == 7
    assert all(jbd.degree(v) == 3 for v in range(1, 8))


@pytest.mark.parametrize('name', ['star-0', 'wheel-4', 'grid-3', ''])
def test_unknown_fixture(name):
    with pytest.raises(JointBoxError):
        planar.make_fixture(name)


def test_shipped_fixture_file():
    static = planar.shipped_fixtures()
    assert set(static) == {'single-edge', 'two-boxes', 'triangle'}
    jbd = planar.make_fixture('triangle')
    assert jbd.positions == [tuple(p) for p in static['triangle'].positions]
    assert len(jbd.edges) == len(static['triangle'].edges)


@pytest.mark.parametrize('positions, edges, message', [
    ([(0.0, 0), (12, 3)], [JointBoxEdge(0, 'R', 1, 1)], 'integer grid'),
    ([(0, 0), (12, 3)], [JointBoxEdge(0, 'R', 2, 1)], 'port 2'),
    ([(0, 0), (12, 3)], [JointBoxEdge(0, 'R', 1, 0)], 'loop'),
    ([(0, 0), (12, 3)], [JointBoxEdge(0, 'R', 1, 1, free='M')], 'free region'),
    ([(0, 0), (6, 2)], [JointBoxEdge(0, 'R', 1, 1)], 'overlap'),
    ([(0, 0), (20, 20)], [JointBoxEdge(0, 'R', 1, 1)], 'wedge'),
    ([(0, 0), (22, 10), (22, 1)],
     [JointBoxEdge(0, 'R', 1, 1), JointBoxEdge(0, 'R', 1, 2)], 'used twice'),
    ([(0, 0), (22, 10), (22, 1)],
     [JointBoxEdge(0, 'R', 2, 1), JointBoxEdge(0, 'R', 1, 2)], 'disagree'),
    ([(0, 0), (-10, 40), (10, 40)],
     [JointBoxEdge(1, 'M-right', 1, 0), JointBoxEdge(2, 'M-left', 1, 0)], 'both halves'),
])
def test_validation(positions, edges, message):
    with pytest.raises(JointBoxError, match=message):
        JointBoxDrawing(positions, edges).validate()


def test_correct_port_order_accepted():
    jbd = JointBoxDrawing([(0, 0), (22, 10), (22, 1)],
                          [JointBoxEdge(0, 'R', 1, 1), JointBoxEdge(0, 'R', 2, 2)])
    jbd.validate()


def test_unknown_region():
    with pytest.raises(JointBoxError, match='region'):
        JointBoxEdge(0, 'up', 1, 1)


def test_build_rejects_diagonal_edge():
    with pytest.raises(JointBoxError, match='fits no port region'):
        planar.build_joint_box_drawing([(0, 0), (20, 20)], [(0, 1)])


def test_curvature_grid_matches_curve():
    b1 = 16.0
    grid = planar.curvature_grid(b1, n=5)
    s, k, t = 0.5, 0.75, 0.25
    params = planar.EdgeCurveParams.create(b1, b1 * s, 3, 3)
    assert params.k == k
    assert grid[2, 3, 1] == pytest.approx(params.curve.curvature_at(t), rel=1e-9)


@pytest.mark.parametrize('b1', [16, 64, 1024])
def test_curvature_bound_coarse(b1):
    kappa = planar.curvature_grid(b1, n=31)
    assert np.max(kappa ** 2 / b1) <= 12 / 128 + 1e-6


def test_curvature_small_box():
    assert np.max(planar.curvature_grid(4, n=31)) < 3


@pytest.mark.slow
@pytest.mark.parametrize('b1', [2 ** j for j in range(4, 13)])
def test_curvature_bound_full_grid(b1):
    kappa = planar.curvature_grid(b1)
    assert np.max(kappa ** 2 / b1) <= 12 / 128 + 1e-6


@pytest.mark.slow
def test_curvature_small_box_full_grid():
    assert np.max(planar.curvature_grid(4)) < 3


def test_planar_curves_end_on_grid_points():
    jbd = planar.make_fixture('triangle')
    d = planar.draw_planar(jbd)
    for edge, drawn in zip(jbd.edges, d.edges):
        assert drawn.curve.p0 == planar.Point(*jbd.positions[edge.a])
        assert drawn.curve.p3 == planar.Point(*jbd.positions[edge.b])
        # both inner control points coincide with P
        assert drawn.curve.p1 == drawn.curve.p2
        assert math.dist(drawn.curve.p1, drawn.curve.p0) < jbd.half_size(edge.a)
