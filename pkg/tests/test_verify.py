"""Test vb.bezdraw.verify."""

from __future__ import annotations

import math

import pytest

from vb.bezdraw import verify
from vb.bezdraw.drawing import Crossing, Drawing, Edge
from vb.bezdraw.errors import InputError
from vb.bezdraw.gen import kite_embedding
from vb.bezdraw.geometry import CubicBezier, Point
from vb.bezdraw.rac import draw_rac
from vb.bezdraw.verify import MODE_PLANAR, MODE_RAC, verify_drawing


def _drawing(points, edges, crossings=()):
    pts = [Point(*p) for p in points]
    drawn = []
    for edge in edges:
        u, v = edge[:2]
        curve = edge[2] if len(edge) > 2 else CubicBezier.line(pts[u], pts[v])
        drawn.append(Edge(u, v, curve))
    return Drawing(pts, drawn, [Crossing(e1, e2, Point(*p)) for e1, e2, p in crossings])


def _kinds(report):
    return {v.kind for v in report.violations}


def _cross(declared=True):
    return _drawing([(0, 0), (2, 2), (0, 2), (2, 0)], [(0, 1), (2, 3)],
                    [(0, 1, (1, 1))] if declared else [])


def test_declared_right_angle_passes():
    report = verify_drawing(_cross())
    assert report.passed, report.summary()
    (contact,) = report.crossings
    assert contact.declared
    assert contact.angle == pytest.approx(math.pi / 2, abs=1e-12)
    assert contact.point == pytest.approx((1.0, 1.0))


def test_undeclared_crossing():
    report = verify_drawing(_cross(declared=False))
    assert _kinds(report) == {verify.UNEXPECTED}
    assert report.verdict == 'fail'


def test_declared_crossing_in_planar_mode():
    report = verify_drawing(_cross(), MODE_PLANAR)
    assert verify.UNEXPECTED in _kinds(report)


def test_bad_angle():
    d = _drawing([(0, 0), (2, 0), (0.5, -1), (1.5, 1)], [(0, 1), (2, 3)], [(0, 1, (1, 0))])
    report = verify_drawing(d)
    assert _kinds(report) == {verify.BAD_ANGLE}
    assert report.violations[0].edges == (0, 1)


def test_angle_tolerance():
    # about 1e-4 away from a right angle
    d = _drawing([(0, -1), (0, 1), (-1, -1e-4), (1, 1e-4)], [(0, 1), (2, 3)],
                 [(0, 1, (0, 0))])
    assert not verify_drawing(d).passed
    assert verify_drawing(d, tol_angle=1e-3).passed


def test_missing_crossing():
    d = _drawing([(0, 0), (1, 0), (0, 1), (1, 1)], [(0, 1), (2, 3)], [(0, 1, (0.5, 0.5))])
    report = verify_drawing(d)
    assert _kinds(report) == {verify.MISSING}


def test_repeated_crossing():
    wave = CubicBezier((0, 0), (1, 3), (2, -3), (3, 0))
    d = _drawing([(0, 0), (3, 0), (-1, 0.1), (4, 0.1)],
                 [(0, 1, wave), (2, 3)], [(0, 1, (1.5, 0))])
    report = verify_drawing(d)
    assert verify.REPEATED in _kinds(report)


def test_cluster_tolerance_merges_hits():
    wave = CubicBezier((0, 0), (1, 3), (2, -3), (3, 0))
    d = _drawing([(0, 0), (3, 0), (-1, 0.1), (4, 0.1)],
                 [(0, 1, wave), (2, 3)], [(0, 1, (1.5, 0))])
    report = verify_drawing(d, cluster=0.5)
    assert len(report.crossings) == 1
    assert verify.REPEATED not in _kinds(report)


def test_overlapping_edges():
    d = _drawing([(0, 0), (3, 0), (0, 0), (3, 0)], [(0, 1), (2, 3)])
    assert verify.OVERLAP in _kinds(verify_drawing(d))


def test_vertex_on_edge():
    d = _drawing([(0, 0), (2, 0), (1, 0)], [(0, 1)])
    report = verify_drawing(d)
    assert _kinds(report) == {verify.CONTAINMENT}
    assert report.violations[0].vertex == 2


def test_coinciding_tangents():
    bent = CubicBezier((0, 0), (1, 0), (1.5, 1), (2, 1))
    d = _drawing([(0, 0), (2, 0), (2, 1)], [(0, 1), (0, 2, bent)])
    report = verify_drawing(d)
    assert verify.SHORTFALL in _kinds(report)
    assert report.angular_resolution[0] == pytest.approx(0.0, abs=1e-12)


def test_cusp():
    cusp = CubicBezier((0, 0), (1, 1), (0, 1), (1, 0))
    report = verify_drawing(_drawing([(0, 0), (1, 0)], [(0, 1, cusp)]), samples=1025)
    assert verify.INFINITE in _kinds(report)


def test_planar_curvature_bound():
    loop = CubicBezier((0, 0), (0, 5), (1, 5), (1, 0))
    report = verify_drawing(_drawing([(0, 0), (1, 0)], [(0, 1, loop)]), MODE_PLANAR)
    assert report.curvature_bound == verify.CURVATURE_SMALL
    assert report.max_curvature > 13
    assert _kinds(report) == {verify.CURVATURE}


def test_planar_curvature_bound_grows_with_the_box():
    d = _drawing([(0, 0), (3000, 4000)], [(0, 1)])
    assert verify.planar_curvature_bound(d) == pytest.approx(math.sqrt(12 / 128 * 5000))


def test_resolution_bound():
    assert verify.resolution_bound(2) == pytest.approx(math.asin(1 / (2 * math.sqrt(10))))
    assert verify.resolution_bound(8) < verify.resolution_bound(4)


def test_unknown_mode():
    with pytest.raises(InputError, match='mode'):
        verify_drawing(_cross(), 'fast')


@pytest.mark.parametrize('edges, crossings, message', [
    ([(0, 5)], [], 'missing vertex'),
    ([(1, 1)], [], 'loop'),
    ([(0, 1), (2, 3)], [(0, 0, (1, 1))], 'bad crossing'),
    ([(0, 1), (2, 3)], [(0, 1, (1, 1)), (1, 0, (1, 1))], 'twice'),
])
def test_inconsistent_drawing(edges, crossings, message):
    pts = [Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0)]
    drawn = [Edge(u, v, CubicBezier.line(pts[u % 4], pts[v % 4])) for u, v in edges]
    d = Drawing(pts, drawn, [Crossing(e1, e2, Point(*p)) for e1, e2, p in crossings])
    with pytest.raises(InputError, match=message):
        verify_drawing(d)


def test_edge_not_ending_at_its_vertices():
    d = Drawing([Point(0, 0), Point(1, 0)], [Edge(0, 1, CubicBezier.line((0, 0), (1, 1e-3)))])
    with pytest.raises(InputError, match='does not end'):
        verify_drawing(d)


def test_candidate_pairs():
    curves = [CubicBezier.line((0, 0), (1, 1)), CubicBezier.line((0, 1), (1, 0)),
              CubicBezier.line((10, 10), (11, 11))]
    assert list(verify.candidate_pairs(curves)) == [(0, 1)]
    assert list(verify.candidate_pairs(curves[:1])) == []


def test_sample_contacts_agree_on_kite():
    d = draw_rac(kite_embedding())
    declared = {(min(c.e1, c.e2), max(c.e1, c.e2)) for c in d.crossings}
    assert declared <= verify.sample_contacts(d)
    assert verify.sample_contacts(_cross()) == {(0, 1)}


def test_report_output():
    report = verify_drawing(_cross())
    data = report.to_dict()
    assert data['verdict'] == 'pass' and data['mode'] == MODE_RAC
    assert data['crossings'][0]['declared'] is True
    assert data['violations'] == []
    text = report.summary()
    assert 'verdict: pass (rac)' in text
    assert 'worst crossing angle' in text
    assert 'violations: 0' in text
