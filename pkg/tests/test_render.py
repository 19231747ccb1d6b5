"""Test vb.bezdraw.render."""

from __future__ import annotations

import xml.etree.ElementTree as ET

import pytest

from vb.bezdraw import render
from vb.bezdraw.drawing import Crossing, Drawing, Edge
from vb.bezdraw.gen import kite_embedding
from vb.bezdraw.geometry import CubicBezier, Point
from vb.bezdraw.rac import draw_rac


def _cross():
    pts = [Point(0, 0), Point(2, 2), Point(0, 2), Point(2, 0)]
    edges = [Edge(0, 1, CubicBezier.line(pts[0], pts[1])),
             Edge(2, 3, CubicBezier.line(pts[2], pts[3]))]
    return Drawing(pts, edges, [Crossing(0, 1, Point(1, 1))])


def _groups(dwg):
    root = ET.fromstring(dwg.tostring())
    return {el.get('id'): el for el in root.iter() if el.tag.endswith('}g')}


def _numbers(path_d):
    return [float(v) for token in path_d.split() if token not in 'MC' for v in token.split(',')]


def test_viewbox():
    assert render.viewbox(_cross()) == pytest.approx((-0.1, -2.1, 2.2, 2.2))
    assert render.viewbox(Drawing()) == (0.0, -1.0, 1.0, 1.0)
    # a single vertex still gets a margin
    assert render.viewbox(Drawing([Point(3, 4)]), 0.5) == (2.5, -4.5, 1.0, 1.0)


def test_groups():
    groups = _groups(render.to_svg(_cross()))
    assert set(groups) == {'edges', 'crossings', 'vertices'}
    assert len(groups['edges']) == 2
    assert len(groups['crossings']) == 1
    assert len(groups['vertices']) == 4


def test_optional_groups():
    groups = _groups(render.to_svg(_cross(), mark_crossings=False, labels=True))
    assert 'crossings' not in groups
    assert [el.text for el in groups['labels']] == ['0', '1', '2', '3']


def test_paths_reproduce_curves():
    d = draw_rac(kite_embedding())
    groups = _groups(render.to_svg(d))
    for edge, path in zip(d.edges, groups['edges']):
        values = _numbers(path.get('d'))
        expected = [c for p in edge.curve for c in (p.x, -p.y)]
        assert values == expected


def test_render_svg(tmp_path):
    path = tmp_path / 'cross.svg'
    render.render_svg(_cross(), path, stroke_width=0.01)
    root = ET.parse(path).getroot()
    assert root.get('viewBox').split() == [repr(v) for v in render.viewbox(_cross())]
    edges = next(el for el in root.iter() if el.get('id') == 'edges')
    assert float(edges.get('stroke-width')) == pytest.approx(0.022)
