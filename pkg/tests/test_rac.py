"""Test vb.bezdraw.rac."""

from __future__ import annotations

import math
import time
from collections import Counter

import pytest

from vb.bezdraw import rac
from vb.bezdraw.embedding import APEX, BASE, KITE, PLAIN, STAR, OnePlaneEmbedding
from vb.bezdraw.errors import ConstructionError
from vb.bezdraw.gen import gen_one_planar, kite_embedding
from vb.bezdraw.geometry import Point
from vb.bezdraw.verify import MODE_RAC, verify_drawing

TRIANGLE = [[1, 2], [2, 0], [0, 1]]
K4 = [[1, 3, 2], [2, 3, 0], [0, 3, 1], [2, 0, 1]]
CROSSING = [((0, 2), (1, 3))]

EMBEDDINGS = {
    # crossing with no edge between its ends
    'bare-x': OnePlaneEmbedding.create(
            [[4], [4], [4], [4], [0, 1, 2, 3]], [4], CROSSING),
    'x-and-edge': OnePlaneEmbedding.create(
            [[4, 1], [0, 4], [4], [4], [0, 1, 2, 3]], [4], CROSSING),
    # the outer face is a triangle at the crossing
    'kite-outer-crossing': OnePlaneEmbedding.create(
            [[1, 4, 3], [2, 4, 0], [3, 4, 1], [0, 4, 2], [2, 3, 0, 1]], [4], CROSSING,
            outer_face=(0, 1)),
    # 0-1 runs around the crossing; 4 sits between it and the kite edge 0-1
    'separated-crossing': OnePlaneEmbedding.create(
            [[5, 1, 4], [0, 5, 4], [5], [5], [1, 0], [2, 3, 0, 1]], [5], CROSSING,
            outer_face=(1, 4)),
    'diamond': OnePlaneEmbedding.create([[1, 2, 3], [2, 0, 3], [0, 1], [1, 0]]),
    'path': OnePlaneEmbedding.create([[1], [0, 2], [1]]),
    'star': OnePlaneEmbedding.create([[1, 2, 3], [0], [0], [0]]),
}


def _assert_rac(d, crossings):
    report = verify_drawing(d, MODE_RAC)
    assert report.passed, report.summary()
    assert len(d.crossings) == crossings
    for contact in report.crossings:
        assert contact.declared
        assert contact.angle == pytest.approx(math.pi / 2, abs=1e-6)


def test_augment_kite_triangulates():
    graph, _ = kite_embedding().to_plane_graph()
    rac.augment(graph)
    assert all(len(face) == 3 for face in graph.faces())
    graph.check()


def test_augment_bare_crossing():
    graph, _ = EMBEDDINGS['bare-x'].to_plane_graph()
    rac.augment(graph)
    kinds = Counter(info.kind for info in graph.edges.values())
    assert kinds[KITE] == 4 and kinds[STAR] == 4
    apexes = [v for v in graph.vertices() if graph.vkind[v] == APEX]
    assert len(apexes) == 1
    assert graph.face_vertices(graph.outer)[0] == apexes[0]
    assert all(len(face) == 3 for face in graph.faces())


def test_augment_keeps_existing_kite_edge():
    graph, _ = EMBEDDINGS['x-and-edge'].to_plane_graph()
    rac.augment(graph)
    assert Counter(info.kind for info in graph.edges.values())[KITE] == 3


def test_contract_separated_crossing():
    graph, originals = EMBEDDINGS['separated-crossing'].to_plane_graph()
    rac.augment(graph)
    root = rac.contract(graph)
    assert root.graph.vertices() == [0, 1, 4]
    (child,) = root.children
    assert child.base == (0, 1) and child.depth == 1
    assert sorted(child.interior_vertices()) == [2, 3, 5, 6]
    thick = next(info for info in root.graph.edges.values() if {info.u, info.v} == {0, 1})
    assert thick.kind == PLAIN and originals[thick.label] == (0, 1)
    assert thick.fragments[0] is child.graph
    assert sum(info.kind == BASE for info in child.graph.edges.values()) == 1


@pytest.mark.parametrize('name', ['separated-crossing', 'path', 'star'])
def test_contract_leaves_no_separation_pair(name):
    graph, _ = EMBEDDINGS[name].to_plane_graph()
    rac.augment(graph)
    root = rac.contract(graph)
    assert root.children
    for comp in root.walk():
        assert rac.find_separation_pair(comp.graph.to_networkx()) is None
        for child in comp.children:
            assert child.depth == comp.depth + 1
            assert set(child.base) <= set(comp.graph.rot)
            assert not set(child.base) & set(child.interior_vertices())


def test_convex_draw_barycentre():
    graph, _ = OnePlaneEmbedding.create(K4, outer_face=(1, 0)).to_plane_graph()
    boundary = {0: Point(0, 0), 1: Point(6, 0), 2: Point(0, 6)}
    cd = rac.convex_draw(graph, boundary)
    assert cd.positions[3] == pytest.approx(Point(2, 2))


def test_convex_draw_rejects_flipped_face():
    graph, _ = OnePlaneEmbedding.create(K4, outer_face=(1, 0)).to_plane_graph()
    cd = rac.convex_draw(graph, {0: Point(0, 0), 1: Point(6, 0), 2: Point(0, 6)})
    cd.positions[3] = Point(10, 10)
    with pytest.raises(ConstructionError, match='not strictly convex'):
        cd.check_convex()


def test_perpendicular_slope_parallel():
    with pytest.raises(ConstructionError):
        rac.perpendicular_slope(Point(1, 0), Point(0, 0), Point(2, 0))


def test_kite():
    d = rac.draw_rac(kite_embedding())
    assert len(d.positions) == 4 and len(d.edges) == 6
    _assert_rac(d, 1)


def test_build_rac_keeps_helpers():
    result = rac.build_rac(kite_embedding())
    assert len(result.full.positions) >= len(result.drawing.positions)
    assert sorted(result.vertex_map) == [0, 1, 2, 3]
    assert result.root is not None


@pytest.mark.parametrize('rotation', [TRIANGLE, K4])
def test_planar_inputs(rotation):
    d = rac.draw_rac(OnePlaneEmbedding.create(rotation, outer_face=(1, 0)))
    _assert_rac(d, 0)


def test_trivial_inputs():
    d = rac.draw_rac(OnePlaneEmbedding.create([[1], [0]]))
    assert len(d.edges) == 1 and d.edges[0].curve.is_linear()
    d = rac.draw_rac(OnePlaneEmbedding.create([[]]))
    assert len(d.positions) == 1 and not d.edges


@pytest.mark.parametrize('seed', range(3))
def test_random_small(seed):
    emb = gen_one_planar(10, 0.5, seed=seed)
    _assert_rac(rac.draw_rac(emb), len(emb.crossing_pairs))


def test_dense_crossings():
    emb = gen_one_planar(40, 1.0, seed=7)
    result = rac.build_rac(emb)
    assert result.root is not None
    _assert_rac(result.drawing, len(emb.crossing_pairs))


@pytest.mark.parametrize('name, depth, children, outside_pairs, crossings', [
    ('bare-x', 0, 0, 0, 1),
    ('x-and-edge', 0, 0, 0, 1),
    ('kite-outer-crossing', 0, 0, 1, 1),
    ('separated-crossing', 1, 1, 0, 1),
    ('diamond', 0, 0, 0, 0),
    ('path', 1, 1, 0, 0),
    ('star', 1, 2, 0, 0),
])
def test_construction_path(monkeypatch, name, depth, children, outside_pairs, crossings):
    calls = []
    outside_pair = rac.pairs.outside_pair

    def counting_outside_pair(*args, **kwargs):
        calls.append(args)
        return outside_pair(*args, **kwargs)

    monkeypatch.setattr(rac.pairs, 'outside_pair', counting_outside_pair)
    emb = EMBEDDINGS[name]
    result = rac.build_rac(emb)
    assert max(comp.depth for comp in result.root.walk()) == depth
    assert len(result.root.children) == children
    assert len(calls) == outside_pairs
    assert len(result.drawing.edges) == len(emb.original_edges())
    _assert_rac(result.drawing, crossings)


@pytest.mark.slow
@pytest.mark.parametrize('n', [10, 50, 100, 200])
@pytest.mark.parametrize('seed', range(10))
def test_random_grid(n, seed):
    emb = gen_one_planar(n, 0.5, seed=seed)
    start = time.perf_counter()
    d = rac.draw_rac(emb)
    _assert_rac(d, len(emb.crossing_pairs))
    assert time.perf_counter() - start <= 60
