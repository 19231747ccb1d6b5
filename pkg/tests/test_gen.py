"""Test vb.bezdraw.gen."""

from __future__ import annotations

import networkx as nx
import numpy as np
import pytest

from vb.bezdraw.embedding import DUMMY
from vb.bezdraw.errors import InputError
from vb.bezdraw.gen import gen_one_planar, stacked_triangulation


@pytest.mark.parametrize('n', [3, 4, 25])
def test_stacked_triangulation_counts(n):
    rotation, faces = stacked_triangulation(n, np.random.default_rng(0))
    assert len(rotation) == n
    assert len(faces) == 2 * n - 5
    assert sum(map(len, rotation)) == 2 * (3 * n - 6)


@pytest.mark.parametrize('seed', range(5))
def test_generated_embedding(seed):
    emb = gen_one_planar(20, 0.5, seed=seed)
    assert emb.n == 20 + len(emb.dummies)
    assert len(emb.crossing_pairs) == len(emb.dummies)
    graph, _ = emb.to_plane_graph()
    assert graph.euler_characteristic() == 2
    assert all(graph.degree(x) == 4 for x in graph.vertices() if graph.vkind[x] == DUMMY)
    # every crossing pair spans a kite of the original graph
    edges = set(emb.original_edges())
    for (u, v), (p, q) in emb.crossing_pairs:
        for a, b in ((u, p), (p, v), (v, q), (q, u)):
            assert (min(a, b), max(a, b)) in edges


def test_crossing_count():
    assert len(gen_one_planar(30, 0.0, seed=1).crossing_pairs) == 0
    few = len(gen_one_planar(30, 0.2, seed=1).crossing_pairs)
    many = len(gen_one_planar(30, 1.0, seed=1).crossing_pairs)
    assert 0 < few <= round(0.2 * 27)
    assert few <= many <= 27


def test_original_graph_is_simple():
    emb = gen_one_planar(40, 1.0, seed=9)
    g = nx.Graph(emb.original_edges())
    assert g.number_of_nodes() == 40
    assert g.number_of_edges() == len(emb.original_edges())


def test_seeded():
    assert gen_one_planar(25, 0.5, seed=11) == gen_one_planar(25, 0.5, seed=11)


@pytest.mark.parametrize('n, fraction', [(3, 0.5), (10, -0.1), (10, 1.5)])
def test_bad_parameters(n, fraction):
    with pytest.raises(InputError):
        gen_one_planar(n, fraction)
