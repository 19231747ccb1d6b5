"""Generate random 1-plane embeddings.

A planar triangulation is grown by inserting vertices into random inner
faces. Disjoint pairs of adjacent inner triangles are then merged into
kites: the shared edge gets a dummy vertex where the new diagonal crosses
it.
"""

from __future__ import annotations

import logging

import numpy as np

from .embedding import OnePlaneEmbedding
from .errors import InputError

logger = logging.getLogger(__name__)

Triangle = tuple[int, int, int]


def _insert_after(ring: list[int], anchor: int, w: int) -> None:
    ring.insert(ring.index(anchor) + 1, w)


def stacked_triangulation(n: int, rng: np.random.Generator
                          ) -> tuple[list[list[int]], list[Triangle]]:
    """Random stacked triangulation on n vertices.

    Returns:
        (counterclockwise rotation of every vertex, inner faces as
        counterclockwise triangles); the outer face is 0, 2, 1
    """
    rotation = [[1, 2], [2, 0], [0, 1]]
    faces: list[Triangle] = [(0, 1, 2)]
    for x in range(3, n):
        a, b, c = faces.pop(int(rng.integers(len(faces))))
        _insert_after(rotation[a], b, x)
        _insert_after(rotation[b], c, x)
        _insert_after(rotation[c], a, x)
        rotation.append([a, b, c])
        faces.extend(((a, b, x), (b, c, x), (c, a, x)))
    return rotation, faces


def kite_embedding() -> OnePlaneEmbedding:
    """Quadrilateral 0, 1, 2, 3 with crossing diagonals through dummy 4.

    Examples:
        >>> kite_embedding().crossing_pairs
        (((0, 2), (1, 3)),)
    """
    rotation = [[1, 4, 3], [2, 4, 0], [3, 4, 1], [0, 4, 2], [2, 3, 0, 1]]
    return OnePlaneEmbedding.create(rotation, [4], [((0, 2), (1, 3))], outer_face=(1, 0))


def gen_one_planar(n: int, crossing_fraction: float = 0.5, seed: int = 0) -> OnePlaneEmbedding:
    """Random 1-plane embedding with kite crossings.

    Args:
        n: number of original vertices, at least 4
        crossing_fraction: share of the ``(2n - 5) // 2`` possible kites to
            create; fewer are made when the greedy choice runs out
        seed: seed of the numpy generator; equal seeds give equal output

    Raises:
        InputError: parameters out of range

    Examples:
        >>> emb = gen_one_planar(6, 0.0, seed=1)
        >>> emb.n, emb.crossing_pairs
        (6, ())
        >>> len(gen_one_planar(30, 1.0, seed=2).dummies) > 0
        True
    """
    if n < 4:
        raise InputError(f'n must be at least 4, got {n}')
    if not 0.0 <= crossing_fraction <= 1.0:
        raise InputError(f'crossing fraction {crossing_fraction} outside [0, 1]')
    rng = np.random.default_rng(seed)
    rotation, faces = stacked_triangulation(n, rng)
    target = int(round(crossing_fraction * ((2 * n - 5) // 2)))

    # inner edge -> its two faces, with the apex of each
    sides: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for f, (a, b, c) in enumerate(faces):
        for u, v, apex in ((a, b, c), (b, c, a), (c, a, b)):
            sides.setdefault((min(u, v), max(u, v)), []).append((f, apex))
    inner = sorted(edge for edge, fs in sides.items() if len(fs) == 2)

    used: set[int] = set()
    adjacent = [set(ring) for ring in rotation]
    dummies = []
    pairs = []
    for idx in rng.permutation(len(inner)):
        if len(pairs) >= target:
            break
        u, v = inner[idx]
        (f1, p), (f2, q) = sides[(u, v)]
        if f1 in used or f2 in used or q in adjacent[p]:
            continue
        used.update((f1, f2))
        # orient u -> v so that p lies on its left
        tri = faces[f1]
        if tri.index(v) != (tri.index(u) + 1) % 3:
            u, v = v, u
        x = len(rotation)
        rotation[u][rotation[u].index(v)] = x
        rotation[v][rotation[v].index(u)] = x
        _insert_after(rotation[p], u, x)
        _insert_after(rotation[q], v, x)
        rotation.append([v, p, u, q])
        adjacent[p].add(q)
        adjacent[q].add(p)
        dummies.append(x)
        pairs.append(((u, v), (p, q)))
    logger.info('generated %d vertices with %d crossings (asked for %d)', n, len(pairs), target)
    return OnePlaneEmbedding.create(rotation, dummies, pairs, outer_face=(1, 0))
