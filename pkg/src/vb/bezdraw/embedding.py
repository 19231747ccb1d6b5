"""Provide combinatorial plane multigraphs and 1-plane embeddings.

A `PlaneGraph` stores a rotation system: for every vertex the
counterclockwise list of outgoing darts. Edge ``e`` owns the darts ``2e``
(from ``u`` to ``v``) and ``2e + 1`` (from ``v`` to ``u``). The face on
the left of dart ``u->v`` continues with the dart preceding ``v->u`` in the
rotation of ``v``. Inner faces are traversed counterclockwise, the outer
face clockwise.

Identifiers come from an `IdSource` which may be shared by several graphs,
so fragments cut out of a graph keep the identifiers of the original.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable, Iterator, Sequence

import networkx as nx

from .errors import EmbeddingError

logger = logging.getLogger(__name__)

# vertex kinds
ORIGINAL = 'original'
DUMMY = 'dummy'     # degree 4 vertex of a crossing
APEX = 'apex'       # star triangulation centre

# edge kinds
PLAIN = 'plain'     # original edge or half of a crossing edge
KITE = 'kite'       # added around a crossing
STAR = 'star'       # star triangulation spoke
BASE = 'base'       # fragment copy of a thick edge, drawn by the parent

HELPER_KINDS = frozenset((KITE, STAR))


class IdSource:
    """Issue fresh vertex and edge identifiers."""

    def __init__(self, first_vertex: int = 0, first_edge: int = 0) -> None:
        self._vertices = itertools.count(first_vertex)
        self._edges = itertools.count(first_edge)

    def vertex(self) -> int:
        """A new vertex identifier."""
        return next(self._vertices)

    def edge(self) -> int:
        """A new edge identifier."""
        return next(self._edges)


@dataclass
class EdgeInfo:
    """Edge record of a plane multigraph.

    Attributes:
        u, v: endpoints, dart 2e runs from u to v
        kind: one of PLAIN, KITE, STAR, BASE
        label: index of the original edge represented, None for helpers
        fragments: contracted subgraphs carried by a thick edge
    """

    u: int
    v: int
    kind: str = PLAIN
    label: int | None = None
    fragments: list[Any] = field(default_factory=list)


class PlaneGraph:
    """Plane multigraph given by a rotation system."""

    def __init__(self, ids: IdSource | None = None) -> None:
        self.ids = IdSource() if ids is None else ids
        self.rot: dict[int, list[int]] = {}
        self.vkind: dict[int, str] = {}
        self.edges: dict[int, EdgeInfo] = {}
        self.outer: int | None = None

    # --- darts:

    def tail(self, d: int) -> int:
        """Start vertex of a dart."""
        info = self.edges[d >> 1]
        return info.v if d & 1 else info.u

    def head(self, d: int) -> int:
        """End vertex of a dart."""
        return self.tail(d ^ 1)

    def next_dart(self, d: int) -> int:
        """The dart following d along the face on the left of d."""
        back = d ^ 1
        ring = self.rot[self.tail(back)]
        return ring[ring.index(back) - 1]

    def face(self, d: int) -> list[int]:
        """Darts of the face on the left of d, starting with d."""
        darts = [d]
        cur = self.next_dart(d)
        while cur != d:
            darts.append(cur)
            if len(darts) > 2 * len(self.edges) + 1:
                raise EmbeddingError('face traversal does not close')
            cur = self.next_dart(cur)
        return darts

    def face_vertices(self, d: int) -> list[int]:
        """Tails of the darts of the face on the left of d."""
        return [self.tail(x) for x in self.face(d)]

    def faces(self) -> list[list[int]]:
        """All faces, each given by its darts."""
        seen: set[int] = set()
        result = []
        for v in sorted(self.rot):
            for d in self.rot[v]:
                if d not in seen:
                    darts = self.face(d)
                    seen.update(darts)
                    result.append(darts)
        return result

    def darts(self) -> Iterator[int]:
        """All darts in rotation order of ascending vertices."""
        for v in sorted(self.rot):
            yield from self.rot[v]

    # --- queries:

    def vertices(self) -> list[int]:
        """Vertex identifiers in ascending order."""
        return sorted(self.rot)

    def degree(self, v: int) -> int:
        """Number of dart ends at v."""
        return len(self.rot[v])

    def neighbors(self, v: int) -> list[int]:
        """Heads of the darts at v in rotation order."""
        return [self.head(d) for d in self.rot[v]]

    def is_helper(self, e: int) -> bool:
        """Test for an augmentation-only edge."""
        return self.edges[e].kind in HELPER_KINDS and self.edges[e].label is None

    def euler_characteristic(self) -> int:
        """V - E + F."""
        faces = len(self.faces()) if self.edges else 1
        return len(self.rot) - len(self.edges) + faces

    def is_connected(self) -> bool:
        """Test connectivity of the underlying graph."""
        if not self.rot:
            return True
        start = next(iter(self.rot))
        seen = {start}
        stack = [start]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.rot)

    def check(self) -> None:
        """Check consistency and planarity of the rotation system.

        Raises:
            EmbeddingError: naming the violated condition
        """
        counts = Counter(self.darts())
        for e, info in self.edges.items():
            for d, t in ((2 * e, info.u), (2 * e + 1, info.v)):
                if counts[d] != 1 or d not in self.rot.get(t, ()):
                    raise EmbeddingError(f'dart {d} of edge {e} misplaced in rotation')
        if len(counts) != 2 * len(self.edges):
            raise EmbeddingError('rotation refers to unknown darts')
        if not self.is_connected():
            raise EmbeddingError('graph is not connected')
        chi = self.euler_characteristic()
        if chi != 2:
            raise EmbeddingError(f'Euler check failed: V - E + F = {chi}')
        if self.outer is not None and self.outer >> 1 not in self.edges:
            raise EmbeddingError('outer face dart does not exist')

    def to_networkx(self) -> nx.Graph:
        """Simple graph of non-dummy vertices; crossing edges join their ends."""
        graph = nx.Graph()
        graph.add_nodes_from(v for v in self.rot if self.vkind[v] != DUMMY)
        for info in self.edges.values():
            if self.vkind[info.u] != DUMMY and self.vkind[info.v] != DUMMY:
                graph.add_edge(info.u, info.v)
        for x in self.rot:
            if self.vkind[x] == DUMMY:
                p = self.neighbors(x)
                graph.add_edge(p[0], p[2])
                graph.add_edge(p[1], p[3])
        return graph

    # --- modification:

    def add_vertex(self, kind: str = ORIGINAL, vid: int | None = None) -> int:
        """Add an isolated vertex."""
        if vid is None:
            vid = self.ids.vertex()
        if vid in self.rot:
            raise EmbeddingError(f'duplicate vertex {vid}')
        self.rot[vid] = []
        self.vkind[vid] = kind
        return vid

    def new_edge(self, u: int, v: int, kind: str = PLAIN,
                 label: int | None = None, eid: int | None = None) -> int:
        """Register an edge without placing its darts in the rotations."""
        if eid is None:
            eid = self.ids.edge()
        self.edges[eid] = EdgeInfo(u, v, kind, label)
        return eid

    def insert_edge(self, d: int, d2: int, kind: str = KITE,
                    label: int | None = None) -> int:
        """Split the face containing darts d and d2 by a new edge.

        The new edge joins tail(d) to tail(d2); its darts are placed right
        after d and d2 in the rotations. Dart 2e starts at tail(d).
        """
        a, c = self.tail(d), self.tail(d2)
        e = self.new_edge(a, c, kind, label)
        ring_a = self.rot[a]
        ring_a.insert(ring_a.index(d) + 1, 2 * e)
        ring_c = self.rot[c]
        ring_c.insert(ring_c.index(d2) + 1, 2 * e + 1)
        return e

    def remove_edge(self, e: int) -> None:
        """Delete an edge, merging its two faces."""
        darts = (2 * e, 2 * e + 1)
        if self.outer in darts:
            candidate = self.next_dart(self.outer)
            if candidate in darts:
                candidate = self.next_dart(self.outer ^ 1)
            self.outer = None if candidate in darts else candidate
        info = self.edges.pop(e)
        self.rot[info.u].remove(2 * e)
        self.rot[info.v].remove(2 * e + 1)

    def remove_vertex(self, v: int) -> None:
        """Delete a vertex with its edges."""
        for d in list(self.rot[v]):
            if d >> 1 in self.edges:
                self.remove_edge(d >> 1)
        del self.rot[v]
        del self.vkind[v]

    def smooth(self, x: int, kind: str = PLAIN, label: int | None = None) -> int:
        """Replace a degree 2 vertex and its two edges by a single edge."""
        if len(self.rot[x]) != 2:
            raise EmbeddingError(f'cannot smooth vertex {x} of degree {len(self.rot[x])}')
        d1, d2 = self.rot[x]
        c, dv = self.head(d1), self.head(d2)
        in1, in2 = d1 ^ 1, d2 ^ 1
        e = self.new_edge(c, dv, kind, label)
        ring_c, ring_d = self.rot[c], self.rot[dv]
        ring_c[ring_c.index(in1)] = 2 * e
        ring_d[ring_d.index(in2)] = 2 * e + 1
        if self.outer in (d1, in2):
            self.outer = 2 * e + 1
        elif self.outer in (d2, in1):
            self.outer = 2 * e
        del self.edges[d1 >> 1]
        del self.edges[d2 >> 1]
        del self.rot[x]
        del self.vkind[x]
        return e

    def star(self, face_darts: Sequence[int]) -> int:
        """Triangulate a face from a new apex vertex; returns the apex.

        If the outer face is starred, the new outer face is the triangle on
        the left of the first spoke leaving the apex.
        """
        was_outer = self.outer in face_darts
        h = self.add_vertex(APEX)
        spokes = []
        for d in face_darts:
            v = self.tail(d)
            e = self.new_edge(h, v, STAR)
            ring = self.rot[v]
            ring.insert(ring.index(d) + 1, 2 * e + 1)
            spokes.append(2 * e)
        self.rot[h] = spokes
        if was_outer:
            self.outer = spokes[0]
        return h


# --- 1-plane embeddings:

Pair = tuple[tuple[int, int], tuple[int, int]]


def _norm_edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class OnePlaneEmbedding:
    """Combinatorial 1-plane drawing given by its planarization.

    Attributes:
        n: number of vertices of the planarization (dummies included)
        rotation: for every vertex the neighbours in counterclockwise order
        dummies: crossing vertices; the rotation [p0, p1, p2, p3] of
            a dummy means edges p0-p2 and p1-p3 cross there
        crossing_pairs: pairs of crossing original edges
        outer_face: dart (u, v) with the outer face on its left
    """

    n: int
    rotation: tuple[tuple[int, ...], ...]
    dummies: frozenset[int] = frozenset()
    crossing_pairs: tuple[Pair, ...] = ()
    outer_face: tuple[int, int] | None = None

    @classmethod
    def create(cls, rotation: Iterable[Iterable[int]],
               dummies: Iterable[int] = (),
               crossing_pairs: Iterable[Sequence[Sequence[int]]] = (),
               outer_face: Sequence[int] | None = None) -> OnePlaneEmbedding:
        """Build and validate an embedding from plain sequences."""
        rot = tuple(tuple(int(w) for w in ring) for ring in rotation)
        pairs = []
        for pair in crossing_pairs:
            if len(pair) != 2 or any(len(edge) != 2 for edge in pair):
                raise EmbeddingError(f'malformed crossing pair {pair!r}')
            (a, b), (c, d) = pair
            pairs.append(((int(a), int(b)), (int(c), int(d))))
        outer = None if outer_face is None else (int(outer_face[0]), int(outer_face[1]))
        emb = cls(len(rot), rot, frozenset(int(x) for x in dummies), tuple(pairs), outer)
        emb.validate()
        return emb

    def original_vertices(self) -> list[int]:
        """Non-dummy vertices in ascending order."""
        return [v for v in range(self.n) if v not in self.dummies]

    def original_edges(self) -> list[tuple[int, int]]:
        """Edges of the embedded graph: uncrossed ones, then crossing pairs."""
        edges = []
        for u in range(self.n):
            if u in self.dummies:
                continue
            for v in self.rotation[u]:
                if v > u and v not in self.dummies:
                    edges.append((u, v))
        for e1, e2 in self.crossing_pairs:
            edges.extend((_norm_edge(*e1), _norm_edge(*e2)))
        return edges

    def _dummy_pairs(self) -> dict[int, int]:
        """Map every dummy to the index of its crossing pair."""
        index = {}
        for i, (e1, e2) in enumerate(self.crossing_pairs):
            index[frozenset((_norm_edge(*e1), _norm_edge(*e2)))] = i
        result = {}
        for x in sorted(self.dummies):
            p = self.rotation[x]
            key = frozenset((_norm_edge(p[0], p[2]), _norm_edge(p[1], p[3])))
            if key not in index:
                raise EmbeddingError(
                        f'dummy {x} does not alternate the edges of a crossing pair')
            if index[key] in result.values():
                raise EmbeddingError(f'crossing pair {index[key]} has two dummies')
            result[x] = index[key]
        if len(result) != len(self.crossing_pairs):
            raise EmbeddingError('crossing pair without a dummy vertex')
        return result

    def validate(self) -> None:
        """Check every invariant of the embedding.

        Raises:
            EmbeddingError: with a message naming the violated invariant
        """
        if self.n != len(self.rotation) or self.n < 1:
            raise EmbeddingError('vertex count does not match the rotation')
        for v, ring in enumerate(self.rotation):
            for w in ring:
                if not 0 <= w < self.n:
                    raise EmbeddingError(f'vertex {v} has unknown neighbour {w}')
                if w == v:
                    raise EmbeddingError(f'loop at vertex {v}')
                if v not in self.rotation[w]:
                    raise EmbeddingError(f'edge {v}-{w} missing at {w}')
            if len(set(ring)) != len(ring):
                raise EmbeddingError(f'repeated neighbour at vertex {v}')
        for x in self.dummies:
            if not 0 <= x < self.n:
                raise EmbeddingError(f'unknown dummy vertex {x}')
            if len(self.rotation[x]) != 4:
                raise EmbeddingError(f'dummy vertex {x} has degree {len(self.rotation[x])}')
            if any(w in self.dummies for w in self.rotation[x]):
                raise EmbeddingError(f'edge crossed twice at dummy {x}')
        crossed: Counter[tuple[int, int]] = Counter()
        for e1, e2 in self.crossing_pairs:
            ends = (*e1, *e2)
            if len(set(ends)) != 4 or any(w in self.dummies or not 0 <= w < self.n
                                          for w in ends):
                raise EmbeddingError(f'crossing pair {e1}, {e2} needs 4 distinct vertices')
            crossed.update((_norm_edge(*e1), _norm_edge(*e2)))
        for edge, count in crossed.items():
            if count > 1:
                raise EmbeddingError(f'edge {edge} crossed more than once (1-planarity)')
            if edge[1] in self.rotation[edge[0]]:
                raise EmbeddingError(f'crossing edge {edge} duplicates an uncrossed edge')
        self._dummy_pairs()
        self.to_plane_graph()

    def to_plane_graph(self) -> tuple[PlaneGraph, list[tuple[int, int]]]:
        """Build the plane graph of the planarization.

        Returns:
            (graph, original edges); edge labels index the original edges
        """
        originals = self.original_edges()
        label = {edge: i for i, edge in enumerate(originals)}
        pair_of = self._dummy_pairs() if self.dummies else {}
        graph = PlaneGraph(IdSource(self.n))
        for v in range(self.n):
            graph.add_vertex(DUMMY if v in self.dummies else ORIGINAL, v)
        dart_of: dict[tuple[int, int], int] = {}
        for u in range(self.n):
            for v in self.rotation[u]:
                if u < v:
                    if u in pair_of or v in pair_of:
                        x, w = (u, v) if u in pair_of else (v, u)
                        ring = self.rotation[x]
                        i = ring.index(w)
                        lbl = label[_norm_edge(w, ring[(i + 2) % 4])]
                    else:
                        lbl = label[(u, v)]
                    e = graph.new_edge(u, v, PLAIN, lbl)
                    dart_of[(u, v)], dart_of[(v, u)] = 2 * e, 2 * e + 1
        for u in range(self.n):
            graph.rot[u] = [dart_of[(u, v)] for v in self.rotation[u]]
        if self.outer_face is not None:
            if tuple(self.outer_face) not in dart_of:
                raise EmbeddingError(f'outer face dart {self.outer_face} is not an edge')
            graph.outer = dart_of[tuple(self.outer_face)]
        elif graph.edges:
            graph.outer = next(graph.darts())
        graph.check()
        logger.debug('planarization: %d vertices, %d edges', len(graph.rot), len(graph.edges))
        return graph, originals
