"""Draw 1-plane graphs as RAC drawings with one cubic Bézier curve per edge.

The pipeline works on the planarization of the input (`PlaneGraph`):

1. `augment` encloses every crossing in an empty kite, removes faces of
   length two and crossed edges with an uncrossed parallel copy and
   star-triangulates the remaining long faces.
2. `contract` cuts the graph at separation pairs into a tree of components.
   Each cut-out fragment hangs on a thick edge of its parent.
3. Every component is drawn: `strip_crossings` replaces crossings by
   quadrilateral faces, `convex_draw` places the vertices by Tutte's
   barycentric method, `insert_crossing_pairs` draws one diagonal of every
   crossing quadrilateral straight and the other one perpendicular to it,
   and `RacBuilder.expand_thick_edges` draws the fragments inside empty
   triangles next to their thick edges.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx
import numpy as np
from scipy import sparse
from scipy.sparse import linalg as sparse_linalg

from . import pairs
from .drawing import Crossing, Drawing, Edge
from .embedding import (
        BASE, DUMMY, HELPER_KINDS, KITE, PLAIN, PlaneGraph, OnePlaneEmbedding)
from .errors import ConstructionError, GeometryError
from .geometry import (
        EPS_GEOM, AffineMap, ConvexPolygon, CubicBezier, Point, intersect,
        orient, point_in_triangle, segment_intersection)
from .log import DEBUG2

logger = logging.getLogger(__name__)

OUTER_SIZE = 100.0
SHRINK_FACTOR = 0.5
SHRINK_FLOOR = 1e-6
ENDPOINT_EXCLUSION = 1e-4


# --- augmentation:

def augment(graph: PlaneGraph) -> PlaneGraph:
    """Turn the planarization into a triangulated 1-plane multigraph.

    The graph is modified in place and returned.

    Raises:
        ConstructionError: a face of length other than 3 remains
    """
    kites = _add_kites(graph)
    removed = _remove_two_faces(graph)
    uncrossed = _remove_crossed_parallels(graph)
    if uncrossed:
        removed += _remove_two_faces(graph)
    stars = 0
    for face in graph.faces():
        if len(face) > 3:
            graph.star(face)
            stars += 1
    bad = [len(face) for face in graph.faces() if len(face) != 3]
    if bad:
        raise ConstructionError(f'augmentation left a face of length {bad[0]}')
    logger.info(
            'augment: %d kite edges, %d 2-faces removed, %d crossings uncrossed, '
            '%d faces starred', kites, removed, uncrossed, stars)
    return graph


def dummies(graph: PlaneGraph) -> list[int]:
    """Crossing vertices of the graph."""
    return [v for v in graph.vertices() if graph.vkind[v] == DUMMY]


def _add_kites(graph: PlaneGraph) -> int:
    added = 0
    for x in dummies(graph):
        ring = list(graph.rot[x])
        for j in range(4):
            dj, dn = ring[j], ring[(j + 1) % 4]
            if len(graph.face(dj)) == 3:
                continue
            start, end = graph.next_dart(dj), dn ^ 1
            moved = graph.outer in (dj, end)
            e = graph.insert_edge(start, end, KITE)
            if moved:
                graph.outer = 2 * e + 1
            added += 1
    return added


def _remove_two_faces(graph: PlaneGraph) -> int:
    removed = 0
    while True:
        for face in graph.faces():
            if len(face) != 2 or face[0] >> 1 == face[1] >> 1:
                continue
            e1, e2 = face[0] >> 1, face[1] >> 1
            helpers = [e for e in (e1, e2) if graph.is_helper(e)]
            if not helpers:
                continue
            graph.remove_edge(max(helpers))
            removed += 1
            break
        else:
            return removed


def _remove_crossed_parallels(graph: PlaneGraph) -> int:
    uncrossed = 0
    for x in dummies(graph):
        ring = list(graph.rot[x])
        ends = graph.neighbors(x)
        for i in (0, 1):
            a, b = ends[i], ends[i + 2]
            parallel = next((d for d in graph.rot[a] if graph.head(d) == b), None)
            if parallel is None:
                continue
            label = graph.edges[ring[i] >> 1].label
            other = graph.edges[ring[1 - i] >> 1].label
            graph.remove_edge(ring[i] >> 1)
            graph.remove_edge(ring[i + 2] >> 1)
            graph.smooth(x, PLAIN, other)
            info = graph.edges[parallel >> 1]
            info.label, info.kind = label, PLAIN
            logger.debug('crossing edge %d-%d replaced by its parallel copy', a, b)
            uncrossed += 1
            break
    return uncrossed


# --- separation pairs and contraction:

def find_separation_pair(graph: nx.Graph) -> tuple[int, int] | None:
    """Return a separation pair of a connected graph, None if 3-connected.

    Examples:
        >>> find_separation_pair(nx.complete_graph(4)) is None
        True
        >>> find_separation_pair(nx.Graph([(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]))
        (0, 1)
    """
    nodes = sorted(graph)
    if len(nodes) < 4:
        return None
    for u in nodes:
        rest = graph.subgraph(n for n in nodes if n != u)
        candidates = sorted(nx.articulation_points(rest))
        if not nx.is_connected(rest):
            candidates = [w for w in nodes if w != u]
        for w in candidates:
            remains = graph.subgraph(n for n in nodes if n not in (u, w))
            if len(remains) and not nx.is_connected(remains):
                return (u, w) if u < w else (w, u)
    return None


@dataclass
class Component:
    """Node of the contraction tree.

    Attributes:
        graph: the component, triangulated and free of separation pairs
        base: (u, v) of the thick edge the component hangs on, None at root
        children: components cut out of this one
        depth: distance from the root
    """

    graph: PlaneGraph
    base: tuple[int, int] | None = None
    children: list[Component] = field(default_factory=list)
    depth: int = 0

    def walk(self) -> Iterable[Component]:
        """This component and all its descendants."""
        yield self
        for child in self.children:
            yield from child.walk()

    def interior_vertices(self) -> list[int]:
        """Vertices not shared with the parent."""
        skip = set(self.base or ())
        return [v for v in self.graph.vertices() if v not in skip]


def contract(graph: PlaneGraph, base: tuple[int, int] | None = None,
             depth: int = 0) -> Component:
    """Cut the graph at separation pairs; the remainder stays in place.

    Raises:
        ConstructionError: a separation pair without two parallel edges
            bounding a removable region, or a non-simple remainder
    """
    comp = Component(graph, base, depth=depth)
    while True:
        pair = find_separation_pair(graph.to_networkx())
        if pair is None:
            break
        logger.debug('separation pair %s at depth %d', pair, depth)
        frag = _excise(graph, *pair)
        comp.children.append(contract(frag, pair, depth + 1))
    _check_simple(graph)
    if depth == 0:
        logger.info('contract: %d components, %d vertices at the root',
                    sum(1 for _ in comp.walk()), len(graph.rot))
    return comp


def _lens(ring: Sequence[int], first: int, last: int) -> list[int]:
    """Darts strictly between first and last in counterclockwise order."""
    i, j = ring.index(first), ring.index(last)
    if j <= i:
        j += len(ring)
    return [ring[k % len(ring)] for k in range(i + 1, j)]


def _reach(graph: PlaneGraph, starts: Iterable[int], blocked: set[int]) -> set[int]:
    seen: set[int] = set()
    stack = [w for w in starts if w not in blocked]
    while stack:
        w = stack.pop()
        if w in seen:
            continue
        seen.add(w)
        stack.extend(x for x in graph.neighbors(w) if x not in blocked and x not in seen)
    return seen


def _excise(graph: PlaneGraph, u: int, v: int) -> PlaneGraph:
    parallels = [d for d in graph.rot[u] if graph.head(d) == v]
    if len(parallels) < 2:
        raise ConstructionError(
                f'separation pair {u}, {v} is not bounded by parallel edges')
    outer_vertices = set(graph.face_vertices(graph.outer)) if graph.outer is not None else set()
    for j, first in enumerate(parallels):
        last = parallels[(j + 1) % len(parallels)]
        lens_u = _lens(graph.rot[u], first, last)
        content = _reach(graph, (graph.head(d) for d in lens_u), {u, v})
        if content and not content & outer_vertices:
            return _cut(graph, u, v, first, last, lens_u, content)
    raise ConstructionError(f'no removable region at separation pair {u}, {v}')


def _cut(graph: PlaneGraph, u: int, v: int, first: int, last: int,
         lens_u: list[int], content: set[int]) -> PlaneGraph:
    """Move the region between parallel darts first and last into a fragment.

    In the fragment the two parallels are merged into a BASE edge whose
    reverse dart bounds the outer face. In the parent `last` disappears and
    `first` becomes the thick edge carrying the fragment.
    """
    lens_v = _lens(graph.rot[v], last ^ 1, first ^ 1)
    frag = PlaneGraph(graph.ids)
    for w in [u, v, *sorted(content)]:
        frag.add_vertex(graph.vkind[w], w)
    base = frag.new_edge(u, v, BASE)
    frag.rot[u] = [2 * base, *lens_u]
    frag.rot[v] = [*lens_v, 2 * base + 1]
    moved: set[int] = set()
    for w in content:
        frag.rot[w] = list(graph.rot[w])
        moved.update(d >> 1 for d in graph.rot[w])
    for e in moved:
        frag.edges[e] = graph.edges.pop(e)
    frag.outer = 2 * base + 1
    frag.check()
    gone = set(lens_u) | set(lens_v) | {last, last ^ 1}
    graph.rot[u] = [d for d in graph.rot[u] if d not in gone]
    graph.rot[v] = [d for d in graph.rot[v] if d not in gone]
    for w in content:
        del graph.rot[w]
        del graph.vkind[w]
    if graph.outer == last:
        graph.outer = first
    thick, dropped = graph.edges[first >> 1], graph.edges.pop(last >> 1)
    if thick.label is None:
        thick.label = dropped.label
    elif dropped.label is not None:
        raise ConstructionError(f'two original edges {u}-{v} in parallel')
    if BASE in (thick.kind, dropped.kind):
        thick.kind = BASE
    elif thick.kind in HELPER_KINDS and thick.label is not None:
        thick.kind = PLAIN
    thick.fragments.append(frag)
    thick.fragments.extend(dropped.fragments)
    graph.check()
    return frag


def _check_simple(graph: PlaneGraph) -> None:
    for v, ring in graph.rot.items():
        heads = [graph.head(d) for d in ring]
        if len(set(heads)) != len(heads):
            raise ConstructionError(f'parallel edges remain at vertex {v}')


# --- drawing of one component:

@dataclass(frozen=True)
class CrossingQuad:
    """Quadrilateral face left by removing a crossing vertex.

    `cycle` lists the kite vertices counterclockwise around the crossing;
    edges cycle[0]-cycle[2] and cycle[1]-cycle[3] cross with the given
    labels. `dart` runs from cycle[0] to cycle[1] with the face on its left.
    """

    cycle: tuple[int, int, int, int]
    labels: tuple[int | None, int | None]
    dart: int

    def opposite(self, w: int) -> int:
        """The kite vertex sharing a crossing edge with w."""
        i = self.cycle.index(w)
        return self.cycle[(i + 2) % 4]

    def label_at(self, w: int) -> int | None:
        """Label of the crossing edge incident to w."""
        return self.labels[self.cycle.index(w) % 2]


def strip_crossings(graph: PlaneGraph) -> list[CrossingQuad]:
    """Remove the crossing vertices, leaving faces of length 3 or 4.

    Raises:
        ConstructionError: a crossing not enclosed in a kite or a face of
            another length
    """
    quads = []
    for x in dummies(graph):
        ring = list(graph.rot[x])
        cycle = tuple(graph.head(d) for d in ring)
        labels = (graph.edges[ring[0] >> 1].label, graph.edges[ring[1] >> 1].label)
        tri = graph.face(ring[0])
        if len(tri) != 3:
            raise ConstructionError(f'crossing {x} is not enclosed in a kite')
        if graph.outer is not None and graph.outer >> 1 in {d >> 1 for d in ring}:
            outer_face = graph.face(graph.outer)
            graph.outer = next(d for d in outer_face
                               if graph.tail(d) != x and graph.head(d) != x)
        graph.remove_vertex(x)
        quads.append(CrossingQuad(cycle, labels, tri[1]))   # type: ignore[arg-type]
    bad = [len(f) for f in graph.faces() if len(f) not in (3, 4)]
    if bad:
        raise ConstructionError(f'face of length {bad[0]} after stripping crossings')
    return quads


@dataclass
class ConvexDrawing:
    """Straight-line drawing of a component with convex faces."""

    positions: dict[int, Point]
    faces: list[list[int]]
    outer: list[int]

    def check_convex(self, tol: float = EPS_GEOM) -> None:
        """Check that every inner face is strictly convex.

        Raises:
            ConstructionError: naming the first bad face
        """
        outer_key = frozenset(self.outer)
        sign = 0.0
        for face in self.faces:
            if frozenset(face) == outer_key and len(face) == len(self.outer):
                continue
            pts = [self.positions[w] for w in face]
            turns = [orient(pts[i - 1], pts[i], pts[(i + 1) % len(pts)])
                     for i in range(len(pts))]
            scale = max(math.dist(p, q) for p in pts for q in pts) ** 2
            if not sign:
                sign = 1.0 if turns[0] > 0 else -1.0
            if not all(sign * t > tol * scale for t in turns):
                raise ConstructionError(f'face {face} is not strictly convex')


def convex_draw(graph: PlaneGraph, boundary: dict[int, Point]) -> ConvexDrawing:
    """Place the free vertices at the barycentre of their neighbours.

    Args:
        graph: component with crossings stripped
        boundary: fixed positions of the outer face vertices

    Raises:
        ConstructionError: singular system or a non-convex face
    """
    free = [v for v in graph.vertices() if v not in boundary]
    positions = dict(boundary)
    if free:
        index = {v: i for i, v in enumerate(free)}
        size = len(free)
        matrix = sparse.dok_matrix((size, size), dtype=np.float64)
        rhs = np.zeros((size, 2))
        for v, i in index.items():
            for d in graph.rot[v]:
                w = graph.head(d)
                matrix[i, i] += 1.0
                if w in index:
                    matrix[i, index[w]] -= 1.0
                else:
                    rhs[i] += boundary[w]
        csr = matrix.tocsr()
        xs = sparse_linalg.spsolve(csr, rhs[:, 0])
        ys = sparse_linalg.spsolve(csr, rhs[:, 1])
        xs, ys = np.atleast_1d(xs), np.atleast_1d(ys)
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise ConstructionError('singular barycentric system')
        for v, i in index.items():
            positions[v] = Point(xs[i], ys[i])
    outer = graph.face_vertices(graph.outer) if graph.outer is not None else []
    faces = [[graph.tail(d) for d in face] for face in graph.faces()]
    drawing = ConvexDrawing(positions, faces, outer)
    drawing.check_convex()
    return drawing


@dataclass(frozen=True)
class PairDrawing:
    """Curves of a crossing pair and their crossing point."""

    label_a: int | None
    ends_a: tuple[int, int]
    curve_a: CubicBezier
    label_b: int | None
    ends_b: tuple[int, int]
    curve_b: CubicBezier
    point: Point


def perpendicular_slope(A: Point, B: Point, direction: Point) -> float:
    """Slope, in the frame with B at the origin and A at (1, 0), of the
    direction perpendicular to `direction`.

    Examples:
        >>> perpendicular_slope(Point(1, 0), Point(0, 0), Point(1, 1))
        -1.0
    """
    to_norm = AffineMap.two_point(B, A, (0, 0), (1, 0))
    normal = to_norm.apply_vector(direction.perp())
    if abs(normal.x) < EPS_GEOM * normal.norm():
        raise ConstructionError('crossing diagonals are parallel')
    return normal.y / normal.x


def insert_crossing_pairs(cd: ConvexDrawing, quads: Iterable[CrossingQuad],
                          safety: float = pairs.SAFETY_FACTOR) -> list[PairDrawing]:
    """Draw every crossing pair inside its quadrilateral face at a right angle.

    The diagonal cycle[0]-cycle[2] is straight; the other diagonal passes
    through the intersection of the diagonals perpendicularly.
    """
    result = []
    for quad in quads:
        p0, p1, p2, p3 = (cd.positions[w] for w in quad.cycle)
        try:
            poly = ConvexPolygon((p0, p1, p2, p3))
        except GeometryError as exc:
            raise ConstructionError(f'crossing face {quad.cycle}: {exc}') from exc
        hit = segment_intersection(p0, p2, p1, p3)
        if not isinstance(hit, tuple):
            raise ConstructionError(f'diagonals of face {quad.cycle} do not cross')
        X = p0 + (p2 - p0) * hit[0]
        m = perpendicular_slope(p3, p1, p2 - p0)
        spec = pairs.slope_curve(poly, p3, p1, X, m, safety=safety)
        result.append(PairDrawing(
                quad.labels[0], (quad.cycle[0], quad.cycle[2]), CubicBezier.line(p0, p2),
                quad.labels[1], (quad.cycle[1], quad.cycle[3]), spec.result, X))
    return result


# --- the whole pipeline:

@dataclass
class RacResult:
    """Output drawing plus the complete construction.

    Attributes:
        drawing: the input graph only, vertices renumbered compactly
        full: every constructed vertex and edge (helpers included),
            keyed by internal vertex identifiers
        root: contraction tree
        vertex_map: internal vertex id -> output vertex index
    """

    drawing: Drawing
    full: Drawing
    root: Component | None
    vertex_map: dict[int, int]


class RacBuilder:
    """Stateful drawing of a contraction tree.

    All drawn curves are kept so that the empty triangle search for thick
    edges sees everything placed so far.
    """

    def __init__(self, outer_size: float = OUTER_SIZE,
                 shrink_factor: float = SHRINK_FACTOR,
                 shrink_floor: float = SHRINK_FLOOR,
                 safety: float = pairs.SAFETY_FACTOR,
                 tol: float = EPS_GEOM,
                 endpoint_exclusion: float = ENDPOINT_EXCLUSION) -> None:
        self.outer_size = outer_size
        self.shrink_factor = shrink_factor
        self.shrink_floor = shrink_floor
        self.safety = safety
        self.tol = tol
        self.endpoint_exclusion = endpoint_exclusion
        self.positions: dict[int, Point] = {}
        self.curves: list[tuple[int, int, CubicBezier, int | None]] = []
        self.crossings: list[tuple[int, int, Point]] = []

    def outer_triangle(self) -> tuple[Point, Point, Point]:
        """Fixed outer triangle of the root component."""
        s = self.outer_size
        return Point(0, 0), Point(s, 0), Point(s / 2, s * math.sqrt(3) / 2)

    def _add_curve(self, u: int, v: int, curve: CubicBezier, label: int | None) -> None:
        self.curves.append((u, v, curve, label))

    def draw_component(self, comp: Component,
                       triangle: tuple[Point, Point, Point] | None = None) -> None:
        """Draw a component and, recursively, the fragments it carries.

        Args:
            comp: the component
            triangle: positions of base u, base v and the free apex for
                a fragment; None draws the root in the outer triangle
        """
        graph = comp.graph
        quads = strip_crossings(graph)
        outer_darts = graph.face(graph.outer)
        outer = [graph.tail(d) for d in outer_darts]
        if triangle is None:
            corners = self.outer_triangle()
            a, b = outer[0], outer[1]
        else:
            corners = triangle
            a, b = comp.base        # type: ignore[misc]
        boundary = {a: corners[0], b: corners[1]}
        outer_pair = None
        if len(outer) == 3:
            third = next(w for w in outer if w not in (a, b))
            boundary[third] = corners[2]
        else:
            quad = next(q for q in quads if q.dart in outer_darts)
            quads.remove(quad)
            res = pairs.outside_pair(corners[0], corners[1], corners[2])
            boundary[quad.opposite(a)] = res.E
            boundary[quad.opposite(b)] = res.F
            outer_pair = PairDrawing(
                    quad.label_at(a), (a, quad.opposite(a)), res.curve_AE,
                    quad.label_at(b), (b, quad.opposite(b)), res.curve_BF, res.crossing)
        cd = convex_draw(graph, boundary)
        self.positions.update(cd.positions)
        # a labelled BASE edge is an original edge parallel to the thick edge
        for info in graph.edges.values():
            if info.kind != BASE or info.label is not None:
                self._add_curve(info.u, info.v, CubicBezier.line(
                        cd.positions[info.u], cd.positions[info.v]), info.label)
        drawn = insert_crossing_pairs(cd, quads, self.safety)
        if outer_pair is not None:
            drawn.append(outer_pair)
        for pd in drawn:
            self._add_curve(*pd.ends_a, pd.curve_a, pd.label_a)
            self._add_curve(*pd.ends_b, pd.curve_b, pd.label_b)
            if pd.label_a is not None and pd.label_b is not None:
                self.crossings.append((pd.label_a, pd.label_b, pd.point))
        logger.debug('component at depth %d: %d vertices, %d crossings',
                     comp.depth, len(cd.positions), len(drawn))
        self.expand_thick_edges(comp)

    def expand_thick_edges(self, comp: Component) -> None:
        """Draw the fragments carried by the thick edges of a component."""
        for child in comp.children:
            u, v = child.base      # type: ignore[misc]
            pu, pv = self.positions[u], self.positions[v]
            apex = self.empty_apex(pu, pv)
            self.draw_component(child, (pu, pv, apex))

    def empty_apex(self, pu: Point, pv: Point) -> Point:
        """Apex x of the largest empty isosceles triangle on segment uv.

        Both sides of uv are searched, shrinking the height geometrically.

        Raises:
            ConstructionError: region exhausted
        """
        base = pv - pu
        length = base.norm()
        mid, normal = (pu + pv) / 2, base.perp().unit()
        best: tuple[float, Point] | None = None
        for side in (1.0, -1.0):
            height = length * math.sqrt(3) / 2
            while height >= self.shrink_floor * length:
                apex = mid + normal * (side * height)
                if self._is_empty(pu, pv, apex):
                    if best is None or height > best[0]:
                        best = (height, apex)
                    break
                logger.log(DEBUG2, 'triangle height %g not empty', height)
                height *= self.shrink_factor
        if best is None:
            raise ConstructionError('region exhausted')
        return best[1]

    def _is_empty(self, pu: Point, pv: Point, apex: Point) -> bool:
        for p in self.positions.values():
            if p in (pu, pv):
                continue
            if point_in_triangle(p, pu, pv, apex, self.tol):
                return False
        sides = (CubicBezier.line(pu, apex), CubicBezier.line(pv, apex))
        for side in sides:
            sx0, sy0, sx1, sy1 = side.bbox()
            for _, _, curve, _ in self.curves:
                cx0, cy0, cx1, cy1 = curve.bbox()
                if cx1 < sx0 or sx1 < cx0 or cy1 < sy0 or sy1 < cy0:
                    continue
                res = intersect(side, curve, self.tol, self.endpoint_exclusion)
                if res.overlap or res.hits:
                    return False
        return True


def _trivial(emb: OnePlaneEmbedding, outer_size: float) -> RacResult:
    """Drawing of graphs with at most two vertices or no edges."""
    verts = emb.original_vertices()
    index = {v: i for i, v in enumerate(verts)}
    positions = [Point(outer_size * i, 0) for i in range(len(verts))]
    edges = [Edge(index[a], index[b], CubicBezier.line(positions[index[a]], positions[index[b]]))
             for a, b in emb.original_edges()]
    drawing = Drawing(positions, edges, [])
    return RacResult(drawing, drawing, None, index)


def build_rac(emb: OnePlaneEmbedding, **options) -> RacResult:
    """Run the whole pipeline and keep the construction.

    Keyword arguments are passed to `RacBuilder`.
    """
    verts = emb.original_vertices()
    if len(verts) < 3 or not emb.original_edges():
        return _trivial(emb, options.get('outer_size', OUTER_SIZE))
    graph, originals = emb.to_plane_graph()
    logger.info('input: %d vertices, %d edges, %d crossings',
                len(verts), len(originals), len(emb.crossing_pairs))
    augment(graph)
    root = contract(graph)
    builder = RacBuilder(**options)
    builder.draw_component(root)
    drawing, full, vertex_map = hide_helpers(builder, verts, originals)
    return RacResult(drawing, full, root, vertex_map)


def hide_helpers(builder: RacBuilder, verts: Sequence[int],
                 originals: Sequence[tuple[int, int]]
                 ) -> tuple[Drawing, Drawing, dict[int, int]]:
    """Split the construction into the drawing of the input graph and the full one.

    Helper vertices and the kite and star edges are left out of the first
    drawing; every original edge must have been drawn exactly once.

    Returns:
        (drawing, full drawing, original vertex id -> output index)
    """
    vertex_map = {v: i for i, v in enumerate(verts)}
    by_label: dict[int, tuple[int, int, CubicBezier]] = {}
    for u, v, curve, label in builder.curves:
        if label is None:
            continue
        if label in by_label:
            raise ConstructionError(f'edge {originals[label]} drawn twice')
        by_label[label] = (u, v, curve)
    edges = []
    for label, (a, b) in enumerate(originals):
        if label not in by_label:
            raise ConstructionError(f'edge {(a, b)} was not drawn')
        curve = by_label[label][2]
        edges.append(Edge.oriented(vertex_map[a], vertex_map[b], curve, builder.positions[a]))
    crossings = [Crossing(e1, e2, p) for e1, e2, p in builder.crossings]
    drawing = Drawing([builder.positions[v] for v in verts], edges, crossings)
    full_ids = sorted(builder.positions)
    full_index = {v: i for i, v in enumerate(full_ids)}
    full = Drawing(
            [builder.positions[v] for v in full_ids],
            [Edge.oriented(full_index[u], full_index[v], c, builder.positions[u])
             for u, v, c, _ in builder.curves],
            [])
    logger.info('drawing: %d vertices, %d edges, %d crossings (%d helper vertices)',
                len(drawing.positions), len(edges), len(crossings),
                len(full_ids) - len(verts))
    return drawing, full, vertex_map


def draw_rac(emb: OnePlaneEmbedding, **options) -> Drawing:
    """RAC drawing of a 1-plane embedding with one cubic Bézier per edge."""
    return build_rac(emb, **options).drawing
