"""Draw planar graphs with one cubic Bézier per edge from joint-box drawings.

A joint-box drawing places every vertex v on an integer grid inside a
diamond of half-diagonal ``2 deg(v) + 2``. Its boundary is split into
eight regions of π/4: four port regions (R, L and the two halves of M)
and four free regions. Every edge leaves its port endpoint A through one
of ``deg(A)`` ports of a port region and reaches its free endpoint B in
the opposite free region.

Each edge is normalized by a similarity taking A to the origin and its
port region to the sector between the x-axis and the diagonal. The edge is
then drawn as the cubic with control points A, P, P, B where P depends on
the slope of B and on the port index.
"""

from __future__ import annotations

import functools
import logging
import math
import re
from collections import defaultdict
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Sequence

import numpy as np
import yaml

from .drawing import Drawing, Edge
from .errors import GeometryError, JointBoxError
from .geometry import AffineMap, CubicBezier, Point, apply
from .schema import FixtureItem, parse

logger = logging.getLogger(__name__)

# port regions and the free region their edges end in
PORT_R = 'R'
PORT_L = 'L'
PORT_ML = 'M-left'
PORT_MR = 'M-right'
PORT_REGIONS = (PORT_R, PORT_L, PORT_ML, PORT_MR)
FREE_OF = {PORT_R: 'L', PORT_L: 'R', PORT_ML: 'M', PORT_MR: 'M'}

# linear parts sending a port region onto the sector 0 <= y < x
_REGION_MAPS = {
    PORT_R: AffineMap(1.0, 0.0, 0.0, 1.0),
    PORT_L: AffineMap(-1.0, 0.0, 0.0, 1.0),
    PORT_MR: AffineMap(0.0, -1.0, 1.0, 0.0),
    PORT_ML: AffineMap(0.0, -1.0, -1.0, 0.0),
}

FIXTURE_FILE = 'fixtures.yaml'
FIXTURES = ('single-edge', 'two-boxes', 'triangle', 'star-<d>', 'wheel-<n>')


@dataclass(frozen=True)
class JointBoxEdge:
    """Edge from port endpoint `a` to free endpoint `b`.

    Attributes:
        a: port endpoint
        region: port region of `a`, one of PORT_REGIONS
        port: port index, 1 at the middle of the box side
        b: free endpoint
        free: free region of `b`, 'L', 'R' or 'M'
    """

    a: int
    region: str
    port: int
    b: int
    free: str = ''

    def __post_init__(self) -> None:
        if self.region not in PORT_REGIONS:
            raise JointBoxError(f'unknown port region {self.region!r}')
        if not self.free:
            object.__setattr__(self, 'free', FREE_OF[self.region])


@dataclass
class JointBoxDrawing:
    """Vertices on an integer grid and edges routed through joint-box ports."""

    positions: list[tuple[int, int]] = field(default_factory=list)
    edges: list[JointBoxEdge] = field(default_factory=list)

    def degree(self, v: int) -> int:
        """Number of edges at v."""
        return sum((e.a == v) + (e.b == v) for e in self.edges)

    def degrees(self) -> list[int]:
        """Degrees of all vertices."""
        result = [0] * len(self.positions)
        for e in self.edges:
            result[e.a] += 1
            result[e.b] += 1
        return result

    def half_size(self, v: int) -> int:
        """Half diagonal of the joint box of v."""
        return 2 * self.degree(v) + 2

    def width(self) -> int:
        """Largest side of the grid bounding box."""
        if not self.positions:
            return 0
        xs, ys = zip(*self.positions)
        return max(max(xs) - min(xs), max(ys) - min(ys))

    def bend(self, edge: JointBoxEdge) -> Point:
        """Port point the 1-bend polyline of the edge passes through."""
        d = self.degree(edge.a)
        back = normalize_edge(edge, self).inverse()
        return back.apply_point((d + 1 + edge.port, d + 1 - edge.port))

    def validate(self) -> None:
        """Check the joint-box invariants; see `validate_joint_boxes`."""
        validate_joint_boxes(self)


def normalize_edge(edge: JointBoxEdge, jbd: JointBoxDrawing) -> AffineMap:
    """Similarity taking the port endpoint to the origin and B into the wedge.

    Raises:
        JointBoxError: B outside the wedge 0 <= y < x - 1 after mapping
    """
    pa = jbd.positions[edge.a]
    linear = _REGION_MAPS[edge.region]
    shift = linear.apply_vector(pa)
    m = AffineMap(linear.a, linear.b, linear.c, linear.d, -shift.x, -shift.y)
    b1, b2 = m.apply_point(jbd.positions[edge.b])
    if not 0 <= b2 < b1 - 1:
        raise JointBoxError(
                f'edge {edge.a}-{edge.b} leaves port region {edge.region} '
                f'towards ({b1:g}, {b2:g}) outside the wedge')
    return m


@dataclass(frozen=True)
class EdgeCurveParams:
    """Parameters of the curve of one edge in the normalized frame.

    Examples:
        >>> EdgeCurveParams.create(10, 0, 1, 3).P
        Point(1.0, 0.75)
    """

    b1: float
    b2: float
    s: float
    i: int
    d: int
    k: float
    Q: Point
    P: Point

    @classmethod
    def create(cls, b1: float, b2: float, i: int, d: int) -> EdgeCurveParams:
        """Compute s, k, Q and P for far endpoint (b1, b2) and port i of d.

        Raises:
            GeometryError: parameters outside their domain
        """
        if not (b1 > 1 and 0 <= b2 < b1 - 1):
            raise GeometryError(f'endpoint ({b1}, {b2}) outside the wedge 0 <= y < x - 1')
        if not 1 <= i <= d:
            raise GeometryError(f'port index {i} not in 1..{d}')
        s = b2 / b1
        k = i / (d + 1)
        Q = Point(1 + s / 2, s / 2)
        P = Point(1 - k + k * Q.x, 1 - k + k * Q.y)
        return cls(float(b1), float(b2), s, i, d, k, Q, P)

    @property
    def curve(self) -> CubicBezier:
        """The curve A P P B with A at the origin."""
        return CubicBezier((0.0, 0.0), self.P, self.P, (self.b1, self.b2))


def gamma_curve(b1: float, b2: float, i: int, d: int) -> CubicBezier:
    """Normalized curve from the origin to (b1, b2) through port i of d.

    Examples:
        >>> gamma_curve(10, 0, 1, 3)
        CubicBezier(Point(0.0, 0.0), Point(1.0, 0.75), Point(1.0, 0.75), Point(10.0, 0.0))
    """
    return EdgeCurveParams.create(b1, b2, i, d).curve


def draw_planar(jbd: JointBoxDrawing, validate: bool = True) -> Drawing:
    """Replace every 1-bend edge of a joint-box drawing by its cubic curve."""
    if validate:
        validate_joint_boxes(jbd)
    degrees = jbd.degrees()
    positions = [Point(x, y) for x, y in jbd.positions]
    edges = []
    for edge in jbd.edges:
        m = normalize_edge(edge, jbd)
        b1, b2 = m.apply_point(positions[edge.b])
        curve = apply(m.inverse(), gamma_curve(b1, b2, edge.port, degrees[edge.a]))
        edges.append(Edge(edge.a, edge.b, curve))
    logger.info('planar drawing: %d vertices, %d edges, grid width %d',
                len(positions), len(edges), jbd.width())
    return Drawing(positions, edges, [])


# --- validation:

def _check_simple(jbd: JointBoxDrawing) -> None:
    n = len(jbd.positions)
    seen = set()
    for edge in jbd.edges:
        if not (0 <= edge.a < n and 0 <= edge.b < n):
            raise JointBoxError(f'edge {edge.a}-{edge.b} refers to a missing vertex')
        if edge.a == edge.b:
            raise JointBoxError(f'loop at vertex {edge.a}')
        key = frozenset((edge.a, edge.b))
        if key in seen:
            raise JointBoxError(f'edge {edge.a}-{edge.b} appears twice')
        seen.add(key)
        if edge.free != FREE_OF[edge.region]:
            raise JointBoxError(
                    f'edge {edge.a}-{edge.b} pairs port region {edge.region} '
                    f'with free region {edge.free}')


def _check_boxes(jbd: JointBoxDrawing) -> None:
    if len(jbd.positions) < 2:
        return
    pos = np.asarray(jbd.positions, dtype=np.int64)
    half = 2 * np.asarray(jbd.degrees(), dtype=np.int64) + 2
    dist = np.abs(pos[:, None, :] - pos[None, :, :]).sum(axis=2)
    clash = dist <= half[:, None] + half[None, :]
    np.fill_diagonal(clash, False)
    if clash.any():
        u, v = (int(w) for w in np.argwhere(clash)[0])
        raise JointBoxError(f'joint boxes of vertices {u} and {v} overlap')


def validate_joint_boxes(jbd: JointBoxDrawing) -> None:
    """Check every joint-box invariant.

    Raises:
        JointBoxError: naming the violated invariant
    """
    for v, p in enumerate(jbd.positions):
        if len(p) != 2 or not all(isinstance(c, (int, np.integer)) for c in p):
            raise JointBoxError(f'vertex {v} is not on the integer grid')
    _check_simple(jbd)
    _check_boxes(jbd)
    degrees = jbd.degrees()
    groups: dict[tuple[int, str], list[tuple[int, Point]]] = defaultdict(list)
    free_m: dict[int, set[str]] = defaultdict(set)
    for edge in jbd.edges:
        if not 1 <= edge.port <= degrees[edge.a]:
            raise JointBoxError(
                    f'port {edge.port} of vertex {edge.a} not in 1..{degrees[edge.a]}')
        m = normalize_edge(edge, jbd)
        groups[(edge.a, edge.region)].append((edge.port, m.apply_point(jbd.positions[edge.b])))
        if edge.free == 'M':
            free_m[edge.b].add(edge.region)
    for (v, region), ports in groups.items():
        ports.sort()
        for (i, bi), (j, bj) in zip(ports, ports[1:]):
            if i == j:
                raise JointBoxError(f'port {i} of region {region} at vertex {v} used twice')
            if bj.cross(bi) <= 0:
                raise JointBoxError(
                        f'ports {i} and {j} of region {region} at vertex {v} '
                        'disagree with the order of their far endpoints')
    for v, halves in free_m.items():
        if len(halves) > 1:
            raise JointBoxError(f'both halves of the free M region of vertex {v} carry edges')


# --- construction:

def port_region(delta: Sequence[int]) -> str | None:
    """Port region at A of the edge towards A + delta, None if it is free.

    Examples:
        >>> port_region((5, 2)), port_region((0, -3)), port_region((2, 5))
        ('R', 'M-right', None)
    """
    dx, dy = delta
    if dx > 0 and 0 <= dy < dx:
        return PORT_R
    if dx < 0 and 0 <= dy < -dx:
        return PORT_L
    if dy < 0 and 0 <= dx < -dy:
        return PORT_MR
    if dy < dx < 0:
        return PORT_ML
    return None


def build_joint_box_drawing(positions: Sequence[Sequence[int]],
                            edges: Iterable[Sequence[int]]) -> JointBoxDrawing:
    """Assign port regions and indices to straight edges between grid points.

    The port endpoint of an edge is the first endpoint whose port region
    contains the direction of the edge. Ports of a region are numbered by
    the counterclockwise order of their far endpoints, the most
    counterclockwise one getting port 1.

    Raises:
        JointBoxError: an edge fits no port region or the result is invalid
    """
    pos = [(int(x), int(y)) for x, y in positions]
    routed = []
    for u, v in edges:
        for a, b in ((u, v), (v, u)):
            region = port_region((pos[b][0] - pos[a][0], pos[b][1] - pos[a][1]))
            if region is not None:
                routed.append((int(a), region, int(b)))
                break
        else:
            raise JointBoxError(f'edge {u}-{v} fits no port region')
    groups: dict[tuple[int, str], list[int]] = defaultdict(list)
    for idx, (a, region, b) in enumerate(routed):
        groups[(a, region)].append(idx)
    ports = {}
    for (a, region), members in groups.items():
        linear = _REGION_MAPS[region]

        def slope_angle(idx: int) -> float:
            b = routed[idx][2]
            x, y = linear.apply_vector((pos[b][0] - pos[a][0], pos[b][1] - pos[a][1]))
            return math.atan2(y, x)

        for port, idx in enumerate(sorted(members, key=slope_angle, reverse=True), 1):
            ports[idx] = port
    jbd = JointBoxDrawing(
            pos, [JointBoxEdge(a, region, ports[idx], b)
                  for idx, (a, region, b) in enumerate(routed)])
    validate_joint_boxes(jbd)
    return jbd


# --- fixtures:

@functools.lru_cache(maxsize=None)
def shipped_fixtures() -> dict[str, FixtureItem]:
    """Static fixtures of the package data file, by name."""
    text = resources.files(__package__).joinpath(FIXTURE_FILE).read_text(encoding='utf-8')
    return {name: parse(FixtureItem, item, f'fixture {name}')
            for name, item in yaml.safe_load(text).items()}


def _star(d: int) -> JointBoxDrawing:
    width = 9 * d + 4
    positions = [(0, 0)] + [(width, 9 * (d - j) + 1) for j in range(1, d + 1)]
    return build_joint_box_drawing(positions, [(0, j) for j in range(1, d + 1)])


def _wheel(n: int) -> JointBoxDrawing:
    # rim: an arc in front of the hub's right ports, then three anchors
    radius = 40 * n + 100
    arc = n - 3
    angles = [345 + 50 * j / (arc - 1) for j in range(arc)] + [150, 220, 265]
    positions = [(0, 0)] + [
            (round(radius * math.cos(math.radians(a))),
             round(radius * math.sin(math.radians(a)))) for a in angles]
    spokes = [(0, j) for j in range(1, n + 1)]
    rim = [(j, j % n + 1) for j in range(1, n + 1)]
    return build_joint_box_drawing(positions, spokes + rim)


def make_fixture(name: str) -> JointBoxDrawing:
    """Build one of the shipped joint-box drawings.

    Names are the entries of `fixtures.yaml` (`single-edge`, `two-boxes`,
    `triangle`), `star-<d>` with d >= 1 and `wheel-<n>` with n >= 5.

    Examples:
        >>> len(make_fixture('wheel-8').edges)
        16

    Raises:
        JointBoxError: unknown fixture name
    """
    static = shipped_fixtures().get(name)
    if static is not None:
        return build_joint_box_drawing(static.positions, static.edges)
    match = re.fullmatch(r'(star|wheel)-(\d+)', name)
    if match:
        size = int(match.group(2))
        if match.group(1) == 'star' and size >= 1:
            return _star(size)
        if match.group(1) == 'wheel' and size >= 5:
            return _wheel(size)
    raise JointBoxError(f'unknown fixture {name!r}, expected one of {", ".join(FIXTURES)}')


# --- curvature bound:

def curvature_grid(b1: float, n: int = 101) -> np.ndarray:
    """Curvature of the normalized curves over an (s, k, t) grid on [0, 1]^3.

    Returns:
        array of shape (n, n, n) indexed by s, k and t
    """
    s, k, t = np.meshgrid(*(np.linspace(0.0, 1.0, n),) * 3, indexing='ij')
    px = 1 - k + k * (1 + s / 2)
    py = 1 - k + k * s / 2
    bx, by = b1, b1 * s
    mt = 1 - t
    d1x = 3 * mt ** 2 * px + 3 * t ** 2 * (bx - px)
    d1y = 3 * mt ** 2 * py + 3 * t ** 2 * (by - py)
    d2x = -6 * mt * px + 6 * t * (bx - px)
    d2y = -6 * mt * py + 6 * t * (by - py)
    speed = np.hypot(d1x, d1y)
    return np.abs(d1x * d2y - d1y * d2x) / speed ** 3
