"""Certify drawings numerically: intersections, crossing angles, resolution, curvature.

The verifier sees only a `Drawing`; it knows nothing about how the drawing
was built. Every finding that breaks the claimed properties becomes a
`Violation` of the `VerificationReport`.
"""

from __future__ import annotations

import logging
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Any, Iterator

import numpy as np
from scipy.spatial import cKDTree

from . import log, ppr
from .drawing import Drawing, Edge
from .errors import GeometryError, InputError
from .geometry import (
        CLUSTER_TOL, EPS_DERIV, EPS_GEOM, CubicBezier, Point, crossing_angle, intersect, orient)
from .geometry import max_curvature as curve_max_curvature

logger = logging.getLogger(__name__)

MODE_RAC = 'rac'
MODE_PLANAR = 'planar'
MODES = (MODE_RAC, MODE_PLANAR)

TOL_ANGLE = 1e-6
ENDPOINT_EXCLUSION = 1e-4
CURVATURE_SAMPLES = 1024
CURVATURE_RATIO = 12 / 128      # kappa^2 / b1 of the planar curves
CURVATURE_SMALL = 3.0           # planar curves with b1 >= 4 stay below
RESOLUTION_SLACK = 1e-9
VERTEX_SAMPLES = 512

# violation kinds
UNEXPECTED = 'unexpected-intersection'
OVERLAP = 'overlapping-edges'
BAD_ANGLE = 'bad-angle'
MISSING = 'missing-crossing'
REPEATED = 'repeated-crossing'
SHORTFALL = 'resolution-shortfall'
CONTAINMENT = 'containment-breach'
INFINITE = 'infinite-curvature'
CURVATURE = 'curvature-bound'


@dataclass(frozen=True)
class Contact:
    """Intersection of two edges away from their shared endpoints."""

    e1: int
    e2: int
    point: Point
    angle: float
    t1: float
    t2: float
    declared: bool = False


@dataclass(frozen=True)
class Violation:
    """A finding that fails the verification."""

    kind: str
    message: str
    edges: tuple[int, ...] = ()
    vertex: int | None = None


@dataclass
class VerificationReport:
    """Outcome of the checks run on a drawing.

    The verdict is pass iff there are no violations.
    """

    mode: str = MODE_RAC
    crossings: list[Contact] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    declared: list[tuple[int, int]] = field(default_factory=list)
    angular_resolution: dict[int, float] = field(default_factory=dict)
    max_curvature: float = 0.0
    curvature_bound: float | None = None

    @property
    def passed(self) -> bool:
        """True iff no violation was found."""
        return not self.violations

    @property
    def verdict(self) -> str:
        """'pass' or 'fail'."""
        return 'pass' if self.passed else 'fail'

    @property
    def min_angular_resolution(self) -> float:
        """Smallest angular resolution over vertices of degree >= 2."""
        return min(self.angular_resolution.values(), default=math.pi)

    def add(self, kind: str, message: str, edges: tuple[int, ...] = (),
            vertex: int | None = None) -> None:
        """Record a violation."""
        logger.debug('violation %s: %s', kind, message)
        self.violations.append(Violation(kind, message, edges, vertex))

    def to_dict(self) -> dict[str, Any]:
        """JSON compatible representation."""
        return {
            'verdict': self.verdict,
            'mode': self.mode,
            'crossings': [
                {'e1': c.e1, 'e2': c.e2, 'point': list(c.point), 'angle': c.angle,
                 'declared': c.declared}
                for c in self.crossings],
            'violations': [
                {'kind': v.kind, 'message': v.message, 'edges': list(v.edges),
                 'vertex': v.vertex}
                for v in self.violations],
            'min_angular_resolution': self.min_angular_resolution,
            'angular_resolution': {str(v): a for v, a in self.angular_resolution.items()},
            'max_curvature': self.max_curvature,
            'curvature_bound': self.curvature_bound,
        }

    def summary(self) -> str:
        """Human readable multi-line summary."""
        lines = [
            f'verdict: {self.verdict} ({self.mode})',
            f'crossings: {len(self.crossings)}'
            f' ({sum(c.declared for c in self.crossings)} declared)',
            f'min angular resolution: {ppr.angle_str(self.min_angular_resolution)}',
            f'max curvature: {self.max_curvature:.6g}',
        ]
        if self.curvature_bound is not None:
            lines.append(f'curvature bound: {self.curvature_bound:.6g}')
        if self.crossings:
            worst = max(self.crossings, key=lambda c: abs(c.angle - math.pi / 2))
            lines.append(f'worst crossing angle: {ppr.angle_str(worst.angle)}')
        lines.append(f'violations: {len(self.violations)}')
        lines.extend(f'  {v.kind}: {v.message}' for v in self.violations)
        return '\n'.join(lines)


# --- intersection census:

def candidate_pairs(curves: list[CubicBezier], tol: float = EPS_GEOM
                    ) -> Iterator[tuple[int, int]]:
    """Pairs of curves whose bounding boxes overlap, found with a uniform grid."""
    if len(curves) < 2:
        return
    boxes = np.array([c.bbox() for c in curves], dtype=float)
    boxes[:, :2] -= tol
    boxes[:, 2:] += tol
    extent = max(boxes[:, 2].max() - boxes[:, 0].min(),
                 boxes[:, 3].max() - boxes[:, 1].min(), tol)
    cell = extent / max(1.0, math.sqrt(len(curves)))
    origin = boxes[:, :2].min(axis=0)
    lo = np.floor((boxes[:, :2] - origin) / cell).astype(int)
    hi = np.floor((boxes[:, 2:] - origin) / cell).astype(int)
    grid: dict[tuple[int, int], list[int]] = defaultdict(list)
    for idx in range(len(curves)):
        for ix in range(lo[idx, 0], hi[idx, 0] + 1):
            for iy in range(lo[idx, 1], hi[idx, 1] + 1):
                grid[(ix, iy)].append(idx)
    seen: set[tuple[int, int]] = set()
    for members in grid.values():
        for pos, i in enumerate(members):
            for j in members[pos + 1:]:
                pair = (i, j) if i < j else (j, i)
                if pair in seen:
                    continue
                seen.add(pair)
                a, b = boxes[pair[0]], boxes[pair[1]]
                if a[0] <= b[2] and b[0] <= a[2] and a[1] <= b[3] and b[1] <= a[3]:
                    yield pair


def census(d: Drawing, endpoint_exclusion: float = ENDPOINT_EXCLUSION,
           tol: float = EPS_GEOM, cluster: float = CLUSTER_TOL,
           mode: str = MODE_RAC, eps_deriv: float = EPS_DERIV) -> VerificationReport:
    """Find all intersections of edge curves and match them to the declared crossings.

    Contacts at shared endpoints are ignored within the parameter radius
    `endpoint_exclusion`. Undeclared contacts and overlapping edges are
    violations.

    Raises:
        InputError: the drawing is inconsistent
    """
    d.validate()
    report = VerificationReport(mode)
    report.declared = [(min(c.e1, c.e2), max(c.e1, c.e2)) for c in d.crossings]
    declared = set(report.declared)
    curves = [e.curve for e in d.edges]
    pairs = list(candidate_pairs(curves, tol))
    logger.debug('census: %d candidate pairs of %d edges', len(pairs), len(curves))
    step = max(1, len(pairs) // 10)
    for count, (i, j) in enumerate(pairs, 1):
        res = intersect(curves[i], curves[j], tol, endpoint_exclusion, cluster)
        if res.overlap:
            report.add(OVERLAP, f'edges {i} and {j} overlap', (i, j))
        for hit in res.hits:
            try:
                angle = crossing_angle(curves[i], hit.t_a, curves[j], hit.t_b, eps_deriv)
            except GeometryError:
                angle = 0.0     # degenerate tangent
            contact = Contact(i, j, hit.point, angle, hit.t_a, hit.t_b, (i, j) in declared)
            report.crossings.append(contact)
            if not contact.declared:
                report.add(UNEXPECTED,
                           f'edges {i} and {j} meet at {tuple(hit.point)}', (i, j))
        if count % step == 0:
            logger.debug('census %s; ' + log.StreamHandler.suppress_newline_code,
                         ppr.progress(count, len(pairs)))
    if pairs:
        logger.debug('census done')
    return report


def check_rac(report: VerificationReport, tol_angle: float = TOL_ANGLE) -> bool:
    """Check that the declared crossings are the only ones and cross at right angles.

    Violations are added to the report.

    Returns:
        the verdict, True for pass
    """
    found = Counter((c.e1, c.e2) for c in report.crossings if c.declared)
    for contact in report.crossings:
        if contact.declared and abs(contact.angle - math.pi / 2) > tol_angle:
            report.add(BAD_ANGLE,
                       f'edges {contact.e1} and {contact.e2} cross at '
                       f'{ppr.angle_str(contact.angle, 8)}', (contact.e1, contact.e2))
    for pair in report.declared:
        if found[pair] == 0:
            report.add(MISSING, f'declared crossing of edges {pair} not found', pair)
        elif found[pair] > 1:
            report.add(REPEATED, f'edges {pair} cross {found[pair]} times', pair)
    return report.passed


# --- vertex measures:

def tangents(d: Drawing, v: int) -> list[Point]:
    """Unit tangent directions of the edges at v, pointing away from v."""
    result = []
    for idx, starts in d.incident(v):
        curve = d.edges[idx].curve
        result.append(curve.tangent_at_start() if starts else curve.tangent_at_end())
    return result


def angular_resolution(d: Drawing, v: int) -> float:
    """Smallest angle between the tangents of the edges at v; π below degree 2.

    Examples:
        >>> from vb.bezdraw.drawing import Edge
        >>> pts = [Point(0, 0), Point(1, 0), Point(0, 1)]
        >>> d = Drawing(pts, [Edge(0, 1, CubicBezier.line(pts[0], pts[1])),
        ...                   Edge(0, 2, CubicBezier.line(pts[0], pts[2]))])
        >>> round(angular_resolution(d, 0), 12) == round(math.pi / 2, 12)
        True
    """
    dirs = tangents(d, v)
    if len(dirs) < 2:
        return math.pi
    angles = np.sort(np.arctan2([p.y for p in dirs], [p.x for p in dirs]))
    gaps = np.diff(np.append(angles, angles[0] + 2 * math.pi))
    return float(gaps.min())


def resolution_bound(degree: int) -> float:
    """Guaranteed angular resolution of planar curve drawings at a vertex.

    Examples:
        >>> round(math.degrees(resolution_bound(1)), 4)
        18.4349
    """
    return math.asin(1 / (math.sqrt(10) * degree))


def edge_curvatures(d: Drawing, samples: int = CURVATURE_SAMPLES,
                    eps_deriv: float = EPS_DERIV) -> list[float]:
    """Maximum curvature of every edge; 0 for straight edges, inf at cusps."""
    result = []
    for edge in d.edges:
        if edge.curve.is_linear():
            result.append(0.0)
        else:
            result.append(curve_max_curvature(edge.curve, samples, eps_deriv)[0])
    return result


def max_curvature(d: Drawing, samples: int = CURVATURE_SAMPLES) -> float:
    """Maximum curvature over all edges of the drawing."""
    return max(edge_curvatures(d, samples), default=0.0)


def planar_curvature_bound(d: Drawing) -> float:
    """Curvature bound of planar curve drawings from the vertex bounding box."""
    return max(math.sqrt(CURVATURE_RATIO * d.vertex_diagonal()), CURVATURE_SMALL)


def _segment_distances(pts: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Distance of point q to each segment of the polyline pts."""
    a, b = pts[:-1], pts[1:]
    ab = b - a
    length2 = np.einsum('ij,ij->i', ab, ab)
    t = np.clip(np.einsum('ij,ij->i', q - a, ab) / np.where(length2 > 0, length2, 1.0), 0, 1)
    return np.hypot(*(a + ab * t[:, None] - q).T)


def check_vertices_on_edges(d: Drawing, report: VerificationReport,
                            tol: float = EPS_GEOM) -> None:
    """Flag curves passing through a vertex other than their endpoints."""
    if not d.positions or not d.edges:
        return
    tree = cKDTree(np.asarray(d.positions, dtype=float))
    near = tol + 1e-7 * max(d.vertex_diagonal(), 1.0)
    t = np.linspace(0.0, 1.0, VERTEX_SAMPLES)
    for idx, edge in enumerate(d.edges):
        x0, y0, x1, y1 = edge.curve.bbox()
        centre = ((x0 + x1) / 2, (y0 + y1) / 2)
        radius = math.hypot(x1 - x0, y1 - y0) / 2 + near
        pts = edge.curve.sample(t)
        for v in tree.query_ball_point(centre, radius):
            if v in (edge.u, edge.v):
                continue
            if _segment_distances(pts, np.asarray(d.positions[v])).min() <= near:
                report.add(CONTAINMENT, f'edge {idx} passes through vertex {v}', (idx,), v)


def verify_drawing(d: Drawing, mode: str = MODE_RAC, tol_angle: float = TOL_ANGLE,
                   tol: float = EPS_GEOM,
                   endpoint_exclusion: float = ENDPOINT_EXCLUSION,
                   samples: int = CURVATURE_SAMPLES, cluster: float = CLUSTER_TOL,
                   eps_deriv: float = EPS_DERIV) -> VerificationReport:
    """Run every check of the given mode.

    In `rac` mode the declared crossings must be the only intersections and
    cross at right angles; tangents at a vertex must not coincide. In
    `planar` mode no intersections are allowed, every vertex must reach the
    degree dependent angular resolution and curvature must stay below
    `planar_curvature_bound`.

    Raises:
        InputError: unknown mode or inconsistent drawing
    """
    if mode not in MODES:
        raise InputError(f'unknown verification mode {mode!r}')
    report = census(d, endpoint_exclusion, tol, cluster, mode, eps_deriv)
    if mode == MODE_RAC:
        check_rac(report, tol_angle)
    else:
        for c in report.crossings:
            if c.declared:
                report.add(UNEXPECTED, f'crossing of edges {c.e1} and {c.e2} '
                           'in a planar drawing', (c.e1, c.e2))
    check_vertices_on_edges(d, report, tol)
    for v in range(len(d.positions)):
        degree = d.degree(v)
        if degree < 2:
            continue
        res = angular_resolution(d, v)
        report.angular_resolution[v] = res
        need = resolution_bound(degree) - RESOLUTION_SLACK if mode == MODE_PLANAR else tol_angle
        if res < need:
            report.add(SHORTFALL, f'vertex {v} of degree {degree} has angular resolution '
                       f'{ppr.angle_str(res, 6)}', vertex=v)
    kappas = edge_curvatures(d, samples, eps_deriv)
    for idx, kappa in enumerate(kappas):
        if math.isinf(kappa):
            report.add(INFINITE, f'edge {idx} has a cusp', (idx,))
    report.max_curvature = max(kappas, default=0.0)
    if mode == MODE_PLANAR:
        report.curvature_bound = planar_curvature_bound(d)
        if report.max_curvature > report.curvature_bound:
            report.add(CURVATURE, f'curvature {report.max_curvature:.6g} exceeds '
                       f'{report.curvature_bound:.6g}')
    logger.info('verification (%s): %d crossings, %d violations, verdict %s',
                mode, len(report.crossings), len(report.violations), report.verdict)
    return report


# --- brute force oracle:

def sample_contacts(d: Drawing, samples: int = 4001, exclusion: float = 0.01
                    ) -> set[tuple[int, int]]:
    """Pairs of edges whose sampled polylines cross, for cross-checking `census`.

    Polyline pieces within parameter distance `exclusion` of an endpoint
    shared by both edges are skipped.
    """
    t = np.linspace(0.0, 1.0, samples)
    polys = [e.curve.sample(t) for e in d.edges]
    result = set()
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            shared = {d.edges[i].u, d.edges[i].v} & {d.edges[j].u, d.edges[j].v}
            keep_i = _keep_mask(t, d.edges[i], shared, exclusion)
            keep_j = _keep_mask(t, d.edges[j], shared, exclusion)
            if _polylines_cross(polys[i], keep_i, polys[j], keep_j):
                result.add((i, j))
    return result


def _keep_mask(t: np.ndarray, edge: Edge, shared: set[int], exclusion: float) -> np.ndarray:
    mid = (t[:-1] + t[1:]) / 2
    keep = np.ones(len(mid), dtype=bool)
    if edge.u in shared:
        keep &= mid > exclusion
    if edge.v in shared:
        keep &= mid < 1 - exclusion
    return keep


def _polylines_cross(p: np.ndarray, keep_p: np.ndarray,
                     q: np.ndarray, keep_q: np.ndarray) -> bool:
    a, b = p[:-1][keep_p], p[1:][keep_p]
    c, e = q[:-1][keep_q], q[1:][keep_q]
    if not len(a) or not len(c):
        return False
    lo_p, hi_p = np.minimum(a, b).min(axis=0), np.maximum(a, b).max(axis=0)
    lo_q, hi_q = np.minimum(c, e).min(axis=0), np.maximum(c, e).max(axis=0)
    if np.any(hi_p < lo_q) or np.any(hi_q < lo_p):
        return False
    tree = cKDTree((c + e) / 2)
    reach = np.hypot(*(e - c).T).max() / 2 + np.hypot(*(b - a).T).max() / 2
    for k, near in enumerate(tree.query_ball_point((a + b) / 2, reach)):
        for m in near:
            if _segments_cross(a[k], b[k], c[m], e[m]):
                return True
    return False


def _segments_cross(a, b, c, e) -> bool:
    d1, d2 = orient(c, e, a), orient(c, e, b)
    d3, d4 = orient(a, b, c), orient(a, b, e)
    return d1 * d2 < 0 and d3 * d4 < 0
