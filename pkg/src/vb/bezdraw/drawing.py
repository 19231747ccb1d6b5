"""Provide the drawing produced by the drawers and consumed by the verifier."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

from .errors import InputError
from .geometry import CubicBezier, Point, PointLike

ENDPOINT_TOL = 1e-9


@dataclass(frozen=True)
class Edge:
    """Edge uv drawn as one cubic curve from u (t=0) to v (t=1)."""

    u: int
    v: int
    curve: CubicBezier

    @classmethod
    def oriented(cls, u: int, v: int, curve: CubicBezier,
                 pos_u: PointLike) -> Edge:
        """Create the edge, reversing the curve if it starts away from u."""
        start_gap = math.dist(curve.p0, pos_u)
        end_gap = math.dist(curve.p3, pos_u)
        if end_gap < start_gap:
            curve = curve.reversed()
        return cls(u, v, curve)

    def other(self, w: int) -> int:
        """The endpoint different from w."""
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class Crossing:
    """Declared crossing of the edges with indices e1 and e2."""

    e1: int
    e2: int
    point: Point


@dataclass
class Drawing:
    """Vertex positions, one cubic Bézier per edge, declared crossings.

    Edges are referred to by their index in `edges`.
    """

    positions: list[Point] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    crossings: list[Crossing] = field(default_factory=list)

    def validate(self, tol: float = ENDPOINT_TOL) -> None:
        """Check endpoint interpolation and the crossing references.

        Raises:
            InputError: the drawing is inconsistent
        """
        n = len(self.positions)
        for idx, edge in enumerate(self.edges):
            if not (0 <= edge.u < n and 0 <= edge.v < n):
                raise InputError(f'edge {idx} refers to a missing vertex')
            if edge.u == edge.v:
                raise InputError(f'edge {idx} is a loop')
            if (math.dist(edge.curve.p0, self.positions[edge.u]) > tol
                    or math.dist(edge.curve.p3, self.positions[edge.v]) > tol):
                raise InputError(f'edge {idx} does not end at its vertices')
        seen: set[frozenset[int]] = set()
        for crossing in self.crossings:
            pair = frozenset((crossing.e1, crossing.e2))
            if len(pair) != 2 or not all(0 <= e < len(self.edges) for e in pair):
                raise InputError(f'bad crossing edges {crossing.e1}, {crossing.e2}')
            if pair in seen:
                raise InputError(f'crossing {crossing.e1}, {crossing.e2} declared twice')
            seen.add(pair)

    def incident(self, v: int) -> Iterator[tuple[int, bool]]:
        """Yield (edge index, curve starts at v) for edges incident to v."""
        for idx, edge in enumerate(self.edges):
            if edge.u == v:
                yield idx, True
            if edge.v == v:
                yield idx, False

    def degree(self, v: int) -> int:
        """Number of edge ends at v."""
        return sum(1 for _ in self.incident(v))

    def bbox(self) -> tuple[float, float, float, float]:
        """Bounding box of vertices and control points."""
        pts = list(self.positions) + [p for e in self.edges for p in e.curve]
        if not pts:
            return 0.0, 0.0, 0.0, 0.0
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        return min(xs), min(ys), max(xs), max(ys)

    def vertex_diagonal(self) -> float:
        """Diagonal of the bounding box of the vertex positions."""
        if not self.positions:
            return 0.0
        xs = [p[0] for p in self.positions]
        ys = [p[1] for p in self.positions]
        return math.hypot(max(xs) - min(xs), max(ys) - min(ys))
