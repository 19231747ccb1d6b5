"""Render drawings to SVG.

Every edge becomes one path with a single cubic command whose control
points are written with `repr`, so the file reproduces the drawing
exactly. The y axis is flipped here and nowhere else.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

import svgwrite  # type: ignore[import]

from .drawing import Drawing
from .geometry import CubicBezier, Point

logger = logging.getLogger(__name__)

MARGIN = 0.05
STROKE_WIDTH = 0.004
VERTEX_RADIUS = 0.008


def _xy(p: Point) -> str:
    return f'{p.x!r},{-p.y!r}'


def path_data(curve: CubicBezier) -> str:
    """SVG path data of a cubic, y flipped.

    Examples:
        >>> path_data(CubicBezier((0, 0), (1, 2), (2, 2), (3, 0)))
        'M 0.0,-0.0 C 1.0,-2.0 2.0,-2.0 3.0,-0.0'
    """
    p0, p1, p2, p3 = curve
    return f'M {_xy(p0)} C {_xy(p1)} {_xy(p2)} {_xy(p3)}'


def viewbox(d: Drawing, margin: float = MARGIN) -> tuple[float, float, float, float]:
    """Bounding box of the drawing plus a relative margin, in SVG coordinates.

    Empty drawings get the unit box.
    """
    if not d.positions and not d.edges:
        return (0.0, -1.0, 1.0, 1.0)
    xmin, ymin, xmax, ymax = d.bbox()
    size = max(xmax - xmin, ymax - ymin) or 1.0
    pad = margin * size
    return (xmin - pad, -ymax - pad, xmax - xmin + 2 * pad, ymax - ymin + 2 * pad)


def to_svg(d: Drawing, *, margin: float = MARGIN, stroke_width: float = STROKE_WIDTH,
           vertex_radius: float = VERTEX_RADIUS, mark_crossings: bool = True,
           labels: bool = False, filename: str = 'drawing.svg') -> svgwrite.Drawing:
    """Build the SVG document of a drawing.

    Stroke width and vertex radius are relative to the larger side of the
    view box.
    """
    box = viewbox(d, margin)
    scale = max(box[2], box[3])
    dwg = svgwrite.Drawing(filename, profile='tiny')
    dwg.attribs['viewBox'] = ' '.join(repr(v) for v in box)

    g_edges = dwg.g(id='edges', fill='none', stroke='#111',
                    stroke_width=stroke_width * scale, stroke_linecap='round')
    for idx, edge in enumerate(d.edges):
        g_edges.add(dwg.path(d=path_data(edge.curve), id=f'e{idx}'))
    dwg.add(g_edges)

    if mark_crossings and d.crossings:
        g_cross = dwg.g(id='crossings', fill='#d11', stroke='none', fill_opacity=0.8)
        for c in d.crossings:
            g_cross.add(dwg.circle(center=(c.point.x, -c.point.y), r=0.6 * vertex_radius * scale))
        dwg.add(g_cross)

    g_vertices = dwg.g(id='vertices', fill='#fff', stroke='#111',
                       stroke_width=0.5 * stroke_width * scale)
    for p in d.positions:
        g_vertices.add(dwg.circle(center=(p.x, -p.y), r=vertex_radius * scale))
    dwg.add(g_vertices)

    if labels:
        g_labels = dwg.g(id='labels', fill='#37b', font_size=3 * vertex_radius * scale)
        for v, p in enumerate(d.positions):
            g_labels.add(dwg.text(str(v), insert=(p.x + vertex_radius * scale,
                                                  -p.y - vertex_radius * scale)))
        dwg.add(g_labels)
    return dwg


def render_svg(d: Drawing, path: Union[str, Path], **style) -> None:
    """Write the SVG of a drawing to `path`; see `to_svg` for the style keywords."""
    dwg = to_svg(d, filename=str(path), **style)
    dwg.save()
    logger.info('rendered %d vertices and %d edges to %s', len(d.positions), len(d.edges), path)
