"""Read and write the JSON files of embeddings, drawings, joint-box drawings and reports.

Documents are validated on load by the models of `schema`. Floats are
written by `json` with `repr`, the shortest decimal that reads back to the
same double, so drawings round-trip exactly.
"""

from __future__ import annotations

import json
import logging
import math
from pathlib import Path
from typing import Any, Callable, TypeVar, Union

from .drawing import Crossing, Drawing, Edge
from .embedding import OnePlaneEmbedding
from .errors import FormatError
from .geometry import CubicBezier, Point
from .planar import JointBoxDrawing, JointBoxEdge
from .schema import (
        DrawingDocument, EmbeddingDocument, JointBoxDocument, ReportDocument, parse)
from .verify import VerificationReport

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
T = TypeVar('T')


# --- embeddings:

def embedding_to_dict(emb: OnePlaneEmbedding) -> dict[str, Any]:
    """Serializable form of an embedding."""
    return {
        'n': emb.n,
        'rotation': [list(ring) for ring in emb.rotation],
        'dummies': sorted(emb.dummies),
        'crossing_pairs': [[list(e1), list(e2)] for e1, e2 in emb.crossing_pairs],
        'outer_face': None if emb.outer_face is None else list(emb.outer_face),
    }


def embedding_from_dict(data: Any) -> OnePlaneEmbedding:
    """Parse and validate an embedding.

    Raises:
        FormatError: malformed document
        EmbeddingError: an embedding invariant fails
    """
    doc = parse(EmbeddingDocument, data, 'embedding')
    pairs = [((e1[0], e1[1]), (e2[0], e2[1])) for e1, e2 in doc.crossing_pairs]
    outer = None if doc.outer_face is None else (doc.outer_face[0], doc.outer_face[1])
    return OnePlaneEmbedding.create(doc.rotation, doc.dummies, pairs, outer)


# --- drawings:

def drawing_to_dict(d: Drawing) -> dict[str, Any]:
    """Serializable form of a drawing."""
    return {
        'vertices': [list(p) for p in d.positions],
        'edges': [{'u': e.u, 'v': e.v, 'ctrl': [list(p) for p in e.curve]} for e in d.edges],
        'crossings': [{'e1': c.e1, 'e2': c.e2, 'point': list(c.point)} for c in d.crossings],
    }


def drawing_from_dict(data: Any) -> Drawing:
    """Parse a drawing and check its consistency.

    Raises:
        FormatError: malformed document
        InputError: inconsistent drawing
    """
    doc = parse(DrawingDocument, data, 'drawing')
    drawing = Drawing(
            [Point(*p) for p in doc.vertices],
            [Edge(e.u, e.v, CubicBezier(*e.ctrl)) for e in doc.edges],
            [Crossing(c.e1, c.e2, Point(*c.point)) for c in doc.crossings])
    drawing.validate()
    return drawing


# --- joint-box drawings:

def joint_boxes_to_dict(jbd: JointBoxDrawing) -> dict[str, Any]:
    """Serializable form of a joint-box drawing, bends included."""
    return {
        'positions': [list(p) for p in jbd.positions],
        'degrees': jbd.degrees(),
        'edges': [{'a': e.a, 'region': e.region, 'port': e.port, 'b': e.b,
                   'free': e.free, 'bend': list(jbd.bend(e))} for e in jbd.edges],
    }


def joint_boxes_from_dict(data: Any) -> JointBoxDrawing:
    """Parse and validate a joint-box drawing.

    Degrees and bends are optional; when present they must agree with the
    edges.

    Raises:
        FormatError: malformed document
        JointBoxError: a joint-box invariant fails
    """
    where = 'joint boxes'
    doc = parse(JointBoxDocument, data, where)
    edges = [JointBoxEdge(e.a, e.region, e.port, e.b, e.free) for e in doc.edges]
    jbd = JointBoxDrawing([(p[0], p[1]) for p in doc.positions], edges)
    jbd.validate()
    if doc.degrees is not None and doc.degrees != jbd.degrees():
        raise FormatError(f'{where}: declared degrees disagree with the edges')
    for edge, item in zip(edges, doc.edges):
        if item.bend is not None:
            expected = jbd.bend(edge)
            if math.dist(item.bend, expected) > 1e-9:
                raise FormatError(f'{where}: bend of edge {edge.a}-{edge.b} is not '
                                  f'its port point {tuple(expected)}')
    return jbd


# --- reports:

def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    """Serializable form of a verification report."""
    return report.to_dict()


def report_from_dict(data: Any) -> ReportDocument:
    """Validate a verification report document.

    Raises:
        FormatError: malformed document
    """
    return parse(ReportDocument, data, 'report')


# --- files:

def write_json(data: Any, path: PathLike) -> None:
    """Write a JSON document, '-' meaning standard output."""
    text = json.dumps(data, indent=1)
    if str(path) == '-':
        print(text)
    else:
        Path(path).write_text(text + '\n', encoding='utf-8')
    logger.debug('wrote %s', path)


def read_json(path: PathLike) -> Any:
    """Read a JSON document.

    Raises:
        FormatError: not valid JSON
        OSError: the file cannot be read
    """
    text = Path(path).read_text(encoding='utf-8')
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f'{path}: {exc}') from exc


def _loader(parse: Callable[[Any], T]) -> Callable[[PathLike], T]:
    def load(path: PathLike) -> T:
        return parse(read_json(path))
    load.__doc__ = f'Read a file with `{parse.__name__}`.'
    return load


load_embedding = _loader(embedding_from_dict)
load_drawing = _loader(drawing_from_dict)
load_joint_boxes = _loader(joint_boxes_from_dict)
load_report = _loader(report_from_dict)


def save_embedding(emb: OnePlaneEmbedding, path: PathLike) -> None:
    """Write an embedding file."""
    write_json(embedding_to_dict(emb), path)


def save_drawing(d: Drawing, path: PathLike) -> None:
    """Write a drawing file."""
    write_json(drawing_to_dict(d), path)


def save_joint_boxes(jbd: JointBoxDrawing, path: PathLike) -> None:
    """Write a joint-box file."""
    write_json(joint_boxes_to_dict(jbd), path)


def save_report(report: VerificationReport, path: PathLike) -> None:
    """Write a verification report file."""
    write_json(report_to_dict(report), path)
