"""Schemas of the JSON documents: embeddings, drawings, joint boxes and reports.

The models validate parsed JSON in strict mode: integers are not accepted
as strings or booleans, coordinates must be finite. `json_schema` exports a
model as JSON Schema.

Examples:
    >>> doc = EmbeddingDocument.model_validate({'n': 2, 'rotation': [[1], [0]]},
    ...                                        strict=True)
    >>> doc.dummies, doc.outer_face
    ([], None)
"""

from __future__ import annotations

from typing import Annotated, Any, Dict, List, Literal, Optional, Type, TypeVar

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .errors import FormatError

Pair = Annotated[List[int], Field(min_length=2, max_length=2)]
Coords = Annotated[List[float], Field(min_length=2, max_length=2)]


class _Document(BaseModel):
    model_config = ConfigDict(strict=True, allow_inf_nan=False)


class EmbeddingDocument(_Document):
    """1-plane embedding: rotation system with dummy vertices at crossings."""

    n: int = Field(ge=0)
    rotation: List[List[int]]
    dummies: List[int] = []
    crossing_pairs: List[Annotated[List[Pair], Field(min_length=2, max_length=2)]] = []
    outer_face: Optional[Pair] = None

    @model_validator(mode='after')
    def _rotation_per_vertex(self) -> EmbeddingDocument:
        if len(self.rotation) != self.n:
            raise ValueError(f'n={self.n} but {len(self.rotation)} rotations')
        return self


class EdgeItem(_Document):
    u: int
    v: int
    ctrl: Annotated[List[Coords], Field(min_length=4, max_length=4)]


class CrossingItem(_Document):
    e1: int
    e2: int
    point: Coords


class DrawingDocument(_Document):
    """Vertex positions, one cubic per edge and the declared crossings."""

    vertices: List[Coords]
    edges: List[EdgeItem]
    crossings: List[CrossingItem] = []


class JointBoxItem(_Document):
    a: int
    region: str
    port: int
    b: int
    free: Literal['', 'L', 'R', 'M'] = ''
    bend: Optional[Coords] = None


class JointBoxDocument(_Document):
    """Integer vertex positions and 1-bend edges given by their ports."""

    positions: List[Pair]
    degrees: Optional[List[int]] = None
    edges: List[JointBoxItem]


class FixtureItem(_Document):
    """Joint-box fixture before port assignment: grid points and straight edges."""

    positions: List[Pair]
    edges: List[Pair]


class ContactItem(_Document):
    model_config = ConfigDict(strict=True, allow_inf_nan=True)

    e1: int
    e2: int
    point: Coords
    angle: float
    declared: bool


class ViolationItem(_Document):
    kind: str
    message: str
    edges: List[int]
    vertex: Optional[int]


class ReportDocument(_Document):
    """Outcome of a verification run."""

    model_config = ConfigDict(strict=True, allow_inf_nan=True)

    verdict: Literal['pass', 'fail']
    mode: Literal['rac', 'planar']
    crossings: List[ContactItem]
    violations: List[ViolationItem]
    min_angular_resolution: float
    angular_resolution: Dict[str, float]
    max_curvature: float
    curvature_bound: Optional[float]


M = TypeVar('M', bound=BaseModel)

DOCUMENTS: dict[str, Type[BaseModel]] = {
    'embedding': EmbeddingDocument,
    'drawing': DrawingDocument,
    'joint-boxes': JointBoxDocument,
    'report': ReportDocument,
}


def parse(model: Type[M], data: Any, where: str) -> M:
    """Validate parsed JSON against a model.

    Raises:
        FormatError: the first validation error, located by its key path
    """
    try:
        return model.model_validate(data, strict=True)
    except ValidationError as exc:
        error = exc.errors()[0]
        loc = '.'.join(str(part) for part in error['loc'])
        prefix = f'{where}: {loc}' if loc else where
        raise FormatError(f'{prefix}: {error["msg"]}') from exc


def json_schema(kind: str) -> dict[str, Any]:
    """JSON Schema of a document kind, one of DOCUMENTS.

    Raises:
        FormatError: unknown kind
    """
    try:
        model = DOCUMENTS[kind]
    except KeyError:
        raise FormatError(f'unknown document kind {kind!r}, '
                          f'expected one of {", ".join(DOCUMENTS)}') from None
    return model.model_json_schema()
