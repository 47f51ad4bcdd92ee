from __future__ import annotations

import dataclasses
from typing import Any, Dict, List, Literal, Optional, Tuple, Type, TypeVar

import pydantic
import pydantic.dataclasses
from pydantic.types import NonNegativeInt

T = TypeVar("T")

# subset of [n] as an n-bit integer, element i <-> bit i-1
SubsetMask = int


class DomainError(ValueError):
    pass


class PosetSpecError(ValueError):
    pass


class PosetCycleError(PosetSpecError):
    pass


class DecodeError(ValueError):
    pass


class VerificationError(AssertionError):
    pass


class CopyOverflowError(RuntimeError):
    pass


class BudgetExceededError(RuntimeError):
    def __init__(self, message: str, last_n: Optional[int] = None):
        super().__init__(message)
        self.last_n = last_n


# JSON artifact schemas


@pydantic.dataclasses.dataclass
class ColoringSchema:
    n: NonNegativeInt
    colors: List[NonNegativeInt]
    palette: Optional[List[NonNegativeInt]] = None
    order: Literal["graded-colex"] = "graded-colex"


@pydantic.dataclasses.dataclass
class EmbeddingSchema:
    pattern: str
    images: List[NonNegativeInt]
    colors: Optional[List[NonNegativeInt]] = None


@pydantic.dataclasses.dataclass
class WitnessSchema:
    index: NonNegativeInt
    embedding: EmbeddingSchema


@pydantic.dataclasses.dataclass
class AvoidanceSchema:
    avoided: bool
    mono_witness: Optional[WitnessSchema] = None
    rainbow_witness: Optional[WitnessSchema] = None


@pydantic.dataclasses.dataclass
class ExtractionSchema:
    algorithm: str
    kind: str
    embedding: Optional[EmbeddingSchema] = None
    description: str = ""
    metadata: Dict[str, Any] = dataclasses.field(default_factory=dict)


@pydantic.dataclasses.dataclass
class SearchOutcomeSchema:
    kind: str
    n: NonNegativeInt
    nodes: NonNegativeInt
    deepest: NonNegativeInt
    witness: Optional[ColoringSchema] = None


@pydantic.dataclasses.dataclass
class RamseySchema:
    lower: NonNegativeInt
    value: Optional[NonNegativeInt] = None
    upper: Optional[NonNegativeInt] = None
    witness: Optional[ColoringSchema] = None
    outcomes: List[SearchOutcomeSchema] = dataclasses.field(default_factory=list)


@pydantic.dataclasses.dataclass
class BoundSchema:
    value: int
    source: str


@pydantic.dataclasses.dataclass
class BoundsReportSchema:
    P: str
    Q: str
    lower: List[BoundSchema]
    upper: List[BoundSchema]
    best_lower: Optional[int] = None
    best_upper: Optional[int] = None


@pydantic.dataclasses.dataclass
class TableCellSchema:
    row: str
    P: str
    Q: str
    value: int
    method: str
    status: str
    reason: str = ""
    artifacts: List[str] = dataclasses.field(default_factory=list)


@pydantic.dataclasses.dataclass
class SatSidecarSchema:
    n: NonNegativeInt
    k: NonNegativeInt
    patterns: List[str]
    varmap: List[Tuple[int, int, int]]


def dump(obj: Any) -> Any:
    """Serialize a schema instance into json compatible python objects."""
    return pydantic.TypeAdapter(type(obj)).dump_python(obj, mode="json")


def load(schema: Type[T], payload: Any) -> T:
    return pydantic.TypeAdapter(schema).validate_python(payload)
