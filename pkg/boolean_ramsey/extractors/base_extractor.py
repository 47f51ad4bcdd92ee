import dataclasses
import logging
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional

from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.constants import Constants
from boolean_ramsey.embedding import Embedding
from boolean_ramsey.posets import Poset
from boolean_ramsey.shared import ExtractionSchema, SubsetMask, VerificationError

_logger = logging.getLogger(__name__)


@dataclasses.dataclass
class ExtractionOutcome:
    kind: Constants.Extraction
    embedding: Optional[Embedding] = None
    description: str = ""
    metadata: Dict[str, Any] = dataclasses.field(default_factory=dict)
    algorithm: str = ""

    @property
    def is_rainbow(self) -> bool:
        return self.kind == Constants.Extraction.RAINBOW

    @property
    def is_monochromatic(self) -> bool:
        return self.kind == Constants.Extraction.MONOCHROMATIC

    def to_schema(self) -> ExtractionSchema:
        return ExtractionSchema(
            algorithm=self.algorithm,
            kind=self.kind.value,
            embedding=None if self.embedding is None else self.embedding.to_schema(),
            description=self.description,
            metadata=self.metadata,
        )


class BaseExtractor(ABC):
    """
    Base class of the constructive extractors. `extract` runs the algorithm
    and re-verifies the certificate it returns against the input coloring.
    """

    name: Constants.Extractors

    def __init__(self, *args, **kwargs):
        pass

    @abstractmethod
    def _extract(self, coloring: Coloring) -> ExtractionOutcome:
        raise NotImplementedError()

    def extract(self, coloring: Coloring) -> ExtractionOutcome:
        outcome = self._extract(coloring)
        outcome.algorithm = self.name.value

        if outcome.embedding is not None:
            outcome.embedding.validate()
            actual = [coloring.color_of(x) for x in outcome.embedding.images]
            if outcome.embedding.colors != actual:
                raise VerificationError(
                    f"[Extract] {self.name.value} reported colors {outcome.embedding.colors}, "
                    f"coloring has {actual}"
                )

        _logger.info(
            f"[Extract] {self.name.value} on B{coloring.n}: {outcome.kind.value}"
            + (f" ({outcome.description})" if outcome.description else "")
        )
        return outcome

    @staticmethod
    def rainbow(
        pattern: Poset, images: List[SubsetMask], coloring: Coloring, **metadata
    ) -> ExtractionOutcome:
        return ExtractionOutcome(
            kind=Constants.Extraction.RAINBOW,
            embedding=Embedding(
                pattern=pattern,
                images=list(images),
                colors=[coloring.color_of(x) for x in images],
                kind=Constants.Copy.RAINBOW,
            ),
            metadata=metadata,
        )

    @staticmethod
    def monochromatic(
        pattern: Poset, images: List[SubsetMask], coloring: Coloring, description: str = "", **metadata
    ) -> ExtractionOutcome:
        return ExtractionOutcome(
            kind=Constants.Extraction.MONOCHROMATIC,
            embedding=Embedding(
                pattern=pattern,
                images=list(images),
                colors=[coloring.color_of(x) for x in images],
                kind=Constants.Copy.MONOCHROMATIC,
            ),
            description=description,
            metadata=metadata,
        )

    @staticmethod
    def unmet(description: str, **metadata) -> ExtractionOutcome:
        return ExtractionOutcome(
            kind=Constants.Extraction.PRECONDITION_UNMET,
            description=description,
            metadata=metadata,
        )
