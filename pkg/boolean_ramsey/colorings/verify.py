import dataclasses
import logging
from typing import Optional, Sequence, Tuple

from boolean_ramsey import embedding
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.constants import Constants
from boolean_ramsey.embedding import Embedding
from boolean_ramsey.posets import Poset
from boolean_ramsey.shared import AvoidanceSchema, DomainError, WitnessSchema

_logger = logging.getLogger(__name__)


@dataclasses.dataclass
class AvoidanceReport:
    """
    First monochromatic P_i and first rainbow Q_j found, each with the index
    of its pattern; the coloring avoids the targets when both are absent.
    """

    mono_witness: Optional[Tuple[int, Embedding]] = None
    rainbow_witness: Optional[Tuple[int, Embedding]] = None

    @property
    def avoided(self) -> bool:
        return self.mono_witness is None and self.rainbow_witness is None

    def to_schema(self) -> AvoidanceSchema:
        def witness(found):
            if found is None:
                return None
            index, copy = found
            return WitnessSchema(index=index, embedding=copy.to_schema())

        return AvoidanceSchema(
            avoided=self.avoided,
            mono_witness=witness(self.mono_witness),
            rainbow_witness=witness(self.rainbow_witness),
        )


def verify(
    coloring: Coloring,
    monochromatic: Sequence[Poset] = (),
    rainbow: Sequence[Poset] = (),
) -> AvoidanceReport:
    """Exhaustive check for a monochromatic P in `monochromatic` or a rainbow Q in `rainbow`."""
    report = AvoidanceReport()

    for index, pattern in enumerate(monochromatic):
        found = embedding.find_monochromatic(coloring, pattern)
        if found is not None:
            report.mono_witness = (index, found)
            break

    for index, pattern in enumerate(rainbow):
        found = embedding.find_rainbow(coloring, pattern)
        if found is not None:
            report.rainbow_witness = (index, found)
            break

    _logger.debug(f"[Verify] {coloring}: avoided={report.avoided}")
    return report


def verify_fixed(coloring: Coloring, patterns: Sequence[Poset]) -> AvoidanceReport:
    """
    Fixed palette check for R(P_1, ..., P_k): the class of palette color i
    must not contain P_i.
    """
    report = AvoidanceReport()
    for color, members in enumerate(coloring.classes()):
        fixed = coloring.fixed_color(color)
        if fixed >= len(patterns):
            raise DomainError(
                f"coloring uses palette color {fixed} but only {len(patterns)} patterns are given"
            )
        found = embedding.find_copy(members, patterns[fixed], n=coloring.n)
        if found is not None:
            found.colors = [color] * len(found.images)
            found.kind = Constants.Copy.MONOCHROMATIC
            report.mono_witness = (fixed, found.validate())
            break
    return report
