from __future__ import annotations

import dataclasses
import logging
from typing import List, Optional, Sequence

from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.posets import Poset
from boolean_ramsey.search.engine import decide
from boolean_ramsey.search.problem import AvoidanceProblem, FixedPalette, RainbowMode, SearchOutcome
from boolean_ramsey.shared import DomainError, RamseySchema

_logger = logging.getLogger(__name__)


@dataclasses.dataclass
class RamseyResult:
    """
    The number lies in [lower, upper]; `value` is set once both ends meet.
    `witness` avoids the targets on B_{lower - 1}.
    """

    lower: int
    upper: Optional[int] = None
    witness: Optional[Coloring] = None
    outcomes: List[SearchOutcome] = dataclasses.field(default_factory=list)

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.upper == self.lower else None

    @property
    def exact(self) -> bool:
        return self.value is not None

    def to_schema(self) -> RamseySchema:
        return RamseySchema(
            lower=self.lower,
            value=self.value,
            upper=self.upper,
            witness=None if self.witness is None else self.witness.to_schema(),
            outcomes=[outcome.to_schema() for outcome in self.outcomes],
        )


def _scan(
    make_problem,
    n_lo: int,
    n_hi: int,
    jobs: Optional[int],
) -> RamseyResult:
    """
    Decide n = n_lo, ..., n_hi in turn. Sizes below n_lo are taken as
    avoidable; the first unavoidable n is the upper end and stops the scan
    since containment in B_n only grows with n.
    """
    if not 0 <= n_lo <= n_hi:
        raise DomainError(f"need 0 <= n_lo <= n_hi, got {n_lo}, {n_hi}")

    result = RamseyResult(lower=n_lo)
    for n in range(n_lo, n_hi + 1):
        outcome = decide(make_problem(n), jobs=jobs)
        result.outcomes.append(outcome)

        if outcome.avoidable:
            # an avoiding coloring of B_n restricts to every smaller lattice
            result.lower, result.witness = n + 1, outcome.witness
        elif outcome.unavoidable:
            result.upper = n
            break

    _logger.info(f"[Search] result in [{result.lower}, {result.upper}]")
    return result


def ramsey(
    patterns: Sequence[Poset],
    n_lo: int = 0,
    n_hi: int = 6,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> RamseyResult:
    """R(P_1, ..., P_k) for the fixed palette of len(patterns) colors."""
    mode = FixedPalette.of(patterns)
    return _scan(lambda n: AvoidanceProblem(n=n, mode=mode, budget=budget), n_lo, n_hi, jobs)


def rainbow_ramsey(
    monochromatic: Sequence[Poset],
    rainbow: Sequence[Poset],
    n_lo: int = 0,
    n_hi: int = 5,
    budget: Optional[int] = None,
    jobs: Optional[int] = None,
) -> RamseyResult:
    """RR(P, Q) for the families `monochromatic` and `rainbow`."""
    mode = RainbowMode(monochromatic=tuple(monochromatic), rainbow=tuple(rainbow))
    return _scan(lambda n: AvoidanceProblem(n=n, mode=mode, budget=budget), n_lo, n_hi, jobs)
