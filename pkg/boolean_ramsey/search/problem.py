from __future__ import annotations

import dataclasses
from typing import Optional, Sequence, Tuple, Union

from boolean_ramsey import lattice
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.constants import Config, Constants
from boolean_ramsey.posets import Poset
from boolean_ramsey.shared import DomainError, SearchOutcomeSchema


@dataclasses.dataclass(frozen=True)
class FixedPalette:
    """k colors, color i must avoid a monochromatic patterns[i]."""

    k: int
    patterns: Tuple[Poset, ...]

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"a fixed palette needs k >= 1, got {self.k}")
        if len(self.patterns) != self.k:
            raise DomainError(f"{len(self.patterns)} patterns given for {self.k} colors")

    @property
    def identical(self) -> bool:
        return all(p == self.patterns[0] for p in self.patterns)

    @classmethod
    def of(cls, patterns: Sequence[Poset]) -> FixedPalette:
        return cls(k=len(patterns), patterns=tuple(patterns))


@dataclasses.dataclass(frozen=True)
class RainbowMode:
    """Any number of colors; no monochromatic P in `monochromatic`, no rainbow Q in `rainbow`."""

    monochromatic: Tuple[Poset, ...]
    rainbow: Tuple[Poset, ...]


@dataclasses.dataclass
class AvoidanceProblem:
    n: int
    mode: Union[FixedPalette, RainbowMode]
    budget: Optional[int] = None

    def __post_init__(self):
        lattice.check_ground_size(self.n)
        if self.budget is None:
            self.budget = Config.search.budget
        if self.budget < 1:
            raise DomainError(f"budget must be positive, got {self.budget}")

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def is_rainbow(self) -> bool:
        return isinstance(self.mode, RainbowMode)

    def describe(self) -> str:
        if self.is_rainbow:
            P = ",".join(p.spec for p in self.mode.monochromatic)
            Q = ",".join(q.spec for q in self.mode.rainbow)
            return f"RR({{{P}}}, {{{Q}}}) on B{self.n}"
        return f"R({','.join(p.spec for p in self.mode.patterns)}) on B{self.n}"


@dataclasses.dataclass
class SearchOutcome:
    kind: Constants.Outcome
    n: int
    nodes: int
    deepest: int
    witness: Optional[Coloring] = None

    @property
    def avoidable(self) -> bool:
        return self.kind == Constants.Outcome.AVOIDABLE

    @property
    def unavoidable(self) -> bool:
        return self.kind == Constants.Outcome.UNAVOIDABLE

    @property
    def exceeded(self) -> bool:
        return self.kind == Constants.Outcome.BUDGET_EXCEEDED

    def to_schema(self) -> SearchOutcomeSchema:
        return SearchOutcomeSchema(
            kind=self.kind.value,
            n=self.n,
            nodes=self.nodes,
            deepest=self.deepest,
            witness=None if self.witness is None else self.witness.to_schema(),
        )
