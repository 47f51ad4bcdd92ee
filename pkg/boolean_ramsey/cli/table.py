"""
Reproduction of the RR(P, Q) table for antichains, Boolean posets and
chains. Each cell checks the claimed value from both sides where it can:
an explicit coloring of B_{v-1} verified to avoid the targets, and an
exhaustive search of B_v. Cells too large for search fall back to
extractor runs on random colorings, which count as evidence only.
"""

from __future__ import annotations

import dataclasses
import logging
import os
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from boolean_ramsey.bounds.shapes import Shape
from boolean_ramsey.bounds.table import ROWS
from boolean_ramsey.cli.artifacts import write_artifact
from boolean_ramsey.colorings import constructions, samplers
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.colorings.verify import verify
from boolean_ramsey.constants import Config, Constants
from boolean_ramsey.extractors import antichain, boolean, chains
from boolean_ramsey.extractors.base_extractor import ExtractionOutcome
from boolean_ramsey.posets import Poset, make
from boolean_ramsey.search.engine import decide
from boolean_ramsey.search.problem import AvoidanceProblem, RainbowMode
from boolean_ramsey.shared import TableCellSchema, dump
from boolean_ramsey.utils.general import write_json

_logger = logging.getLogger(__name__)

Method = Constants.Table.Method
Status = Constants.Table.Status


@dataclasses.dataclass
class TableCell:
    row: str
    P: Shape
    Q: Shape
    value: int
    method: Method = Method.BOUNDS_ONLY
    status: Status = Status.SKIPPED
    reason: str = ""
    artifacts: List[str] = dataclasses.field(default_factory=list)
    refuted: bool = False

    @property
    def name(self) -> str:
        return f"{self.row}_{self.P}_{self.Q}"

    def to_schema(self) -> TableCellSchema:
        return TableCellSchema(
            row=self.row,
            P=str(self.P),
            Q=str(self.Q),
            value=self.value,
            method=self.method.value,
            status=self.status.value,
            reason=self.reason,
            artifacts=list(self.artifacts),
        )


def _params(lo: int, hi: int) -> range:
    return range(lo, hi + 1)


def row_cells(row: str, max_param: int) -> Iterator[Tuple[Shape, Shape]]:
    """The (P, Q) shapes of a row with every parameter up to `max_param`."""
    boolean_cap = min(max_param, Config.posets.max_size.bit_length() - 1)

    if row == "antichain-antichain":
        for m in _params(2, max_param):
            for n in _params(2, max_param):
                yield Shape("A", m), Shape("A", n)
    elif row == "a2-chain":
        for n in _params(2, max_param):
            yield Shape("A", 2), Shape("C", n)
    elif row == "boolean-b1":
        for m in _params(2, boolean_cap):
            yield Shape("B", m), Shape("B", 1)
    elif row == "b1-boolean":
        for n in _params(2, boolean_cap):
            yield Shape("B", 1), Shape("B", n)
    elif row == "b2-b2":
        yield Shape("B", 2), Shape("B", 2)
    elif row == "chain-antichain":
        for m in _params(2, max_param):
            for n in _params(2, max_param):
                yield Shape("C", m), Shape("A", n)
    elif row == "chain-boolean":
        for m in _params(2, max_param):
            for n in _params(1, boolean_cap):
                yield Shape("C", m), Shape("B", n)
    elif row == "chain-chain":
        for m in _params(2, max_param):
            for n in _params(2, max_param):
                yield Shape("C", m), Shape("C", n)


def lower_construction(row: str, p: Shape, q: Shape, N: int) -> Coloring:
    """A coloring of B_N, N = value - 1, with no monochromatic P and no rainbow Q."""
    if row == "antichain-antichain":
        return constructions.scd_block(N, p.k)
    if row == "a2-chain":
        return constructions.near_constant(N)
    if row == "boolean-b1":
        return constructions.constant(N)
    if row == "b1-boolean":
        return constructions.rank(N)
    if row == "b2-b2":
        return constructions.level_block(N, 3)
    if row == "chain-antichain":
        if p.k == 2 and q.k >= 3:
            return constructions.rank(N)
        return constructions.ceil_size(N, p.k)
    return constructions.level_block(N, p.k)


Sampler = Callable[[int, np.random.Generator], Coloring]
Extractor = Callable[[Coloring], ExtractionOutcome]


def upper_evidence(row: str, p: Shape, q: Shape) -> Optional[Tuple[Sampler, Extractor]]:
    """
    Random colorings of B_v without a monochromatic P and the extractor
    that must find a rainbow Q in each of them, for rows that have one.
    """
    if row == "a2-chain":
        return samplers.random_chain_classes, chains.rainbow_chain_a2
    if row == "b1-boolean":
        return samplers.random_antichain_classes, lambda c: boolean.rainbow_boolean(c, q.k, 2)
    if row == "chain-boolean":
        return (
            lambda N, rng: samplers.random_no_mono_chain(N, p.k, rng),
            lambda c: boolean.rainbow_boolean(c, q.k, p.k),
        )
    if row == "chain-antichain" and not (p.k == 2 and q.k >= 3):
        return (
            lambda N, rng: samplers.random_no_mono_chain(N, p.k, rng),
            lambda c: antichain.rainbow_antichain(c, p.k, q.k),
        )
    return None


def _rainbow_at_least(outcome: ExtractionOutcome, size: int) -> bool:
    return outcome.is_rainbow and outcome.embedding is not None and len(outcome.embedding.images) >= size


class CellRunner:
    def __init__(
        self,
        budget: int,
        trials: int,
        seed: int,
        full_search: bool = False,
        out_dir: Optional[str] = None,
        jobs: Optional[int] = None,
    ):
        self.budget = budget
        self.trials = trials
        self.seed = seed
        self.full_search = full_search
        self.out_dir = out_dir
        self.jobs = jobs

    def _save(self, cell: TableCell, suffix: str, schema) -> None:
        if self.out_dir is None:
            return
        cell.artifacts.append(write_artifact(self.out_dir, f"{cell.name}.{suffix}.json", schema))

    def _problem(self, n: int, P: Poset, Q: Poset) -> AvoidanceProblem:
        return AvoidanceProblem(n=n, mode=RainbowMode((P,), (Q,)), budget=self.budget)

    def lower(self, cell: TableCell, P: Poset, Q: Poset) -> Optional[bool]:
        """True when B_{v-1} is shown avoidable, None when not attempted."""
        N = cell.value - 1
        if N < 0:
            return True

        if self.full_search and N <= Config.search.rainbow_max_n:
            outcome = decide(self._problem(N, P, Q), jobs=self.jobs)
            if outcome.avoidable:
                self._save(cell, "lower", outcome.witness.to_schema())
                return True
            cell.reason = f"search of B{N}: {outcome.kind.value}"
            cell.refuted = outcome.unavoidable
            return False

        if N > Config.table.construction_max_n:
            cell.reason = f"construction on B{N} is beyond B{Config.table.construction_max_n}"
            return None

        coloring = lower_construction(cell.row, cell.P, cell.Q, N)
        report = verify(coloring, (P,), (Q,))
        if not report.avoided:
            cell.reason = f"construction on B{N} fails verification"
            cell.refuted = True
            _logger.error(f"[Table] {cell.name}: {cell.reason}")
            return False
        self._save(cell, "lower", coloring.to_schema())
        return True

    def upper(self, cell: TableCell, P: Poset, Q: Poset) -> Optional[bool]:
        """True when B_v is exhausted without an avoiding coloring, None when not attempted."""
        v = cell.value
        if v > Config.search.rainbow_max_n:
            return None

        outcome = decide(self._problem(v, P, Q), jobs=self.jobs)
        self._save(cell, "upper", outcome.to_schema())
        if outcome.avoidable:
            cell.reason = f"search found a coloring of B{v} avoiding both targets"
            cell.refuted = True
            _logger.error(f"[Table] {cell.name}: {cell.reason}")
            return False
        if outcome.exceeded:
            cell.reason = f"search of B{v} exceeded {self.budget} nodes"
            return None
        return True

    def evidence(self, cell: TableCell, Q: Poset) -> str:
        v = cell.value
        found = upper_evidence(cell.row, cell.P, cell.Q)
        if found is None:
            return "no extractor for this row"
        if v > Config.table.evidence_max_n:
            return f"B{v} is beyond the sampled B{Config.table.evidence_max_n}"

        sample, extract = found
        rng = np.random.default_rng(self.seed)
        hits = sum(_rainbow_at_least(extract(sample(v, rng)), Q.size) for _ in range(self.trials))
        if hits < self.trials:
            cell.refuted = True
            _logger.error(f"[Table] {cell.name}: extractor missed on {self.trials - hits} colorings")
        return f"extractor found a rainbow {cell.Q} on {hits}/{self.trials} random colorings of B{v}"

    def run(self, row: str, p: Shape, q: Shape) -> TableCell:
        cell = TableCell(row=row, P=p, Q=q, value=ROWS[row](p, q))
        P, Q = make(str(p)), make(str(q))

        if not self.lower(cell, P, Q):
            cell.method, cell.status = Method.BOUNDS_ONLY, Status.SKIPPED
            return cell

        upper = self.upper(cell, P, Q)
        cell.method = (
            Method.FULL_SEARCH if self.full_search and cell.value - 1 <= Config.search.rainbow_max_n
            else Method.LOWER_CONSTRUCTION_UPPER_SEARCH
        )
        if upper:
            cell.status = Status.CONFIRMED
            return cell
        if upper is False:
            cell.status = Status.SKIPPED
            return cell

        if not cell.reason:
            cell.method = Method.CONSTRUCTION_ONLY
            cell.reason = f"B{cell.value} is beyond the searchable B{Config.search.rainbow_max_n}"
        cell.reason = f"{cell.reason}; {self.evidence(cell, Q)}"
        cell.status = Status.SKIPPED if cell.refuted else Status.LOWER_CONFIRMED
        return cell


def cmd_table(
    max_param: Optional[int] = None,
    budget: Optional[int] = None,
    rows: Optional[Sequence[str]] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    full_search: bool = False,
    out_dir: Optional[str] = None,
    jobs: Optional[int] = None,
) -> List[TableCell]:
    max_param = Config.table.max_param if max_param is None else max_param
    selected = list(ROWS) if rows is None else list(rows)
    unknown = [row for row in selected if row not in ROWS]
    if unknown:
        raise ValueError(f"unknown table rows {unknown}, choose from {list(ROWS)}")

    runner = CellRunner(
        budget=Config.table.budget if budget is None else budget,
        trials=Config.table.trials if trials is None else trials,
        seed=Config.table.seed if seed is None else seed,
        full_search=full_search,
        out_dir=out_dir,
        jobs=jobs,
    )

    cells: List[TableCell] = []
    for row in selected:
        for p, q in row_cells(row, max_param):
            cell = runner.run(row, p, q)
            _logger.info(f"[Table] {cell.name} = {cell.value}: {cell.status.value} ({cell.method.value})")
            cells.append(cell)

    if out_dir is not None:
        write_json(os.path.join(out_dir, "table.json"), [dump(cell.to_schema()) for cell in cells])
    return cells


def count_by_status(cells: Sequence[TableCell]) -> Dict[str, int]:
    counts = {status.value: 0 for status in Status}
    for cell in cells:
        counts[cell.status.value] += 1
    return counts
