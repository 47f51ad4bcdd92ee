"""
Canonical backtracking over colorings of B_n. Subsets are colored in
graded-colex order, colors are tried in ascending id with a new color last,
and every assignment is checked against the pattern copies it completes.
"""

from __future__ import annotations

import logging
import multiprocessing
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.colorings.verify import verify, verify_fixed
from boolean_ramsey.constants import Config, Constants
from boolean_ramsey.embedding import copy_index
from boolean_ramsey.search.problem import AvoidanceProblem, SearchOutcome
from boolean_ramsey.shared import VerificationError

_logger = logging.getLogger(__name__)


class BudgetExhausted(Exception):
    pass


class Explorer:
    """
    Depth first search state for one problem: the partial coloring by
    canonical position and the node counters.
    """

    def __init__(self, problem: AvoidanceProblem, budget: Optional[int] = None):
        self.problem = problem
        self.size = problem.size
        self.budget = problem.budget if budget is None else budget
        mode = problem.mode

        if problem.is_rainbow:
            self.mono_index = copy_index(problem.n, tuple(mode.monochromatic))
            self.rainbow_index = copy_index(problem.n, tuple(mode.rainbow))
        else:
            unique = list(dict.fromkeys(mode.patterns))
            self.fixed_index = copy_index(problem.n, tuple(unique))
            self.pattern_of = [unique.index(p) for p in mode.patterns]
            self.identical = len(unique) == 1

        self.colors = np.full(self.size, -1, dtype=np.int64)
        self.nodes = 0
        self.deepest = 0

    def candidates(self, highest: int) -> range:
        if self.problem.is_rainbow:
            return range(min(highest + 2, self.size))
        k = self.problem.mode.k
        if self.identical:
            return range(min(highest + 2, k))
        return range(k)

    def violates(self, position: int) -> bool:
        colors = self.colors
        if self.problem.is_rainbow:
            for i in range(len(self.problem.mode.monochromatic)):
                if self.mono_index.monochromatic_at(i, position, colors) is not None:
                    return True
            for j in range(len(self.problem.mode.rainbow)):
                if self.rainbow_index.rainbow_at(j, position, colors) is not None:
                    return True
            return False

        index = self.pattern_of[int(colors[position])]
        return self.fixed_index.monochromatic_at(index, position, colors) is not None

    def _assign(self, position: int, color: int) -> bool:
        if self.nodes >= self.budget:
            raise BudgetExhausted()
        self.nodes += 1
        if self.nodes % Config.search.log_every == 0:
            _logger.debug(f"[Search] {self.nodes} nodes, depth {position + 1}/{self.size}")

        self.colors[position] = color
        self.deepest = max(self.deepest, position + 1)
        return not self.violates(position)

    def descend(self, position: int, highest: int) -> bool:
        """Complete the coloring from `position` on; True when a full coloring survives."""
        if position == self.size:
            return True
        for color in self.candidates(highest):
            if self._assign(position, color) and self.descend(position + 1, max(highest, color)):
                return True
        self.colors[position] = -1
        return False

    def prefixes(self, depth: int, position: int = 0, highest: int = -1) -> Iterator[Tuple[int, ...]]:
        """Surviving colorings of the first `depth` positions, in search order."""
        if position == depth:
            yield tuple(int(c) for c in self.colors[:depth])
            return
        for color in self.candidates(highest):
            if self._assign(position, color):
                yield from self.prefixes(depth, position + 1, max(highest, color))
        self.colors[position] = -1

    def resume(self, prefix: Sequence[int]) -> bool:
        self.colors[: len(prefix)] = prefix
        highest = max(prefix, default=-1)
        return self.descend(len(prefix), highest)

    def witness(self) -> Coloring:
        labels = [int(c) for c in self.colors]
        if self.problem.is_rainbow:
            return Coloring(self.problem.n, labels)
        return Coloring.from_labels(self.problem.n, labels, keep_palette=True)


def certify(problem: AvoidanceProblem, witness: Coloring) -> Coloring:
    """Re-check an avoiding coloring from scratch."""
    if problem.is_rainbow:
        report = verify(witness, problem.mode.monochromatic, problem.mode.rainbow)
    else:
        report = verify_fixed(witness, problem.mode.patterns)
    if not report.avoided:
        raise VerificationError(f"[Search] witness for {problem.describe()} fails verification")
    return witness


def _explore_subtree(
    task: Tuple[AvoidanceProblem, Tuple[int, ...], int]
) -> Tuple[str, int, int, Optional[List[int]]]:
    problem, prefix, allowance = task
    explorer = Explorer(problem, budget=allowance)
    try:
        found = explorer.resume(prefix)
    except BudgetExhausted:
        return Constants.Outcome.BUDGET_EXCEEDED.value, explorer.nodes, explorer.deepest, None
    if found:
        return Constants.Outcome.AVOIDABLE.value, explorer.nodes, explorer.deepest, explorer.colors.tolist()
    return Constants.Outcome.UNAVOIDABLE.value, explorer.nodes, explorer.deepest, None


def _decide_sequential(problem: AvoidanceProblem) -> SearchOutcome:
    explorer = Explorer(problem)
    try:
        found = explorer.descend(0, -1)
    except BudgetExhausted:
        return SearchOutcome(Constants.Outcome.BUDGET_EXCEEDED, problem.n, explorer.nodes, explorer.deepest)

    if found:
        return SearchOutcome(
            Constants.Outcome.AVOIDABLE,
            problem.n,
            explorer.nodes,
            explorer.deepest,
            witness=certify(problem, explorer.witness()),
        )
    return SearchOutcome(Constants.Outcome.UNAVOIDABLE, problem.n, explorer.nodes, explorer.deepest)


def _decide_parallel(problem: AvoidanceProblem, jobs: int, depth: int) -> SearchOutcome:
    """
    Subtree j runs with what the budget leaves after the prefix nodes that
    precede it, and the results are charged in enumeration order. The
    sequential search would have spent exactly those nodes, so the outcome
    and the node count match it for any number of jobs.
    """
    explorer = Explorer(problem)
    budget = problem.budget
    prefixes, spent_before, truncated = [], [], False
    try:
        for prefix in explorer.prefixes(depth):
            prefixes.append(prefix)
            spent_before.append(explorer.nodes)
    except BudgetExhausted:
        truncated = True
    prefix_nodes, deepest = explorer.nodes, explorer.deepest

    def exceeded() -> SearchOutcome:
        return SearchOutcome(Constants.Outcome.BUDGET_EXCEEDED, problem.n, budget, deepest)

    tasks = [(problem, prefix, budget - spent) for prefix, spent in zip(prefixes, spent_before)]
    _logger.info(f"[Search] {problem.describe()}: {len(tasks)} subtrees on {jobs} workers")

    subtree_nodes = 0
    with multiprocessing.Pool(processes=jobs) as pool:
        # ordered results; leaving the block terminates workers still running
        for (kind, used, reached, colors), spent in zip(pool.imap(_explore_subtree, tasks), spent_before):
            deepest = max(deepest, reached)
            charged = spent + subtree_nodes + used
            if kind == Constants.Outcome.BUDGET_EXCEEDED.value or charged > budget:
                return exceeded()
            if kind == Constants.Outcome.AVOIDABLE.value:
                explorer.colors[:] = colors
                return SearchOutcome(
                    Constants.Outcome.AVOIDABLE,
                    problem.n,
                    charged,
                    deepest,
                    witness=certify(problem, explorer.witness()),
                )
            subtree_nodes += used

    total = prefix_nodes + subtree_nodes
    if truncated or total > budget:
        return exceeded()
    return SearchOutcome(Constants.Outcome.UNAVOIDABLE, problem.n, total, deepest)


def decide(
    problem: AvoidanceProblem,
    jobs: Optional[int] = None,
    split_depth: Optional[int] = None,
) -> SearchOutcome:
    """
    Avoidable with the first avoiding coloring in enumeration order,
    Unavoidable once the tree is exhausted, or BudgetExceeded.

    With several jobs the tree is cut at `split_depth` and the subtrees are
    searched by worker processes. The node budget covers the whole search
    and the earliest subtree decides, so neither the outcome nor the
    witness depends on `jobs`.
    """
    jobs = Config.search.jobs if jobs is None else jobs
    depth = Config.search.split_depth if split_depth is None else split_depth

    cap = Config.search.rainbow_max_n if problem.is_rainbow else Config.search.fixed_max_n
    if problem.n > cap:
        _logger.warning(f"[Search] {problem.describe()} is beyond the recommended B{cap}")

    if jobs > 1 and 0 < depth < problem.size:
        outcome = _decide_parallel(problem, jobs, depth)
    else:
        outcome = _decide_sequential(problem)

    _logger.info(
        f"[Search] {problem.describe()}: {outcome.kind.value} after {outcome.nodes} nodes"
    )
    return outcome
