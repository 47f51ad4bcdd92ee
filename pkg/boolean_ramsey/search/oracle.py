"""
Naive reference enumeration: every coloring up to color renaming, each
checked from scratch. Only usable for n <= 3.
"""

import itertools
from typing import Iterator, List, Optional, Tuple

from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.colorings.verify import verify, verify_fixed
from boolean_ramsey.search.problem import AvoidanceProblem


def restricted_growth_strings(length: int, max_blocks: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Set partitions of `length` items as restricted growth strings, in lexicographic order."""
    if length == 0:
        yield ()
        return

    cap = length if max_blocks is None else max_blocks
    word: List[int] = [0] * length
    highest: List[int] = [0] * length

    def extend(position: int):
        if position == length:
            yield tuple(word)
            return
        for block in range(min(highest[position - 1] + 2, cap)):
            word[position] = block
            highest[position] = max(highest[position - 1], block)
            yield from extend(position + 1)

    yield from extend(1)


def naive_decide(problem: AvoidanceProblem) -> Optional[Coloring]:
    """The first avoiding coloring in enumeration order, or None."""
    n, size = problem.n, problem.size

    if problem.is_rainbow:
        for word in restricted_growth_strings(size):
            coloring = Coloring(n, word)
            if verify(coloring, problem.mode.monochromatic, problem.mode.rainbow).avoided:
                return coloring
        return None

    k, patterns = problem.mode.k, problem.mode.patterns
    words = (
        restricted_growth_strings(size, k)
        if problem.mode.identical
        else itertools.product(range(k), repeat=size)
    )
    for word in words:
        coloring = Coloring.from_labels(n, list(word), keep_palette=True)
        if verify_fixed(coloring, patterns).avoided:
            return coloring
    return None
