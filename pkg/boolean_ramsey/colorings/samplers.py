"""
Seeded random colorings with prescribed class structure, used by the
property suites of the extractors.
"""

from typing import Dict, List

import numpy as np

from boolean_ramsey import lattice
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.shared import DomainError, SubsetMask


def _choose(rng: np.random.Generator, options: List[int]) -> int:
    return int(options[rng.integers(len(options))])


def random_coloring(N: int, k: int, rng: np.random.Generator) -> Coloring:
    """Uniform assignment of k colors, renumbered densely."""
    labels = rng.integers(k, size=1 << N)
    return Coloring.from_labels(N, [int(label) for label in labels])


def random_antichain_classes(N: int, rng: np.random.Generator) -> Coloring:
    """Every color class is an antichain (no monochromatic C_2)."""
    order = list(lattice.canonical_order(N))
    members: List[List[SubsetMask]] = []
    labels: Dict[SubsetMask, int] = {}

    for x in (order[i] for i in rng.permutation(len(order))):
        allowed = [
            color
            for color, cls in enumerate(members)
            if not any(lattice.comparable(x, y) for y in cls)
        ]
        color = _choose(rng, allowed + [len(members)])
        if color == len(members):
            members.append([])
        members[color].append(x)
        labels[x] = color

    return Coloring.from_mask_colors(N, labels)


def random_chain_classes(N: int, rng: np.random.Generator) -> Coloring:
    """Every color class is a chain (no monochromatic A_2)."""
    order = list(lattice.canonical_order(N))
    members: List[List[SubsetMask]] = []
    labels: Dict[SubsetMask, int] = {}

    for x in (order[i] for i in rng.permutation(len(order))):
        allowed = [
            color
            for color, cls in enumerate(members)
            if all(lattice.comparable(x, y) for y in cls)
        ]
        color = _choose(rng, allowed + [len(members)])
        if color == len(members):
            members.append([])
        members[color].append(x)
        labels[x] = color

    return Coloring.from_mask_colors(N, labels)


def random_no_mono_chain(N: int, m: int, rng: np.random.Generator) -> Coloring:
    """
    No color class holds a chain of m sets. Sets are colored level by level,
    tracking the longest same-colored chain ending at each set.
    """
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")

    labels: Dict[SubsetMask, int] = {}
    longest: Dict[SubsetMask, int] = {}
    palette = 0

    for x in lattice.canonical_order(N):
        reach: Dict[int, int] = {}
        for y, color in labels.items():
            if lattice.is_proper_subset(y, x):
                reach[color] = max(reach.get(color, 0), longest[y])
        allowed = [color for color in range(palette) if reach.get(color, 0) + 1 < m]
        color = _choose(rng, allowed + [palette])
        if color == palette:
            palette += 1
        labels[x] = color
        longest[x] = reach.get(color, 0) + 1

    return Coloring.from_mask_colors(N, labels)
