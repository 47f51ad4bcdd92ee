"""
Primitives of the Boolean lattice B_n: subsets of [n] as bitmasks, the
canonical graded-colex order, levels, intervals, the B_{i,j} sublattices,
complementation and the symmetric chain decomposition.

Elements are 1-based at the interface (element i is bit i-1).
"""

import dataclasses
import functools
from math import comb
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from boolean_ramsey.constants import Config
from boolean_ramsey.shared import DomainError, SubsetMask


def check_ground_size(n: int) -> int:
    if n < 0:
        raise DomainError(f"ground set size must be non-negative, got {n}")
    cap = Config.lattice.max_ground_size
    if n > cap:
        raise DomainError(f"ground set size {n} exceeds the lattice cap {cap}")
    return n


def popcount(x: SubsetMask) -> int:
    return bin(x).count("1")


def full_set(n: int) -> SubsetMask:
    return (1 << n) - 1


def is_subset(x: SubsetMask, y: SubsetMask) -> bool:
    return x & ~y == 0


def is_proper_subset(x: SubsetMask, y: SubsetMask) -> bool:
    return x != y and x & ~y == 0


def comparable(x: SubsetMask, y: SubsetMask) -> bool:
    return x & ~y == 0 or y & ~x == 0


def graded_colex_key(x: SubsetMask) -> Tuple[int, int]:
    return popcount(x), x


def sort_family(family: Iterable[SubsetMask]) -> List[SubsetMask]:
    return sorted(family, key=graded_colex_key)


def mask_from_elements(elements: Iterable[int]) -> SubsetMask:
    mask = 0
    for element in elements:
        if element < 1:
            raise DomainError(f"elements are 1-based, got {element}")
        mask |= 1 << (element - 1)
    return mask


def elements_of(x: SubsetMask) -> List[int]:
    elements, position = [], 1
    while x:
        if x & 1:
            elements.append(position)
        x >>= 1
        position += 1
    return elements


def prefix(j: int) -> SubsetMask:
    """The set [j] = {1,...,j}."""
    return (1 << j) - 1


def lowest_element(x: SubsetMask) -> int:
    return (x & -x).bit_length()


def format_mask(x: SubsetMask) -> str:
    return "{" + ",".join(map(str, elements_of(x))) + "}"


@functools.lru_cache(maxsize=None)
def canonical_order(n: int) -> Tuple[SubsetMask, ...]:
    """All subsets of [n], ascending cardinality, ties by integer value."""
    check_ground_size(n)
    return tuple(sorted(range(1 << n), key=graded_colex_key))


@functools.lru_cache(maxsize=None)
def canonical_positions(n: int) -> np.ndarray:
    """Inverse of `canonical_order`: positions[mask] is the mask's rank."""
    positions = np.empty(1 << n, dtype=np.int64)
    positions[np.array(canonical_order(n), dtype=np.int64)] = np.arange(1 << n)
    positions.setflags(write=False)
    return positions


def fits(x: SubsetMask, n: int) -> bool:
    return 0 <= x < (1 << n)


def level(n: int, k: int) -> List[SubsetMask]:
    check_ground_size(n)
    if not 0 <= k <= n:
        raise DomainError(f"level {k} out of range for ground size {n}")
    start = sum(comb(n, i) for i in range(k))
    return list(canonical_order(n)[start : start + comb(n, k)])


def interval(x: SubsetMask, y: SubsetMask) -> List[SubsetMask]:
    """All Z with x <= Z <= y."""
    if not is_subset(x, y):
        raise DomainError(f"{format_mask(x)} is not a subset of {format_mask(y)}")

    free = y & ~x
    members = []
    sub = free
    while True:
        members.append(x | sub)
        if sub == 0:
            break
        sub = (sub - 1) & free
    return sort_family(members)


def _check_pair(n: int, i: int, j: int):
    check_ground_size(n)
    if i == j:
        raise DomainError(f"elements must differ, got i = j = {i}")
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError(f"elements {i}, {j} out of range [1, {n}]")


def sub_ij(n: int, i: int, j: int) -> List[SubsetMask]:
    """Subsets of [n] containing i and avoiding j; a copy of B_{n-2}."""
    _check_pair(n, i, j)
    bit_i, bit_j = 1 << (i - 1), 1 << (j - 1)
    rest = full_set(n) & ~bit_i & ~bit_j
    return interval(bit_i, bit_i | rest)


def sub_updown(n: int, i: int, j: int) -> List[SubsetMask]:
    """
    {X : {i} < X < [n] - {j}} together with the empty set and [n]; the two
    extra sets act as bottom and top of a copy of B_{n-2}.
    """
    _check_pair(n, i, j)
    if n < 4:
        raise DomainError(f"sub_updown needs n >= 4, got {n}")
    bit_i = 1 << (i - 1)
    upper = full_set(n) & ~(1 << (j - 1))
    middle = [x for x in interval(bit_i, upper) if x not in (bit_i, upper)]
    return sort_family([0, *middle, full_set(n)])


def is_increasing_chain(family: Sequence[SubsetMask]) -> bool:
    return all(is_proper_subset(a, b) for a, b in zip(family, family[1:]))


def complement_family(
    n: int, family: Sequence[SubsetMask]
) -> Tuple[List[SubsetMask], bool]:
    """
    Complement every member inside [n].

    Returns:
        The complemented masks in input order, and whether the order was
        reversed, i.e. the input was an increasing chain and is now decreasing.
    """
    for x in family:
        if not fits(x, n):
            raise DomainError(f"{format_mask(x)} does not fit ground size {n}")
    complemented = [full_set(n) & ~x for x in family]
    return complemented, len(family) > 1 and is_increasing_chain(family)


@dataclasses.dataclass
class ChainFamily:
    n: int
    chains: List[List[SubsetMask]]
    partition: bool = False
    incomparable: bool = False

    @property
    def lengths(self) -> List[int]:
        return [len(chain) for chain in self.chains]

    def validate(self):
        for chain in self.chains:
            if not is_increasing_chain(chain):
                raise DomainError(f"not an increasing chain: {list(map(format_mask, chain))}")
            for x in chain:
                if not fits(x, self.n):
                    raise DomainError(f"{format_mask(x)} does not fit ground size {self.n}")

        if self.partition:
            members = [x for chain in self.chains for x in chain]
            if len(members) != len(set(members)) or set(members) != set(range(1 << self.n)):
                raise DomainError("chains do not partition the lattice")

        if self.incomparable:
            for a, first in enumerate(self.chains):
                for second in self.chains[a + 1 :]:
                    for x in first:
                        for y in second:
                            if comparable(x, y):
                                raise DomainError(
                                    f"{format_mask(x)} and {format_mask(y)} are comparable"
                                )
        return self


def _bracket_unmatched(x: SubsetMask, n: int) -> Tuple[List[int], List[int]]:
    # zeros open a bracket, ones close the nearest open one to their left
    open_zeros: List[int] = []
    unmatched_ones: List[int] = []
    for bit in range(n):
        if x >> bit & 1:
            if open_zeros:
                open_zeros.pop()
            else:
                unmatched_ones.append(bit)
        else:
            open_zeros.append(bit)
    return unmatched_ones, open_zeros


@functools.lru_cache(maxsize=None)
def _symmetric_chains(n: int) -> Tuple[Tuple[SubsetMask, ...], ...]:
    chains = []
    for x in canonical_order(n):
        unmatched_ones, unmatched_zeros = _bracket_unmatched(x, n)
        if unmatched_ones:
            continue
        chain = [x]
        for bit in unmatched_zeros:
            chain.append(chain[-1] | 1 << bit)
        chains.append(tuple(chain))
    return tuple(chains)


def symmetric_chain_decomposition(n: int) -> ChainFamily:
    """
    Partition of B_n into C(n, n//2) symmetric saturated chains by the
    bracketing construction. Chains are ordered by their minimal set.
    """
    check_ground_size(n)
    return ChainFamily(
        n=n,
        chains=[list(chain) for chain in _symmetric_chains(n)],
        partition=True,
    )
