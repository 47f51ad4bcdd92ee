"""
Explicit extremal colorings of B_N, each registered with the
`ColoringFactory`, and function shortcuts for direct use.
"""

from typing import Hashable, Union

from boolean_ramsey import lattice
from boolean_ramsey.colorings.base_coloring import BaseColoring
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.colorings.factory import ColoringFactory
from boolean_ramsey.constants import Constants
from boolean_ramsey.posets import Poset, make
from boolean_ramsey.shared import DomainError, SubsetMask


def _check_m(m: int):
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")


@ColoringFactory.register(Constants.Colorings.CONSTANT)
class ConstantColoring(BaseColoring):
    def label(self, x: SubsetMask) -> Hashable:
        return 0


@ColoringFactory.register(Constants.Colorings.RANK)
class RankColoring(BaseColoring):
    """Every level gets its own color."""

    def label(self, x: SubsetMask) -> Hashable:
        return lattice.popcount(x)


@ColoringFactory.register(Constants.Colorings.LEVEL_BLOCK)
class LevelBlockColoring(BaseColoring):
    """
    Consecutive blocks of m-1 levels share a color, so no color class
    holds a chain of m sets.

    Args:
        N (int): The ground set size.
        m (int): Forbidden monochromatic chain length, at least 2.
    """

    def __init__(self, N: int, m: int, *args, **kwargs):
        super().__init__(N)
        _check_m(m)
        self.m = m

    def label(self, x: SubsetMask) -> Hashable:
        return lattice.popcount(x) // (self.m - 1)


@ColoringFactory.register(Constants.Colorings.SCD_BLOCK)
class ScdBlockColoring(BaseColoring):
    """
    Groups of m-1 consecutive chains of the symmetric chain decomposition
    share a color; every class is covered by m-1 chains and holds no A_m.
    """

    def __init__(self, N: int, m: int, *args, **kwargs):
        super().__init__(N)
        _check_m(m)
        self.m = m
        self._chain_of = {
            x: index
            for index, chain in enumerate(lattice.symmetric_chain_decomposition(N).chains)
            for x in chain
        }

    def label(self, x: SubsetMask) -> Hashable:
        return self._chain_of[x] // (self.m - 1)


@ColoringFactory.register(Constants.Colorings.CEIL_SIZE)
class CeilSizeColoring(BaseColoring):
    """Color 1 + ceil(|X| / (m-1)), renumbered densely."""

    def __init__(self, N: int, m: int, *args, **kwargs):
        super().__init__(N)
        _check_m(m)
        self.m = m

    def label(self, x: SubsetMask) -> Hashable:
        return -(-lattice.popcount(x) // (self.m - 1))


@ColoringFactory.register(Constants.Colorings.NEAR_CONSTANT)
class NearConstantColoring(BaseColoring):
    """
    The empty set and [N] share color 0; every other subset gets a color
    of its own.
    """

    def __init__(self, N: int, *args, **kwargs):
        super().__init__(N)
        if N < 1:
            raise DomainError(f"near_constant needs N >= 1, got {N}")

    def label(self, x: SubsetMask) -> Hashable:
        if x in (0, lattice.full_set(self.N)):
            return -1
        return x


@ColoringFactory.register(Constants.Colorings.TRACE)
class TraceColoring(BaseColoring):
    """
    Color by the trace Z & Y, where Y is the top `ysize` ground elements.
    Every class is a copy of B_{N - ysize}.
    """

    def __init__(self, N: int, ysize: int, *args, **kwargs):
        super().__init__(N)
        if not 0 <= ysize <= N:
            raise DomainError(f"ysize must lie in [0, {N}], got {ysize}")
        self.ysize = ysize

    def label(self, x: SubsetMask) -> Hashable:
        return x >> (self.N - self.ysize)


@ColoringFactory.register(Constants.Colorings.HALVES)
class HalvesColoring(BaseColoring):
    """
    Two colors on B_{2h-3}: the bottom h-1 levels and the top h-1 levels,
    where h is the height of `pattern`. Witnesses R_2(P) >= 2h(P) - 2.
    """

    def __init__(self, pattern: Union[str, Poset], *args, **kwargs):
        self.pattern = make(pattern)
        self.h = self.pattern.height
        if self.h < 2:
            raise DomainError(f"halves needs a pattern of height at least 2, got {self.h}")
        super().__init__(2 * self.h - 3)

    def label(self, x: SubsetMask) -> Hashable:
        return 0 if lattice.popcount(x) <= self.h - 2 else 1


@ColoringFactory.register(Constants.Colorings.BLOCK_LEVELS)
class BlockLevelsColoring(LevelBlockColoring):
    """
    k colors on B_{mk-1}, each on m consecutive levels; no class holds
    m+1 distinct sizes, hence no B_m. Witnesses R_k(B_m) >= mk.
    """

    def __init__(self, k: int, m: int, *args, **kwargs):
        if k < 1 or m < 1:
            raise DomainError(f"block_levels needs k, m >= 1, got k={k}, m={m}")
        self.k = k
        super().__init__(m * k - 1, m + 1)


@ColoringFactory.register(Constants.Colorings.PAIRS_OF_LEVELS)
class PairsOfLevelsColoring(BlockLevelsColoring):
    """Every two consecutive levels of B_{2k-1} share a color."""

    def __init__(self, k: int, *args, **kwargs):
        super().__init__(k, 2)


def constant(N: int) -> Coloring:
    return ConstantColoring(N).generate()


def rank(N: int) -> Coloring:
    return RankColoring(N).generate()


def level_block(N: int, m: int) -> Coloring:
    return LevelBlockColoring(N, m).generate()


def scd_block(N: int, m: int) -> Coloring:
    return ScdBlockColoring(N, m).generate()


def ceil_size(N: int, m: int) -> Coloring:
    return CeilSizeColoring(N, m).generate()


def near_constant(N: int) -> Coloring:
    return NearConstantColoring(N).generate()


def trace(N: int, ysize: int) -> Coloring:
    return TraceColoring(N, ysize).generate()


def halves(pattern: Union[str, Poset]) -> Coloring:
    return HalvesColoring(pattern).generate()


def block_levels(k: int, m: int) -> Coloring:
    return BlockLevelsColoring(k, m).generate()


def pairs_of_levels(k: int) -> Coloring:
    return PairsOfLevelsColoring(k).generate()
