"""
Extractors for rainbow Boolean posets: the principal chain walk
(rainbow B_n unless a monochromatic C_m shows up) and the interval walk
(rainbow B_n unless a monochromatic B_m shows up).
"""

import dataclasses
from typing import Dict, List, Optional, Sequence

from boolean_ramsey import embedding, lattice
from boolean_ramsey.bounds.ramsey_k import default_interval_budgets
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.constants import Constants
from boolean_ramsey.extractors.base_extractor import BaseExtractor, ExtractionOutcome
from boolean_ramsey.extractors.factory import ExtractorFactory
from boolean_ramsey.posets import boolean, chain
from boolean_ramsey.shared import DomainError, SubsetMask


@dataclasses.dataclass
class PrincipalState:
    """
    S = X | [shift] for one subset X of the designated top elements, with
    the principal chain ending at S and its color counts.
    """

    X: SubsetMask
    shift: int
    S: SubsetMask
    chain: List[SubsetMask]
    counts: Dict[int, int]


@ExtractorFactory.register(Constants.Extractors.RAINBOW_BOOLEAN)
class RainbowBooleanExtractor(BaseExtractor):
    """
    The top n ground elements play x_1..x_n, the prefix [N-n] supplies the
    shifts. Subsets X of {x_1..x_n} are visited in graded-colex order; the
    shift of X starts at the largest shift among its parents and grows until
    X | [shift] has a color no earlier S carries. Every set skipped on the
    way extends the principal chain, whose colors all belong to earlier S's,
    so a color repeated m times there is a monochromatic C_m.

    Args:
        n (int): Rank of the rainbow Boolean poset to extract.
        m (int): Length of the forbidden monochromatic chain.
    """

    def __init__(self, n: int, m: int, *args, **kwargs):
        super().__init__()
        if n < 0 or m < 2:
            raise DomainError(f"rainbow_boolean needs n >= 0 and m >= 2, got n={n}, m={m}")
        self.n, self.m = n, m

    def _extract(self, coloring: Coloring) -> ExtractionOutcome:
        N, n, m = coloring.n, self.n, self.m
        required = (m - 1) * ((1 << n) - 1)
        if N < required or N < n:
            return self.unmet(f"ground size {N} below (m-1)(2^n-1) = {required}")

        room = N - n
        states: Dict[SubsetMask, PrincipalState] = {}
        used = set()

        for I in lattice.canonical_order(n):
            X = I << room
            if I:
                parents = [I & ~(1 << bit) for bit in range(n) if I >> bit & 1]
                parent = states[max(parents, key=lambda p: (states[p].shift, -p))]
                start, walk, counts = parent.shift, list(parent.chain), dict(parent.counts)
            else:
                start, walk, counts = 0, [], {}

            for shift in range(start, room + 1):
                S = X | lattice.prefix(shift)
                color = coloring.color_of(S)
                walk.append(S)
                counts[color] = counts.get(color, 0) + 1
                if color not in used:
                    break
                if counts[color] >= m:
                    repeated = [Y for Y in walk if coloring.color_of(Y) == color][:m]
                    return self.monochromatic(
                        chain(m),
                        repeated,
                        coloring,
                        description=f"color {color} repeats {m} times on the principal chain of {lattice.format_mask(X)}",
                        subset=I,
                        shift=shift,
                    )
            else:
                return self.unmet(f"no fresh color above {lattice.format_mask(X)} within [{room}]")

            states[I] = PrincipalState(X=X, shift=shift, S=S, chain=walk, counts=counts)
            used.add(color)

        images = [states[I].S for I in range(1 << n)]
        return self.rainbow(
            boolean(n),
            images,
            coloring,
            shifts=[states[I].shift for I in range(1 << n)],
            principal_chain_lengths=[len(states[I].chain) for I in range(1 << n)],
        )


@ExtractorFactory.register(Constants.Extractors.RAINBOW_BOOLEAN_BM)
class RainbowBooleanBmExtractor(BaseExtractor):
    """
    Splits the ground set into consecutive blocks X_i of sizes r_i, one per
    nonempty subset I_i of [n] in size order. Y_I is the first set of the
    interval [base, base | X_i] with a fresh color, where base unites the
    Y_J of all J strictly inside I. An interval without a fresh color is
    colored with at most i colors, so a monochromatic B_m is searched there.

    Args:
        m (int): Rank of the forbidden monochromatic Boolean poset.
        n (int): Rank of the rainbow Boolean poset to extract.
        r (Sequence[int], optional): Block sizes, upper bounds for R_i(B_m).
    """

    def __init__(self, m: int, n: int, r: Optional[Sequence[int]] = None, *args, **kwargs):
        super().__init__()
        count = (1 << n) - 1
        self.m, self.n = m, n
        self.r = list(r) if r is not None else default_interval_budgets(m, n)
        if len(self.r) != count:
            raise DomainError(f"need {count} block sizes, got {len(self.r)}")

    def _extract(self, coloring: Coloring) -> ExtractionOutcome:
        m, n, budgets = self.m, self.n, self.r
        if coloring.n < sum(budgets):
            return self.unmet(f"ground size {coloring.n} below the block total {sum(budgets)}")

        chosen: Dict[SubsetMask, SubsetMask] = {0: 0}
        used = {coloring.color_of(0)}
        offset = 0

        subsets = [I for I in lattice.canonical_order(n) if I]
        for i, (I, r) in enumerate(zip(subsets, budgets), start=1):
            block = lattice.prefix(r) << offset
            offset += r

            base = 0
            for J, Y in chosen.items():
                if J != I and lattice.is_subset(J, I):
                    base |= Y

            for W in lattice.interval(0, block):
                if coloring.color_of(base | W) not in used:
                    chosen[I] = base | W
                    used.add(coloring.color_of(base | W))
                    break
            else:
                return self._monochromatic_in(coloring, base, block, i)

        images = [chosen[I] for I in range(1 << n)]
        return self.rainbow(boolean(n), images, coloring, block_sizes=list(budgets))

    def _monochromatic_in(
        self, coloring: Coloring, base: SubsetMask, block: SubsetMask, i: int
    ) -> ExtractionOutcome:
        family = lattice.interval(base, base | block)
        target = boolean(self.m)
        for color in sorted({coloring.color_of(Z) for Z in family}):
            members = [Z for Z in family if coloring.color_of(Z) == color]
            found = embedding.find_copy(members, target)
            if found is not None:
                return self.monochromatic(
                    target,
                    found.images,
                    coloring,
                    description=f"interval {i} has no fresh color",
                    interval=i,
                )
        return self.unmet(
            f"interval {i} has no fresh color and no monochromatic B{self.m}; "
            f"block size {self.r[i - 1]} is below R_{i}(B{self.m})",
            interval=i,
        )


def rainbow_boolean(coloring: Coloring, n: int, m: int) -> ExtractionOutcome:
    return RainbowBooleanExtractor(n=n, m=m).extract(coloring)


def rainbow_boolean_bm(
    coloring: Coloring, m: int, n: int, r: Optional[Sequence[int]] = None
) -> ExtractionOutcome:
    return RainbowBooleanBmExtractor(m=m, n=n, r=r).extract(coloring)
