from typing import List, Optional

from boolean_ramsey import lattice
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.constants import Constants
from boolean_ramsey.embedding import find_monochromatic
from boolean_ramsey.extractors.base_extractor import BaseExtractor, ExtractionOutcome
from boolean_ramsey.extractors.factory import ExtractorFactory
from boolean_ramsey.posets import Poset, antichain, chain, dilworth_partition
from boolean_ramsey.shared import DomainError, SubsetMask


def _members(coloring: Coloring, ground: SubsetMask, color: int) -> List[SubsetMask]:
    """Nonempty subsets of `ground` carrying `color`, in canonical order."""
    return [x for x in lattice.interval(0, ground) if x and coloring.color_of(x) == color]


@ExtractorFactory.register(Constants.Extractors.RAINBOW_CHAIN_A2)
class RainbowChainA2Extractor(BaseExtractor):
    """
    Rainbow C_N from a coloring of B_N whose color classes are chains.

    The recursion works on a ground set G where the empty set may carry a
    substitute color. When the empty set and G differ in color, every set
    colored like G contains one pivot element p; a rainbow chain of B(G - p)
    extended by G is the answer. When they agree, the class of G loses all
    its nonempty members on G' = G - p, so the empty set is recolored like
    G' for the recursion, traded back for G' afterwards, and the real empty
    set heads the chain.
    """

    def _extract(self, coloring: Coloring) -> ExtractionOutcome:
        found = find_monochromatic(coloring, antichain(2))
        if found is not None:
            return self.monochromatic(
                found.pattern,
                found.images,
                coloring,
                description=f"color {found.colors[0]} holds two incomparable sets",
            )

        pivots: List[int] = []
        links = self._rainbow_chain(coloring, lattice.full_set(coloring.n), None, pivots)
        return self.rainbow(chain(len(links)), links, coloring, length=len(links), pivots=pivots)

    def _rainbow_chain(
        self,
        coloring: Coloring,
        ground: SubsetMask,
        empty_color: Optional[int],
        pivots: List[int],
    ) -> List[SubsetMask]:
        if ground == 0:
            return []
        if lattice.popcount(ground) == 1:
            return [ground]

        top = coloring.color_of(ground)
        bottom = coloring.color_of(0) if empty_color is None else empty_color

        if bottom != top:
            smallest = min(_members(coloring, ground, top), key=lattice.graded_colex_key)
            pivot = lattice.lowest_element(smallest)
            pivots.append(pivot)
            rest = ground & ~(1 << (pivot - 1))
            return self._rainbow_chain(coloring, rest, empty_color, pivots) + [ground]

        members = _members(coloring, ground, top)
        smallest = min(members, key=lattice.graded_colex_key) if members else ground
        pivot = lattice.lowest_element(smallest)
        pivots.append(pivot)
        rest = ground & ~(1 << (pivot - 1))

        links = self._rainbow_chain(coloring, rest, coloring.color_of(rest), pivots)
        trimmed = [x for x in links if x]
        if len(trimmed) < len(links):
            trimmed.append(rest)
        return [0] + trimmed


@ExtractorFactory.register(Constants.Extractors.RAINBOW_CHAIN_AM)
class RainbowChainAmExtractor(BaseExtractor):
    """
    Rainbow chain from a coloring without a monochromatic A_m. The class of
    the current top set G splits into at most m-1 chains; removing the
    smallest element of each chain's minimal set leaves a ground set S on
    which no nonempty set shares G's color, so the chain continues inside
    B(S). The empty set joins at the bottom when its color is still unused.

    Args:
        m (int): Size of the forbidden monochromatic antichain.
    """

    def __init__(self, m: int, *args, **kwargs):
        super().__init__()
        if m < 2:
            raise DomainError(f"rainbow_chain_am needs m >= 2, got {m}")
        self.m = m

    def _extract(self, coloring: Coloring) -> ExtractionOutcome:
        if self.m == 2:
            outcome = RainbowChainA2Extractor()._extract(coloring)
            outcome.metadata["delegated"] = Constants.Extractors.RAINBOW_CHAIN_A2.value
            return outcome

        found = find_monochromatic(coloring, antichain(self.m))
        if found is not None:
            return self.monochromatic(
                found.pattern,
                found.images,
                coloring,
                description=f"color {found.colors[0]} holds an antichain of {self.m} sets",
            )

        links: List[SubsetMask] = []
        peeled: List[int] = []
        ground = lattice.full_set(coloring.n)

        while ground:
            members = _members(coloring, ground, coloring.color_of(ground))
            induced = Poset.from_family(members)
            removed = 0
            for indices in dilworth_partition(induced):
                lowest = min((members[i] for i in indices), key=lattice.graded_colex_key)
                removed |= 1 << (lattice.lowest_element(lowest) - 1)
            links.append(ground)
            peeled.append(lattice.popcount(removed))
            ground &= ~removed

        links.reverse()
        if coloring.color_of(0) not in {coloring.color_of(x) for x in links}:
            links.insert(0, 0)

        return self.rainbow(
            chain(len(links)),
            links,
            coloring,
            length=len(links),
            peeled=peeled,
            guaranteed=-(-coloring.n // (self.m - 1)),
        )


def rainbow_chain_a2(coloring: Coloring) -> ExtractionOutcome:
    return RainbowChainA2Extractor().extract(coloring)


def rainbow_chain_am(coloring: Coloring, m: int) -> ExtractionOutcome:
    return RainbowChainAmExtractor(m=m).extract(coloring)
