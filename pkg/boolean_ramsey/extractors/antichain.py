from collections import Counter

from boolean_ramsey.colorings.chains import incomparable_case, incomparable_chains
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.constants import Constants
from boolean_ramsey.extractors.base_extractor import BaseExtractor, ExtractionOutcome
from boolean_ramsey.extractors.factory import ExtractorFactory
from boolean_ramsey.posets import antichain, chain
from boolean_ramsey.shared import DomainError


@ExtractorFactory.register(Constants.Extractors.RAINBOW_ANTICHAIN)
class RainbowAntichainExtractor(BaseExtractor):
    """
    Rainbow A_n from n pairwise incomparable chains of B_N. Without a
    monochromatic C_m, chain i shows at least i colors, so picking one set
    per chain in order, each avoiding the colors already picked, never
    gets stuck. For m >= 3 this needs the long chains of
    N = (m-1)(n-1) + 2; the short family of N = n + 2 only serves m = 2.

    Args:
        m (int): Length of the forbidden monochromatic chain.
        n (int): Size of the rainbow antichain to extract.
    """

    def __init__(self, m: int, n: int, *args, **kwargs):
        super().__init__()
        self.m, self.n = m, n

    def _extract(self, coloring: Coloring) -> ExtractionOutcome:
        m, n = self.m, self.n
        try:
            case = incomparable_case(coloring.n, m, n)
        except DomainError as e:
            return self.unmet(str(e))
        if case == "A" and m >= 3:
            return self.unmet(
                f"chains of B_{coloring.n} are too short to force {n} colors without a monochromatic C_{m}"
            )
        family = incomparable_chains(coloring.n, m, n)

        for i, links in enumerate(family.chains, start=1):
            counts = Counter(coloring.color_of(x) for x in links)
            color, count = counts.most_common(1)[0]
            if count >= m:
                repeated = [x for x in links if coloring.color_of(x) == color][:m]
                return self.monochromatic(
                    chain(m),
                    repeated,
                    coloring,
                    description=f"chain {i} repeats color {color} {count} times",
                    chain=i,
                )

        picked, used = [], set()
        for links in family.chains:
            choice = next((x for x in links if coloring.color_of(x) not in used), None)
            if choice is None:
                return self.unmet(f"chain {len(picked) + 1} shows no unused color")
            picked.append(choice)
            used.add(coloring.color_of(choice))

        return self.rainbow(antichain(n), picked, coloring, chain_lengths=family.lengths)


def rainbow_antichain(coloring: Coloring, m: int, n: int) -> ExtractionOutcome:
    return RainbowAntichainExtractor(m=m, n=n).extract(coloring)
