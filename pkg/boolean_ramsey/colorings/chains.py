from typing import List

from boolean_ramsey import lattice
from boolean_ramsey.lattice import ChainFamily
from boolean_ramsey.shared import DomainError, SubsetMask


def incomparable_case(N: int, m: int, n: int) -> str:
    """
    "B" for N = (m-1)(n-1) + 2 with m = n = 2 or m >= 3 (chain i has
    (m-1)(i-1) + 1 sets), otherwise "A" for N = n + 2 (chain i has i sets).
    B wins where both apply. Anything else is rejected.
    """
    if n < 2 or m < 2:
        raise DomainError(f"incomparable chains need m, n >= 2, got m={m}, n={n}")
    if N == (m - 1) * (n - 1) + 2 and (m >= 3 or n == 2):
        return "B"
    if N == n + 2:
        return "A"
    raise DomainError(
        f"no incomparable chain family for N={N}, m={m}, n={n}: "
        f"need N = n + 2, or N = (m-1)(n-1) + 2 with m = n = 2 or m >= 3"
    )


def _complement_chains(ground: int, chains: List[List[SubsetMask]]) -> List[List[SubsetMask]]:
    complemented = []
    for chain in chains:
        masks, reversed_order = lattice.complement_family(ground, chain)
        complemented.append(masks[::-1] if reversed_order else masks)
    return complemented


def _top_chain(top: int, length: int) -> List[SubsetMask]:
    """{top} united with [j] for 0 <= j < length."""
    return [1 << (top - 1) | lattice.prefix(j) for j in range(length)]


def incomparable_chains(N: int, m: int, n: int) -> ChainFamily:
    """
    n pairwise incomparable chains in B_N, built by complementing the
    family for n-1 into a larger ground set and appending a chain through
    the new top element.
    """
    case = incomparable_case(N, m, n)

    if case == "A":
        chains = [[lattice.mask_from_elements([1, 2])], _top_chain(4, 2)]
        for size in range(2, n):
            # family of `size` chains lives in [size + 2]
            chains = _complement_chains(size + 2, chains)
            chains.append(_top_chain(size + 3, size + 1))
    else:
        chains = [[1 << (m - 1)], _top_chain(m + 1, m)]
        for size in range(2, n):
            chains = _complement_chains((m - 1) * size + 1, chains)
            chains.append(_top_chain((m - 1) * size + 2, (m - 1) * size + 1))

    return ChainFamily(n=N, chains=chains, incomparable=True)
