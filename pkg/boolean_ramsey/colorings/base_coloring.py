from abc import ABC, abstractmethod
from typing import Hashable

from boolean_ramsey import lattice
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.shared import SubsetMask


class BaseColoring(ABC):
    """
    Base class of the explicit colorings of B_N. Subclasses assign a raw
    label to every subset; `generate` renumbers the labels to dense ids in
    first-use order.

    Args:
        N (int): The ground set size.
    """

    def __init__(self, N: int, *args, **kwargs):
        self.N = lattice.check_ground_size(N)

    @abstractmethod
    def label(self, x: SubsetMask) -> Hashable:
        raise NotImplementedError()

    def generate(self) -> Coloring:
        return Coloring.from_labels(
            self.N, [self.label(x) for x in lattice.canonical_order(self.N)]
        )
