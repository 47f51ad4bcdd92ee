from typing import List, NamedTuple, Optional

from boolean_ramsey.posets import Poset


class Shape(NamedTuple):
    """A structural family ("A", "B" or "C") with its parameter."""

    kind: str
    k: int

    def __str__(self) -> str:
        return f"{self.kind}{self.k}"


def shapes(poset: Poset) -> List[Shape]:
    """
    Every standard family the poset belongs to; small posets belong to
    several (C2 is B1, a single element is A1, B0 and C1).
    """
    found = []
    if poset.is_antichain():
        found.append(Shape("A", poset.size))
    if poset.is_chain():
        found.append(Shape("C", poset.size))
    rank = poset.boolean_rank
    if rank is not None:
        found.append(Shape("B", rank))
    return found


def shape_of(poset: Poset, kind: str) -> Optional[Shape]:
    return next((shape for shape in shapes(poset) if shape.kind == kind), None)
