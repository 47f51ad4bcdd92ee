"""
Exact values of RR(P, Q) for antichains, Boolean posets and chains.
Rows are tried in the order of the known values file; the first row whose
shapes match decides.
"""

import dataclasses
import math
from typing import Callable, Dict, List, Optional

from boolean_ramsey.bounds.ramsey_k import known_values
from boolean_ramsey.bounds.shapes import Shape, shapes
from boolean_ramsey.posets import Poset
from boolean_ramsey.shared import DomainError


def n_threshold(m: int, n: int) -> int:
    """Smallest N with C(N, N // 2) >= (m-1)(n-1) + 1."""
    if m < 1 or n < 1:
        raise DomainError(f"n_threshold needs m, n >= 1, got m={m}, n={n}")
    target = (m - 1) * (n - 1) + 1
    N = 0
    while math.comb(N, N // 2) < target:
        N += 1
    return N


def _chain_antichain(m: int, n: int) -> int:
    if m == 2 and n >= 3:
        return n + 2
    return (m - 1) * (n - 1) + 2


ROWS: Dict[str, Callable[[Shape, Shape], Optional[int]]] = {
    "antichain-antichain": lambda p, q: (
        n_threshold(p.k, q.k) if p.kind == q.kind == "A" else None
    ),
    "a2-chain": lambda p, q: q.k if (p.kind, p.k, q.kind) == ("A", 2, "C") else None,
    "boolean-b1": lambda p, q: p.k if (p.kind, q.kind, q.k) == ("B", "B", 1) else None,
    "b1-boolean": lambda p, q: (1 << q.k) - 1 if (p.kind, p.k, q.kind) == ("B", 1, "B") else None,
    "b2-b2": lambda p, q: 6 if (p, q) == (Shape("B", 2), Shape("B", 2)) else None,
    "chain-antichain": lambda p, q: (
        _chain_antichain(p.k, q.k) if (p.kind, q.kind) == ("C", "A") and q.k >= 2 else None
    ),
    "chain-boolean": lambda p, q: (
        (p.k - 1) * ((1 << q.k) - 1) if (p.kind, q.kind) == ("C", "B") else None
    ),
    "chain-chain": lambda p, q: (p.k - 1) * (q.k - 1) if p.kind == q.kind == "C" else None,
}


@dataclasses.dataclass
class TableMatch:
    row: str
    formula: str
    P: Shape
    Q: Shape
    value: int


def _rows() -> List[Dict[str, str]]:
    return known_values()["rows"]


def table_match_shapes(P: List[Shape], Q: List[Shape]) -> Optional[TableMatch]:
    for row in _rows():
        evaluate = ROWS[row["id"]]
        for p in P:
            for q in Q:
                value = evaluate(p, q)
                if value is not None:
                    return TableMatch(row=row["id"], formula=row["formula"], P=p, Q=q, value=value)
    return None


def table_match(P: Poset, Q: Poset) -> Optional[TableMatch]:
    return table_match_shapes(shapes(P), shapes(Q))


def table_value(P: Poset, Q: Poset) -> Optional[int]:
    """RR(P, Q) when (P, Q) matches a known row, else None."""
    if P.size == 1 or Q.size == 1:
        return 0
    found = table_match(P, Q)
    return None if found is None else found.value
