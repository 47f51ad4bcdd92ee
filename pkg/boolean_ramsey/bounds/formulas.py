"""
Closed form bounds on RR(P, Q). Every bound carries a source tag naming the
argument it comes from; the report keeps all of them.
"""

from __future__ import annotations

import dataclasses
import logging
import math
from fractions import Fraction
from typing import Iterable, List, Optional

from boolean_ramsey import lattice
from boolean_ramsey.bounds.ramsey_k import rk_bounds, rk_upper_shape
from boolean_ramsey.bounds.shapes import Shape
from boolean_ramsey.bounds.table import n_threshold, table_match, table_match_shapes
from boolean_ramsey.posets import Poset
from boolean_ramsey.shared import BoundSchema, BoundsReportSchema, BudgetExceededError, DomainError, SubsetMask

_logger = logging.getLogger(__name__)


@dataclasses.dataclass
class Bound:
    value: int
    source: str

    def to_schema(self) -> BoundSchema:
        return BoundSchema(value=int(self.value), source=self.source)


@dataclasses.dataclass
class BoundsReport:
    P: Poset
    Q: Poset
    lower: List[Bound]
    upper: List[Bound]

    @property
    def best_lower(self) -> Optional[int]:
        return max((b.value for b in self.lower), default=None)

    @property
    def best_upper(self) -> Optional[int]:
        return min((b.value for b in self.upper), default=None)

    @property
    def exact(self) -> Optional[int]:
        if self.best_lower is not None and self.best_lower == self.best_upper:
            return self.best_lower
        return None

    def to_schema(self) -> BoundsReportSchema:
        return BoundsReportSchema(
            P=self.P.spec,
            Q=self.Q.spec,
            lower=[b.to_schema() for b in self.lower],
            upper=[b.to_schema() for b in self.upper],
            best_lower=self.best_lower,
            best_upper=self.best_upper,
        )


def height_width_bound(h: int, w: int) -> Optional[int]:
    """RR(C_h, A_w) as a lower bound, for the (h, w) where it is known."""
    if h == 2 and w >= 3:
        return w + 2
    if (h == 2 and w == 2) or (h >= 3 and w >= 2):
        return (h - 1) * (w - 1) + 2
    return None


def lower_bounds(P: Poset, Q: Poset) -> List[Bound]:
    found = [
        Bound((P.height - 1) * (Q.height - 1), "height"),
        Bound(n_threshold(P.width, Q.width), "width"),
    ]

    mixed = height_width_bound(P.height, Q.width)
    if mixed is not None:
        found.append(Bound(mixed, "height-width"))

    if P.width >= 2 and Q.height >= 2:
        # trace coloring on the top h(Q) - 2 elements
        found.append(Bound(n_threshold(P.width, 2) + Q.height - 3, "antichain-chain-trace"))

    if Q.size >= 2:
        k = Q.size - 1
        try:
            lower, _, exact = rk_bounds(P, k)
            found.append(Bound(lower, f"R_{k}-exact" if exact else f"R_{k}-lower"))
        except DomainError:
            pass

    match = table_match(P, Q)
    if match is not None:
        found.append(Bound(match.value, f"table:{match.row}"))

    return found


def dimension_bounds(dP: int, dQ: int) -> List[Bound]:
    """Upper bounds on RR(B_dP, B_dQ)."""
    found = []
    match = table_match_shapes([Shape("B", dP)], [Shape("B", dQ)])
    if match is not None:
        found.append(Bound(match.value, f"dimension-table:{match.row}"))

    if dP >= 1 and dQ >= 1:
        shape = Shape("B", dP)
        found.append(
            Bound(sum(rk_upper_shape(shape, i) for i in range(1, 1 << dQ)), "dimension-sum")
        )
        found.append(Bound(dP**7 * 2 ** (2 * dQ + 4 * dP + 9), "dimension-lubell"))
        found.append(Bound(dQ * 2 ** ((2 * dQ + 1) * 2 ** (dP - 1) - 2), "dimension-algebra"))
    return found


def upper_bounds(P: Poset, Q: Poset) -> List[Bound]:
    found = []
    if P.size == 1 or Q.size == 1:
        found.append(Bound(0, "trivial"))

    match = table_match(P, Q)
    if match is not None:
        found.append(Bound(match.value, f"table:{match.row}"))

    if P.is_antichain() and Q.is_chain() and P.size >= 2 and Q.size >= 2:
        found.append(
            Bound(n_threshold(P.size, 2) + (Q.size - 2) * (P.size - 1), "antichain-chain-peeling")
        )

    try:
        dP, dQ = P.two_dimension, Q.two_dimension
    except BudgetExceededError as e:
        _logger.debug(f"[Bounds] skipping dimension bounds: {e}")
    else:
        found.extend(dimension_bounds(dP, dQ))

    return found


def bounds_report(P: Poset, Q: Poset) -> BoundsReport:
    report = BoundsReport(P=P, Q=Q, lower=lower_bounds(P, Q), upper=upper_bounds(P, Q))
    _logger.info(
        f"[Bounds] RR({P.spec}, {Q.spec}) in [{report.best_lower}, {report.best_upper}]"
    )
    return report


def lubell(n: int, family: Iterable[SubsetMask]) -> Fraction:
    """Sum of 1 / C(n, |F|) over the family, exactly."""
    total = Fraction(0)
    for x in family:
        if not lattice.fits(x, n):
            raise DomainError(f"{lattice.format_mask(x)} does not fit ground size {n}")
        total += Fraction(1, math.comb(n, lattice.popcount(x)))
    return total


@dataclasses.dataclass
class VeeWedgeBounds:
    """
    RR(P, {V, W}) lies between R_2(P) and max(R_2(P), dim_2(P) + 2); the
    numbers here bracket both ends with what is known about R_2(P).
    """

    lower: int
    upper: Optional[int]
    equals_r2: bool
    dimension: int


def vee_wedge_bounds(P: Poset) -> VeeWedgeBounds:
    dimension = P.two_dimension
    lower = max(2 * P.height - 2, 0)
    r2_upper: Optional[int] = None

    try:
        r2_lower, r2_upper, _ = rk_bounds(P, 2)
        lower = max(lower, r2_lower)
    except DomainError:
        if dimension >= 1:
            # P sits inside B_dim, so R_2(P) <= R_2(B_dim)
            r2_upper = rk_upper_shape(Shape("B", dimension), 2)

    upper = None if r2_upper is None else max(r2_upper, dimension + 2)
    return VeeWedgeBounds(
        lower=lower,
        upper=upper,
        equals_r2=2 * P.height >= dimension + 4,
        dimension=dimension,
    )
