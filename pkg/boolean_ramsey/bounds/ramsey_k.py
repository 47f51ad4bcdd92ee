"""
Bounds on the Boolean Ramsey numbers R_k(P) for P = B_m and P = C_m.
"""

import functools
from typing import Dict, List, Optional, Tuple

from boolean_ramsey.bounds.shapes import Shape, shape_of
from boolean_ramsey.constants import Constants
from boolean_ramsey.posets import Poset
from boolean_ramsey.shared import DomainError
from boolean_ramsey.utils.general import load_json


@functools.lru_cache(maxsize=1)
def known_values() -> Dict:
    return load_json(str(Constants.KNOWN_VALUES))


def lubell_threshold(m: int) -> int:
    """Lubell mass above which a family must contain B_m."""
    return 1000 * m**7 * 16**m


def _shape(poset: Poset) -> Shape:
    shape = shape_of(poset, "C") or shape_of(poset, "B")
    if shape is None:
        raise DomainError(f"R_k bounds cover Boolean posets and chains, not {poset.spec}")
    return shape


def exact_rk(shape: Shape, k: int) -> Optional[int]:
    """R_k for shapes where the value is known, else None."""
    if k < 1:
        raise DomainError(f"k must be positive, got {k}")
    if shape.kind == "C":
        return k * max(shape.k - 1, 0)
    if shape.k == 0:
        return 0
    if shape.k == 1:
        # B_1 is C_2
        return k
    if k == 1:
        return shape.k
    value = known_values()["ramsey_k"].get(str(shape), {}).get(str(k))
    return None if value is None else int(value)


def rk_lower_shape(shape: Shape, k: int) -> int:
    exact = exact_rk(shape, k)
    if exact is not None:
        return exact
    # m consecutive levels per color
    return shape.k * k


def rk_upper_shape(shape: Shape, k: int) -> int:
    exact = exact_rk(shape, k)
    if exact is not None:
        return exact
    if shape.k == 2:
        # B_2-free families have Lubell mass at most 8/3
        return 8 * k // 3
    return lubell_threshold(shape.k) * k


def rk_lower(poset: Poset, k: int) -> int:
    return rk_lower_shape(_shape(poset), k)


def rk_upper(poset: Poset, k: int) -> int:
    return rk_upper_shape(_shape(poset), k)


def rk_bounds(poset: Poset, k: int) -> Tuple[int, int, bool]:
    """(lower, upper, exact) for R_k(poset)."""
    shape = _shape(poset)
    return rk_lower_shape(shape, k), rk_upper_shape(shape, k), exact_rk(shape, k) is not None


def default_interval_budgets(m: int, n: int) -> List[int]:
    """Upper bounds for R_1(B_m), ..., R_{2^n - 1}(B_m)."""
    shape = Shape("B", m)
    return [rk_upper_shape(shape, i) for i in range(1, 1 << n)]
