"""
Pattern posets P and Q: construction from the spec grammar, transitive
closure, height, width, Dilworth chain partitions and the 2-dimension.
"""

from __future__ import annotations

import functools
import json
import logging
import math
from collections import deque
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import regex
import scipy.sparse
from scipy.sparse.csgraph import maximum_bipartite_matching

from boolean_ramsey.constants import Config
from boolean_ramsey.shared import (
    BudgetExceededError,
    DomainError,
    PosetCycleError,
    PosetSpecError,
    SubsetMask,
)

_logger = logging.getLogger(__name__)

SPEC_PATTERN = regex.compile(r"^\s*(?:(?P<kind>[CAB])\s*(?P<k>\d+)|(?P<shape>[VW∨∧]))\s*$")


class Poset:
    """
    Finite poset on elements 0..size-1 given by its strict order matrix,
    `less[a, b]` meaning a < b. Generators are closed transitively.
    """

    def __init__(
        self,
        size: int,
        less: Optional[np.ndarray] = None,
        label: Optional[str] = None,
        closed: bool = False,
        capped: bool = True,
    ):
        if size < 0:
            raise PosetSpecError(f"poset size must be non-negative, got {size}")
        if capped and size > Config.posets.max_size:
            raise PosetSpecError(
                f"poset size {size} exceeds the cap {Config.posets.max_size}"
            )

        matrix = (
            np.zeros((size, size), dtype=bool)
            if less is None
            else np.array(less, dtype=bool, copy=True)
        )
        if matrix.shape != (size, size):
            raise PosetSpecError(f"relation matrix must be {size}x{size}")

        if not closed:
            matrix = transitive_closure(matrix)
        if size and matrix.diagonal().any():
            raise PosetCycleError("order relation contains a cycle")

        matrix.setflags(write=False)
        self.size = size
        self.less = matrix
        self.label = label

    @classmethod
    def from_relations(
        cls, size: int, relations: Iterable[Sequence[int]], label: Optional[str] = None
    ) -> Poset:
        less = np.zeros((size, size), dtype=bool)
        for pair in relations:
            if len(pair) != 2:
                raise PosetSpecError(f"relation must be a pair, got {pair}")
            a, b = int(pair[0]), int(pair[1])
            if not (0 <= a < size and 0 <= b < size):
                raise PosetSpecError(f"relation ({a}, {b}) out of range for size {size}")
            if a == b:
                raise PosetCycleError(f"relation ({a}, {a}) is reflexive")
            less[a, b] = True
        return cls(size, less, label=label)

    @classmethod
    def from_family(cls, family: Sequence[SubsetMask], label: Optional[str] = None) -> Poset:
        """Inclusion order induced on a family of subsets."""
        masks = np.array(family, dtype=np.int64).reshape(-1)
        subset = (masks[:, None] & ~masks[None, :]) == 0
        np.fill_diagonal(subset, False)
        return cls(len(masks), subset, label=label, closed=True, capped=False)

    # metrics

    @functools.cached_property
    def below_counts(self) -> np.ndarray:
        return self.less.sum(axis=0)

    @functools.cached_property
    def above_counts(self) -> np.ndarray:
        return self.less.sum(axis=1)

    @functools.cached_property
    def linear_extension(self) -> List[int]:
        # a < b implies strictly fewer elements below a
        return sorted(range(self.size), key=lambda x: (int(self.below_counts[x]), x))

    @functools.cached_property
    def depths(self) -> np.ndarray:
        """Longest chain ending at each element, counted in elements minus one."""
        depth = np.zeros(self.size, dtype=np.int64)
        for b in self.linear_extension:
            below = np.flatnonzero(self.less[:, b])
            if below.size:
                depth[b] = depth[below].max() + 1
        return depth

    @functools.cached_property
    def rises(self) -> np.ndarray:
        """Longest chain starting at each element, counted in elements minus one."""
        rise = np.zeros(self.size, dtype=np.int64)
        for a in reversed(self.linear_extension):
            above = np.flatnonzero(self.less[a, :])
            if above.size:
                rise[a] = rise[above].max() + 1
        return rise

    @property
    def comparability(self) -> np.ndarray:
        return self.less | self.less.T

    @functools.cached_property
    def height(self) -> int:
        return int(self.depths.max()) + 1 if self.size else 0

    @functools.cached_property
    def _matching(self) -> np.ndarray:
        if not self.less.any():
            return np.full(self.size, -1, dtype=np.int64)
        graph = scipy.sparse.csr_matrix(self.less.astype(np.int8))
        return np.asarray(maximum_bipartite_matching(graph, perm_type="column"))

    @functools.cached_property
    def width(self) -> int:
        return self.size - int((self._matching >= 0).sum())

    @functools.cached_property
    def two_dimension(self) -> int:
        return two_dimension(self)

    def is_chain(self) -> bool:
        return self.height == self.size

    def is_antichain(self) -> bool:
        return self.width == self.size

    @functools.cached_property
    def boolean_rank(self) -> Optional[int]:
        """k if the poset is isomorphic to B_k, else None."""
        if self.size == 0 or self.size & (self.size - 1):
            return None
        k = self.size.bit_length() - 1
        if self.height != k + 1 or self.width != math.comb(k, k // 2):
            return None

        from boolean_ramsey import embedding, lattice

        found = embedding.find_copy(list(lattice.canonical_order(k)), self, n=k)
        return k if found is not None else None

    def is_boolean(self) -> bool:
        return self.boolean_rank is not None

    # serialization

    @property
    def relations(self) -> List[Tuple[int, int]]:
        return [(int(a), int(b)) for a, b in zip(*np.nonzero(self.less))]

    @property
    def spec(self) -> str:
        if self.label is not None:
            return self.label
        return json.dumps({"size": self.size, "relations": [list(r) for r in self.relations]})

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, Poset)
            and self.size == other.size
            and bool(np.array_equal(self.less, other.less))
        )

    def __hash__(self) -> int:
        return hash((self.size, np.packbits(self.less).tobytes()))

    def __getstate__(self) -> Dict[str, Any]:
        return {"size": self.size, "less": np.array(self.less), "label": self.label}

    def __setstate__(self, state: Dict[str, Any]):
        less = state["less"]
        less.setflags(write=False)
        self.size, self.less, self.label = state["size"], less, state["label"]

    def __repr__(self) -> str:
        return f"Poset({self.spec})"


def transitive_closure(less: np.ndarray) -> np.ndarray:
    closure = np.array(less, dtype=bool, copy=True)
    for k in range(closure.shape[0]):
        closure |= closure[:, k : k + 1] & closure[k : k + 1, :]
    return closure


# constructors


def chain(k: int) -> Poset:
    less = np.triu(np.ones((k, k), dtype=bool), 1)
    return Poset(k, less, label=f"C{k}", closed=True)


def antichain(k: int) -> Poset:
    return Poset(k, label=f"A{k}", closed=True)


def boolean(k: int) -> Poset:
    """B_k with element i standing for the subset mask i of [k]."""
    if k > 5:
        raise PosetSpecError(f"B{k} exceeds the supported B5")
    masks = np.arange(1 << k, dtype=np.int64)
    less = (masks[:, None] & ~masks[None, :]) == 0
    np.fill_diagonal(less, False)
    return Poset(1 << k, less, label=f"B{k}", closed=True)


def vee() -> Poset:
    return Poset.from_relations(3, [(0, 1), (0, 2)], label="V")


def wedge() -> Poset:
    return Poset.from_relations(3, [(0, 2), (1, 2)], label="W")


def make(spec: Union[str, Mapping[str, Any], Poset]) -> Poset:
    """
    Build a poset from `C<k>`, `A<k>`, `B<k>`, `V`, `W` or an explicit
    {"size": ..., "relations": [[a, b], ...]} description (also as a json string).
    """
    if isinstance(spec, Poset):
        return spec
    if isinstance(spec, Mapping):
        return _from_explicit(spec)
    if not isinstance(spec, str):
        raise PosetSpecError(f"unsupported poset spec {spec!r}")

    text = spec.strip()
    if text.startswith("{"):
        try:
            return _from_explicit(json.loads(text))
        except json.JSONDecodeError as e:
            raise PosetSpecError(f"invalid explicit poset: {e}") from e

    match = SPEC_PATTERN.match(text)
    if match is None:
        raise PosetSpecError(f"unknown poset spec '{spec}'")

    shape = match.group("shape")
    if shape is not None:
        return vee() if shape in ("V", "∨") else wedge()

    kind, k = match.group("kind"), int(match.group("k"))
    if kind == "C":
        return chain(k)
    if kind == "A":
        return antichain(k)
    return boolean(k)


def _from_explicit(spec: Mapping[str, Any]) -> Poset:
    if "size" not in spec:
        raise PosetSpecError("explicit poset needs a 'size'")
    size = int(spec["size"])
    poset = Poset.from_relations(size, spec.get("relations", []))
    return poset


def make_all(specs: Iterable[Union[str, Mapping[str, Any], Poset]]) -> List[Poset]:
    return [make(spec) for spec in specs]


# chain partitions


def dilworth_partition(poset: Poset) -> List[List[int]]:
    """
    Minimum chain partition: join every matched pair a -> b of the maximum
    matching in the strict order's bipartite graph into chains.
    """
    successor = poset._matching
    has_predecessor = np.zeros(poset.size, dtype=bool)
    has_predecessor[successor[successor >= 0]] = True

    chains = []
    for start in poset.linear_extension:
        if has_predecessor[start]:
            continue
        current, links = start, [start]
        while successor[current] >= 0:
            current = int(successor[current])
            links.append(current)
        chains.append(links)
    return chains


def antichain_partition(poset: Poset) -> List[List[int]]:
    """Minimum antichain cover, grouping elements by depth."""
    levels: Dict[int, List[int]] = {}
    for element in range(poset.size):
        levels.setdefault(int(poset.depths[element]), []).append(element)
    return [levels[d] for d in sorted(levels)]


def maximum_antichain(poset: Poset) -> List[int]:
    """
    A largest antichain, read off the minimum vertex cover of the matching
    (Koenig): elements whose left copy is reachable by alternating paths
    from unmatched left vertices and whose right copy is not.
    """
    successor = poset._matching
    predecessor = np.full(poset.size, -1, dtype=np.int64)
    for a, b in enumerate(successor):
        if b >= 0:
            predecessor[b] = a

    left_seen = np.zeros(poset.size, dtype=bool)
    right_seen = np.zeros(poset.size, dtype=bool)
    queue = deque(int(a) for a in np.flatnonzero(successor < 0))
    left_seen[list(queue)] = True

    while queue:
        a = queue.popleft()
        for b in np.flatnonzero(poset.less[a] & ~right_seen):
            right_seen[b] = True
            back = int(predecessor[b])
            if back >= 0 and not left_seen[back]:
                left_seen[back] = True
                queue.append(back)

    return [int(x) for x in np.flatnonzero(left_seen & ~right_seen)]


# 2-dimension


def two_dimension(poset: Poset, max_n: Optional[int] = None) -> int:
    """Smallest n such that B_n contains the poset as a strong subposet."""
    from boolean_ramsey import embedding, lattice

    cap = Config.posets.two_dimension_max_n if max_n is None else max_n
    n = math.ceil(math.log2(poset.size)) if poset.size > 1 else 0

    while n <= cap:
        if embedding.find_copy(list(lattice.canonical_order(n)), poset, n=n) is not None:
            return n
        _logger.debug(f"[Posets] {poset.spec} does not embed into B{n}")
        n += 1

    raise BudgetExceededError(
        f"[Posets] no copy of {poset.spec} found up to B{cap}", last_n=cap
    )
