from __future__ import annotations

import functools
from typing import Callable, Dict, Hashable, List, Mapping, Optional, Sequence

import numpy as np

from boolean_ramsey import lattice
from boolean_ramsey.shared import ColoringSchema, DomainError, SubsetMask


class Coloring:
    """
    Total coloring of B_n with dense ids 0..palette_size-1, stored by
    canonical (graded-colex) position.

    `palette`, when set, maps each dense id to a color of a fixed palette
    (color i of R(P_1, ..., P_k) must avoid P_i), so per-color targets
    survive the dense renumbering.
    """

    def __init__(
        self,
        n: int,
        colors: Sequence[int],
        palette: Optional[Sequence[int]] = None,
    ):
        lattice.check_ground_size(n)
        colors = np.array(colors, dtype=np.int64).reshape(-1)
        if len(colors) != 1 << n:
            raise DomainError(f"a coloring of B{n} needs {1 << n} colors, got {len(colors)}")

        used = np.unique(colors)
        if len(used) and (used[0] != 0 or used[-1] != len(used) - 1):
            raise DomainError("color ids must form a contiguous range starting at 0")

        if palette is not None:
            palette = tuple(int(p) for p in palette)
            if len(palette) != len(used):
                raise DomainError(f"palette maps {len(palette)} ids, coloring uses {len(used)}")
            if len(set(palette)) != len(palette):
                raise DomainError("palette repeats a color")

        colors.setflags(write=False)
        self.n = n
        self.colors = colors
        self.palette = palette

    # construction helpers

    @classmethod
    def from_labels(
        cls, n: int, labels: Sequence[Hashable], keep_palette: bool = False
    ) -> Coloring:
        """
        Renumber arbitrary labels, given by canonical position, to dense ids
        in first-use order. With `keep_palette` the labels are fixed palette
        colors and are remembered in `palette`.
        """
        dense: Dict[Hashable, int] = {}
        colors = [dense.setdefault(label, len(dense)) for label in labels]
        palette = list(dense) if keep_palette else None
        return cls(n, colors, palette=palette)

    @classmethod
    def from_function(cls, n: int, label: Callable[[SubsetMask], Hashable]) -> Coloring:
        return cls.from_labels(n, [label(x) for x in lattice.canonical_order(n)])

    @classmethod
    def from_mask_colors(cls, n: int, colors: Mapping[SubsetMask, Hashable]) -> Coloring:
        return cls.from_labels(n, [colors[x] for x in lattice.canonical_order(n)])

    # queries

    @property
    def palette_size(self) -> int:
        return int(self.colors.max()) + 1 if len(self.colors) else 0

    @functools.cached_property
    def by_mask(self) -> np.ndarray:
        return self.colors[lattice.canonical_positions(self.n)]

    def color_of(self, x: SubsetMask) -> int:
        return int(self.by_mask[x])

    def fixed_color(self, color: int) -> int:
        return color if self.palette is None else self.palette[color]

    def classes(self) -> List[List[SubsetMask]]:
        """Members of each color class, in canonical order."""
        members: List[List[SubsetMask]] = [[] for _ in range(self.palette_size)]
        for x, color in zip(lattice.canonical_order(self.n), self.colors):
            members[color].append(x)
        return members

    def is_canonical(self) -> bool:
        """Ids appear in first-use order (a restricted growth string)."""
        highest = -1
        for color in self.colors:
            if color > highest + 1:
                return False
            highest = max(highest, int(color))
        return True

    def canonical(self) -> Coloring:
        return Coloring.from_labels(self.n, [int(c) for c in self.colors])

    def restricted(self, family: Sequence[SubsetMask]) -> List[int]:
        return [self.color_of(x) for x in family]

    # serialization

    def to_schema(self) -> ColoringSchema:
        return ColoringSchema(
            n=self.n,
            colors=[int(c) for c in self.colors],
            palette=None if self.palette is None else list(self.palette),
        )

    @classmethod
    def from_schema(cls, schema: ColoringSchema) -> Coloring:
        return cls(schema.n, schema.colors, palette=schema.palette)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Coloring)
            and self.n == other.n
            and bool(np.array_equal(self.colors, other.colors))
            and self.palette == other.palette
        )

    def __hash__(self) -> int:
        return hash((self.n, self.colors.tobytes(), self.palette))

    def __repr__(self) -> str:
        return f"Coloring(n={self.n}, palette_size={self.palette_size})"
