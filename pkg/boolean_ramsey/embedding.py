"""
Strong subposet containment: plain, monochromatic and rainbow copies of a
pattern poset inside a family of subsets, plus the incremental check used
by the exhaustive search.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from typing import (
    TYPE_CHECKING,
    Dict,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

import numpy as np

from boolean_ramsey import lattice
from boolean_ramsey.constants import Config, Constants
from boolean_ramsey.posets import Poset, maximum_antichain
from boolean_ramsey.shared import (
    CopyOverflowError,
    DomainError,
    EmbeddingSchema,
    SubsetMask,
    VerificationError,
)

if TYPE_CHECKING:
    from boolean_ramsey.colorings.coloring import Coloring

_logger = logging.getLogger(__name__)


@dataclasses.dataclass
class Embedding:
    """
    Images of the pattern's elements; `colors`, when present, are aligned
    with `images` and `kind` says which color condition they certify.
    """

    pattern: Poset
    images: List[SubsetMask]
    colors: Optional[List[int]] = None
    kind: Constants.Copy = Constants.Copy.PLAIN

    def validate(self) -> Embedding:
        pattern, images = self.pattern, self.images
        if len(images) != pattern.size:
            raise VerificationError(
                f"{len(images)} images for a pattern of size {pattern.size}"
            )
        if len(set(images)) != len(images):
            raise VerificationError("images are not pairwise distinct")

        for a in range(pattern.size):
            for b in range(pattern.size):
                if a == b:
                    continue
                nested = lattice.is_proper_subset(images[a], images[b])
                if bool(pattern.less[a, b]) != nested:
                    raise VerificationError(
                        f"elements {a}, {b}: order {bool(pattern.less[a, b])} but "
                        f"{lattice.format_mask(images[a])} < {lattice.format_mask(images[b])} is {nested}"
                    )

        if self.colors is not None:
            if len(self.colors) != len(images):
                raise VerificationError("colors are not aligned with images")
            if self.kind == Constants.Copy.RAINBOW and len(set(self.colors)) != len(self.colors):
                raise VerificationError("rainbow copy repeats a color")
            if self.kind == Constants.Copy.MONOCHROMATIC and len(set(self.colors)) > 1:
                raise VerificationError("monochromatic copy uses several colors")
        elif self.kind != Constants.Copy.PLAIN:
            raise VerificationError(f"{self.kind.value} copy carries no colors")

        return self

    def recolored(self, coloring: "Coloring", kind: Constants.Copy) -> Embedding:
        return Embedding(
            pattern=self.pattern,
            images=list(self.images),
            colors=[coloring.color_of(x) for x in self.images],
            kind=kind,
        )

    def to_schema(self) -> EmbeddingSchema:
        return EmbeddingSchema(
            pattern=self.pattern.spec, images=list(self.images), colors=self.colors
        )

    @classmethod
    def from_schema(cls, schema: EmbeddingSchema, kind: Constants.Copy = Constants.Copy.PLAIN) -> Embedding:
        from boolean_ramsey.posets import make

        return cls(
            pattern=make(schema.pattern),
            images=list(schema.images),
            colors=None if schema.colors is None else list(schema.colors),
            kind=kind if schema.colors is not None else Constants.Copy.PLAIN,
        )


class CopyMatcher:
    """
    Backtracking search for strong copies of `pattern` in `family`.

    Pattern elements are placed most-constrained-first. Candidates are
    filtered by how many family members lie below/above them and by the
    longest family chains through them, then checked against every placed
    element (nesting for comparable pairs, non-nesting otherwise). With
    `colors` given, placed images must carry pairwise distinct colors.
    """

    def __init__(
        self,
        family: Sequence[SubsetMask],
        pattern: Poset,
        colors: Optional[Sequence[int]] = None,
    ):
        if len(set(family)) != len(family):
            raise DomainError("family contains duplicate subsets")

        self.pattern = pattern
        self.family = np.array(lattice.sort_family(family), dtype=np.int64)
        self.colors = None
        if colors is not None:
            color_of = dict(zip(family, colors))
            self.colors = np.array([color_of[int(x)] for x in self.family], dtype=np.int64)

        masks = self.family
        self.proper = (masks[:, None] & ~masks[None, :]) == 0
        np.fill_diagonal(self.proper, False)
        self.related = self.proper | self.proper.T
        np.fill_diagonal(self.related, True)

        self.depths = self._chain_lengths(self.proper)
        self.rises = self._chain_lengths(self.proper.T, reverse=True)
        self.order = self._placement_order()
        self.candidates = self._initial_candidates()

    @staticmethod
    def _chain_lengths(proper: np.ndarray, reverse: bool = False) -> np.ndarray:
        size = proper.shape[0]
        lengths = np.zeros(size, dtype=np.int64)
        indices = range(size - 1, -1, -1) if reverse else range(size)
        for j in indices:
            lower = np.flatnonzero(proper[:, j])
            if lower.size:
                lengths[j] = lengths[lower].max() + 1
        return lengths

    def _placement_order(self) -> List[int]:
        pattern = self.pattern
        comparability = pattern.comparability
        degrees = comparability.sum(axis=1)
        remaining = set(range(pattern.size))
        order: List[int] = []
        while remaining:
            best = max(
                remaining,
                key=lambda x: (
                    int(comparability[x, order].sum()) if order else 0,
                    int(degrees[x]),
                    int(pattern.above_counts[x]),
                    -x,
                ),
            )
            order.append(best)
            remaining.remove(best)
        return order

    def _initial_candidates(self) -> Dict[int, np.ndarray]:
        pattern = self.pattern
        below_f = self.proper.sum(axis=0)
        above_f = self.proper.sum(axis=1)
        candidates = {}
        for x in range(pattern.size):
            keep = (
                (below_f >= pattern.below_counts[x])
                & (above_f >= pattern.above_counts[x])
                & (self.depths >= pattern.depths[x])
                & (self.rises >= pattern.rises[x])
            )
            candidates[x] = np.flatnonzero(keep)
        return candidates

    def iter_copies(self) -> Iterator[Tuple[int, ...]]:
        """Yield family indices aligned with pattern elements."""
        k = self.pattern.size
        if k == 0:
            yield ()
            return
        if k > len(self.family):
            return
        if self.colors is not None and len(np.unique(self.colors)) < k:
            return

        images = [-1] * k
        used = np.zeros(len(self.family), dtype=bool)
        used_colors: Dict[int, bool] = {}
        less = self.pattern.less

        def extend(depth: int) -> Iterator[Tuple[int, ...]]:
            x = self.order[depth]
            candidates = self.candidates[x]
            keep = ~used[candidates]
            for y in self.order[:depth]:
                image = images[y]
                if less[y, x]:
                    keep &= self.proper[image, candidates]
                elif less[x, y]:
                    keep &= self.proper[candidates, image]
                else:
                    keep &= ~self.related[image, candidates]
            if self.colors is not None and used_colors:
                keep &= ~np.isin(self.colors[candidates], list(used_colors))

            for j in candidates[keep]:
                images[x] = int(j)
                used[j] = True
                if self.colors is not None:
                    used_colors[int(self.colors[j])] = True
                if depth + 1 == k:
                    yield tuple(images)
                else:
                    yield from extend(depth + 1)
                used[j] = False
                if self.colors is not None:
                    del used_colors[int(self.colors[j])]
            images[x] = -1

        yield from extend(0)

    def masks(self, indices: Sequence[int]) -> List[SubsetMask]:
        return [int(self.family[i]) for i in indices]

    def longest_chain(self, k: int) -> Optional[List[int]]:
        """Fast path for chain patterns: a k-chain read off the depth table."""
        tops = np.flatnonzero(self.depths >= k - 1)
        if k == 0:
            return []
        if not tops.size:
            return None
        current = int(tops[0])
        links = [current]
        while len(links) < k:
            lower = np.flatnonzero(self.proper[:, current] & (self.depths == self.depths[current] - 1))
            current = int(lower[0])
            links.append(current)
        return list(reversed(links))


def _validated(embedding: Embedding) -> Embedding:
    return embedding.validate()


def find_copy(
    family: Sequence[SubsetMask], pattern: Poset, n: Optional[int] = None
) -> Optional[Embedding]:
    """A strong copy of `pattern` inside `family`, or None."""
    family = list(family)
    if len(set(family)) != len(family):
        raise DomainError("family contains duplicate subsets")
    if n is not None:
        for x in family:
            if not lattice.fits(x, n):
                raise DomainError(f"{lattice.format_mask(x)} does not fit ground size {n}")

    if pattern.size == 0:
        return Embedding(pattern=pattern, images=[])
    if pattern.size > len(family):
        return None

    if pattern.is_chain():
        matcher = CopyMatcher(family, pattern)
        links = matcher.longest_chain(pattern.size)
        if links is None:
            return None
        # chain pattern elements listed bottom to top
        ranks = pattern.linear_extension
        images = [0] * pattern.size
        for element, index in zip(ranks, links):
            images[element] = int(matcher.family[index])
        return _validated(Embedding(pattern=pattern, images=images))

    if pattern.is_antichain():
        induced = Poset.from_family(lattice.sort_family(family))
        if induced.width < pattern.size:
            return None
        members = lattice.sort_family(family)
        chosen = maximum_antichain(induced)[: pattern.size]
        return _validated(Embedding(pattern=pattern, images=[members[i] for i in chosen]))

    matcher = CopyMatcher(family, pattern)
    for indices in matcher.iter_copies():
        return _validated(Embedding(pattern=pattern, images=matcher.masks(indices)))
    return None


def find_all_copies(
    family: Sequence[SubsetMask],
    pattern: Poset,
    max_copies: Optional[int] = None,
) -> List[Tuple[SubsetMask, ...]]:
    """
    Every strong copy as a tuple of images aligned with pattern elements,
    one representative per distinct subfamily.
    """
    cap = Config.satgen.max_copies if max_copies is None else max_copies
    if pattern.size > len(family):
        return []
    matcher = CopyMatcher(list(family), pattern)
    seen = set()
    copies = []
    for indices in matcher.iter_copies():
        key = frozenset(indices)
        if key in seen:
            continue
        seen.add(key)
        copies.append(tuple(matcher.masks(indices)))
        if len(copies) > cap:
            raise CopyOverflowError(
                f"more than {cap} copies of {pattern.spec} in a family of {len(family)} sets"
            )
    return copies


def find_monochromatic(coloring: "Coloring", pattern: Poset) -> Optional[Embedding]:
    """First monochromatic copy, scanning color classes by ascending id."""
    for color, members in enumerate(coloring.classes()):
        found = find_copy(members, pattern, n=coloring.n)
        if found is not None:
            found.colors = [color] * pattern.size
            found.kind = Constants.Copy.MONOCHROMATIC
            return _validated(found)
    return None


def find_rainbow(coloring: "Coloring", pattern: Poset) -> Optional[Embedding]:
    """A copy over the whole lattice whose images carry pairwise distinct colors."""
    if pattern.size > coloring.palette_size:
        return None
    if pattern.size == 0:
        return Embedding(pattern=pattern, images=[], colors=[], kind=Constants.Copy.RAINBOW)

    family = list(lattice.canonical_order(coloring.n))
    matcher = CopyMatcher(family, pattern, colors=[coloring.color_of(x) for x in family])
    for indices in matcher.iter_copies():
        images = matcher.masks(indices)
        return _validated(
            Embedding(
                pattern=pattern,
                images=images,
                colors=[coloring.color_of(x) for x in images],
                kind=Constants.Copy.RAINBOW,
            )
        )
    return None


# incremental checks


class CopyIndex:
    """
    All copies of each pattern in B_n, as canonical positions, grouped by
    the position of their last image so a search can check exactly the
    copies completed by its newest assignment.
    """

    def __init__(self, n: int, patterns: Sequence[Poset]):
        self.n = n
        self.patterns = list(patterns)
        order = lattice.canonical_order(n)
        positions = lattice.canonical_positions(n)

        self._ending_at: List[List[np.ndarray]] = []
        for pattern in self.patterns:
            buckets: List[List[Tuple[int, ...]]] = [[] for _ in range(len(order))]
            for images in find_all_copies(order, pattern):
                ranks = tuple(int(positions[x]) for x in images)
                buckets[max(ranks)].append(ranks)
            self._ending_at.append(
                [
                    np.array(bucket, dtype=np.int64).reshape(len(bucket), pattern.size)
                    for bucket in buckets
                ]
            )
            _logger.debug(
                f"[Embedding] indexed {sum(map(len, buckets))} copies of {pattern.spec} in B{n}"
            )

    def copies_ending_at(self, index: int, position: int) -> np.ndarray:
        return self._ending_at[index][position]

    def monochromatic_at(self, index: int, position: int, colors: np.ndarray) -> Optional[np.ndarray]:
        copies = self._ending_at[index][position]
        if not len(copies):
            return None
        hits = (colors[copies] == colors[position]).all(axis=1)
        found = np.flatnonzero(hits)
        return copies[found[0]] if found.size else None

    def rainbow_at(self, index: int, position: int, colors: np.ndarray) -> Optional[np.ndarray]:
        copies = self._ending_at[index][position]
        if not len(copies):
            return None
        if copies.shape[1] < 2:
            return copies[0]
        shades = np.sort(colors[copies], axis=1)
        hits = (np.diff(shades, axis=1) != 0).all(axis=1)
        found = np.flatnonzero(hits)
        return copies[found[0]] if found.size else None

    def to_embedding(self, index: int, ranks: Sequence[int], colors: np.ndarray, kind: Constants.Copy) -> Embedding:
        order = lattice.canonical_order(self.n)
        return Embedding(
            pattern=self.patterns[index],
            images=[order[r] for r in ranks],
            colors=[int(colors[r]) for r in ranks],
            kind=kind,
        )


@functools.lru_cache(maxsize=64)
def copy_index(n: int, patterns: Tuple[Poset, ...]) -> CopyIndex:
    return CopyIndex(n, patterns)


@dataclasses.dataclass
class ViolationReport:
    mono_witness: Optional[Tuple[int, Embedding]] = None
    rainbow_witness: Optional[Tuple[int, Embedding]] = None

    @property
    def violated(self) -> bool:
        return self.mono_witness is not None or self.rainbow_witness is not None


def extend_check(
    coloring: Mapping[SubsetMask, int],
    newest: SubsetMask,
    n: int,
    monochromatic: Sequence[Poset] = (),
    rainbow: Sequence[Poset] = (),
) -> ViolationReport:
    """
    Check the copies that use `newest` as an image, given colors on a prefix
    of the canonical order ending at `newest`.
    """
    order = lattice.canonical_order(n)
    positions = lattice.canonical_positions(n)
    newest_position = int(positions[newest])

    colors = np.full(len(order), -1, dtype=np.int64)
    for x, color in coloring.items():
        colors[positions[x]] = color
    if (colors[: newest_position + 1] < 0).any() or (colors[newest_position + 1 :] >= 0).any():
        raise DomainError("coloring is not a prefix of the canonical order ending at the newest set")

    report = ViolationReport()

    mono_index = copy_index(n, tuple(monochromatic))
    for i in range(len(monochromatic)):
        ranks = mono_index.monochromatic_at(i, newest_position, colors)
        if ranks is not None:
            report.mono_witness = (i, mono_index.to_embedding(i, ranks, colors, Constants.Copy.MONOCHROMATIC))
            break

    rainbow_index = copy_index(n, tuple(rainbow))
    for j in range(len(rainbow)):
        ranks = rainbow_index.rainbow_at(j, newest_position, colors)
        if ranks is not None:
            report.rainbow_witness = (j, rainbow_index.to_embedding(j, ranks, colors, Constants.Copy.RAINBOW))
            break

    return report
