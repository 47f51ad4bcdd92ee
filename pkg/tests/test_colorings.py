from math import comb

import numpy as np
import pytest

from boolean_ramsey import lattice
from boolean_ramsey.colorings import (
    Coloring,
    ColoringFactory,
    block_levels,
    ceil_size,
    constant,
    halves,
    incomparable_case,
    incomparable_chains,
    level_block,
    near_constant,
    pairs_of_levels,
    random_antichain_classes,
    random_chain_classes,
    random_no_mono_chain,
    rank,
    scd_block,
    trace,
    verify,
    verify_fixed,
)
from boolean_ramsey.constants import Constants
from boolean_ramsey.embedding import find_monochromatic, find_rainbow
from boolean_ramsey.posets import Poset, antichain, boolean, chain, make
from boolean_ramsey.shared import DomainError, dump, load, ColoringSchema


def sets(*groups):
    return [lattice.mask_from_elements(group) for group in groups]


def test_coloring_renumbers_labels_in_first_use_order():
    coloring = Coloring.from_labels(1, ["b", "a"])
    assert list(coloring.colors) == [0, 1]
    assert coloring.palette is None

    fixed = Coloring.from_labels(1, [2, 0], keep_palette=True)
    assert fixed.palette == (2, 0)
    assert fixed.fixed_color(0) == 2


def test_coloring_rejects_malformed_colors():
    with pytest.raises(DomainError):
        Coloring(2, [0, 1, 2])
    with pytest.raises(DomainError):
        Coloring(1, [0, 2])


def test_coloring_schema_round_trip():
    coloring = Coloring.from_labels(2, [1, 0, 0, 3], keep_palette=True)
    payload = dump(coloring.to_schema())
    assert payload["order"] == Constants.SUBSET_ORDER
    assert Coloring.from_schema(load(ColoringSchema, payload)) == coloring


def test_level_block_examples():
    assert level_block(3, 2) == rank(3)
    assert rank(3).palette_size == 4

    coloring = level_block(5, 3)
    for x in lattice.canonical_order(5):
        assert coloring.color_of(x) == lattice.popcount(x) // 2
    assert coloring.palette_size == 3


def test_rank_classes_are_levels():
    assert rank(2).classes() == [[0], sets([1], [2]), sets([1, 2])]


def test_scd_block_examples():
    assert scd_block(2, 2).palette_size == 2
    assert all(Poset.from_family(c).is_chain() for c in scd_block(3, 2).classes())

    coloring = scd_block(4, 3)
    assert coloring.palette_size == 3
    assert find_monochromatic(coloring, antichain(3)) is None


def test_ceil_size_example():
    coloring = ceil_size(3, 3)
    by_size = {lattice.popcount(x): coloring.color_of(x) for x in lattice.canonical_order(3)}
    assert by_size[0] != by_size[1]
    assert by_size[1] == by_size[2]
    assert by_size[2] != by_size[3]
    assert coloring.palette_size == 3


def test_near_constant_example():
    coloring = near_constant(2)
    assert coloring.color_of(0b00) == coloring.color_of(0b11) == 0
    assert len({coloring.color_of(0b01), coloring.color_of(0b10), 0}) == 3


def test_trace_classes_are_boolean_lattices():
    coloring = trace(3, 1)
    classes = coloring.classes()
    assert [len(c) for c in classes] == [4, 4]
    assert all(Poset.from_family(c).boolean_rank == 2 for c in classes)


def test_halves_of_b2():
    coloring = halves(boolean(2))
    assert coloring.n == 3
    for x in lattice.canonical_order(3):
        assert coloring.color_of(x) == (0 if lattice.popcount(x) <= 1 else 1)
    assert find_monochromatic(coloring, boolean(2)) is None
    assert verify(coloring, rainbow=[make("V"), make("W")]).avoided


def test_factory_builds_registered_constructions():
    assert set(ColoringFactory.registry) == set(Constants.Colorings)
    built = ColoringFactory.instantiate(Constants.Colorings.LEVEL_BLOCK, 5, 3).generate()
    assert built == level_block(5, 3)
    with pytest.raises(AssertionError):
        ColoringFactory.instantiate("missing", 3)


@pytest.mark.parametrize("N", range(0, 9))
@pytest.mark.parametrize("m", [2, 3, 4])
def test_chain_free_constructions(N, m):
    for coloring in (level_block(N, m), ceil_size(N, m)):
        assert find_monochromatic(coloring, chain(m)) is None
    assert level_block(N, m).palette_size == N // (m - 1) + 1


@pytest.mark.parametrize("N", range(1, 9))
@pytest.mark.parametrize("m", [2, 3])
def test_scd_block_avoids_antichains(N, m):
    coloring = scd_block(N, m)
    assert find_monochromatic(coloring, antichain(m)) is None
    assert coloring.palette_size == -(-comb(N, N // 2) // (m - 1))


@pytest.mark.parametrize("N", range(1, 8))
def test_rank_and_near_constant(N):
    assert find_monochromatic(rank(N), chain(2)) is None
    coloring = near_constant(N)
    assert verify(coloring, [antichain(2)], [chain(N + 1)]).avoided


@pytest.mark.parametrize("N, ysize", [(3, 1), (4, 2), (5, 2), (6, 3)])
def test_trace_class_count(N, ysize):
    coloring = trace(N, ysize)
    assert coloring.palette_size == 1 << ysize
    assert find_monochromatic(coloring, boolean(N - ysize + 1)) is None


@pytest.mark.parametrize("spec", ["C3", "C4", "B2", "V", "W"])
def test_halves_avoids_its_pattern(spec):
    pattern = make(spec)
    coloring = halves(pattern)
    assert coloring.palette_size == 2
    assert find_monochromatic(coloring, pattern) is None


def test_pairs_of_levels_witnesses_three_colors_of_b2():
    coloring = pairs_of_levels(3)
    assert coloring.n == 5 and coloring.palette_size == 3
    assert verify_fixed(coloring, [boolean(2)] * 3).avoided
    assert verify(coloring, [boolean(2)], [boolean(2)]).avoided


@pytest.mark.parametrize("k, m", [(1, 2), (2, 2), (3, 1), (2, 3)])
def test_block_levels_avoid_boolean(k, m):
    coloring = block_levels(k, m)
    assert coloring.n == m * k - 1
    assert coloring.palette_size == k
    assert find_monochromatic(coloring, boolean(m)) is None


@pytest.mark.slow
@pytest.mark.parametrize("N", range(9, 13))
def test_constructions_up_to_twelve(N):
    for m in (2, 3):
        assert find_monochromatic(level_block(N, m), chain(m)) is None
        assert find_monochromatic(ceil_size(N, m), chain(m)) is None
        assert find_monochromatic(scd_block(N, m), antichain(m)) is None
    assert find_monochromatic(rank(N), chain(2)) is None
    assert find_monochromatic(near_constant(N), antichain(2)) is None


def test_incomparable_chains_examples():
    assert incomparable_chains(4, 2, 2).chains == [sets([1, 2]), sets([4], [1, 4])]
    assert incomparable_chains(5, 2, 3).lengths == [1, 2, 3]
    assert incomparable_chains(4, 3, 2).chains == [sets([3]), sets([4], [1, 4], [1, 2, 4])]
    assert incomparable_chains(5, 3, 3).lengths == [1, 2, 3]


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("n", range(2, 11))
def test_incomparable_chains_case_a(m, n):
    if (m, n) == (3, 2):
        # B_4 also fits the long chains for m = 3
        assert incomparable_case(4, 3, 2) == "B"
        return
    family = incomparable_chains(n + 2, m, n).validate()
    assert incomparable_case(n + 2, m, n) == "A"
    assert family.lengths == list(range(1, n + 1))


@pytest.mark.parametrize("m", [2, 3, 4])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_incomparable_chains_case_b(m, n):
    N = (m - 1) * (n - 1) + 2
    if m == 2 and n >= 3:
        with pytest.raises(DomainError):
            incomparable_case(N, m, n)
        return
    family = incomparable_chains(N, m, n).validate()
    assert family.lengths == [(m - 1) * (i - 1) + 1 for i in range(1, n + 1)]


def test_verify_examples():
    report = verify(constant(2), [boolean(2)], [boolean(1)])
    assert report.mono_witness is not None and not report.avoided

    assert verify(rank(2), [boolean(1)], [boolean(2)]).avoided
    assert not verify(rank(3), [boolean(1)], [boolean(2)]).avoided


def test_verify_fixed_checks_each_palette_color():
    coloring = Coloring.from_labels(1, [0, 1], keep_palette=True)
    assert verify_fixed(coloring, [chain(2), chain(2)]).avoided
    assert not verify_fixed(constant(1), [chain(2)]).avoided
    with pytest.raises(DomainError):
        verify_fixed(Coloring.from_labels(1, [0, 3], keep_palette=True), [chain(2), chain(2)])


def test_samplers_respect_their_class_structure(rng):
    for _ in range(20):
        assert find_monochromatic(random_antichain_classes(4, rng), chain(2)) is None
        assert find_monochromatic(random_chain_classes(4, rng), antichain(2)) is None
        assert find_monochromatic(random_no_mono_chain(4, 3, rng), chain(3)) is None


def test_samplers_are_reproducible():
    first = random_no_mono_chain(4, 2, np.random.default_rng(7))
    second = random_no_mono_chain(4, 2, np.random.default_rng(7))
    assert first == second


@pytest.mark.parametrize("n", [4, pytest.param(5, marks=pytest.mark.slow)])
def test_rank_has_no_rainbow_antichain(n):
    assert find_rainbow(rank(n + 1), antichain(n)) is None


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)])
def test_ceil_size_has_no_rainbow_antichain(m, n):
    coloring = ceil_size((m - 1) * (n - 1) + 1, m)
    assert find_rainbow(coloring, antichain(n)) is None


@pytest.mark.parametrize("N, ysize", [(3, 1), (4, 1), (4, 2), (5, 2), (6, 3)])
def test_trace_has_no_rainbow_long_chain(N, ysize):
    coloring = trace(N, ysize)
    assert find_rainbow(coloring, chain(ysize + 2)) is None
    assert find_rainbow(coloring, chain(ysize + 1)) is not None
