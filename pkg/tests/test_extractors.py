import pytest

from boolean_ramsey import lattice
from boolean_ramsey.colorings import (
    ceil_size,
    constant,
    level_block,
    near_constant,
    random_antichain_classes,
    random_chain_classes,
    random_coloring,
    random_no_mono_chain,
    rank,
    scd_block,
    trace,
)
from boolean_ramsey.constants import Constants
from boolean_ramsey.extractors import (
    ExtractorFactory,
    rainbow_antichain,
    rainbow_boolean,
    rainbow_boolean_bm,
    rainbow_chain_a2,
    rainbow_chain_am,
)
from boolean_ramsey.posets import antichain, boolean, chain
from boolean_ramsey.shared import DomainError

TRIALS = 100


def sets(*groups):
    return [lattice.mask_from_elements(group) for group in groups]


def assert_rainbow(outcome, pattern):
    assert outcome.is_rainbow, outcome.description
    copy = outcome.embedding
    assert copy.pattern == pattern
    assert len(set(copy.colors)) == len(copy.colors)


def test_factory_knows_every_extractor():
    assert set(ExtractorFactory.registry) == set(Constants.Extractors)
    extractor = ExtractorFactory.instantiate(Constants.Extractors.RAINBOW_BOOLEAN, n=2, m=2)
    assert extractor.extract(rank(3)).algorithm == "rainbow_boolean"


def test_rainbow_boolean_on_rank():
    outcome = rainbow_boolean(rank(3), 2, 2)
    assert_rainbow(outcome, boolean(2))
    assert outcome.embedding.images == sets([], [2], [1, 3], [1, 2, 3])


def test_rainbow_boolean_on_level_blocks():
    outcome = rainbow_boolean(level_block(6, 3), 2, 3)
    assert_rainbow(outcome, boolean(2))
    assert outcome.embedding.images == sets([], [1, 5], [1, 2, 3, 6], [1, 2, 3, 4, 5, 6])


def test_rainbow_boolean_reports_a_monochromatic_chain():
    outcome = rainbow_boolean(constant(3), 2, 2)
    assert outcome.is_monochromatic
    assert outcome.embedding.pattern == chain(2)
    assert outcome.embedding.images == sets([], [2])


def test_rainbow_boolean_needs_a_large_enough_ground():
    outcome = rainbow_boolean(rank(5), 2, 3)
    assert outcome.kind == Constants.Extraction.PRECONDITION_UNMET
    assert outcome.embedding is None
    with pytest.raises(DomainError):
        rainbow_boolean(rank(3), 2, 1)


def test_rainbow_chain_a2_on_near_constant():
    outcome = rainbow_chain_a2(near_constant(3))
    assert_rainbow(outcome, chain(3))
    assert outcome.embedding.images[0] == 0


def test_rainbow_chain_a2_reports_an_antichain():
    outcome = rainbow_chain_a2(rank(3))
    assert outcome.is_monochromatic
    assert outcome.embedding.pattern == antichain(2)


def test_rainbow_chain_am_examples():
    assert rainbow_chain_am(rank(4), 2).is_monochromatic

    outcome = rainbow_chain_am(trace(4, 2), 3)
    assert outcome.is_rainbow
    assert outcome.metadata["length"] >= 2

    assert_rainbow(rainbow_chain_am(near_constant(4), 3), chain(4))


def test_rainbow_chain_am_reports_an_antichain():
    outcome = rainbow_chain_am(constant(3), 3)
    assert outcome.is_monochromatic
    assert outcome.embedding.pattern == antichain(3)


def test_rainbow_antichain_examples():
    outcome = rainbow_antichain(rank(5), 2, 3)
    assert_rainbow(outcome, antichain(3))
    assert outcome.metadata["chain_lengths"] == [1, 2, 3]

    outcome = rainbow_antichain(constant(4), 2, 2)
    assert outcome.is_monochromatic
    assert outcome.embedding.pattern == chain(2)

    assert_rainbow(rainbow_antichain(ceil_size(4, 3), 3, 2), antichain(2))


def test_rainbow_antichain_outside_the_known_sizes():
    outcome = rainbow_antichain(rank(4), 2, 3)
    assert outcome.kind == Constants.Extraction.PRECONDITION_UNMET

    # B_5 has only the short chains, which cannot force three colors for m = 3
    for coloring in (rank(5), constant(5)):
        assert rainbow_antichain(coloring, 3, 3).kind == Constants.Extraction.PRECONDITION_UNMET


def test_rainbow_boolean_bm_examples():
    outcome = rainbow_boolean_bm(rank(12), 2, 2)
    assert_rainbow(outcome, boolean(2))
    assert outcome.metadata["block_sizes"] == [2, 4, 6]

    outcome = rainbow_boolean_bm(constant(12), 2, 2)
    assert outcome.is_monochromatic
    assert outcome.embedding.pattern == boolean(2)

    outcome = rainbow_boolean_bm(rank(11), 2, 2)
    assert outcome.kind == Constants.Extraction.PRECONDITION_UNMET


def test_rainbow_boolean_bm_checks_block_sizes():
    with pytest.raises(DomainError):
        rainbow_boolean_bm(rank(6), 2, 2, r=[1, 2])


def test_rainbow_boolean_on_antichain_classes(rng):
    for _ in range(TRIALS):
        assert_rainbow(rainbow_boolean(random_antichain_classes(3, rng), 2, 2), boolean(2))


def test_rainbow_boolean_on_chain_free_classes(rng):
    for _ in range(TRIALS):
        coloring = random_no_mono_chain(6, 3, rng)
        assert_rainbow(rainbow_boolean(coloring, 2, 3), boolean(2))


@pytest.mark.parametrize("n", range(1, 7))
def test_rainbow_chain_a2_on_chain_classes(n, rng):
    for _ in range(TRIALS if n <= 4 else 20):
        assert_rainbow(rainbow_chain_a2(random_chain_classes(n, rng)), chain(n))


@pytest.mark.parametrize("N", [3, 4, 5])
def test_rainbow_chain_am_length_guarantee(N, rng):
    for coloring in [scd_block(N, 3)] + [random_chain_classes(N, rng) for _ in range(10)]:
        outcome = rainbow_chain_am(coloring, 3)
        assert outcome.is_rainbow
        assert outcome.metadata["length"] >= -(-N // 2)


@pytest.mark.parametrize("m, n, N", [(2, 3, 5), (3, 2, 4), (3, 3, 6)])
def test_rainbow_antichain_on_chain_free_colorings(m, n, N, rng):
    for _ in range(TRIALS):
        coloring = random_no_mono_chain(N, m, rng)
        assert_rainbow(rainbow_antichain(coloring, m, n), antichain(n))


@pytest.mark.slow
def test_rainbow_boolean_on_antichain_classes_of_b7(rng):
    for _ in range(TRIALS):
        assert_rainbow(rainbow_boolean(random_antichain_classes(7, rng), 3, 2), boolean(3))


@pytest.mark.slow
def test_rainbow_boolean_bm_is_total(rng):
    for trial in range(TRIALS):
        coloring = random_coloring(12, 2 + trial % 3, rng)
        outcome = rainbow_boolean_bm(coloring, 2, 2, r=[2, 4, 6])
        assert outcome.kind != Constants.Extraction.PRECONDITION_UNMET
        assert outcome.embedding.pattern == boolean(2)


def test_extraction_schema_names_the_algorithm():
    payload = rainbow_antichain(rank(5), 2, 3).to_schema()
    assert payload.algorithm == "rainbow_antichain"
    assert payload.kind == "rainbow"
    assert payload.embedding is not None
    assert payload.metadata["chain_lengths"] == [1, 2, 3]
