import pytest

from boolean_ramsey.colorings import verify, verify_fixed
from boolean_ramsey.constants import Constants
from boolean_ramsey.posets import antichain, boolean, chain, make
from boolean_ramsey.search import (
    AvoidanceProblem,
    FixedPalette,
    RainbowMode,
    decide,
    naive_decide,
    rainbow_ramsey,
    ramsey,
    restricted_growth_strings,
)
from boolean_ramsey.shared import DomainError


def rainbow_mode(P, Q):
    return RainbowMode(monochromatic=(make(P),), rainbow=(make(Q),))


SUITE = [
    ("C2", "C2"),
    ("C2", "C3"),
    ("C3", "C2"),
    ("A2", "A2"),
    ("A2", "C3"),
    ("C2", "A2"),
    ("B2", "B1"),
    ("B1", "B2"),
    ("C2", "B1"),
    ("C2", "B2"),
]


def test_decide_examples():
    mode = rainbow_mode("C2", "C2")
    assert decide(AvoidanceProblem(n=0, mode=mode)).avoidable
    assert decide(AvoidanceProblem(n=1, mode=mode)).unavoidable

    palette = FixedPalette.of([boolean(2), boolean(2)])
    assert decide(AvoidanceProblem(n=4, mode=palette)).unavoidable


def test_avoidable_witness_verifies():
    outcome = decide(AvoidanceProblem(n=3, mode=FixedPalette.of([boolean(2)] * 2)))
    assert outcome.avoidable
    assert verify_fixed(outcome.witness, [boolean(2)] * 2).avoided

    outcome = decide(AvoidanceProblem(n=2, mode=rainbow_mode("A2", "C3")))
    assert outcome.avoidable
    assert verify(outcome.witness, [antichain(2)], [chain(3)]).avoided
    assert outcome.witness.is_canonical()


def test_fixed_palette_checks_its_size():
    with pytest.raises(DomainError):
        FixedPalette(k=2, patterns=(chain(2),))
    with pytest.raises(DomainError):
        AvoidanceProblem(n=2, mode=FixedPalette.of([chain(2)]), budget=0)


@pytest.mark.parametrize(
    "patterns, value",
    [
        (["C2", "C2"], 2),
        (["C3", "C3"], 4),
        (["B2", "B2"], 4),
        (["C2", "C3"], 3),
    ],
)
def test_ramsey_values(patterns, value):
    result = ramsey([make(p) for p in patterns])
    assert result.exact and result.value == value
    assert result.witness.n == value - 1
    assert verify_fixed(result.witness, [make(p) for p in patterns]).avoided


@pytest.mark.parametrize(
    "P, Q, value",
    [
        ("C2", "C2", 1),
        ("C2", "C3", 2),
        ("C3", "C2", 2),
        ("A2", "A2", 2),
        ("A2", "A3", 3),
        ("A2", "C2", 2),
        ("A2", "C3", 3),
        ("C2", "A2", 3),
        ("B2", "B1", 2),
        ("B3", "B1", 3),
        ("B1", "B2", 3),
        ("C2", "B1", 1),
        ("C3", "B1", 2),
        ("C2", "B2", 3),
    ],
)
def test_rainbow_ramsey_values(P, Q, value):
    result = rainbow_ramsey([make(P)], [make(Q)])
    assert result.value == value
    if value > 0:
        assert verify(result.witness, [make(P)], [make(Q)]).avoided


@pytest.mark.slow
@pytest.mark.parametrize("P, Q, value", [("C3", "C3", 4), ("A2", "C4", 4), ("A3", "A3", 4)])
def test_rainbow_ramsey_values_on_b4(P, Q, value):
    assert rainbow_ramsey([make(P)], [make(Q)]).value == value


def test_scan_starts_at_n_lo():
    result = rainbow_ramsey([chain(3)], [chain(3)], n_lo=3, n_hi=3)
    assert result.lower == 4 and result.upper is None
    assert len(result.outcomes) == 1


def test_scan_rejects_empty_ranges():
    with pytest.raises(DomainError):
        ramsey([chain(2)], n_lo=3, n_hi=2)


def test_budget_exhaustion_is_reported():
    problem = AvoidanceProblem(n=4, mode=FixedPalette.of([chain(3), chain(3)]), budget=16)
    outcome = decide(problem)
    assert outcome.exceeded
    assert outcome.witness is None
    assert outcome.to_schema().kind == Constants.Outcome.BUDGET_EXCEEDED.value

    result = ramsey([chain(3), chain(3)], n_lo=4, n_hi=4, budget=16)
    assert result.value is None
    assert result.lower == 4 and result.upper is None


@pytest.mark.parametrize("length, count", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)])
def test_restricted_growth_strings_count_partitions(length, count):
    words = list(restricted_growth_strings(length))
    assert len(words) == count
    assert words == sorted(words)


def test_restricted_growth_strings_cover_every_coloring_once():
    # every coloring of B_2 with any palette renames to exactly one word
    words = set(restricted_growth_strings(4))
    seen = set()
    for a in range(4):
        for b in range(4):
            for c in range(4):
                for d in range(4):
                    first_use = {}
                    seen.add(tuple(first_use.setdefault(x, len(first_use)) for x in (a, b, c, d)))
    assert seen == words
    assert len(list(restricted_growth_strings(4, max_blocks=2))) == 8


@pytest.mark.parametrize("P, Q", SUITE)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_decide_agrees_with_naive_enumeration(P, Q, n):
    problem = AvoidanceProblem(n=n, mode=rainbow_mode(P, Q))
    outcome = decide(problem)
    expected = naive_decide(problem)
    assert outcome.avoidable == (expected is not None)
    if expected is not None:
        assert outcome.witness == expected


@pytest.mark.slow
@pytest.mark.parametrize("P, Q", SUITE + [("A2", "A3"), ("C3", "C3"), ("A2", "C4")])
def test_decide_agrees_with_naive_enumeration_on_b3(P, Q):
    problem = AvoidanceProblem(n=3, mode=rainbow_mode(P, Q))
    outcome = decide(problem)
    expected = naive_decide(problem)
    assert outcome.avoidable == (expected is not None)
    if expected is not None:
        assert outcome.witness == expected


@pytest.mark.parametrize(
    "patterns",
    [["C2", "C2"], ["C3", "C2"], ["B2", "B2"], ["C2", "A2", "C2"]],
)
def test_fixed_palette_agrees_with_naive_enumeration(patterns):
    for n in range(0, 3):
        problem = AvoidanceProblem(n=n, mode=FixedPalette.of([make(p) for p in patterns]))
        outcome = decide(problem)
        expected = naive_decide(problem)
        assert outcome.avoidable == (expected is not None)
        if expected is not None:
            assert outcome.witness == expected


def test_parallel_split_keeps_the_witness():
    problem = AvoidanceProblem(n=3, mode=rainbow_mode("C3", "C3"))
    sequential = decide(problem, jobs=1)
    parallel = decide(problem, jobs=2, split_depth=3)
    assert parallel.kind == sequential.kind == Constants.Outcome.AVOIDABLE
    assert parallel.witness == sequential.witness


def test_parallel_split_exhausts_every_subtree():
    problem = AvoidanceProblem(n=2, mode=FixedPalette.of([chain(2), chain(2)]))
    assert decide(problem, jobs=2, split_depth=2).unavoidable


@pytest.mark.parametrize(
    "mode",
    [
        rainbow_mode("C2", "C2"),
        rainbow_mode("C2", "C3"),
        rainbow_mode("A2", "A2"),
        rainbow_mode("C2", "B1"),
        FixedPalette.of([chain(2), chain(2)]),
    ],
)
def test_unavoidable_sizes_stay_unavoidable(mode):
    kinds = [decide(AvoidanceProblem(n=n, mode=mode)).kind for n in range(0, 4)]
    first = kinds.index(Constants.Outcome.UNAVOIDABLE)
    assert all(kind == Constants.Outcome.AVOIDABLE for kind in kinds[:first])
    assert all(kind == Constants.Outcome.UNAVOIDABLE for kind in kinds[first:])


@pytest.mark.parametrize(
    "mode",
    [
        FixedPalette.of([chain(3), chain(2)]),
        FixedPalette.of([antichain(3), antichain(3)]),
        RainbowMode(monochromatic=(chain(3),), rainbow=(antichain(3),)),
    ],
)
def test_parallel_split_spends_one_budget(mode):
    full = decide(AvoidanceProblem(n=4, mode=mode), jobs=1)
    assert not full.exceeded

    for budget in (max(1, full.nodes // 3), full.nodes - 1, full.nodes):
        problem = AvoidanceProblem(n=4, mode=mode, budget=budget)
        sequential = decide(problem, jobs=1)
        parallel = decide(problem, jobs=2, split_depth=4)
        assert parallel.kind == sequential.kind
        assert parallel.nodes == sequential.nodes <= budget
        assert parallel.witness == sequential.witness
        assert sequential.exceeded == (budget < full.nodes)
