import pytest

from boolean_ramsey import lattice
from boolean_ramsey.colorings import verify_fixed
from boolean_ramsey.embedding import find_all_copies
from boolean_ramsey.posets import boolean, chain
from boolean_ramsey.satgen import decode, decode_instance, encode, parse_model
from boolean_ramsey.shared import DecodeError, DomainError, SatSidecarSchema, VerificationError, dump, load


def solve(instance):
    solvers = pytest.importorskip("pysat.solvers")
    with solvers.Solver(name="g3", bootstrap_with=instance.formula.clauses) as solver:
        if not solver.solve():
            return None
        return solver.get_model()


def test_encode_counts_for_a_single_color():
    instance = encode(2, 1, [chain(2)])
    assert instance.num_vars == 4
    # one color per subset, five comparable pairs, and the pinned empty set
    assert instance.num_clauses == 4 + 5 + 1


def test_encode_blocks_every_copy():
    instance = encode(3, 2, [boolean(2), boolean(2)])
    copies = find_all_copies(lattice.canonical_order(3), boolean(2))
    assert instance.num_vars == 16
    assert instance.num_clauses == 8 + 8 + 2 * len(copies) + 1


def test_first_use_adds_symmetry_clauses():
    plain = encode(3, 2, [chain(3), chain(3)])
    ordered = encode(3, 2, [chain(3), chain(3)], first_use=True)
    assert ordered.num_clauses == plain.num_clauses + 8


def test_encode_rejects_bad_arguments():
    with pytest.raises(DomainError):
        encode(9, 2, [chain(2), chain(2)])
    with pytest.raises(DomainError):
        encode(2, 5, [chain(2)] * 5)
    with pytest.raises(DomainError):
        encode(2, 2, [chain(2)])


def test_dimacs_header():
    lines = encode(2, 1, [chain(2)]).to_dimacs().splitlines()
    assert "p cnf 4 10" in lines
    assert lines[-1].endswith(" 0")


def test_parse_model():
    assert parse_model("s SATISFIABLE\nv 1 -2 3\nv -4 0\n") == [1, -2, 3, -4]
    assert parse_model("c comment\n1 -2 0 5\n") == [1, -2]
    assert parse_model("") == []


def test_decode_needs_every_variable():
    instance = encode(2, 1, [chain(2)])
    with pytest.raises(DecodeError):
        decode_instance([1, 2], instance)


def test_decode_needs_one_color_per_subset():
    instance = encode(1, 2, [chain(2), chain(2)])
    with pytest.raises(DecodeError):
        decode_instance([1, 2, 3, 4], instance)


def test_decode_rejects_a_coloring_with_a_forbidden_copy():
    instance = encode(2, 1, [chain(2)])
    with pytest.raises(VerificationError):
        decode_instance([1, 2, 3, 4], instance)


def test_sidecar_round_trip_through_json():
    instance = encode(1, 2, [chain(2), chain(3)])
    sidecar = load(SatSidecarSchema, dump(instance.sidecar()))
    assert sidecar.patterns == ["C2", "C3"]
    model = [var if color == 1 else -var for _, color, var in sidecar.varmap]
    coloring = decode(model, sidecar)
    assert coloring.palette == (1,)


def test_single_color_c2_is_unsatisfiable():
    assert solve(encode(2, 1, [chain(2)])) is None


@pytest.mark.parametrize("first_use", [False, True])
def test_two_colors_of_b2_on_b3(first_use):
    instance = encode(3, 2, [boolean(2), boolean(2)], first_use=first_use)
    model = solve(instance)
    assert model is not None
    coloring = decode_instance(model, instance)
    assert verify_fixed(coloring, [boolean(2), boolean(2)]).avoided


def test_two_colors_of_b2_on_b4_are_unsatisfiable():
    assert solve(encode(4, 2, [boolean(2), boolean(2)])) is None


def test_distinct_patterns():
    instance = encode(2, 2, [chain(2), chain(3)])
    model = solve(instance)
    assert model is not None
    coloring = decode_instance(model, instance)
    assert verify_fixed(coloring, [chain(2), chain(3)]).avoided
    assert solve(encode(3, 2, [chain(2), chain(3)])) is None
