import json

import pytest

from boolean_ramsey.cli.main import main
from boolean_ramsey.constants import Constants

ExitCode = Constants.ExitCode


def run(capsys, *args):
    code = main([str(arg) for arg in args])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_color_prints_a_coloring(capsys, tmp_path):
    target = tmp_path / "level_block.json"
    code, payload = run(capsys, "color", "level_block", 5, 3, "--out", target)
    assert code == ExitCode.SUCCESS
    assert payload["n"] == 5 and payload["order"] == "graded-colex"
    assert max(payload["colors"]) == 2
    assert json.loads(target.read_text()) == payload


def test_check_reports_avoidance_and_violations(capsys, tmp_path):
    coloring = tmp_path / "rank.json"
    run(capsys, "color", "rank", 3, "--out", coloring)

    code, payload = run(capsys, "check", "--coloring", coloring, "--P", "C2")
    assert code == ExitCode.SUCCESS and payload["avoided"]

    code, payload = run(capsys, "check", "--coloring", coloring, "--P", "C2", "--Q", "B2")
    assert code == ExitCode.VIOLATION
    assert payload["rainbow_witness"]["embedding"]["pattern"] == "B2"


def test_check_fixed_palette(capsys, tmp_path):
    coloring = tmp_path / "pairs.json"
    run(capsys, "color", "pairs_of_levels", 3, "--out", coloring)
    code, _ = run(capsys, "check", "--coloring", coloring, "--fixed", "--P", "B2", "B2", "B2")
    assert code == ExitCode.SUCCESS

    code, _ = run(capsys, "check", "--coloring", coloring, "--fixed", "--P", "B2")
    assert code == ExitCode.INPUT_ERROR


def test_embed(capsys, tmp_path):
    code, payload = run(capsys, "embed", "--pattern", "B2", "--n", 2)
    assert code == ExitCode.SUCCESS
    assert sorted(payload["images"]) == [0, 1, 2, 3]

    code, payload = run(capsys, "embed", "--pattern", "A3", "--family", 1, 3)
    assert code == ExitCode.SUCCESS and payload is None

    coloring = tmp_path / "rank.json"
    run(capsys, "color", "rank", 2, "--out", coloring)
    code, payload = run(capsys, "embed", "--pattern", "C3", "--coloring", coloring, "--copy", "rainbow")
    assert sorted(payload["colors"]) == [0, 1, 2]


def test_extract_and_recheck(capsys, tmp_path):
    coloring, outcome = tmp_path / "rank.json", tmp_path / "outcome.json"
    run(capsys, "color", "rank", 3, "--out", coloring)

    code, payload = run(
        capsys, "extract", "rainbow_boolean", "--coloring", coloring, "--params", "n=2", "m=2", "--out", outcome
    )
    assert code == ExitCode.SUCCESS
    assert payload["kind"] == "rainbow" and payload["algorithm"] == "rainbow_boolean"

    code, payload = run(capsys, "check", "--coloring", coloring, "--embedding", outcome)
    assert code == ExitCode.SUCCESS
    assert payload["pattern"] == "B2"


def test_extract_exit_codes(capsys, tmp_path):
    constant, rank = tmp_path / "constant.json", tmp_path / "rank.json"
    run(capsys, "color", "constant", 3, "--out", constant)
    run(capsys, "color", "rank", 6, "--out", rank)

    code, payload = run(capsys, "extract", "rainbow_boolean", "--coloring", constant, "--params", "n=2", "m=2")
    assert code == ExitCode.VIOLATION and payload["kind"] == "monochromatic"

    code, payload = run(
        capsys, "extract", "rainbow_boolean_bm", "--coloring", rank, "--params", "m=2", "n=2", "r=2,4,6"
    )
    assert code == ExitCode.INPUT_ERROR and payload["kind"] == "precondition_unmet"

    code, _ = run(capsys, "extract", "rainbow_boolean", "--coloring", rank, "--params", "depth=2")
    assert code == ExitCode.INPUT_ERROR


def test_search_writes_a_witness_that_checks(capsys, tmp_path):
    out_dir = tmp_path / "search"
    code, payload = run(capsys, "search", "rainbow", "--P", "C2", "--Q", "C3", "--out-dir", out_dir)
    assert code == ExitCode.SUCCESS
    assert payload["value"] == 2
    assert json.loads((out_dir / "result.json").read_text()) == payload

    code, _ = run(capsys, "check", "--coloring", out_dir / "witness.json", "--P", "C2", "--Q", "C3")
    assert code == ExitCode.SUCCESS
    code, _ = run(capsys, "check", "--coloring", out_dir / "result.json", "--P", "C2", "--Q", "C3")
    assert code == ExitCode.SUCCESS


def test_search_fixed_palette(capsys):
    code, payload = run(capsys, "search", "ramsey", "--P", "C2", "--k", 2)
    assert code == ExitCode.SUCCESS and payload["value"] == 2


def test_search_budget_exceeded(capsys):
    code, payload = run(
        capsys, "search", "ramsey", "--P", "C3", "--k", 2, "--n-lo", 4, "--n-hi", 4, "--budget", 16
    )
    assert code == ExitCode.BUDGET_EXCEEDED
    assert payload["value"] is None
    assert payload["outcomes"][0]["kind"] == "budget_exceeded"


def test_bounds(capsys):
    code, payload = run(capsys, "bounds", "--P", "B2", "--Q", "B2")
    assert code == ExitCode.SUCCESS
    assert payload["best_lower"] == 6 == payload["best_upper"]
    assert any(bound["source"] == "R_3-exact" for bound in payload["lower"])

    code, payload = run(capsys, "bounds", "--P", "B2", "--vee-wedge")
    assert payload["lower"] == 4 and payload["dimension"] == 2


def test_sat_export_and_decode(capsys, tmp_path):
    dimacs = tmp_path / "r2.cnf"
    code, payload = run(capsys, "sat-export", "--n", 1, "--k", 2, "--P", "C2", "--out", dimacs)
    assert code == ExitCode.SUCCESS
    assert payload["variables"] == 4
    assert dimacs.read_text().startswith("p cnf 4")

    model = tmp_path / "model.txt"
    model.write_text("s SATISFIABLE\nv 1 -2 -3 4 0\n")
    code, payload = run(capsys, "sat-decode", "--model", model, "--sidecar", f"{dimacs}.json")
    assert code == ExitCode.SUCCESS
    assert payload["colors"] == [0, 1] and payload["palette"] == [0, 1]

    model.write_text("v 1 -2 3 -4 0\n")
    code, _ = run(capsys, "sat-decode", "--model", model, "--sidecar", f"{dimacs}.json")
    assert code == ExitCode.VIOLATION


def test_table_confirms_small_cells(capsys, tmp_path):
    out_dir = tmp_path / "table"
    code, payload = run(capsys, "table", "--rows", "chain-chain", "--max-param", 2, "--out-dir", out_dir)
    assert code == ExitCode.SUCCESS
    assert [(cell["P"], cell["Q"], cell["value"], cell["status"]) for cell in payload] == [
        ("C2", "C2", 1, "confirmed")
    ]
    assert json.loads((out_dir / "table.json").read_text()) == payload
    assert (out_dir / "chain-chain_C2_C2.lower.json").exists()


def test_table_marks_large_cells_lower_confirmed(capsys):
    code, payload = run(capsys, "table", "--rows", "b2-b2")
    assert code == ExitCode.SUCCESS
    (cell,) = payload
    assert cell["value"] == 6
    assert cell["status"] == "lower-confirmed"
    assert cell["method"] == "construction-only"


def test_table_uses_extractors_as_evidence(capsys):
    code, payload = run(capsys, "table", "--rows", "chain-boolean", "--max-param", 3, "--trials", 5)
    assert code == ExitCode.SUCCESS
    by_name = {(cell["P"], cell["Q"]): cell for cell in payload}
    assert by_name[("C2", "B1")]["status"] == "confirmed"
    assert by_name[("C2", "B2")]["status"] == "confirmed"

    sampled = by_name[("C2", "B3")]
    assert sampled["status"] == "lower-confirmed"
    assert "5/5" in sampled["reason"]

    # RR(C3, B3) = 14 needs a coloring of B13
    assert by_name[("C3", "B3")]["status"] == "skipped-with-reason"
    assert by_name[("C3", "B3")]["method"] == "bounds-only"


@pytest.mark.slow
def test_table_a2_chain_row(capsys):
    code, payload = run(capsys, "table", "--rows", "a2-chain", "--budget", 10**8)
    assert code == ExitCode.SUCCESS
    assert [(cell["Q"], cell["value"], cell["status"]) for cell in payload] == [
        ("C2", 2, "confirmed"),
        ("C3", 3, "confirmed"),
        ("C4", 4, "confirmed"),
    ]


@pytest.mark.parametrize(
    "args",
    [
        ["check", "--coloring", "missing.json", "--P", "C2"],
        ["launch"],
        ["search", "rainbow", "--P", "C2"],
        ["bounds", "--P", "X9", "--Q", "C2"],
        ["color", "level_block", 5],
        ["color", "rank", 3, "--seed", -1],
        ["color", "rank", 3, "--config", "missing.yaml"],
        ["table", "--rows", "no-such-row"],
        ["bounds", "--P", "C2", "--Q", "C2", "--format", "yaml"],
    ],
)
def test_input_errors(capsys, args):
    code, _ = run(capsys, *args)
    assert code == ExitCode.INPUT_ERROR


def test_output_format(capsys):
    main(["bounds", "--P", "C2", "--Q", "C3", "--format", "compact"])
    compact = capsys.readouterr().out
    main(["bounds", "--P", "C2", "--Q", "C3"])
    indented = capsys.readouterr().out

    assert compact.count("\n") == 1
    assert indented.count("\n") > 1
    assert json.loads(compact) == json.loads(indented)
