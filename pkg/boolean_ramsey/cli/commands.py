"""
One function per command. Each reads its inputs, calls the library,
prints the resulting artifact and returns the exit code.
"""

import logging
import os

import regex

from boolean_ramsey.bounds.formulas import bounds_report, vee_wedge_bounds
from boolean_ramsey.cli import artifacts
from boolean_ramsey.cli.table import cmd_table, count_by_status
from boolean_ramsey.colorings.factory import ColoringFactory
from boolean_ramsey.colorings.verify import verify, verify_fixed
from boolean_ramsey.constants import Constants
from boolean_ramsey.embedding import find_copy, find_monochromatic, find_rainbow
from boolean_ramsey.extractors.factory import ExtractorFactory
from boolean_ramsey.posets import make, make_all
from boolean_ramsey.satgen import decode, encode
from boolean_ramsey.search.ramsey import rainbow_ramsey, ramsey
from boolean_ramsey.shared import VerificationError

_logger = logging.getLogger(__name__)

ExitCode = Constants.ExitCode

INTEGER = regex.compile(r"^-?\d+$")


def parse_value(text: str):
    """Integers stay integers, comma separated integers become lists, anything else a string."""
    if INTEGER.match(text):
        return int(text)
    parts = text.split(",")
    if len(parts) > 1 and all(INTEGER.match(part) for part in parts):
        return [int(part) for part in parts]
    return text


def parse_params(pairs):
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise ValueError(f"expected key=value, got '{pair}'")
        params[key] = parse_value(value)
    return params


def color(args) -> int:
    name = Constants.Colorings(args.name)
    construction = ColoringFactory.instantiate(name, *[parse_value(p) for p in args.params])
    artifacts.emit(construction.generate().to_schema(), args.out)
    return ExitCode.SUCCESS


def check(args) -> int:
    coloring = artifacts.read_coloring(args.coloring)

    if args.embedding is not None:
        found = artifacts.read_embedding(args.embedding)
        actual = [coloring.color_of(x) for x in found.images]
        if found.colors is not None and found.colors != actual:
            raise VerificationError(f"[Check] embedding reports colors {found.colors}, coloring has {actual}")
        found = found.recolored(coloring, found.kind)
        found.validate()
        artifacts.emit(found.to_schema(), args.out)
        return ExitCode.SUCCESS

    if args.fixed:
        report = verify_fixed(coloring, make_all(args.P))
    else:
        report = verify(coloring, make_all(args.P), make_all(args.Q))
    artifacts.emit(report.to_schema(), args.out)
    return ExitCode.SUCCESS if report.avoided else ExitCode.VIOLATION


def embed(args) -> int:
    pattern = make(args.pattern)
    if args.coloring is not None:
        coloring = artifacts.read_coloring(args.coloring)
        if args.copy == Constants.Copy.RAINBOW.value:
            found = find_rainbow(coloring, pattern)
        else:
            found = find_monochromatic(coloring, pattern)
    elif args.family is not None:
        found = find_copy(args.family, pattern)
    else:
        found = find_copy(range(1 << args.n), pattern, n=args.n)

    if found is None:
        _logger.info(f"[Embed] no copy of {pattern.spec}")
    artifacts.emit(None if found is None else found.to_schema(), args.out)
    return ExitCode.SUCCESS


def extract(args) -> int:
    coloring = artifacts.read_coloring(args.coloring)
    extractor = ExtractorFactory.instantiate(
        Constants.Extractors(args.algorithm), **parse_params(args.params)
    )
    outcome = extractor.extract(coloring)
    artifacts.emit(outcome.to_schema(), args.out)

    if outcome.is_rainbow:
        return ExitCode.SUCCESS
    if outcome.is_monochromatic:
        return ExitCode.VIOLATION
    return ExitCode.INPUT_ERROR


def search(args) -> int:
    if args.mode == "ramsey":
        result = ramsey(make_all(args.P), args.n_lo, args.n_hi, budget=args.budget, jobs=args.jobs)
    else:
        result = rainbow_ramsey(
            make_all(args.P), make_all(args.Q), args.n_lo, args.n_hi, budget=args.budget, jobs=args.jobs
        )

    schema = result.to_schema()
    if args.out_dir is not None:
        artifacts.write_artifact(args.out_dir, "result.json", schema)
        if result.witness is not None:
            artifacts.write_artifact(args.out_dir, "witness.json", result.witness.to_schema())
    artifacts.emit(schema)

    if result.exact:
        return ExitCode.SUCCESS
    if any(outcome.exceeded for outcome in result.outcomes):
        return ExitCode.BUDGET_EXCEEDED
    return ExitCode.SUCCESS


def bounds(args) -> int:
    P = make(args.P)
    if args.vee_wedge:
        found = vee_wedge_bounds(P)
        artifacts.emit(
            {
                "P": P.spec,
                "lower": found.lower,
                "upper": found.upper,
                "equals_r2": found.equals_r2,
                "dimension": found.dimension,
            },
            args.out,
        )
        return ExitCode.SUCCESS

    artifacts.emit(bounds_report(P, make(args.Q)).to_schema(), args.out)
    return ExitCode.SUCCESS


def sat_export(args) -> int:
    instance = encode(args.n, args.k, make_all(args.P), first_use=args.first_use)
    artifacts.write_dimacs(args.out, instance.to_dimacs())
    artifacts.write_schema(args.sidecar, instance.sidecar())
    artifacts.emit(
        {
            "dimacs": os.path.abspath(args.out),
            "sidecar": os.path.abspath(args.sidecar),
            "variables": instance.num_vars,
            "clauses": instance.num_clauses,
        }
    )
    return ExitCode.SUCCESS


def sat_decode(args) -> int:
    coloring = decode(artifacts.read_model(args.model), artifacts.read_sidecar(args.sidecar))
    artifacts.emit(coloring.to_schema(), args.out)
    return ExitCode.SUCCESS


def table(args) -> int:
    cells = cmd_table(
        max_param=args.max_param,
        budget=args.budget,
        rows=args.rows,
        trials=args.trials,
        seed=args.seed,
        full_search=args.full_search,
        out_dir=args.out_dir,
        jobs=args.jobs,
    )
    artifacts.emit([cell.to_schema() for cell in cells])
    _logger.info(f"[Table] {count_by_status(cells)}")
    return ExitCode.VIOLATION if any(cell.refuted for cell in cells) else ExitCode.SUCCESS


COMMANDS = {
    "color": color,
    "check": check,
    "embed": embed,
    "extract": extract,
    "search": search,
    "bounds": bounds,
    "sat-export": sat_export,
    "sat-decode": sat_decode,
    "table": table,
}
