import argparse
import logging
import os

from boolean_ramsey.constants import Constants
from boolean_ramsey.shared import DomainError

_logger = logging.getLogger(__name__)


class UsageError(ValueError):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors become exceptions so they map onto the input error exit code."""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def common_args(parser):
    """arguments shared by every command"""
    parser.add_argument(
        "--config",
        type=str,
        metavar="[config file]",
        default=None,
        help="yaml file replacing the packaged configs/config.yaml",
    )
    parser.add_argument(
        "--log",
        type=str,
        metavar="[log file]",
        default=None,
        help="additionally write log records to this file",
    )
    parser.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="overrides logging.level of the config",
    )
    parser.add_argument("--seed", type=int, default=None, help="seed of every random choice, 0 unless configured")
    parser.add_argument(
        "--format",
        choices=[f.value for f in Constants.OutputFormat],
        default=Constants.OutputFormat.JSON.value,
        help="stdout layout: indented json or one compact line",
    )


def color_args(parser):
    parser.add_argument(
        "name",
        type=str,
        choices=[c.value for c in Constants.Colorings],
        help="registered coloring construction",
    )
    parser.add_argument(
        "params",
        type=str,
        nargs="*",
        metavar="[param]",
        help="construction parameters in order, e.g. `level_block 5 3`",
    )
    parser.add_argument("--out", type=str, metavar="[file]", default=None, help="write the coloring here")


def check_args(parser):
    parser.add_argument("--coloring", type=str, required=True, metavar="[file]", help="coloring json")
    parser.add_argument("--P", type=str, nargs="*", default=[], metavar="[spec]", help="monochromatic targets")
    parser.add_argument("--Q", type=str, nargs="*", default=[], metavar="[spec]", help="rainbow targets")
    parser.add_argument(
        "--fixed",
        action="store_true",
        help="fixed palette check: palette color i must avoid the i-th --P",
    )
    parser.add_argument(
        "--embedding",
        type=str,
        metavar="[file]",
        default=None,
        help="re-verify an embedding or extraction artifact against the coloring instead",
    )
    parser.add_argument("--out", type=str, metavar="[file]", default=None)


def embed_args(parser):
    parser.add_argument("--pattern", type=str, required=True, metavar="[spec]", help="pattern poset")
    family = parser.add_mutually_exclusive_group(required=True)
    family.add_argument("--n", type=int, help="search the whole lattice B_n")
    family.add_argument(
        "--family", type=int, nargs="+", metavar="[mask]", help="subset masks to search in"
    )
    family.add_argument("--coloring", type=str, metavar="[file]", help="search a colored lattice")
    parser.add_argument(
        "--copy",
        choices=[Constants.Copy.MONOCHROMATIC.value, Constants.Copy.RAINBOW.value],
        default=Constants.Copy.MONOCHROMATIC.value,
        help="color condition when --coloring is given",
    )
    parser.add_argument("--out", type=str, metavar="[file]", default=None)


def extract_args(parser):
    parser.add_argument(
        "algorithm",
        type=str,
        choices=[e.value for e in Constants.Extractors],
        help="extraction algorithm",
    )
    parser.add_argument("--coloring", type=str, required=True, metavar="[file]", help="coloring json")
    parser.add_argument(
        "--params",
        type=str,
        nargs="*",
        default=[],
        metavar="key=value",
        help="algorithm parameters, lists comma separated, e.g. `m=2 n=2 r=2,4,6`",
    )
    parser.add_argument("--out", type=str, metavar="[file]", default=None)


def search_args(parser):
    parser.add_argument(
        "mode",
        choices=["ramsey", "rainbow"],
        help="fixed palette R(P_1, ..., P_k) or rainbow RR(P, Q)",
    )
    parser.add_argument("--P", type=str, nargs="+", required=True, metavar="[spec]")
    parser.add_argument("--Q", type=str, nargs="*", default=[], metavar="[spec]")
    parser.add_argument(
        "--k", type=int, default=None, help="ramsey mode: repeat a single --P for k colors"
    )
    parser.add_argument("--n-lo", type=int, default=0, help="first lattice size to decide")
    parser.add_argument("--n-hi", type=int, default=None, help="last lattice size to decide")
    parser.add_argument("--budget", type=int, default=None, help="search tree nodes per size")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")
    parser.add_argument(
        "--out-dir", type=str, metavar="[dir]", default=None, help="write result and witness files here"
    )


def bounds_args(parser):
    parser.add_argument("--P", type=str, required=True, metavar="[spec]")
    target = parser.add_mutually_exclusive_group(required=True)
    target.add_argument("--Q", type=str, metavar="[spec]")
    target.add_argument(
        "--vee-wedge", action="store_true", help="bound RR(P, {V, W}) instead"
    )
    parser.add_argument("--out", type=str, metavar="[file]", default=None)


def sat_export_args(parser):
    parser.add_argument("--n", type=int, required=True, help="ground set size")
    parser.add_argument("--k", type=int, default=None, help="colors, defaults to the number of --P")
    parser.add_argument("--P", type=str, nargs="+", required=True, metavar="[spec]")
    parser.add_argument("--first-use", action="store_true", help="add first-use symmetry breaking")
    parser.add_argument("--out", type=str, required=True, metavar="[file]", help="DIMACS file")
    parser.add_argument(
        "--sidecar", type=str, default=None, metavar="[file]", help="variable map, defaults to <out>.json"
    )


def sat_decode_args(parser):
    parser.add_argument("--model", type=str, required=True, metavar="[file]", help="solver output")
    parser.add_argument("--sidecar", type=str, required=True, metavar="[file]", help="variable map json")
    parser.add_argument("--out", type=str, metavar="[file]", default=None)


def table_args(parser):
    parser.add_argument("--max-param", type=int, default=None, help="largest m and n per row")
    parser.add_argument("--budget", type=int, default=None, help="search tree nodes per cell")
    parser.add_argument("--trials", type=int, default=None, help="random colorings per extractor check")
    parser.add_argument("--rows", type=str, nargs="*", default=None, metavar="[row]", help="row ids to run")
    parser.add_argument(
        "--full-search", action="store_true", help="show the lower side by search instead of a construction"
    )
    parser.add_argument("--jobs", type=int, default=None, help="worker processes per search")
    parser.add_argument("--out-dir", type=str, metavar="[dir]", default=None)


COMMANDS = {
    "color": (color_args, "print an explicit extremal coloring"),
    "check": (check_args, "verify a coloring against monochromatic and rainbow targets"),
    "embed": (embed_args, "find a strong copy of a pattern"),
    "extract": (extract_args, "run a constructive extraction algorithm"),
    "search": (search_args, "exact Ramsey numbers by canonical search"),
    "bounds": (bounds_args, "closed form bounds with provenance"),
    "sat-export": (sat_export_args, "write a fixed palette CNF instance"),
    "sat-decode": (sat_decode_args, "decode and verify a solver model"),
    "table": (table_args, "reproduce the rainbow Ramsey table cells"),
}


def command_args(parser):
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True
    for name, (populate, description) in COMMANDS.items():
        subparser = subparsers.add_parser(name, help=description, description=description)
        common_args(subparser)
        populate(subparser)


def process_common_args(parsed_args):
    if parsed_args.seed is not None and parsed_args.seed < 0:
        raise DomainError(f"--seed must be non-negative, got {parsed_args.seed}")
    if parsed_args.config is not None and not os.path.isfile(parsed_args.config):
        raise FileNotFoundError(f"config file {parsed_args.config} does not exist")


def process_search_args(parsed_args):
    if parsed_args.command != "search":
        return
    if parsed_args.budget is not None and parsed_args.budget < 1:
        raise DomainError(f"--budget must be positive, got {parsed_args.budget}")
    if parsed_args.jobs is not None and parsed_args.jobs < 1:
        raise DomainError(f"--jobs must be positive, got {parsed_args.jobs}")
    if parsed_args.n_hi is None:
        parsed_args.n_hi = 5 if parsed_args.mode == "rainbow" else 6
    if not 0 <= parsed_args.n_lo <= parsed_args.n_hi:
        raise DomainError(f"need 0 <= --n-lo <= --n-hi, got {parsed_args.n_lo}, {parsed_args.n_hi}")
    if parsed_args.mode == "rainbow" and not parsed_args.Q:
        raise DomainError("rainbow search needs at least one --Q")
    if parsed_args.mode == "ramsey":
        if parsed_args.Q:
            _logger.warning("[Search] --Q is ignored in ramsey mode")
        if parsed_args.k is not None:
            if len(parsed_args.P) != 1:
                raise DomainError("--k repeats a single --P")
            parsed_args.P = parsed_args.P * parsed_args.k


def process_sat_export_args(parsed_args):
    if parsed_args.command != "sat-export":
        return
    k = len(parsed_args.P) if parsed_args.k is None else parsed_args.k
    if len(parsed_args.P) == 1:
        parsed_args.P = parsed_args.P * k
    if len(parsed_args.P) != k:
        raise DomainError(f"{len(parsed_args.P)} patterns given for {k} colors")
    parsed_args.k = k
    if parsed_args.sidecar is None:
        parsed_args.sidecar = f"{parsed_args.out}.json"


def parse_cli_args(args=None, ignore_unknown=False):
    """parser for the boolean-ramsey command"""
    arg_populate_funcs = [command_args]
    arg_check_funcs = [process_common_args, process_search_args, process_sat_export_args]

    return parse_various_args(args, arg_populate_funcs, arg_check_funcs, ignore_unknown)


def parse_various_args(args, arg_populate_funcs, arg_check_funcs, ignore_unknown):
    """generic arg parsing function"""
    parser = ArgumentParser(prog="boolean-ramsey")

    for func in arg_populate_funcs:
        func(parser)

    if ignore_unknown:
        parsed_args, unknown_args = parser.parse_known_args(args=args)
    else:
        parsed_args = parser.parse_args(args=args)
        unknown_args = []

    for func in arg_check_funcs:
        func(parsed_args)

    log_args(parsed_args)
    return parsed_args, unknown_args


def log_args(args):
    for k in args.__dict__:
        _logger.debug("- {} : {}".format(k, args.__dict__[k]))
