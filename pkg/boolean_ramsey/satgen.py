"""
CNF encodings of fixed palette avoidance: the formula is satisfiable
exactly when some k-coloring of B_n has no monochromatic P_i in color i.
"""

from __future__ import annotations

import dataclasses
import io
import itertools
import logging
from typing import Dict, List, Sequence, Tuple

import regex
from pysat.formula import CNF, IDPool

from boolean_ramsey import lattice
from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.colorings.verify import verify_fixed
from boolean_ramsey.constants import Config
from boolean_ramsey.embedding import find_all_copies
from boolean_ramsey.posets import Poset, make_all
from boolean_ramsey.shared import DecodeError, DomainError, SatSidecarSchema, SubsetMask, VerificationError

_logger = logging.getLogger(__name__)

LITERAL = regex.compile(r"-?\d+")


@dataclasses.dataclass
class CnfInstance:
    n: int
    k: int
    patterns: Tuple[Poset, ...]
    formula: CNF
    varmap: Dict[Tuple[SubsetMask, int], int]

    @property
    def num_vars(self) -> int:
        return self.formula.nv

    @property
    def num_clauses(self) -> int:
        return len(self.formula.clauses)

    def to_dimacs(self) -> str:
        buffer = io.StringIO()
        self.formula.to_fp(buffer)
        return buffer.getvalue()

    def sidecar(self) -> SatSidecarSchema:
        return SatSidecarSchema(
            n=self.n,
            k=self.k,
            patterns=[p.spec for p in self.patterns],
            varmap=[(mask, color, var) for (mask, color), var in self.varmap.items()],
        )


def encode(n: int, k: int, patterns: Sequence[Poset], first_use: bool = False) -> CnfInstance:
    """
    Variables x(S, c) for every subset S and color c, one color per subset,
    and a blocking clause for every copy of P_c in B_n and color c. With
    identical patterns the empty set is pinned to color 0; `first_use`
    additionally orders colors by first use along the canonical order.
    """
    if n > Config.satgen.max_ground_size:
        raise DomainError(f"satgen supports ground sets up to {Config.satgen.max_ground_size}, got {n}")
    if not 1 <= k <= Config.satgen.max_colors:
        raise DomainError(f"satgen supports 1 to {Config.satgen.max_colors} colors, got {k}")
    if len(patterns) != k:
        raise DomainError(f"{len(patterns)} patterns given for {k} colors")

    order = lattice.canonical_order(n)
    pool = IDPool()
    varmap = {(S, c): pool.id((S, c)) for S in order for c in range(k)}
    formula = CNF()

    for S in order:
        formula.append([varmap[S, c] for c in range(k)])
        for c, d in itertools.combinations(range(k), 2):
            formula.append([-varmap[S, c], -varmap[S, d]])

    copies: Dict[Poset, List[Tuple[SubsetMask, ...]]] = {}
    for c, pattern in enumerate(patterns):
        if pattern not in copies:
            copies[pattern] = find_all_copies(order, pattern)
        for copy in copies[pattern]:
            formula.append([-varmap[S, c] for S in copy])

    identical = all(p == patterns[0] for p in patterns)
    if identical:
        formula.append([varmap[order[0], 0]])
        if first_use:
            for p, S in enumerate(order):
                for c in range(1, k):
                    formula.append([-varmap[S, c]] + [varmap[T, c - 1] for T in order[:p]])

    _logger.info(
        f"[Satgen] B{n} with {k} colors: {formula.nv} variables, {len(formula.clauses)} clauses"
    )
    return CnfInstance(n=n, k=k, patterns=tuple(patterns), formula=formula, varmap=varmap)


def parse_model(text: str) -> List[int]:
    """
    Literals of a solver model: `v` lines of competition output or bare
    lines of integers. Comment and status lines are skipped; a 0 ends the
    model.
    """
    literals: List[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line[0] in "cs":
            continue
        if line[0] == "v":
            line = line[1:]
        for token in LITERAL.findall(line):
            literal = int(token)
            if literal == 0:
                return literals
            literals.append(literal)
    return literals


def decode(model: Sequence[int], sidecar: SatSidecarSchema) -> Coloring:
    """
    The coloring a model describes, verified against the encoded patterns.
    A violation means the encoding is wrong and raises VerificationError.
    """
    truth = {abs(literal): literal > 0 for literal in model if literal}

    chosen: Dict[SubsetMask, List[int]] = {}
    for mask, color, var in sidecar.varmap:
        if var not in truth:
            raise DecodeError(f"model does not assign variable {var}")
        if truth[var]:
            chosen.setdefault(mask, []).append(color)

    labels = []
    for S in lattice.canonical_order(sidecar.n):
        colors = chosen.get(S, [])
        if len(colors) != 1:
            raise DecodeError(
                f"subset {lattice.format_mask(S)} has {len(colors)} colors in the model"
            )
        labels.append(colors[0])

    coloring = Coloring.from_labels(sidecar.n, labels, keep_palette=True)
    report = verify_fixed(coloring, make_all(sidecar.patterns))
    if not report.avoided:
        index, found = report.mono_witness
        raise VerificationError(
            f"[Satgen] decoded coloring has a monochromatic {found.pattern.spec} in color {index}"
        )
    return coloring


def decode_instance(model: Sequence[int], instance: CnfInstance) -> Coloring:
    return decode(model, instance.sidecar())
