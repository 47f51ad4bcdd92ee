from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.colorings.base_coloring import BaseColoring
from boolean_ramsey.colorings.factory import ColoringFactory
from boolean_ramsey.colorings.constructions import (
    block_levels,
    ceil_size,
    constant,
    halves,
    level_block,
    near_constant,
    pairs_of_levels,
    rank,
    scd_block,
    trace,
)
from boolean_ramsey.colorings.chains import incomparable_case, incomparable_chains
from boolean_ramsey.colorings.verify import AvoidanceReport, verify, verify_fixed
from boolean_ramsey.colorings.samplers import (
    random_antichain_classes,
    random_chain_classes,
    random_coloring,
    random_no_mono_chain,
)
