import dataclasses
import enum
import os
from pathlib import Path
from typing import Optional

import pydantic
import pydantic.dataclasses
from pydantic.types import NonNegativeInt, PositiveInt

from boolean_ramsey.utils.general import load_config


class Constants:

    PACKAGE_ROOT = Path(__file__).resolve().parent
    DEFAULT_CONFIG = PACKAGE_ROOT.parent / "configs" / "config.yaml"
    KNOWN_VALUES = PACKAGE_ROOT / "bounds" / "data" / "known_values.json"
    CONFIG_ENV = "BOOLEAN_RAMSEY_CONFIG"

    SUBSET_ORDER = "graded-colex"

    class Outcome(enum.Enum):
        AVOIDABLE = "avoidable"
        UNAVOIDABLE = "unavoidable"
        BUDGET_EXCEEDED = "budget_exceeded"

    class Extraction(enum.Enum):
        RAINBOW = "rainbow"
        MONOCHROMATIC = "monochromatic"
        PRECONDITION_UNMET = "precondition_unmet"

    class Copy(enum.Enum):
        PLAIN = "plain"
        MONOCHROMATIC = "monochromatic"
        RAINBOW = "rainbow"

    class Mode(enum.Enum):
        FIXED_PALETTE = "fixed"
        RAINBOW = "rainbow"

    class Table:
        @enum.unique
        class Method(enum.Enum):
            FULL_SEARCH = "full-search"
            LOWER_CONSTRUCTION_UPPER_SEARCH = "lower-construction+upper-search"
            CONSTRUCTION_ONLY = "construction-only"
            BOUNDS_ONLY = "bounds-only"

        @enum.unique
        class Status(enum.Enum):
            CONFIRMED = "confirmed"
            LOWER_CONFIRMED = "lower-confirmed"
            SKIPPED = "skipped-with-reason"

    class ExitCode(enum.IntEnum):
        SUCCESS = 0
        VIOLATION = 2
        BUDGET_EXCEEDED = 3
        INPUT_ERROR = 4

    class OutputFormat(enum.Enum):
        JSON = "json"
        COMPACT = "compact"  # one line per artifact

    @enum.unique
    class Colorings(enum.Enum):
        CONSTANT = "constant"
        RANK = "rank"
        LEVEL_BLOCK = "level_block"
        SCD_BLOCK = "scd_block"
        CEIL_SIZE = "ceil_size"
        NEAR_CONSTANT = "near_constant"
        TRACE = "trace"
        HALVES = "halves"
        PAIRS_OF_LEVELS = "pairs_of_levels"
        BLOCK_LEVELS = "block_levels"

    @enum.unique
    class Extractors(enum.Enum):
        RAINBOW_BOOLEAN = "rainbow_boolean"
        RAINBOW_CHAIN_A2 = "rainbow_chain_a2"
        RAINBOW_CHAIN_AM = "rainbow_chain_am"
        RAINBOW_ANTICHAIN = "rainbow_antichain"
        RAINBOW_BOOLEAN_BM = "rainbow_boolean_bm"


@pydantic.dataclasses.dataclass
class LatticeConfig:
    max_ground_size: PositiveInt = 20


@pydantic.dataclasses.dataclass
class PosetsConfig:
    max_size: PositiveInt = 32
    two_dimension_max_n: NonNegativeInt = 10


@pydantic.dataclasses.dataclass
class SearchConfig:
    budget: PositiveInt = 100_000_000
    jobs: PositiveInt = 1
    split_depth: NonNegativeInt = 4
    rainbow_max_n: NonNegativeInt = 5
    fixed_max_n: NonNegativeInt = 6
    log_every: PositiveInt = 1_000_000


@pydantic.dataclasses.dataclass
class SatgenConfig:
    max_ground_size: PositiveInt = 8
    max_colors: PositiveInt = 4
    max_copies: PositiveInt = 10_000_000


@pydantic.dataclasses.dataclass
class TableConfig:
    max_param: PositiveInt = 4
    construction_max_n: NonNegativeInt = 12
    budget: PositiveInt = 1_000_000
    trials: PositiveInt = 100
    evidence_max_n: NonNegativeInt = 7
    seed: NonNegativeInt = 0


@pydantic.dataclasses.dataclass
class LoggingConfig:
    level: str = "INFO"


@pydantic.dataclasses.dataclass
class RamseyConfig:
    lattice: LatticeConfig = dataclasses.field(default_factory=LatticeConfig)
    posets: PosetsConfig = dataclasses.field(default_factory=PosetsConfig)
    search: SearchConfig = dataclasses.field(default_factory=SearchConfig)
    satgen: SatgenConfig = dataclasses.field(default_factory=SatgenConfig)
    table: TableConfig = dataclasses.field(default_factory=TableConfig)
    logging: LoggingConfig = dataclasses.field(default_factory=LoggingConfig)

    @classmethod
    def from_file(cls, config_path: Optional[str]) -> "RamseyConfig":
        if config_path is None or not os.path.isfile(config_path):
            return cls()
        return pydantic.TypeAdapter(cls).validate_python(load_config(config_path))


def _default_config_path() -> Optional[str]:
    return os.environ.get(Constants.CONFIG_ENV, str(Constants.DEFAULT_CONFIG))


Config = RamseyConfig.from_file(_default_config_path())


def reload_config(config_path: Optional[str] = None) -> RamseyConfig:
    """
    Replace the sections of the module level `Config` in place, so modules
    that imported it keep seeing current values.
    """
    fresh = RamseyConfig.from_file(config_path or _default_config_path())
    for field in dataclasses.fields(RamseyConfig):
        setattr(Config, field.name, getattr(fresh, field.name))
    return Config
