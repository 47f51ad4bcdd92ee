import json
import logging
import sys
from typing import Optional, Sequence

import pydantic

from boolean_ramsey.cli import artifacts
from boolean_ramsey.cli.argsparser import parse_cli_args
from boolean_ramsey.cli.commands import COMMANDS
from boolean_ramsey.constants import Config, Constants, reload_config
from boolean_ramsey.shared import BudgetExceededError, VerificationError
from boolean_ramsey.utils.general import configure_logging

_logger = logging.getLogger(__name__)

ExitCode = Constants.ExitCode

INPUT_ERRORS = (ValueError, TypeError, pydantic.ValidationError, FileNotFoundError, json.JSONDecodeError)


def main(args: Optional[Sequence[str]] = None) -> int:
    try:
        parsed_args, _ = parse_cli_args(args)
    except INPUT_ERRORS as e:
        configure_logging(Config.logging.level)
        _logger.error(f"[Cli] {e}")
        return ExitCode.INPUT_ERROR

    try:
        if parsed_args.config is not None:
            reload_config(parsed_args.config)
        configure_logging(parsed_args.log_level or Config.logging.level, parsed_args.log)
        artifacts.use_format(parsed_args.format)
        return int(COMMANDS[parsed_args.command](parsed_args))
    except VerificationError as e:
        _logger.error(f"[Cli] verification failed: {e}")
        return ExitCode.VIOLATION
    except BudgetExceededError as e:
        _logger.error(f"[Cli] budget exceeded: {e}")
        return ExitCode.BUDGET_EXCEEDED
    except INPUT_ERRORS as e:
        _logger.error(f"[Cli] {e}")
        return ExitCode.INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
