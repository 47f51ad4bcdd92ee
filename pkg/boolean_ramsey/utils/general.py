import json
import logging
import os
from typing import Any, Optional

import yaml
from filelock import FileLock


def load_config(config_path: str) -> dict:
    """
    Load config parameters from a yaml file.

    Args:
        config_path (str): Path to the yaml file.

    Returns:
        dict: The parsed configuration, empty when the file is empty.
    """
    with open(config_path, "r", encoding="utf-8") as target:
        config = yaml.load(target, Loader=yaml.FullLoader)

    return config or dict()


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as target:
        return json.load(target)


def write_json(path: str, payload: Any) -> str:
    """
    Write a json artifact, guarded by a sibling lock file so parallel runs
    writing into the same output directory do not interleave.
    """
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)

    with FileLock(f"{path}.lock"):
        with open(path, "w", encoding="utf-8") as outfile:
            json.dump(payload, outfile, indent=2)
            outfile.write("\n")

    return path


def write_text(path: str, text: str) -> str:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)

    with FileLock(f"{path}.lock"):
        with open(path, "w", encoding="utf-8") as outfile:
            outfile.write(text)

    return path


def configure_logging(level: str = "INFO", log_file: Optional[str] = None) -> logging.Logger:
    """
    Attach handlers to the package logger. Only the command line entry point
    calls this; library modules just emit records.
    """
    logger = logging.getLogger("boolean_ramsey")
    logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    logger.addHandler(stream_handler)

    if log_file is not None:
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(logging.Formatter("%(created)f: %(message)s"))
        logger.addHandler(file_handler)

    return logger
