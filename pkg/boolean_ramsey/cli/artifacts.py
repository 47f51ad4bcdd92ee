"""
Reading and writing of the JSON artifacts the commands exchange. Every
payload passes through its pydantic schema in both directions.
"""

import json
import os
import sys
from typing import Any, List, Optional

from boolean_ramsey.colorings.coloring import Coloring
from boolean_ramsey.constants import Constants
from boolean_ramsey.embedding import Embedding
from boolean_ramsey.satgen import parse_model
from boolean_ramsey.shared import (
    ColoringSchema,
    EmbeddingSchema,
    SatSidecarSchema,
    dump,
    load,
)
from boolean_ramsey.utils.general import load_json, write_json, write_text


def read_coloring(path: str) -> Coloring:
    """
    A coloring file, or any artifact carrying one under `witness` (search
    outcomes and results).
    """
    payload = load_json(path)
    if isinstance(payload, dict) and "witness" in payload:
        if payload["witness"] is None:
            raise ValueError(f"{path} carries no witness coloring")
        payload = payload["witness"]
    return Coloring.from_schema(load(ColoringSchema, payload))


def read_embedding(path: str) -> Embedding:
    """An embedding file or an extraction outcome with its embedding."""
    payload = load_json(path)
    if isinstance(payload, dict) and "algorithm" in payload:
        if payload.get("embedding") is None:
            raise ValueError(f"{path} carries no embedding")
        kind = Constants.Copy(
            Constants.Copy.RAINBOW.value
            if payload.get("kind") == Constants.Extraction.RAINBOW.value
            else Constants.Copy.MONOCHROMATIC.value
        )
        return Embedding.from_schema(load(EmbeddingSchema, payload["embedding"]), kind)
    return Embedding.from_schema(load(EmbeddingSchema, payload))


def read_sidecar(path: str) -> SatSidecarSchema:
    return load(SatSidecarSchema, load_json(path))


def read_model(path: str) -> List[int]:
    with open(path, "r", encoding="utf-8") as target:
        return parse_model(target.read())


def _payload(obj: Any) -> Any:
    if obj is None or isinstance(obj, (bool, int, str, dict)):
        return obj
    if isinstance(obj, list):
        return [_payload(item) for item in obj]
    return dump(obj)


_stdout_format = Constants.OutputFormat.JSON


def use_format(name: str):
    global _stdout_format
    _stdout_format = Constants.OutputFormat(name)


def emit(schema: Any, out: Optional[str] = None) -> Any:
    """Print the artifact on stdout and write it to `out` when given."""
    payload = _payload(schema)
    if out is not None:
        write_json(out, payload)
    if _stdout_format == Constants.OutputFormat.COMPACT:
        json.dump(payload, sys.stdout, separators=(",", ":"))
    else:
        json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return payload


def write_schema(path: str, schema: Any) -> str:
    return write_json(path, _payload(schema))


def write_artifact(out_dir: str, name: str, schema: Any) -> str:
    return write_schema(os.path.join(out_dir, name), schema)


def write_dimacs(path: str, text: str) -> str:
    return write_text(path, text)
