"""
Report rendering and input-file loading
"""
import logging
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict

import numpy as np
import orjson
import yaml

from src.core.exceptions import SchemaError

logger = logging.getLogger(__name__)

JSON_OPTIONS = orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_SERIALIZE_NUMPY


def to_jsonable(value: Any) -> Any:
    """Convert report values (numpy, Fraction, Enum, dataclass reports) to plain JSON types"""
    if hasattr(value, "to_dict"):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        number = float(value)
        # normalize -0.0 so identical inputs give identical bytes
        return 0.0 if number == 0.0 else number
    return value


def render_json(report: Any) -> bytes:
    """Deterministic JSON bytes (sorted keys, two-space indent, trailing newline)"""
    return orjson.dumps(to_jsonable(report), option=JSON_OPTIONS) + b"\n"


def render_text(report: Any) -> str:
    """Human-readable rendering of the same report object"""
    return yaml.safe_dump(to_jsonable(report), sort_keys=True, default_flow_style=False)


def load_document(path: str) -> Dict[str, Any]:
    """
    Load a JSON or YAML input document.

    Args:
        path: File path; .yaml/.yml are read as YAML, anything else as JSON

    Returns:
        The parsed mapping
    """
    file_path = Path(path)
    try:
        text = file_path.read_text(encoding="utf-8")
    except OSError as exc:
        raise SchemaError(f"Cannot read input file {path}: {exc}") from exc
    if file_path.suffix.lower() in (".yaml", ".yml"):
        try:
            document = yaml.safe_load(text)
        except yaml.YAMLError as exc:
            raise SchemaError(f"Malformed YAML in {path}: {exc}") from exc
    else:
        document = parse_json(text, source=path)
    if not isinstance(document, dict):
        raise SchemaError(f"Input {path} must contain a JSON/YAML object")
    return document


def parse_json(text: str, source: str = "inline input") -> Any:
    """Parse JSON text, mapping decoder errors to SchemaError"""
    try:
        return orjson.loads(text)
    except orjson.JSONDecodeError as exc:
        raise SchemaError(f"Malformed JSON in {source}: {exc}") from exc


def schema_text(schema: Dict[str, Any]) -> str:
    """Pretty JSON schema for usage errors"""
    return orjson.dumps(schema, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2).decode("utf-8")
