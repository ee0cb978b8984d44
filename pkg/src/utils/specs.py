"""
Reading and shape-checking of JSON ring-spec / module-spec documents.

Errors carry JSON-pointer style paths so that a malformed document points at the
offending field, e.g. ``/ring/factors/1/n``.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List

from src.utils.errors import ParseError

logger = logging.getLogger(__name__)

RING_KINDS = ("Zn", "product", "table", "upper_triangular")
MODULE_KINDS = ("regular", "table", "matrices", "direct_sum")


def load_spec_file(path: str) -> Dict[str, Any]:
    """Load a spec document from disk.

    Args:
        path: Path to a JSON file

    Returns:
        The parsed document (a JSON object)
    """
    spec_path = Path(path)
    try:
        text = spec_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"cannot read {spec_path}: {e.strerror}")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{spec_path}: line {e.lineno} column {e.colno}: {e.msg}")
    if not isinstance(doc, dict):
        raise ParseError(f"{spec_path}: top level must be an object", pointer="/")
    logger.debug(f"Loaded spec document {spec_path}")
    return doc


def is_module_spec(doc: Dict[str, Any]) -> bool:
    """Module specs always reference their ring; ring specs never do."""
    return "ring" in doc or doc.get("kind") in ("regular", "direct_sum", "matrices")


def child(pointer: str, key: Any) -> str:
    return f"{pointer}/{key}"


def require(doc: Dict[str, Any], key: str, pointer: str) -> Any:
    if not isinstance(doc, dict):
        raise ParseError("expected an object", pointer=pointer or "/")
    if key not in doc:
        raise ParseError(f"missing required field '{key}'", pointer=pointer or "/")
    return doc[key]


def require_int(doc: Dict[str, Any], key: str, pointer: str, minimum: int = None) -> int:
    value = require(doc, key, pointer)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"'{key}' must be an integer", pointer=child(pointer, key))
    if minimum is not None and value < minimum:
        raise ParseError(f"'{key}' must be at least {minimum}, got {value}", pointer=child(pointer, key))
    return value


def int_list(value: Any, pointer: str, minimum: int = None) -> List[int]:
    if not isinstance(value, list):
        raise ParseError("expected a list of integers", pointer=pointer)
    for i, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, int):
            raise ParseError("expected an integer", pointer=child(pointer, i))
        if minimum is not None and x < minimum:
            raise ParseError(f"expected an integer >= {minimum}, got {x}", pointer=child(pointer, i))
    return list(value)


def int_table(value: Any, rows: int, cols: int, pointer: str, bound: int) -> List[List[int]]:
    """A rows x cols table of indices in range(bound)."""
    if not isinstance(value, list) or len(value) != rows:
        raise ParseError(f"expected {rows} rows", pointer=pointer)
    for i, row in enumerate(value):
        row_pointer = child(pointer, i)
        if not isinstance(row, list) or len(row) != cols:
            raise ParseError(f"expected {cols} entries", pointer=row_pointer)
        for j, x in enumerate(row):
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < bound:
                raise ParseError(f"entry must be an element index below {bound}", pointer=child(row_pointer, j))
    return value
