"""JSON loading/serialization and polars table rendering."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import polars as pl

from .chain_complex import ChainBasisElement
from .errors import InputError
from .exactlin import HomologyGroup
from .products import Cochain
from .shelf import CoefficientSystem, FiniteShelf, XSetAction, classify, validate_xset

LOGGER = logging.getLogger(__name__)

PathLike = Union[Path, str]


class DataSchema:
    """Column schemas of the tables printed by the CLI."""

    @staticmethod
    def homology_schema() -> Dict[str, pl.DataType]:
        return {
            "degree": pl.Int64,
            "free_rank": pl.Int64,
            "torsion": pl.Utf8,
            "group": pl.Utf8,
        }

    @staticmethod
    def decomposition_schema() -> Dict[str, pl.DataType]:
        return {
            "degree": pl.Int64,
            "rack": pl.Utf8,
            "quandle": pl.Utf8,
            "degenerate": pl.Utf8,
            "late": pl.Utf8,
            "rack_split": pl.Boolean,
            "late_split": pl.Boolean,
        }

    @staticmethod
    def suite_schema() -> Dict[str, pl.DataType]:
        return {
            "suite": pl.Utf8,
            "passed": pl.Boolean,
            "checked": pl.Int64,
        }


# ========== Loading ==========


def load_json(path: PathLike) -> Any:
    """Read a JSON document.

    Raises:
        InputError: If the file is missing or not valid JSON.
    """
    path = Path(path)
    try:
        with path.open(encoding="utf-8") as handle:
            return json.load(handle)
    except FileNotFoundError as e:
        raise InputError(f"File not found: {path}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"Malformed JSON in {path}: {e.msg} (line {e.lineno})") from e


def _table_field(document: Any, key: str, path: PathLike) -> List[List[int]]:
    if isinstance(document, dict):
        if key not in document:
            raise InputError(f"{path}: missing '{key}'")
        document = document[key]
    if not isinstance(document, list) or not all(isinstance(row, list) for row in document):
        raise InputError(f"{path}: '{key}' must be a list of rows")
    return document


def load_shelf(path: PathLike) -> FiniteShelf:
    """Load ``{"size": n, "table": [[...], ...]}`` (or a bare table) and classify it.

    Non-self-distributive tables are returned with ``is_shelf`` False so that
    callers can report the witness.
    """
    document = load_json(path)
    table = _table_field(document, "table", path)
    if isinstance(document, dict) and "size" in document and document["size"] != len(table):
        raise InputError(f"{path}: size {document['size']} does not match {len(table)} rows")
    shelf = classify(table)
    LOGGER.info("Loaded %d-element table from %s", shelf.size, path)
    return shelf


def load_xset(path: PathLike, shelf: FiniteShelf) -> XSetAction:
    """Load ``{"size": m, "action": [[...], ...]}`` and check the X-set axiom."""
    document = load_json(path)
    return validate_xset(shelf, _table_field(document, "action", path))


def parse_key(key: str, with_coeff: bool) -> ChainBasisElement:
    """Parse ``"t1,t2"`` (or ``"r|t1,t2"`` for non-trivial coefficients)."""
    coeff_index = 0
    body = key
    if with_coeff:
        if "|" not in key:
            raise InputError(f"cochain key {key!r} needs a coefficient prefix 'r|'")
        head, body = key.split("|", 1)
        coeff_index = _parse_int(head, key)
    word = tuple(_parse_int(part, key) for part in body.split(",")) if body else ()
    return ChainBasisElement(coeff_index, word)


def _parse_int(text: str, key: str) -> int:
    try:
        return int(text.strip())
    except ValueError as e:
        raise InputError(f"cochain key {key!r} is not a list of integers") from e


def cochain_from_json(document: Any, shelf: FiniteShelf, coeff: CoefficientSystem) -> Cochain:
    """Build a cochain from ``{"degree": n, "values": {"t1,...": v}}``; missing keys are 0."""
    if not isinstance(document, dict) or "degree" not in document or "values" not in document:
        raise InputError("a cochain document needs 'degree' and 'values'")
    degree = document["degree"]
    if not isinstance(degree, int) or degree < 0:
        raise InputError(f"cochain degree must be a non-negative integer, got {degree!r}")
    table = {}
    for key, value in document["values"].items():
        b = parse_key(key, coeff.size > 1)
        if b.degree != degree:
            raise InputError(f"cochain key {key!r} does not have degree {degree}")
        if not 0 <= b.coeff_index < coeff.size or any(not 0 <= x < shelf.size for x in b.word):
            raise InputError(f"cochain key {key!r} is out of range")
        if not isinstance(value, int):
            raise InputError(f"cochain value at {key!r} must be an integer")
        table[b] = value
    return Cochain.from_table(shelf, coeff, degree, table)


def load_cochain(path: PathLike, shelf: FiniteShelf, coeff: CoefficientSystem) -> Cochain:
    return cochain_from_json(load_json(path), shelf, coeff)


# ========== Serialization ==========


def to_jsonable(value: Any) -> Any:
    """Turn library objects (anything with ``to_json``) and containers into plain JSON data."""
    if hasattr(value, "to_json"):
        return to_jsonable(value.to_json())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (str, bool)) or value is None:
        return value
    return int(value)


def dumps(value: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent."""
    return json.dumps(to_jsonable(value), sort_keys=True, indent=2, ensure_ascii=False)


# ========== Tables ==========


def homology_frame(groups: Sequence[HomologyGroup]) -> pl.DataFrame:
    rows = [
        {
            "degree": n,
            "free_rank": g.free_rank,
            "torsion": ",".join(str(t) for t in g.torsion),
            "group": str(g),
        }
        for n, g in enumerate(groups)
    ]
    return pl.DataFrame(rows, schema=DataSchema.homology_schema())


def decomposition_frame(rows: Sequence[Dict[str, Any]]) -> pl.DataFrame:
    schema = DataSchema.decomposition_schema()
    return pl.DataFrame([{k: row[k] for k in schema} for row in rows], schema=schema)


def suite_frame(reports: Sequence[Any]) -> pl.DataFrame:
    rows = [{"suite": r.name, "passed": r.passed, "checked": r.checked} for r in reports]
    return pl.DataFrame(rows, schema=DataSchema.suite_schema())


def render_table(frame: pl.DataFrame, title: Optional[str] = None) -> str:
    """Plain-text rendering of a frame, one line per row."""
    with pl.Config(tbl_rows=-1, tbl_cols=-1, tbl_hide_dataframe_shape=True, tbl_formatting="ASCII_MARKDOWN"):
        body = str(frame)
    return f"{title}\n{body}" if title else body
