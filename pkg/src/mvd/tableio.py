"""Reading and writing decision tables.

Two interchangeable encodings:

* the line-oriented text format::

      # optional comment lines
      k 2
      attrs f2 f4 f3
      weights 1 1 1          # optional, one positive integer per column
      row 1 1 1 : 1
      row 0 1 1 : 0 1 2

* a structured JSON document with the same fields (detected by a leading
  ``{``), emitted under ``--format structured``.

Parsing then serializing reproduces a table exactly: column order, row
order, and decision sets all survive the round trip.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import FormatError, TableError
from .table import DecisionTable

TABLE_SCHEMA = "mvd-table/1"


@dataclass(frozen=True)
class TableDocument:
    table: DecisionTable
    weights: dict[str, int] | None


def _parse_text(text: str) -> TableDocument:
    k: int | None = None
    attrs: tuple[str, ...] | None = None
    weights: dict[str, int] | None = None
    rows: list[tuple[int, ...]] = []
    decisions: list[frozenset[int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "k":
            if len(parts) != 2:
                raise FormatError(f"line {lineno}: 'k' takes exactly one integer")
            try:
                k = int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad alphabet size {parts[1]!r}") from None
        elif tag == "attrs":
            names = parts[1:]
            if len(set(names)) != len(names):
                raise FormatError(f"line {lineno}: duplicate attribute name")
            attrs = tuple(names)
        elif tag == "weights":
            if attrs is None:
                raise FormatError(f"line {lineno}: 'weights' before 'attrs'")
            values = parts[1:]
            if len(values) != len(attrs):
                raise FormatError(
                    f"line {lineno}: {len(values)} weights for {len(attrs)} attributes"
                )
            try:
                weights = {a: int(v) for a, v in zip(attrs, values)}
            except ValueError:
                raise FormatError(f"line {lineno}: weights must be integers") from None
            for a, w in weights.items():
                if w < 1:
                    raise FormatError(f"line {lineno}: weight of {a} must be at least 1")
        elif tag == "row":
            if k is None or attrs is None:
                raise FormatError(f"line {lineno}: 'row' before 'k'/'attrs'")
            body = parts[1:]
            if ":" not in body:
                raise FormatError(f"line {lineno}: row needs ':' before its decisions")
            sep = body.index(":")
            value_part, decision_part = body[:sep], body[sep + 1 :]
            if len(value_part) != len(attrs):
                raise FormatError(
                    f"line {lineno}: {len(value_part)} values for {len(attrs)} columns"
                )
            if not decision_part:
                raise FormatError(f"line {lineno}: empty decision set")
            try:
                values = tuple(int(v) for v in value_part)
                decision = frozenset(int(d) for d in decision_part)
            except ValueError:
                raise FormatError(f"line {lineno}: values and decisions must be integers") from None
            rows.append(values)
            decisions.append(decision)
        else:
            raise FormatError(f"line {lineno}: unknown directive {tag!r}")

    if k is None:
        raise FormatError("missing 'k' line")
    if attrs is None:
        raise FormatError("missing 'attrs' line")
    try:
        table = DecisionTable(k=k, attrs=attrs, rows=tuple(rows), decisions=tuple(decisions))
    except TableError as exc:
        raise FormatError(str(exc)) from None
    return TableDocument(table, weights)


def _parse_structured(text: str) -> TableDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"structured table is not valid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise FormatError("structured table must be a JSON object")
    for key in ("k", "attrs", "rows"):
        if key not in obj:
            raise FormatError(f"structured table misses the {key!r} field")
    rows = []
    decisions = []
    for i, entry in enumerate(obj["rows"]):
        if not isinstance(entry, dict) or "values" not in entry or "decisions" not in entry:
            raise FormatError(f"row {i}: needs 'values' and 'decisions'")
        rows.append(tuple(int(v) for v in entry["values"]))
        if not entry["decisions"]:
            raise FormatError(f"row {i}: empty decision set")
        decisions.append(frozenset(int(d) for d in entry["decisions"]))
    weights = obj.get("weights")
    if weights is not None:
        weights = {str(a): int(w) for a, w in weights.items()}
        for a, w in weights.items():
            if w < 1:
                raise FormatError(f"weight of {a} must be at least 1")
    try:
        table = DecisionTable(
            k=int(obj["k"]),
            attrs=tuple(str(a) for a in obj["attrs"]),
            rows=tuple(rows),
            decisions=tuple(decisions),
        )
    except TableError as exc:
        raise FormatError(str(exc)) from None
    return TableDocument(table, weights)


def read_document(text: str) -> TableDocument:
    """Parse either encoding; the structured one starts with '{'."""
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_text(text)


def parse_table(text: str) -> DecisionTable:
    return read_document(text).table


def serialize_table(
    table: DecisionTable, weights: dict[str, int] | None = None, fmt: str = "text"
) -> str:
    if fmt == "structured":
        obj = {
            "schema": TABLE_SCHEMA,
            "k": table.k,
            "attrs": list(table.attrs),
            "weights": dict(sorted(weights.items())) if weights else None,
            "rows": [
                {"values": list(row), "decisions": sorted(dec)}
                for row, dec in zip(table.rows, table.decisions)
            ],
        }
        return json.dumps(obj, indent=2) + "\n"
    if fmt != "text":
        raise FormatError(f"unknown table format {fmt!r}")
    lines = [f"k {table.k}", "attrs " + " ".join(table.attrs) if table.attrs else "attrs"]
    if weights:
        lines.append("weights " + " ".join(str(weights[a]) for a in table.attrs))
    for row, dec in zip(table.rows, table.decisions):
        lines.append("row " + " ".join(str(v) for v in row) + " : " + " ".join(str(d) for d in sorted(dec)))
    return "\n".join(lines) + "\n"


def parse_weights_sidecar(text: str) -> dict[str, int]:
    """Weights from a sidecar file with one 'name value' pair per line."""
    weights: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'name value'")
        try:
            weights[parts[0]] = int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: weight must be an integer") from None
        if weights[parts[0]] < 1:
            raise FormatError(f"line {lineno}: weight must be at least 1")
    return weights


def load_document(path: str) -> TableDocument:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from None
    return read_document(text)


def save_table(
    path: str, table: DecisionTable, weights: dict[str, int] | None = None, fmt: str = "text"
) -> None:
    text = serialize_table(table, weights, fmt)
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc}") from None
