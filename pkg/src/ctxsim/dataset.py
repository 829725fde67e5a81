"""Reading case tables from CSV or JSON.

CSV layout: a header row ``name,<attr1>,<attr2>,...`` followed by one row per
case with cells strictly ``0`` or ``1``. JSON layout::

    {"attributes": ["north", "central"],
     "cases": [{"name": "Austria", "values": [0, 1]}, ...]}

Positions in error messages are 1-based; CSV rows count the header as row 1.
"""
from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass
from typing import IO, Union

from .context import AttributeSchema, CaseVector, ContextModel, build_context

__all__ = ["Dataset", "IngestError", "ingest", "parse_csv", "parse_json"]

Source = Union[str, "os.PathLike[str]", IO[str]]


class IngestError(ValueError):
    """Malformed input table.

    ``kind`` is one of ``empty``, ``bad-header``, ``duplicate-attribute``,
    ``ragged``, ``non-boolean``, ``duplicate-case``, ``no-cases``,
    ``bad-json``.
    """

    def __init__(self, kind: str, message: str, row: int | None = None, column: int | None = None):
        self.kind = kind
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}")


@dataclass(frozen=True)
class Dataset:
    schema: AttributeSchema
    cases: tuple[CaseVector, ...]

    def __post_init__(self):
        object.__setattr__(self, "cases", tuple(self.cases))
        seen = set()
        for i, c in enumerate(self.cases):
            if c.name in seen:
                raise IngestError("duplicate-case", f"duplicate case name {c.name!r}", row=i + 1)
            seen.add(c.name)
            if len(c) != len(self.schema):
                raise IngestError(
                    "ragged", f"case {c.name!r} has {len(c)} values, expected {len(self.schema)}",
                    row=i + 1,
                )

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.cases)

    def __len__(self) -> int:
        return len(self.cases)

    def __getitem__(self, name: str) -> CaseVector:
        for c in self.cases:
            if c.name == name:
                return c
        raise KeyError(f"no case named {name!r}")

    def context(self) -> ContextModel:
        return build_context(self.schema, self.cases)


def _cell(raw: str, row: int, column: int, attr: str) -> int:
    s = raw.strip()
    if s == "0":
        return 0
    if s == "1":
        return 1
    raise IngestError(
        "non-boolean", f"cell {raw!r} for attribute {attr!r} is not 0 or 1", row=row, column=column
    )


def _header(row: list[str]) -> AttributeSchema:
    cells = [c.strip() for c in row]
    if not cells or cells[0] != "name":
        raise IngestError("bad-header", "first header cell must be 'name'", row=1, column=1)
    attrs = cells[1:]
    if not attrs:
        raise IngestError("bad-header", "no attribute columns", row=1)
    seen = {}
    for j, a in enumerate(attrs, start=2):
        if not a:
            raise IngestError("bad-header", "empty attribute name", row=1, column=j)
        if a in seen:
            raise IngestError(
                "duplicate-attribute",
                f"attribute {a!r} repeats column {seen[a]}", row=1, column=j,
            )
        seen[a] = j
    return AttributeSchema(tuple(attrs))


def parse_csv(text: str) -> Dataset:
    rows = [(i, r) for i, r in enumerate(csv.reader(io.StringIO(text)), start=1)
            if any(c.strip() for c in r)]
    if not rows:
        raise IngestError("empty", "input is empty")
    schema = _header(rows[0][1])
    width = len(schema) + 1
    cases = []
    names = {}
    for rownum, r in rows[1:]:
        if len(r) != width:
            raise IngestError("ragged", f"expected {width} cells, found {len(r)}", row=rownum)
        name = r[0].strip()
        if not name:
            raise IngestError("bad-header", "missing case name", row=rownum, column=1)
        if name in names:
            raise IngestError(
                "duplicate-case", f"case name {name!r} already used on row {names[name]}",
                row=rownum, column=1,
            )
        names[name] = rownum
        vals = tuple(_cell(c, rownum, j, schema.names[j - 2]) for j, c in enumerate(r[1:], start=2))
        cases.append(CaseVector(name, vals))
    if not cases:
        raise IngestError("no-cases", "header present but no case rows")
    return Dataset(schema, tuple(cases))


def parse_json(text: str) -> Dataset:
    if not text.strip():
        raise IngestError("empty", "input is empty")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise IngestError("bad-json", e.msg, row=e.lineno, column=e.colno) from None
    if not isinstance(doc, dict) or "attributes" not in doc or "cases" not in doc:
        raise IngestError("bad-json", "expected an object with 'attributes' and 'cases'")
    attrs = doc["attributes"]
    if not isinstance(attrs, list) or not all(isinstance(a, str) for a in attrs):
        raise IngestError("bad-header", "'attributes' must be a list of strings")
    schema = _header(["name", *attrs])
    cases = []
    names = {}
    for i, entry in enumerate(doc["cases"], start=1):
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str) or not entry["name"]:
            raise IngestError("bad-json", "each case needs a non-empty 'name'", row=i)
        name = entry["name"]
        vals = entry.get("values")
        if not isinstance(vals, list) or len(vals) != len(schema):
            got = len(vals) if isinstance(vals, list) else "no"
            raise IngestError("ragged", f"expected {len(schema)} values, found {got}", row=i)
        if name in names:
            raise IngestError(
                "duplicate-case", f"case name {name!r} already used by case {names[name]}", row=i
            )
        names[name] = i
        clean = []
        for j, v in enumerate(vals, start=1):
            # bool is an int subclass; 0/1/true/false all pass, 0.5 and "1" do not
            if isinstance(v, bool) or (isinstance(v, int) and v in (0, 1)):
                clean.append(int(v))
            else:
                raise IngestError(
                    "non-boolean", f"value {v!r} for attribute {schema.names[j - 1]!r} is not 0 or 1",
                    row=i, column=j,
                )
        cases.append(CaseVector(name, tuple(clean)))
    if not cases:
        raise IngestError("no-cases", "no cases given")
    return Dataset(schema, tuple(cases))


def ingest(source: Source, format: str = "csv") -> Dataset:
    """Load and validate a :class:`Dataset`; row order is preserved."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, encoding="utf-8", newline="") as fh:
            text = fh.read()
    if format == "csv":
        return parse_csv(text)
    if format == "json":
        return parse_json(text)
    raise ValueError(f"unknown format {format!r}; use 'csv' or 'json'")
